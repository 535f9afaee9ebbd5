#include "medina/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <string>

#include "medina/medina.hpp"
#include "medina/oracle.hpp"
#include "medina/polynomial.hpp"

namespace medina::verify {

namespace {

struct Family {
    unsigned long m;
    Polynomial p;
    Polynomial h;
    Polynomial q;     // x^4m (1-x)^4m
    Rational q_max;   // (1/4)^(4m)
    Rational bound;   // 4^(-5m)
    Rational scale;   // (-1)^(m+1) 4^m
};

struct Context {
    std::vector<Rational> grid;
    std::vector<Family> family;
};

const Polynomial &x_one_minus_x() {
    static const Polynomial poly{Rational(0), Rational(1), Rational(-1)};
    return poly;
}

// Records only the first failure so reports are deterministic.
class Recorder {
public:
    Recorder(std::string id, std::string description)
        : check_{std::move(id), std::move(description), true, std::nullopt} {}

    void expect(bool ok, const Rational &x, unsigned long m, const Rational &lhs, const Rational &rhs) {
        if (!ok && check_.passed) {
            check_.passed = false;
            check_.witness = Witness{x, m, lhs, rhs};
        }
    }

    void note(const Rational &x, unsigned long m, const Rational &lhs, const Rational &rhs) {
        if (check_.passed && !check_.witness) {
            check_.witness = Witness{x, m, lhs, rhs};
        }
    }

    LemmaCheck finish() { return std::move(check_); }

private:
    LemmaCheck check_;
};

LemmaCheck check_l1(const Context &ctx) {
    Recorder rec("L1", "x(1-x) <= 1/4 on [0,1], equality only at x = 1/2; "
                       "1/4 - x(1-x) = (x - 1/2)^2 as polynomials");
    const Rational quarter(1, 4);
    const Rational half(1, 2);

    const Polynomial gap = Polynomial{quarter} - x_one_minus_x();
    const Polynomial square = pow(Polynomial{-half, Rational(1)}, 2);
    for (std::size_t i = 0; i < 3; ++i) {
        rec.expect(gap.coeff(i) == square.coeff(i), Rational(static_cast<long>(i)), 0,
                   gap.coeff(i), square.coeff(i));
    }

    for (const auto &x : ctx.grid) {
        Rational v = eval_horner(x_one_minus_x(), x);
        rec.expect(v <= quarter, x, 0, v, quarter);
        rec.expect((v == quarter) == (x == half), x, 0, v, quarter);
        if (x == half && v == quarter) {
            rec.note(x, 0, v, quarter);
        }
    }
    return rec.finish();
}

LemmaCheck check_l2(const Context &ctx) {
    Recorder rec("L2", "d/dx x(1-x) = 1 - 2x, zero at 1/2, positive before and negative after");
    const Polynomial d = derivative(x_one_minus_x());
    const Polynomial expected{Rational(1), Rational(-2)};
    for (std::size_t i = 0; i < 2; ++i) {
        rec.expect(d.coeff(i) == expected.coeff(i), Rational(static_cast<long>(i)), 0, d.coeff(i),
                   expected.coeff(i));
    }
    rec.expect(d.degree() == 1, Rational(2), 0, Rational(d.degree()), Rational(1));

    const Rational half(1, 2);
    for (const auto &x : ctx.grid) {
        Rational slope = eval_horner(d, x);
        int expected_sign = x < half ? 1 : (x == half ? 0 : -1);
        rec.expect(slope.sign() == expected_sign, x, 0, slope, Rational(expected_sign));
    }
    return rec.finish();
}

LemmaCheck check_l3(const Context &ctx) {
    Recorder rec("L3", "x^4m (1-x)^4m <= (1/4)^4m on [0,1]");
    for (const auto &f : ctx.family) {
        for (const auto &x : ctx.grid) {
            Rational v = eval_horner(f.q, x);
            rec.expect(v.sign() >= 0 && v <= f.q_max, x, f.m, v, f.q_max);
        }
    }
    return rec.finish();
}

LemmaCheck check_l4(const Context &ctx) {
    Recorder rec("L4", "integral_0^x t^4m (1-t)^4m dt <= (1/4)^4m x <= (1/4)^4m");
    for (const auto &f : ctx.family) {
        for (const auto &x : ctx.grid) {
            Rational integral = definite_integral(f.q, Rational(0), x);
            Rational linear = f.q_max * x;
            rec.expect(integral.sign() >= 0 && integral <= linear, x, f.m, integral, linear);
            rec.expect(linear <= f.q_max, x, f.m, linear, f.q_max);
        }
    }
    return rec.finish();
}

LemmaCheck check_l5(const Context &ctx) {
    Recorder rec("L5", "(1+x^2) p_m(x) + (-4)^m = x^4m (1-x)^4m");
    for (const auto &f : ctx.family) {
        const Rational shift = Rational(-4).pow(f.m);
        for (const auto &x : ctx.grid) {
            Rational lhs = (Rational(1) + x * x) * eval_horner(f.p, x) + shift;
            Rational rhs = eval_horner(f.q, x);
            rec.expect(lhs == rhs, x, f.m, lhs, rhs);
        }
    }
    return rec.finish();
}

LemmaCheck check_l6(const Context &ctx) {
    Recorder rec("L6", "p_m(x) - (-1)^(m+1) 4^m / (1+x^2) >= 0 on [0,1]");
    for (const auto &f : ctx.family) {
        for (const auto &x : ctx.grid) {
            Rational lhs = eval_horner(f.p, x) - f.scale / (Rational(1) + x * x);
            rec.expect(lhs.sign() >= 0, x, f.m, lhs, Rational(0));
        }
    }
    return rec.finish();
}

LemmaCheck check_l7(const Context &ctx) {
    Recorder rec("L7", "|h_m(x) - arctan(x)| <= 4^(-5m), arctan enclosed to width 4^(-5m-2)");
    for (const auto &f : ctx.family) {
        const Rational width = f.bound / Rational(16);
        for (const auto &x : ctx.grid) {
            oracle::Enclosure e = oracle::arctan_enclosure(x, width);
            Rational worst = (eval_horner(f.h, x) - e.midpoint()).abs() + e.width() / Rational(2);
            rec.expect(worst <= f.bound, x, f.m, worst, f.bound);
        }
    }
    return rec.finish();
}

LemmaCheck check_l8(const Context &ctx) {
    Recorder rec("L8", "derivative(antiderivative(p_m)) = p_m coefficient-exactly");
    for (const auto &f : ctx.family) {
        Polynomial back = derivative(antiderivative(f.p));
        auto n = static_cast<std::size_t>(std::max(back.degree(), f.p.degree()) + 1);
        for (std::size_t i = 0; i < n; ++i) {
            rec.expect(back.coeff(i) == f.p.coeff(i), Rational(static_cast<long>(i)), f.m,
                       back.coeff(i), f.p.coeff(i));
        }
    }
    return rec.finish();
}

LemmaCheck check_l9(const Context &ctx) {
    Recorder rec("L9", "nested and term-wise evaluation agree on p_m and h_m");
    for (const auto &f : ctx.family) {
        for (const auto &x : ctx.grid) {
            for (const Polynomial *poly : {&f.p, &f.h}) {
                Rational nested = eval_horner(*poly, x);
                Rational termwise = eval_powers(*poly, x);
                rec.expect(nested == termwise, x, f.m, nested, termwise);
            }
        }
    }
    return rec.finish();
}

Context build_context(unsigned long grid_n, unsigned long m_count, bool inject_fault) {
    Context ctx;
    ctx.grid.reserve(grid_n + 1);
    for (unsigned long k = 0; k <= grid_n; ++k) {
        ctx.grid.emplace_back(static_cast<long>(k), static_cast<long>(grid_n));
    }
    for (unsigned long m = 1; m <= m_count; ++m) {
        const MedinaIndex idx(static_cast<long>(m));
        auto entry = pair(idx);
        Polynomial p = entry->p;
        Polynomial hm = entry->h;
        if (inject_fault && m == 1) {
            std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
            c.back() = -c.back();
            p = Polynomial(std::move(c));
            hm = antiderivative(scale(p, scale_factor(idx).reciprocal()));
        }
        ctx.family.push_back(Family{m, std::move(p), std::move(hm), pow(x_one_minus_x(), 4 * m),
                                    Rational(1, 4).pow(4 * m), entry->bound, scale_factor(idx)});
    }
    return ctx;
}

} // namespace

bool VerificationReport::all_passed() const {
    return complete && std::all_of(checks.begin(), checks.end(),
                                   [](const LemmaCheck &c) { return c.passed; });
}

VerificationReport run_suite(unsigned long grid_n, unsigned long m_max, SuiteOptions options) {
    if (grid_n < 2) {
        throw DomainError("grid size must be >= 2");
    }
    if (m_max < 1) {
        throw DomainError("m_max must be >= 1");
    }

    unsigned long m_run = m_max;
    if (options.work_limit != 0) {
        m_run = static_cast<unsigned long>(
            std::min<std::uint64_t>(m_max, options.work_limit / (grid_n + 1)));
    }

    const Context ctx = build_context(grid_n, m_run, options.inject_fault);

    std::vector<std::function<LemmaCheck(const Context &)>> lemmas{check_l1, check_l2};
    if (m_run > 0) {
        lemmas.insert(lemmas.end(),
                      {check_l3, check_l4, check_l5, check_l6, check_l7, check_l8, check_l9});
    }

    std::vector<std::future<LemmaCheck>> pending;
    pending.reserve(lemmas.size());
    for (const auto &lemma : lemmas) {
        pending.push_back(std::async(std::launch::async, lemma, std::cref(ctx)));
    }

    VerificationReport report;
    report.grid_size = grid_n;
    report.m_max = m_max;
    for (auto &f : pending) {
        report.checks.push_back(f.get());
    }

    if (m_run < m_max) {
        report.complete = false;
        throw WorkLimitExceeded("verification work limit " + std::to_string(options.work_limit) +
                                    " allows m <= " + std::to_string(m_run) + " of " +
                                    std::to_string(m_max),
                                std::move(report));
    }
    return report;
}

} // namespace medina::verify
