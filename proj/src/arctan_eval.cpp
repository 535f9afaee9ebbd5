#include "medina/arctan_eval.hpp"

#include <algorithm>

#include "medina/errors.hpp"

namespace medina {

namespace {

// Budget multiplier for a given number of pi/2 terms: 1 + 4 * terms.
Rational budget(MedinaIndex m, unsigned pi_terms) {
    return error_bound(m) * Rational(1 + 4 * static_cast<long>(pi_terms));
}

} // namespace

std::string_view to_string(ReductionStep step) {
    switch (step) {
    case ReductionStep::Negate:
        return "Negate";
    case ReductionStep::Reciprocal:
        return "Reciprocal";
    }
    return "?";
}

ReductionTrace reduce(const Rational &x) {
    ReductionTrace trace{x, x, {}};
    if (trace.reduced.sign() < 0) {
        trace.reduced = -trace.reduced;
        trace.steps.push_back(ReductionStep::Negate);
    }
    if (trace.reduced > Rational(1)) {
        trace.reduced = trace.reduced.reciprocal();
        trace.steps.push_back(ReductionStep::Reciprocal);
    }
    return trace;
}

PiEstimate pi_estimate(MedinaIndex m) {
    auto entry = pair(m);
    return {Rational(4) * eval_horner(entry->h, Rational(1)), Rational(4) * entry->bound, m};
}

ApproxResult medina_arctan(const Rational &x, MedinaIndex m) {
    ReductionTrace trace = reduce(x);
    auto entry = pair(m);
    Rational value = eval_horner(entry->h, trace.reduced);

    unsigned pi_terms = 0;
    // Undo the steps in reverse order.
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        if (*it == ReductionStep::Reciprocal) {
            value = pi_estimate(m).value / Rational(2) - value;
            ++pi_terms;
        } else {
            value = -value;
        }
    }
    return {std::move(value), budget(m, pi_terms), m, std::move(trace), pi_terms};
}

ApproxResult arctan_auto(const Rational &x, const Rational &eps) {
    if (eps.sign() <= 0) {
        throw DomainError("eps must be positive");
    }
    const ReductionTrace trace = reduce(x);
    const auto pi_terms = static_cast<unsigned>(
        std::count(trace.steps.begin(), trace.steps.end(), ReductionStep::Reciprocal));
    long m = 1;
    while (budget(MedinaIndex(m), pi_terms) > eps) {
        ++m;
    }
    return medina_arctan(x, MedinaIndex(m));
}

unsigned guaranteed_decimal_digits(const Rational &error_bound) {
    if (error_bound.sign() <= 0) {
        throw DomainError("error bound must be positive");
    }
    unsigned d = 0;
    // 10^-(d+1) / 2 >= bound  <=>  1 >= 2 * bound * 10^(d+1)
    while (Rational(2) * error_bound * power_of_ten(static_cast<long>(d) + 1) <= Rational(1)) {
        ++d;
    }
    return d;
}

} // namespace medina
