#include "doctest.h"

#include <vector>

#include "medina/arctan_eval.hpp"
#include "medina/errors.hpp"
#include "medina/json_io.hpp"
#include "medina/oracle.hpp"

using medina::ApproxResult;
using medina::MedinaIndex;
using medina::Rational;
using medina::ReductionStep;

namespace {

// |value - arctan(x)| <= error_bound, checked against a tight oracle enclosure.
bool encloses_truth(const ApproxResult &r, const Rational &x) {
    auto e = medina::oracle::arctan_enclosure(x, r.error_bound / Rational(1000));
    return r.value - r.error_bound <= e.lo && e.hi <= r.value + r.error_bound;
}

} // namespace

TEST_CASE("reduce") {
    auto t = medina::reduce(Rational(1, 2));
    CHECK(t.reduced == Rational(1, 2));
    CHECK(t.steps.empty());

    t = medina::reduce(Rational(2));
    CHECK(t.reduced == Rational(1, 2));
    CHECK(t.steps == std::vector{ReductionStep::Reciprocal});

    t = medina::reduce(Rational(-3));
    CHECK(t.reduced == Rational(1, 3));
    CHECK(t.steps == std::vector{ReductionStep::Negate, ReductionStep::Reciprocal});
    CHECK(t.original == Rational(-3));

    t = medina::reduce(Rational(1));
    CHECK(t.reduced == Rational(1));
    CHECK(t.steps.empty());

    t = medina::reduce(Rational(-1, 5));
    CHECK(t.steps == std::vector{ReductionStep::Negate});
}

TEST_CASE("pi estimate") {
    auto pi1 = medina::pi_estimate(MedinaIndex(1));
    CHECK(pi1.value == Rational(22, 7));
    CHECK(pi1.error_bound == Rational(1, 256));
    CHECK(medina::pi_estimate(MedinaIndex(2)).error_bound == Rational(1, 262144));
    for (long m = 1; m <= 5; ++m) {
        CAPTURE(m);
        auto est = medina::pi_estimate(MedinaIndex(m));
        auto pi = medina::oracle::pi_enclosure(est.error_bound / Rational(100));
        CHECK(est.value > Rational(3));
        CHECK(est.value - est.error_bound <= pi.lo);
        CHECK(pi.hi <= est.value + est.error_bound);
    }
}

TEST_CASE("medina_arctan landmarks") {
    auto zero = medina::medina_arctan(Rational(0), MedinaIndex(3));
    CHECK(zero.value == Rational(0));
    CHECK(zero.pi_terms_used == 0);

    auto one = medina::medina_arctan(Rational(1), MedinaIndex(1));
    CHECK(one.value == Rational(11, 14));
    CHECK(one.error_bound == Rational(1, 1024));
    CHECK(encloses_truth(one, Rational(1)));

    auto r = medina::medina_arctan(Rational(19, 20), MedinaIndex(1));
    auto e = medina::oracle::arctan_enclosure(Rational(19, 20), Rational::parse("1e-12"));
    CHECK((r.value - e.lo).abs() < Rational::parse("5e-4"));
    CHECK((r.value - e.hi).abs() < Rational::parse("5e-4"));

    auto big = medina::medina_arctan(Rational(2), MedinaIndex(1));
    CHECK(big.pi_terms_used == 1);
    CHECK(big.error_bound == Rational(5, 1024));
}

TEST_CASE("soundness over [-10, 10]") {
    for (long m = 1; m <= 4; ++m) {
        for (long k = -40; k <= 40; ++k) {
            Rational x(k, 4);
            CAPTURE(m);
            CAPTURE(x);
            CHECK(encloses_truth(medina::medina_arctan(x, MedinaIndex(m)), x));
        }
    }
}

TEST_CASE("sign of the approximation defect") {
    // h_m - arctan has sign (-1)^(m+1) on (0, 1].
    for (long m = 1; m <= 4; ++m) {
        for (long k = 1; k <= 16; ++k) {
            Rational x(k, 16);
            auto r = medina::medina_arctan(x, MedinaIndex(m));
            auto e = medina::oracle::arctan_enclosure(x, r.error_bound * Rational::parse("1e-30"));
            CAPTURE(m);
            CAPTURE(x);
            if (m % 2 == 1) {
                CHECK(r.value > e.hi);
            } else {
                CHECK(r.value < e.lo);
            }
        }
    }
}

TEST_CASE("oddness and reciprocal consistency are exact") {
    for (long m = 1; m <= 3; ++m) {
        const MedinaIndex idx(m);
        const Rational half_pi = medina::pi_estimate(idx).value / Rational(2);
        for (const char *text : {"1/7", "1/2", "1", "3/2", "2", "10", "355/113"}) {
            Rational x = Rational::parse(text);
            CAPTURE(x);
            CHECK(medina::medina_arctan(-x, idx).value == -medina::medina_arctan(x, idx).value);
            if (x > Rational(1)) {
                CHECK(medina::medina_arctan(x, idx).value + medina::medina_arctan(x.reciprocal(), idx).value ==
                      half_pi);
            }
        }
    }
}

TEST_CASE("arctan_auto") {
    CHECK(medina::arctan_auto(Rational(1, 2), Rational(1, 1000)).m.value() == 1);
    CHECK(medina::arctan_auto(Rational(2), Rational(1, 1000)).m.value() == 2);
    CHECK(medina::arctan_auto(Rational(0), Rational(1)).value == Rational(0));
    CHECK(medina::arctan_auto(Rational(1, 2), Rational::parse("1e-9")).m.value() == 3);
    CHECK_THROWS_AS(medina::arctan_auto(Rational(1), Rational(0)), medina::DomainError);

    // Budget never exceeds eps and is nonincreasing as eps shrinks.
    for (const char *xs : {"1/3", "-5", "1"}) {
        Rational x = Rational::parse(xs);
        Rational previous(10);
        for (long e = 1; e <= 14; ++e) {
            Rational eps = medina::power_of_ten(-e);
            auto r = medina::arctan_auto(x, eps);
            CHECK(r.error_bound <= eps);
            CHECK(r.error_bound <= previous);
            previous = r.error_bound;
        }
    }
}

TEST_CASE("decimal digit guarantee") {
    CHECK(medina::guaranteed_decimal_digits(Rational(1, 1024)) == 2);
    CHECK(medina::guaranteed_decimal_digits(Rational(1, 2000)) == 3);
    CHECK(medina::guaranteed_decimal_digits(Rational(1)) == 0);
    CHECK(medina::guaranteed_decimal_digits(Rational(1, 20)) == 1);
    CHECK_THROWS_AS(medina::guaranteed_decimal_digits(Rational(0)), medina::DomainError);
}

TEST_CASE("approx result JSON") {
    auto j = medina::to_json(medina::medina_arctan(Rational(-3), MedinaIndex(2)));
    CHECK(j["m"] == 2);
    CHECK(j["steps"].dump() == R"(["Negate","Reciprocal"])");
    CHECK(j["error_bound"] == "5/1048576");
    CHECK(j["decimal_digits_guaranteed"] == 5);
    CHECK(j["decimal"] == "-1.24905");

    auto one = medina::to_json(medina::medina_arctan(Rational(1), MedinaIndex(1)));
    CHECK(one["value"] == "11/14");
    CHECK(one["decimal"] == "0.79");
    auto full = medina::to_json(medina::medina_arctan(Rational(1), MedinaIndex(1)), 10);
    CHECK(full["decimal"] == "0.7857142857");
}
