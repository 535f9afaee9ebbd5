#include "doctest.h"

#include <future>
#include <vector>

#include "medina/errors.hpp"
#include "medina/json_io.hpp"
#include "medina/medina.hpp"
#include "support.hpp"

using medina::MedinaIndex;
using medina::Polynomial;
using medina::Rational;
using medina::testing::ints;

TEST_CASE("index domain") {
    CHECK_THROWS_AS(MedinaIndex(0), medina::DomainError);
    CHECK_THROWS_AS(MedinaIndex(-3), medina::DomainError);
    CHECK(MedinaIndex(4).value() == 4);
}

TEST_CASE("p_1") {
    const Polynomial p = medina::p1();
    CHECK(p == ints({4, 0, -4, 0, 5, -4, 1}));
    CHECK(eval_horner(p, Rational(0)) == Rational(4));
    CHECK(eval_horner(p, Rational(1)) == Rational(2));
    CHECK(medina::p_recurrence(MedinaIndex(1)) == p);
}

TEST_CASE("recurrence at m = 2 and 3") {
    const Polynomial p2 = medina::p_recurrence(MedinaIndex(2));
    CHECK(p2.degree() == 14);
    CHECK(p2.coeff(0) == Rational(-16));
    CHECK(p2.leading() == Rational(1));
    // Hand expansion: x^4(1-x)^4 p_1 - 4 p_1
    CHECK(p2 == ints({0, 0, 0, 0, 1, -4, 6, -4, 1}) * medina::p1() - ints({16, 0, -16, 0, 20, -16, 4}));
    CHECK(medina::p_recurrence(MedinaIndex(3)).degree() == 22);
}

TEST_CASE("closed form agrees with recurrence for m = 1..10") {
    for (long m = 1; m <= 10; ++m) {
        CAPTURE(m);
        const MedinaIndex idx(m);
        const Polynomial closed = medina::p_closed(idx);
        const Polynomial rec = medina::p_recurrence(idx);
        CHECK(closed == rec);
        CHECK(rec.degree() == 8 * m - 2);
        CHECK(medina::h(idx).degree() == 8 * m - 1);

        // Independent route: multiply back instead of dividing.
        Polynomial numerator = pow(ints({0, 1, -1}), static_cast<unsigned long>(4 * m)) -
                               Polynomial{Rational(-4).pow(static_cast<unsigned long>(m))};
        CHECK(ints({1, 0, 1}) * rec == numerator);
    }
}

TEST_CASE("printed plus-sign numerator is not divisible by 1 + x^2") {
    // x^4 (1-x)^4 + (-4)^1 leaves a nonzero remainder; the minus form does not.
    Polynomial plus_form = ints({0, 0, 0, 0, 1, -4, 6, -4, 1}) + Polynomial{Rational(-4)};
    CHECK_FALSE(divmod(plus_form, ints({1, 0, 1})).remainder.is_zero());
}

TEST_CASE("endpoint values") {
    // With the minus convention p_m(0) = -(-4)^m and 2 p_m(1) = -(-4)^m.
    for (long m = 1; m <= 10; ++m) {
        CAPTURE(m);
        const Polynomial p = medina::p_recurrence(MedinaIndex(m));
        const Rational target = -Rational(-4).pow(static_cast<unsigned long>(m));
        CHECK(eval_horner(p, Rational(0)) == target);
        CHECK(Rational(2) * eval_horner(p, Rational(1)) == target);
    }
}

TEST_CASE("scale, h, bound") {
    CHECK(medina::scale_factor(MedinaIndex(1)) == Rational(4));
    CHECK(medina::scale_factor(MedinaIndex(2)) == Rational(-16));
    CHECK(medina::scale_factor(MedinaIndex(3)) == Rational(64));

    Polynomial h1{Rational(0), Rational(1),     Rational(0),     Rational(-1, 3),
                  Rational(0), Rational(1, 4), Rational(-1, 6), Rational(1, 28)};
    CHECK(medina::h(MedinaIndex(1)) == h1);
    CHECK(eval_horner(h1, Rational(1)) == Rational(11, 14));

    CHECK(medina::error_bound(MedinaIndex(1)) == Rational(1, 1024));
    CHECK(medina::error_bound(MedinaIndex(2)) == Rational(1, 1048576));
    for (long m = 1; m <= 10; ++m) {
        CAPTURE(m);
        CHECK(eval_horner(medina::h(MedinaIndex(m)), Rational(0)) == Rational(0));
        CHECK(medina::error_bound(MedinaIndex(m + 1)) ==
              medina::error_bound(MedinaIndex(m)) / Rational(1024));
    }
}

TEST_CASE("min m for eps") {
    CHECK(medina::min_m_for(Rational(1, 1000)).value() == 1);
    CHECK(medina::min_m_for(Rational(1, 2000)).value() == 2);
    CHECK(medina::min_m_for(Rational(1)).value() == 1);
    CHECK(medina::min_m_for(Rational(1, 1024)).value() == 1);
    CHECK(medina::min_m_for(Rational(1, 1025)).value() == 2);
    CHECK(medina::min_m_for(Rational(1, 1000000000)).value() == 3);
    CHECK_THROWS_AS(medina::min_m_for(Rational(0)), medina::DomainError);
    CHECK_THROWS_AS(medina::min_m_for(Rational(-1)), medina::DomainError);
}

TEST_CASE("cache returns consistent shared entries under concurrency") {
    std::vector<std::future<std::shared_ptr<const medina::MedinaPair>>> futures;
    for (int i = 0; i < 16; ++i) {
        futures.push_back(std::async(std::launch::async, [] { return medina::pair(MedinaIndex(6)); }));
    }
    auto first = futures.front().get();
    for (std::size_t i = 1; i < futures.size(); ++i) {
        CHECK(futures[i].get() == first);
    }
    CHECK(first->p == medina::p_recurrence(MedinaIndex(6)));
    CHECK(first->h == medina::h(MedinaIndex(6)));
    CHECK(first->bound == medina::error_bound(MedinaIndex(6)));
}

TEST_CASE("pair JSON") {
    auto j = medina::to_json(*medina::pair(MedinaIndex(1)));
    CHECK(j["m"] == 1);
    CHECK(j["bound"] == "1/1024");
    CHECK(j["p"].dump() == R"(["4","0","-4","0","5","-4","1"])");
    CHECK(j["h"].dump() == R"(["0","1","0","-1/3","0","1/4","-1/6","1/28"])");
}
