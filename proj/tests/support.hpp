#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "medina/polynomial.hpp"
#include "medina/rational.hpp"

namespace medina::testing {

// Small signed rationals num/den with |num| <= 50, 1 <= den <= 12.
inline Rational random_rational(std::mt19937_64 &rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 12);
    return {num(rng), den(rng)};
}

inline Polynomial random_polynomial(std::mt19937_64 &rng, long max_degree) {
    std::uniform_int_distribution<long> deg(-1, max_degree);
    long d = deg(rng);
    std::vector<Rational> c;
    for (long i = 0; i <= d; ++i) {
        c.push_back(random_rational(rng));
    }
    return Polynomial(std::move(c));
}

inline Polynomial random_nonzero_polynomial(std::mt19937_64 &rng, long max_degree) {
    for (;;) {
        Polynomial p = random_polynomial(rng, max_degree);
        if (!p.is_zero()) {
            return p;
        }
    }
}

inline bool normalized(const Polynomial &p) {
    return p.is_zero() || !p.coeffs().back().is_zero();
}

inline Polynomial ints(std::initializer_list<long> values) {
    std::vector<Rational> c;
    for (long v : values) {
        c.emplace_back(v);
    }
    return Polynomial(std::move(c));
}

} // namespace medina::testing
