#pragma once

#include "medina/polynomial.hpp"
#include "medina/rational.hpp"

// Taylor partial sums x - x^3/3 + x^5/5 - ... as the slow-converging baseline.
namespace medina::taylor {

struct TaylorPoly {
    unsigned long degree;
    Polynomial poly;
};

/// Partial sum through x^n. Throws DomainError unless n is odd and >= 1.
TaylorPoly taylor_poly(long n);

/// x^(n+2) / (n+2), the first omitted term. Requires 0 <= x <= 1 and odd n >= 1.
Rational remainder_bound(long n, const Rational &x);

enum class DegreeMode {
    /// True error, decided against rigorous oracle enclosures.
    Oracle,
    /// Alternating-series remainder bound.
    Bound,
};

/// Degree cap before ResourceError is thrown.
inline constexpr long kMaxDegree = 10001;

/// Smallest odd n with error(T_n, x) < eps under `mode`.
/// Throws DomainError for x outside [0, 1] or eps <= 0, ResourceError past kMaxDegree.
long min_degree(const Rational &x, const Rational &eps, DegreeMode mode);

} // namespace medina::taylor
