#pragma once

#include <memory>

#include "medina/polynomial.hpp"
#include "medina/rational.hpp"

namespace medina {

/// Index m >= 1 of the polynomial sequence. Construction throws DomainError for m < 1.
class MedinaIndex {
public:
    explicit MedinaIndex(long m);
    [[nodiscard]] unsigned long value() const { return m_; }
    friend auto operator<=>(const MedinaIndex &, const MedinaIndex &) = default;

private:
    unsigned long m_;
};

/// p_m together with its approximant h_m and the guaranteed bound 4^(-5m).
struct MedinaPair {
    MedinaIndex m;
    Polynomial p;
    Polynomial h;
    Rational bound;
};

/// x^4 (1-x)^4, the multiplier in the recurrence.
Polynomial recurrence_factor();

/// 4 - 4x^2 + 5x^4 - 4x^5 + x^6.
Polynomial p1();

/// p_1, then p_m = x^4 (1-x)^4 p_{m-1} + (-4)^(m-1) p_1.
Polynomial p_recurrence(MedinaIndex m);

/// Closed form (x^4m (1-x)^4m - (-4)^m) / (1 + x^2), by exact long division.
///
/// The numerator carries a minus sign in front of (-4)^m. With a plus the
/// division leaves a nonzero remainder already at m = 1, and the later
/// rearrangement p_m + (-4)^m/(1+x^2) = x^4m (1-x)^4m/(1+x^2) only holds with
/// the minus. Throws InvariantViolation if the remainder is ever nonzero.
Polynomial p_closed(MedinaIndex m);

/// (-1)^(m+1) 4^m.
Rational scale_factor(MedinaIndex m);

/// Anchored antiderivative of p_m / scale_factor(m); degree 8m - 1.
Polynomial h(MedinaIndex m);

/// 4^(-5m).
Rational error_bound(MedinaIndex m);

/// Smallest m with 4^(-5m) <= eps. Throws DomainError for eps <= 0.
MedinaIndex min_m_for(const Rational &eps);

/// Cached (p_m, h_m, bound). Entries are built once per process and never
/// mutated, so the returned pointer stays valid and is safe to share across
/// threads.
std::shared_ptr<const MedinaPair> pair(MedinaIndex m);

} // namespace medina
