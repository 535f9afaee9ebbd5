#pragma once

#include "medina/rational.hpp"

// Rigorous arctangent enclosures used as ground truth by tests and the
// verification suite. Nothing in here touches the medina module.
namespace medina::oracle {

/// Rational interval [lo, hi] containing a real value.
struct Enclosure {
    Rational lo;
    Rational hi;

    [[nodiscard]] Rational width() const { return hi - lo; }
    [[nodiscard]] Rational midpoint() const { return (lo + hi) / Rational(2); }
    [[nodiscard]] bool contains(const Rational &v) const { return lo <= v && v <= hi; }
    [[nodiscard]] bool contains(const Enclosure &e) const { return lo <= e.lo && e.hi <= hi; }

    friend Enclosure operator+(const Enclosure &a, const Enclosure &b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend Enclosure operator-(const Enclosure &a, const Enclosure &b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    Enclosure operator-() const { return {-hi, -lo}; }
    friend bool operator==(const Enclosure &, const Enclosure &) = default;
};

/// Enclosure of arctan(x) with width <= eps. Throws DomainError for eps <= 0.
///
/// Negative x uses oddness; x > 1 uses arctan(x) = 2 arctan(1) - arctan(1/x);
/// x in (1/2, 1] pivots once around 1/2 via
/// arctan(x) = arctan(1/2) + arctan((x - 1/2) / (1 + x/2)); arguments in
/// (0, 1/2] are bracketed by consecutive alternating Taylor partial sums.
Enclosure arctan_enclosure(const Rational &x, const Rational &eps);

/// 4 * arctan_enclosure(1, eps/4).
Enclosure pi_enclosure(const Rational &eps);

/// Decides |arctan(x) - approx| < eps for a fixed x, refining its enclosure
/// of arctan(x) until the comparison is unambiguous.
class ErrorJudge {
public:
    /// Throws DomainError for eps <= 0.
    ErrorJudge(Rational x, Rational eps);

    /// Throws ResourceError if the distance is indistinguishable from eps
    /// after repeated refinement.
    bool below(const Rational &approx);

private:
    Rational x_;
    Rational eps_;
    Rational width_;
    Enclosure enclosure_;
};

/// Argument (x - 1/2) / (1 + x/2) used by the pivot step.
Rational pivot_argument(const Rational &x);

} // namespace medina::oracle
