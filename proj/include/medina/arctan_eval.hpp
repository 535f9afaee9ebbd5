#pragma once

#include <string_view>
#include <vector>

#include "medina/medina.hpp"
#include "medina/rational.hpp"

namespace medina {

enum class ReductionStep { Negate, Reciprocal };

std::string_view to_string(ReductionStep step);

/// How `original` was mapped into [0, 1]. Steps are in application order:
/// Negate (arctan x = -arctan(-x)) before Reciprocal (arctan x = pi/2 - arctan(1/x)).
struct ReductionTrace {
    Rational original;
    Rational reduced;
    std::vector<ReductionStep> steps;
};

/// pi taken as 4 h_M(1), so |value - pi| <= 4 * 4^(-5M).
struct PiEstimate {
    Rational value;
    Rational error_bound;
    MedinaIndex source_m;
};

struct ApproxResult {
    Rational value;
    /// 4^(-5m) + pi_terms_used * 4 * 4^(-5m).
    Rational error_bound;
    MedinaIndex m;
    ReductionTrace trace;
    unsigned pi_terms_used = 0;
};

/// x = 1 stays unreduced; Reciprocal is applied only for |x| > 1.
ReductionTrace reduce(const Rational &x);

PiEstimate pi_estimate(MedinaIndex m);

/// h_m on the reduced argument, mapped back through the reduction identities.
ApproxResult medina_arctan(const Rational &x, MedinaIndex m);

/// medina_arctan with the smallest m whose total budget is <= eps.
/// Throws DomainError for eps <= 0.
ApproxResult arctan_auto(const Rational &x, const Rational &eps);

/// Largest d >= 0 with 10^(-d) / 2 >= error_bound (0 if none).
unsigned guaranteed_decimal_digits(const Rational &error_bound);

} // namespace medina
