#include "medina/oracle.hpp"

#include <string>
#include <utility>

#include "medina/errors.hpp"

namespace medina::oracle {

namespace {

const Rational kHalf(1, 2);

// Requires 0 < y <= 1/2. Partial sums S_k of the alternating series bracket
// arctan(y) pairwise; stop once the next term fits in eps.
Enclosure taylor_bracket(const Rational &y, const Rational &eps) {
    const Rational y2 = y * y;
    Rational power = y;     // y^(2k+1)
    Rational sum = y;       // S_0
    long k = 0;
    for (;;) {
        power *= y2;
        Rational next = power / Rational(2 * (k + 1) + 1);
        bool next_is_negative = (k % 2) == 0;
        if (next <= eps) {
            Rational other = next_is_negative ? sum - next : sum + next;
            return next_is_negative ? Enclosure{other, sum} : Enclosure{sum, other};
        }
        sum = next_is_negative ? sum - next : sum + next;
        ++k;
    }
}

Enclosure enclose_nonnegative(const Rational &x, const Rational &eps) {
    if (x.is_zero()) {
        return {Rational(), Rational()};
    }
    if (x > Rational(1)) {
        Enclosure quarter_pi = enclose_nonnegative(Rational(1), eps / Rational(4));
        Enclosure half_pi{quarter_pi.lo * Rational(2), quarter_pi.hi * Rational(2)};
        return half_pi - enclose_nonnegative(x.reciprocal(), eps / Rational(2));
    }
    if (x > kHalf) {
        const Rational half_eps = eps / Rational(2);
        return taylor_bracket(kHalf, half_eps) + enclose_nonnegative(pivot_argument(x), half_eps);
    }
    return taylor_bracket(x, eps);
}

} // namespace

Rational pivot_argument(const Rational &x) {
    return (x - kHalf) / (Rational(1) + x * kHalf);
}

Enclosure arctan_enclosure(const Rational &x, const Rational &eps) {
    if (eps.sign() <= 0) {
        throw DomainError("enclosure width must be positive");
    }
    if (x.sign() < 0) {
        return -enclose_nonnegative(-x, eps);
    }
    return enclose_nonnegative(x, eps);
}

ErrorJudge::ErrorJudge(Rational x, Rational eps)
    : x_(std::move(x)), eps_(std::move(eps)), width_(eps_ / Rational(1000)),
      enclosure_(arctan_enclosure(x_, width_)) {}

bool ErrorJudge::below(const Rational &approx) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        Rational far = max((approx - enclosure_.lo).abs(), (approx - enclosure_.hi).abs());
        if (far < eps_) {
            return true;
        }
        Rational near = enclosure_.contains(approx)
                            ? Rational()
                            : min((approx - enclosure_.lo).abs(), (approx - enclosure_.hi).abs());
        if (near >= eps_) {
            return false;
        }
        width_ /= Rational(1000000);
        enclosure_ = arctan_enclosure(x_, width_);
    }
    throw ResourceError("cannot separate error from eps at x = " + x_.to_string());
}

Enclosure pi_enclosure(const Rational &eps) {
    if (eps.sign() <= 0) {
        throw DomainError("enclosure width must be positive");
    }
    Enclosure quarter = arctan_enclosure(Rational(1), eps / Rational(4));
    return {quarter.lo * Rational(4), quarter.hi * Rational(4)};
}

} // namespace medina::oracle
