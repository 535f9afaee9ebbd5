#include "medina/taylor.hpp"

#include <optional>
#include <string>
#include <vector>

#include "medina/errors.hpp"
#include "medina/oracle.hpp"

namespace medina::taylor {

namespace {

void require_odd_degree(long n) {
    if (n < 1 || n % 2 == 0) {
        throw DomainError("taylor degree must be odd and >= 1, got " + std::to_string(n));
    }
}

void require_unit_interval(const Rational &x) {
    if (x.sign() < 0 || x > Rational(1)) {
        throw DomainError("taylor baseline is defined on [0, 1], got " + x.to_string());
    }
}

} // namespace

TaylorPoly taylor_poly(long n) {
    require_odd_degree(n);
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (long k = 0; 2 * k + 1 <= n; ++k) {
        coeffs[static_cast<std::size_t>(2 * k + 1)] = Rational(k % 2 == 0 ? 1 : -1, 2 * k + 1);
    }
    return {static_cast<unsigned long>(n), Polynomial(std::move(coeffs))};
}

Rational remainder_bound(long n, const Rational &x) {
    require_odd_degree(n);
    require_unit_interval(x);
    return x.pow(static_cast<unsigned long>(n + 2)) / Rational(n + 2);
}

long min_degree(const Rational &x, const Rational &eps, DegreeMode mode) {
    require_unit_interval(x);
    if (eps.sign() <= 0) {
        throw DomainError("eps must be positive");
    }

    std::optional<oracle::ErrorJudge> judge;
    if (mode == DegreeMode::Oracle) {
        judge.emplace(x, eps);
    }

    const Rational x2 = x * x;
    Rational power = x; // x^n
    Rational partial = x;
    for (long n = 1; n <= kMaxDegree; n += 2) {
        if (n > 1) {
            power *= x2;
            Rational term = power / Rational(n);
            partial = ((n / 2) % 2 == 0) ? partial + term : partial - term;
        }
        bool met = mode == DegreeMode::Oracle
                       ? judge->below(partial)
                       : power * x2 / Rational(n + 2) < eps;
        if (met) {
            return n;
        }
    }
    throw ResourceError("taylor series did not reach eps " + eps.to_string() + " by degree " +
                        std::to_string(kMaxDegree));
}

} // namespace medina::taylor
