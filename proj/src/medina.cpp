#include "medina/medina.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "medina/errors.hpp"

namespace medina {

namespace {

// (-4)^k
Rational minus_four_pow(unsigned long k) {
    return Rational(-4).pow(k);
}

Polynomial one_plus_x_squared() {
    return Polynomial{Rational(1), Rational(0), Rational(1)};
}

} // namespace

MedinaIndex::MedinaIndex(long m) : m_(0) {
    if (m < 1) {
        throw DomainError("medina index must be >= 1, got " + std::to_string(m));
    }
    m_ = static_cast<unsigned long>(m);
}

Polynomial recurrence_factor() {
    return pow(Polynomial{Rational(0), Rational(1), Rational(-1)}, 4);
}

Polynomial p1() {
    return Polynomial{4, 0, -4, 0, 5, -4, 1};
}

Polynomial p_recurrence(MedinaIndex m) {
    const Polynomial base = p1();
    const Polynomial factor = recurrence_factor();
    Polynomial p = base;
    for (unsigned long k = 2; k <= m.value(); ++k) {
        p = factor * p + base * minus_four_pow(k - 1);
    }
    return p;
}

Polynomial p_closed(MedinaIndex m) {
    const unsigned long k = m.value();
    Polynomial numerator = pow(Polynomial{Rational(0), Rational(1), Rational(-1)}, 4 * k);
    numerator -= Polynomial{minus_four_pow(k)};
    auto [quotient, remainder] = divmod(numerator, one_plus_x_squared());
    if (!remainder.is_zero()) {
        throw InvariantViolation("1 + x^2 does not divide the closed-form numerator for m = " +
                                 std::to_string(k));
    }
    return quotient;
}

Rational scale_factor(MedinaIndex m) {
    const Rational magnitude = Rational(4).pow(m.value());
    return m.value() % 2 == 1 ? magnitude : -magnitude;
}

Polynomial h(MedinaIndex m) {
    return antiderivative(scale(p_recurrence(m), scale_factor(m).reciprocal()));
}

Rational error_bound(MedinaIndex m) {
    return Rational(4).pow(5 * m.value()).reciprocal();
}

MedinaIndex min_m_for(const Rational &eps) {
    if (eps.sign() <= 0) {
        throw DomainError("eps must be positive");
    }
    // Each step divides the bound by 1024.
    long m = 1;
    Rational bound = error_bound(MedinaIndex(1));
    const Rational step = Rational(1, 1024);
    while (bound > eps) {
        bound *= step;
        ++m;
    }
    return MedinaIndex(m);
}

std::shared_ptr<const MedinaPair> pair(MedinaIndex m) {
    static std::shared_mutex mutex;
    static std::map<unsigned long, std::shared_ptr<const MedinaPair>> cache;

    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(m.value()); it != cache.end()) {
            return it->second;
        }
    }

    // Built outside the lock; a racing builder produces an identical value and
    // the first insertion wins.
    Polynomial p = p_recurrence(m);
    Polynomial hm = antiderivative(scale(p, scale_factor(m).reciprocal()));
    auto entry = std::make_shared<const MedinaPair>(
        MedinaPair{m, std::move(p), std::move(hm), error_bound(m)});

    std::unique_lock lock(mutex);
    return cache.emplace(m.value(), std::move(entry)).first->second;
}

} // namespace medina
