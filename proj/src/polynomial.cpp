#include "medina/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "medina/errors.hpp"

namespace medina {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
    normalize();
}

Polynomial Polynomial::monomial(const Rational &c, std::size_t power) {
    if (c.is_zero()) {
        return {};
    }
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return Polynomial(std::move(v));
}

Rational Polynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Polynomial &Polynomial::operator+=(const Polynomial &rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial &lhs, const Polynomial &rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial &p, const Rational &k) {
    if (k.is_zero()) {
        return {};
    }
    Polynomial out = p;
    for (auto &c : out.coeffs_) {
        c *= k;
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    return *this * Rational(-1);
}

std::ostream &operator<<(std::ostream &os, const Polynomial &p) {
    os << '[';
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (i != 0) {
            os << ", ";
        }
        os << p.coeffs_[i];
    }
    return os << ']';
}

Rational eval_horner(const Polynomial &p, const Rational &x) {
    auto c = p.coeffs();
    Rational acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Rational eval_powers(const Polynomial &p, const Rational &x) {
    Rational sum;
    Rational power(1);
    for (const auto &c : p.coeffs()) {
        sum += c * power;
        power *= x;
    }
    return sum;
}

Polynomial scale(const Polynomial &p, const Rational &k) {
    return p * k;
}

Polynomial pow(const Polynomial &p, unsigned long k) {
    Polynomial result{Rational(1)};
    Polynomial base = p;
    while (k != 0) {
        if ((k & 1UL) != 0) {
            result = result * base;
        }
        k >>= 1U;
        if (k != 0) {
            base = base * base;
        }
    }
    return result;
}

Polynomial derivative(const Polynomial &p) {
    auto c = p.coeffs();
    if (c.size() <= 1) {
        return {};
    }
    std::vector<Rational> out;
    out.reserve(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) {
        out.push_back(c[i] * Rational(static_cast<long>(i)));
    }
    return Polynomial(std::move(out));
}

Polynomial antiderivative(const Polynomial &p) {
    auto c = p.coeffs();
    if (c.empty()) {
        return {};
    }
    std::vector<Rational> out;
    out.reserve(c.size() + 1);
    out.emplace_back();
    for (std::size_t i = 0; i < c.size(); ++i) {
        out.push_back(c[i] / Rational(static_cast<long>(i + 1)));
    }
    return Polynomial(std::move(out));
}

Rational definite_integral(const Polynomial &p, const Rational &a, const Rational &b) {
    Polynomial anti = antiderivative(p);
    return eval_horner(anti, b) - eval_horner(anti, a);
}

DivMod divmod(const Polynomial &p, const Polynomial &d) {
    if (d.is_zero()) {
        throw DivisionError("polynomial division by zero polynomial");
    }
    if (p.degree() < d.degree()) {
        return {Polynomial(), p};
    }

    auto dc = d.coeffs();
    const std::size_t dn = dc.size();
    const Rational lead_inv = dc.back().reciprocal();

    std::vector<Rational> rem(p.coeffs().begin(), p.coeffs().end());
    std::vector<Rational> quot(rem.size() - dn + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational &top = rem[k + dn - 1];
        if (top.is_zero()) {
            continue;
        }
        Rational q = top * lead_inv;
        for (std::size_t j = 0; j < dn; ++j) {
            rem[k + j] -= q * dc[j];
        }
        quot[k] = std::move(q);
    }
    rem.resize(dn - 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::size_t max_coeff_bits(const Polynomial &p) {
    std::size_t bits = 0;
    for (const auto &c : p.coeffs()) {
        bits = std::max(bits, c.bit_length());
    }
    return bits;
}

} // namespace medina
