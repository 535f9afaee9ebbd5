#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "medina/rational.hpp"

namespace medina {

/// Dense univariate polynomial over the rationals.
///
/// coeffs()[i] is the coefficient of x^i. The representation is always
/// normalized: no trailing zero coefficient, and the zero polynomial is the
/// empty sequence with degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    /// c * x^power.
    static Polynomial monomial(const Rational &c, std::size_t power);

    [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }
    [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^i; zero past the degree.
    [[nodiscard]] Rational coeff(std::size_t i) const;
    [[nodiscard]] Rational leading() const { return is_zero() ? Rational() : coeffs_.back(); }

    Polynomial &operator+=(const Polynomial &rhs);
    Polynomial &operator-=(const Polynomial &rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial &rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial &rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial &lhs, const Polynomial &rhs);
    friend Polynomial operator*(const Polynomial &p, const Rational &k);
    friend Polynomial operator*(const Rational &k, const Polynomial &p) { return p * k; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

    friend std::ostream &operator<<(std::ostream &os, const Polynomial &p);

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

/// Nested evaluation c0 + x*(c1 + x*(c2 + ...)).
Rational eval_horner(const Polynomial &p, const Rational &x);
/// Term-wise evaluation sum c_i * x^i with a running power of x.
Rational eval_powers(const Polynomial &p, const Rational &x);

Polynomial scale(const Polynomial &p, const Rational &k);
/// Binary exponentiation; pow(p, 0) is the constant 1.
Polynomial pow(const Polynomial &p, unsigned long k);

/// Coefficient i of the result is (i+1) * coeff(i+1).
Polynomial derivative(const Polynomial &p);
/// Antiderivative P with P(0) = 0.
Polynomial antiderivative(const Polynomial &p);
/// P(b) - P(a) with P the anchored antiderivative.
Rational definite_integral(const Polynomial &p, const Rational &a, const Rational &b);

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// Long division over the rationals: p = q*d + r, deg r < deg d.
/// Throws DivisionError when d is the zero polynomial.
DivMod divmod(const Polynomial &p, const Polynomial &d);

/// Largest Rational::bit_length over all coefficients (0 for the zero polynomial).
std::size_t max_coeff_bits(const Polynomial &p);

} // namespace medina
