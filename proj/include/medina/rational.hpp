#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace medina {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Thin value wrapper over GMP's mpq_class. Every operation canonicalizes its
/// result, so equality is structural on (numerator, denominator).
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    Rational(const mpz_class &numerator, const mpz_class &denominator);
    explicit Rational(const mpz_class &integer) : value_(integer) {}
    explicit Rational(mpq_class value);

    /// Parses "-3", "19/20", "0.95", and exponent forms like "1e-9" or "2.5e3".
    /// Throws ParseError on malformed text or a zero denominator.
    static Rational parse(std::string_view text);

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class &raw() const { return value_; }

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    [[nodiscard]] Rational abs() const;
    /// Throws DivisionError for zero.
    [[nodiscard]] Rational reciprocal() const;
    /// Non-negative integer power by repeated squaring.
    [[nodiscard]] Rational pow(unsigned long exponent) const;

    /// Largest bit length of numerator and denominator.
    [[nodiscard]] std::size_t bit_length() const;

    /// "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string to_string() const;
    /// Decimal with exactly `digits` fractional digits, rounded half away from zero.
    [[nodiscard]] std::string to_decimal(unsigned digits) const;
    /// Nearest double; for diagnostics only.
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    Rational &operator+=(const Rational &rhs);
    Rational &operator-=(const Rational &rhs);
    Rational &operator*=(const Rational &rhs);
    /// Throws DivisionError when rhs is zero.
    Rational &operator/=(const Rational &rhs);

    friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational &lhs, const Rational &rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs) {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r);

private:
    mpq_class value_;
};

inline Rational min(const Rational &a, const Rational &b) { return b < a ? b : a; }
inline Rational max(const Rational &a, const Rational &b) { return a < b ? b : a; }

/// 10^k for k >= 0, or 10^-k as a fraction when k < 0.
Rational power_of_ten(long k);

} // namespace medina
