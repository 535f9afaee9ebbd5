#include "medina/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>
#include <utility>

#include "medina/errors.hpp"

namespace medina {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

mpz_class to_mpz(std::string_view digits) {
    return mpz_class(std::string(digits), 10);
}

mpz_class ten_to(unsigned long k) {
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, k);
    return result;
}

[[noreturn]] void fail(std::string_view text, std::string_view why) {
    throw ParseError("invalid rational '" + std::string(text) + "': " + std::string(why));
}

} // namespace

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator) {
    if (denominator == 0) {
        throw DivisionError("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational::Rational(const mpz_class &numerator, const mpz_class &denominator)
    : value_(numerator, denominator) {
    if (denominator == 0) {
        throw DivisionError("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) {
        throw DivisionError("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && rest.front() == '-') {
        negative = true;
        rest.remove_prefix(1);
    }

    long exponent = 0;
    if (auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = rest.substr(e + 1);
        rest = rest.substr(0, e);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6) {
            fail(text, "bad exponent");
        }
        exponent = std::strtol(std::string(exp_text).c_str(), nullptr, 10);
        if (exp_negative) {
            exponent = -exponent;
        }
        if (rest.find('/') != std::string_view::npos) {
            fail(text, "exponent not allowed on a fraction");
        }
    }

    mpz_class num;
    mpz_class den = 1;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        std::string_view n = rest.substr(0, slash);
        std::string_view d = rest.substr(slash + 1);
        if (!all_digits(n) || !all_digits(d)) {
            fail(text, "expected digits/digits");
        }
        num = to_mpz(n);
        den = to_mpz(d);
        if (den == 0) {
            fail(text, "zero denominator");
        }
    } else if (auto dot = rest.find('.'); dot != std::string_view::npos) {
        std::string_view whole = rest.substr(0, dot);
        std::string_view frac = rest.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) {
            fail(text, "expected digits.digits");
        }
        num = to_mpz(std::string(whole) + std::string(frac));
        den = ten_to(frac.size());
    } else {
        if (!all_digits(rest)) {
            fail(text, "expected digits");
        }
        num = to_mpz(rest);
    }

    if (exponent > 0) {
        num *= ten_to(static_cast<unsigned long>(exponent));
    } else if (exponent < 0) {
        den *= ten_to(static_cast<unsigned long>(-exponent));
    }
    if (negative) {
        num = -num;
    }
    return {num, den};
}

Rational Rational::abs() const {
    Rational r;
    mpq_abs(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw DivisionError("reciprocal of zero");
    }
    Rational r;
    mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
}

Rational Rational::pow(unsigned long exponent) const {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
    // Powers of coprime integers stay coprime, so no canonicalization needed.
    Rational r;
    r.value_ = mpq_class(num, den);
    return r;
}

std::size_t Rational::bit_length() const {
    std::size_t n = mpz_sizeinbase(value_.get_num_mpz_t(), 2);
    std::size_t d = mpz_sizeinbase(value_.get_den_mpz_t(), 2);
    return n > d ? n : d;
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return value_.get_num().get_str(10);
    }
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

std::string Rational::to_decimal(unsigned digits) const {
    mpz_class scaled_num = abs().numerator() * ten_to(digits);
    mpz_class den = denominator();
    mpz_class q;
    mpz_class r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled_num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) {
        q += 1;
    }

    std::string body = q.get_str(10);
    if (body.size() <= digits) {
        body.insert(0, digits + 1 - body.size(), '0');
    }
    std::string out;
    if (sign() < 0 && q != 0) {
        out.push_back('-');
    }
    out += body.substr(0, body.size() - digits);
    if (digits > 0) {
        out.push_back('.');
        out += body.substr(body.size() - digits);
    }
    return out;
}

Rational &Rational::operator+=(const Rational &rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational &Rational::operator-=(const Rational &rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational &Rational::operator*=(const Rational &rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
    if (rhs.is_zero()) {
        throw DivisionError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) {
    return os << r.to_string();
}

Rational power_of_ten(long k) {
    if (k >= 0) {
        return Rational(ten_to(static_cast<unsigned long>(k)));
    }
    return Rational(mpz_class(1), ten_to(static_cast<unsigned long>(-k)));
}

} // namespace medina
