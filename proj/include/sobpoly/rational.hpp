#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "sobpoly/errors.hpp"

namespace sobpoly {

// Arbitrary-precision rational scalar. Always canonical: positive
// denominator, gcd(num, den) = 1. Every computation in this library is exact.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw ParameterDomainError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "num/den" or a bare integer, with optional sign.
    static Rational parse(std::string_view text);

    // Serialized as "num/den" (denominator kept even when it is 1).
    std::string str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }
    // Compact form: omits "/1".
    std::string str_compact() const {
        return v_.get_den() == 1 ? v_.get_num().get_str() : v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    // Value as a long when it is an integer fitting the type.
    std::optional<long> to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p()) return std::nullopt;
        return v_.get_num().get_si();
    }
    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inv() const {
        if (is_zero()) throw ParameterDomainError("division by zero");
        return Rational(mpq_class(1) / v_);
    }
    Rational pow(std::int64_t e) const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ParameterDomainError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

inline Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            mpq_class v(std::string(text), 10);
            v.canonicalize();
            return Rational(std::move(v));
        }
        mpz_class num(std::string(text.substr(0, slash)), 10);
        mpz_class den(std::string(text.substr(slash + 1)), 10);
        if (den == 0) throw ParameterDomainError("rational with zero denominator");
        mpq_class v(num, den);
        v.canonicalize();
        return Rational(std::move(v));
    } catch (const std::invalid_argument&) {
        throw ConfigError("cannot parse rational '" + std::string(text) + "'");
    }
}

inline Rational Rational::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    Rational base = *this, acc = 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace sobpoly
