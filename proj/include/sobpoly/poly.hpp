#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sobpoly/rational.hpp"

namespace sobpoly {

// Dense univariate polynomial over Rational, coefficients indexed by degree,
// trailing zeros trimmed. The zero polynomial has no degree.
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return {}; }
    static Poly constant(Rational c) { return Poly{std::move(c)}; }
    static Poly x() { return Poly{0, 1}; }
    static Poly monomial(int k, Rational coeff = 1);

    std::optional<int> degree() const {
        return c_.empty() ? std::nullopt : std::make_optional(int(c_.size()) - 1);
    }
    // Degree with the zero polynomial mapped to -1; handy in index arithmetic.
    int degree_or_neg1() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Rational coeff(int k) const {
        return (k >= 0 && k < int(c_.size())) ? c_[std::size_t(k)] : Rational(0);
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // p(x + h)
    Poly shift_arg(const Rational& h) const;
    // p(s * x)
    Poly scale_arg(const Rational& s) const;
    // d/dx
    Poly derivative() const;

    // Quotient and remainder of division by a nonzero polynomial.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    // Exact quotient, or nullopt when the remainder is nonzero.
    std::optional<Poly> exact_divide(const Poly& d) const;

    std::string str(std::string_view var = "x") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Monic gcd (Euclid); gcd(p, 0) is p made monic, gcd(0, 0) is 0.
Poly gcd(Poly a, Poly b);

}  // namespace sobpoly
