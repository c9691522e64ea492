#include "sobpoly/poly.hpp"

#include <sstream>

namespace sobpoly {

Poly Poly::monomial(int k, Rational coeff) {
    if (k < 0) throw ParameterDomainError("negative monomial degree");
    std::vector<Rational> c(std::size_t(k) + 1, Rational(0));
    c.back() = std::move(coeff);
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly operator*(const Rational& s, const Poly& p) {
    Poly r = p;
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
}

Poly Poly::shift_arg(const Rational& h) const {
    // Horner in (x + h).
    Poly r;
    const Poly lin{h, 1};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + Poly::constant(*it);
    return r;
}

Poly Poly::scale_arg(const Rational& s) const {
    Poly r = *this;
    Rational f = 1;
    for (std::size_t i = 1; i < r.c_.size(); ++i) {
        f *= s;
        r.c_[i] *= f;
    }
    r.trim();
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational(long(i)) * c_[i];
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw ParameterDomainError("polynomial division by zero");
    Poly rem = *this;
    if (rem.degree_or_neg1() < d.degree_or_neg1()) return {Poly{}, rem};
    std::vector<Rational> q(std::size_t(rem.degree_or_neg1() - d.degree_or_neg1()) + 1, Rational(0));
    const Rational lead_inv = d.leading().inv();
    while (!rem.is_zero() && rem.degree_or_neg1() >= d.degree_or_neg1()) {
        const int k = rem.degree_or_neg1() - d.degree_or_neg1();
        const Rational f = rem.leading() * lead_inv;
        q[std::size_t(k)] = f;
        rem -= Poly::monomial(k, f) * d;
    }
    return {Poly(std::move(q)), rem};
}

std::optional<Poly> Poly::exact_divide(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.leading().inv() * a;
}

std::string Poly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree_or_neg1(); k >= 0; --k) {
        const Rational c = coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rational a = c.abs();
        if (k == 0 || a != Rational(1)) os << a.str_compact();
        if (k > 0) {
            if (a != Rational(1)) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace sobpoly
