#pragma once

#include <string>

#include "sobpoly/poly.hpp"

namespace sobpoly {

enum class FamilyKind { Continuous, Discrete, QHahn };

// The operator family of the calculus: bundles the five basic operators
// (D, D*, E+, E-, identity) together with the constants q, [n], [n]*.
//
//               D            D*           E+        E-
//   continuous  d/dx         d/dx         id        id
//   discrete    forward diff backward     r(x+1)    r(x-1)
//   q-Hahn      D_q          D_{1/q}      r(qx)     r(x/q)
//
// The q-Hahn case acts on the lattice x(s) = q^s, so all operators act
// directly on the variable x. q is an exact rational, q > 0 and q != 1.
class OperatorFamily {
  public:
    static OperatorFamily continuous() { return OperatorFamily(FamilyKind::Continuous, 1); }
    static OperatorFamily discrete() { return OperatorFamily(FamilyKind::Discrete, 1); }
    static OperatorFamily q_hahn(Rational q) {
        if (q.sign() <= 0 || q == Rational(1))
            throw ParameterDomainError("q-Hahn family needs rational q in (0,1) or (1,inf)");
        return OperatorFamily(FamilyKind::QHahn, std::move(q));
    }

    FamilyKind kind() const { return kind_; }
    const Rational& q() const { return q_; }

    // [n] = (q^n - 1)/(q - 1); equal to n in the continuous and discrete cases.
    Rational bracket(std::int64_t n) const;
    // [n]* = (q^{-n} - 1)/(q^{-1} - 1).
    Rational bracket_star(std::int64_t n) const;

    Poly D(const Poly& p) const;
    Poly Dstar(const Poly& p) const;
    Poly Eplus(const Poly& p) const;
    Poly Eminus(const Poly& p) const;

    std::string name() const;

    friend bool operator==(const OperatorFamily& a, const OperatorFamily& b) {
        return a.kind_ == b.kind_ && a.q_ == b.q_;
    }

  private:
    OperatorFamily(FamilyKind k, Rational q) : kind_(k), q_(std::move(q)) {}
    FamilyKind kind_;
    Rational q_;
};

}  // namespace sobpoly
