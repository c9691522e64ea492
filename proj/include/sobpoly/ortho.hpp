#pragma once

#include <map>

#include "sobpoly/functional.hpp"

namespace sobpoly {

// Monic orthogonal polynomial sequence of a quasi-definite moment functional,
// built by Gram-Schmidt over the Hankel bilinear form (p, r) -> <u, p r>.
// Extension is depth-on-demand and serialized internally; already computed
// entries may be read concurrently. Breakdown (vanishing d_n^2) surfaces as
// QuasiDefiniteBreakdownError at the exact offending index.
class OrthoSequence {
  public:
    explicit OrthoSequence(MomentFunctional u);

    const MomentFunctional& functional() const { return st_->u; }
    const OperatorFamily& family() const { return st_->u.family(); }

    Poly poly(int n) const;
    Rational norm_sq(int n) const;  // d_n^2
    // Recurrence data of z p_n = p_{n+1} + B_n p_n + C_n p_{n-1}:
    // B_n = <u, x p_n^2>/d_n^2 and C_n = d_n^2/d_{n-1}^2 (n >= 1).
    Rational B(int n) const;
    Rational C(int n) const;

  private:
    struct State {
        MomentFunctional u;
        mutable std::recursive_mutex mu;
        mutable std::vector<Poly> polys;
        mutable std::vector<Rational> dsq;
        explicit State(MomentFunctional f) : u(std::move(f)) {}
    };
    void ensure(int n) const;
    std::shared_ptr<State> st_;
};

// p_n^{[1]} = [n+1]^{-1} D p_{n+1}; monic of degree n.
Poly deriv_seq(const OrthoSequence& seq, int n);

// Orthogonal sequence of the ladder functional u_k (p_n^{{k}}).
OrthoSequence ladder_ops(const MomentFunctional& u, int k);

// Coefficients of f in a monic graded basis, by exact leading-coefficient
// back-substitution. Valid for any quasi-definite (not necessarily positive)
// setting since no inner product is involved.
template <typename PolyAt>
std::map<int, Rational> expand_in_basis(Poly f, PolyAt&& basis_poly) {
    std::map<int, Rational> out;
    while (!f.is_zero()) {
        const int d = f.degree_or_neg1();
        const Rational c = f.leading();
        out[d] = c;
        f -= c * basis_poly(d);
    }
    return out;
}

// Independent construction of p_n via the normalized Hankel determinant
// formula; used as a brute-force oracle against Gram-Schmidt.
Poly hankel_determinant_poly(const MomentFunctional& u, int n);

}  // namespace sobpoly
