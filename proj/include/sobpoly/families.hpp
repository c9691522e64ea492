#pragma once

#include <variant>

#include "sobpoly/functional.hpp"

namespace sobpoly {

// Built-in family parameter blocks. All parameters are exact rationals.
struct JacobiParams {
    Rational alpha, beta;  // alpha, beta > -1
};
struct MeixnerParams {
    Rational beta, c;  // beta > 0, 0 < c < 1
};
struct QFreudParams {
    Rational q, K, c1;  // 0 < q < 1, K > 0, c1 != 0
};
struct MedemParams {};

using FamilySpec = std::variant<JacobiParams, MeixnerParams, QFreudParams, MedemParams>;

std::string family_name(const FamilySpec& spec);
OperatorFamily operator_family(const FamilySpec& spec);

// Recurrence coefficient chain of the q-Freud family:
//   c_0 = 0, c_1 given, c_2 = (1 - c_1^2)/c_1, and for n >= 2
//   q[n]c_{n-1} + K q^{-n+1} c_n c_{n-1} c_{n-2}
//     = [n-1]c_n + K q^{-n-1} c_{n+1} c_n c_{n-1}.
// a_n = K q^{-n} c_n c_{n-1} c_{n-2}.
class QFreudChain {
  public:
    QFreudChain(Rational q, Rational K, Rational c1);
    Rational c(int n) const;
    Rational a(int n) const { return K_ * q_.pow(-n) * c(n) * c(n - 1) * c(n - 2); }
    const Rational& q() const { return q_; }
    const Rational& K() const { return K_; }

  private:
    void ensure(int n) const;
    Rational q_, K_;
    mutable std::vector<Rational> c_;
    mutable std::recursive_mutex mu_;
};

// The moment functional of a built-in family, normalized to (u)_0 = 1
// except q-Freud, which uses (u)_0 = 2 so that <u, P_n P_m> = 2 c_1...c_n.
// The attached Pearson pair is the distributional equation the functional
// satisfies exactly (see make_qfreud below for the q-Freud pair).
MomentFunctional make_family(const FamilySpec& spec);

// q-Freud: moments come from the tridiagonal recurrence matrix built on the
// chain, (u)_n = 2 (J^n)_{00}. The chain functional satisfies
//   D*(u) = (-K q^{-2} x^3 + g' x) u,   g' = (K q^{-2} S - q)/c_1,
// with S = c_1^2 + c_1 c_2 (= 1 by the chain's normalization), and hence the
// D-equation D(phi u) = psi u with
//   psi = -K q^{-3} x^3 + (g'/q) x,   phi = 1 - (q-1) x psi.
// That pair, not the bare cubic, is what the functional carries.
MomentFunctional make_qfreud(const QFreudParams& p);

// d_n^2 / d_0^2 from the closed-form orthogonality displays:
//   Jacobi:  4^n n! (alpha+1)_n (beta+1)_n /
//            [(z+2n) prod_{j=1}^{n-1}(z+j) prod_{j=n}^{2n-1}(z+j)^2], z = alpha+beta+1
//   Meixner: (beta)_n c^n n! / (1-c)^{2n}
//   q-Freud: c_1 c_2 ... c_n
// Medem has no closed form.
Rational closed_norm_ratio(const FamilySpec& spec, int n);

struct ShiftedFamily {
    MomentFunctional u;  // u_{-1}, normalized to moment 1 at index 0
    Poly phi_m1;         // its Pearson phi
};

// The k = -1 companion: Jacobi(alpha,beta) -> Jacobi(alpha-1,beta-1) for
// alpha, beta > 0; Meixner(beta,c) -> Meixner(beta-1,c) for beta > 1.
// Validates E+(phi_{-1} u_{-1}) proportional to u on moments 0..16.
// No closed form exists for q-Freud or Medem.
ShiftedFamily u_minus_one(const FamilySpec& spec);

}  // namespace sobpoly
