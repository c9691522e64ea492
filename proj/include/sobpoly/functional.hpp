#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sobpoly/lattice.hpp"

namespace sobpoly {

// Pearson pair (phi, psi) of the distributional equation D(phi u) = psi u,
// with deg psi >= 1. sigma = max{deg phi - 2, deg psi - 1} is the order of
// the functional with respect to this pair. a_padded/b_padded are the
// leading coefficients in the unified zero-padded notation
//   phi = b_{sigma+2} z^{sigma+2} + ...,   psi = a_{sigma+1} z^{sigma+1} + ...
struct PearsonPair {
    Poly phi;
    Poly psi;

    PearsonPair(Poly phi_in, Poly psi_in) : phi(std::move(phi_in)), psi(std::move(psi_in)) {
        if (phi.is_zero()) throw ParameterDomainError("Pearson pair with phi = 0");
        if (psi.degree_or_neg1() < 1) throw ParameterDomainError("Pearson pair needs deg psi >= 1");
    }

    int t() const { return phi.degree_or_neg1(); }
    int p() const { return psi.degree_or_neg1(); }
    int sigma() const { return std::max(t() - 2, p() - 1); }
    Rational a_padded() const { return p() == sigma() + 1 ? psi.leading() : Rational(0); }
    Rational b_padded() const { return t() == sigma() + 2 ? phi.leading() : Rational(0); }
};

// Theorem: D(phi u) = psi u implies D*(phi~ u) = psi~ u with
//   continuous: (phi, psi)
//   discrete:   (phi + psi, psi)
//   q-Hahn:     (phi + (q-1) x psi, q psi)   [Delta x = (q-1) x on x(s) = q^s]
PearsonPair tilde_transform(const PearsonPair& pp, const OperatorFamily& fam);

struct AdmissibilityResult {
    enum class Kind { Admissible, Singular, Boundary } kind;
    std::optional<std::int64_t> n0;  // first singular index, if any

    bool admissible() const { return kind == Kind::Admissible; }
    std::string str() const;
};

// Definition: (phi, psi) is admissible when deg psi != deg phi - 1, or when
// deg psi = deg phi - 1 and a_p + q^{-1}[n]* b_t != 0 for every n >= 0.
// The equation is decided exactly: a singular index beyond n_max reports
// Boundary rather than Admissible.
AdmissibilityResult admissibility(const PearsonPair& pp, const OperatorFamily& fam,
                                  std::int64_t n_max = 64);

// A linear functional on polynomials, represented by its canonical moment
// sequence (u)_n = <u, x^n>. Moments are produced lazily by a generator and
// memoized. The memo is guarded by a recursive mutex: concurrent moment()
// calls are safe, and extension is serialized; results are deterministic.
class MomentFunctional {
  public:
    using Generator = std::function<Rational(std::int64_t, const MomentFunctional&)>;

    MomentFunctional(OperatorFamily fam, Generator gen, std::string label = {},
                     std::optional<PearsonPair> pearson = std::nullopt);

    const OperatorFamily& family() const { return st_->fam; }
    const std::string& label() const { return st_->label; }
    const std::optional<PearsonPair>& pearson() const { return st_->pearson; }

    // Returns this functional with the Pearson pair replaced.
    MomentFunctional with_pearson(PearsonPair pp) const;
    MomentFunctional with_label(std::string label) const;

    Rational moment(std::int64_t n) const;
    // <u, p> evaluated moment-wise.
    Rational apply(const Poly& p) const;

  private:
    struct State {
        OperatorFamily fam;
        Generator gen;
        std::string label;
        std::optional<PearsonPair> pearson;
        mutable std::recursive_mutex mu;
        mutable std::vector<std::optional<Rational>> memo;
        State(OperatorFamily f, Generator g, std::string l, std::optional<PearsonPair> pp)
            : fam(std::move(f)), gen(std::move(g)), label(std::move(l)), pearson(std::move(pp)) {}
    };
    std::shared_ptr<State> st_;
};

// <pi u, p> = <u, pi p>
MomentFunctional mul_poly(const Poly& pi, const MomentFunctional& u);

// <(x-c)^{-1} u, p> = <u, (p(x) - p(c))/(x - c)>; moment n is
// sum_{j<n} c^{n-1-j} (u)_j, i.e. v_n = c v_{n-1} + (u)_{n-1}, v_0 = 0.
MomentFunctional div_linear(const MomentFunctional& u, const Rational& c);

// <D u, p> = -q^{-1} <u, D* p>
MomentFunctional d_functional(const MomentFunctional& u);
// <D* u, p> = -q <u, D p>
MomentFunctional dstar_functional(const MomentFunctional& u);
// <E+ v, p> = <v, E- p>
MomentFunctional eplus_functional(const MomentFunctional& u);
// <E- v, p> = <v, E+ p>
MomentFunctional eminus_functional(const MomentFunctional& u);

// Dirac mass: <delta_c, p> = weight * p(c).
MomentFunctional dirac(const OperatorFamily& fam, const Rational& c, const Rational& weight = 1);

MomentFunctional add(const MomentFunctional& a, const MomentFunctional& b);
MomentFunctional sub(const MomentFunctional& a, const MomentFunctional& b);
MomentFunctional scale(const Rational& s, const MomentFunctional& u);

// Builds the functional determined by D(phi u) = psi u from initial data.
// init must supply indices 0..sigma and one value per singular index
// (n0 + sigma + 1 for each singular n0); it may also pin determined indices,
// which are then checked for consistency.
MomentFunctional moments_from_pearson(const PearsonPair& pp, const OperatorFamily& fam,
                                      std::map<std::int64_t, Rational> init,
                                      std::string label = {});

struct PearsonReport {
    bool ok = true;
    std::optional<std::int64_t> first_failure;
    Rational lhs, rhs;  // sides at the first failing index
};

// Checks <D(phi u) - psi u, x^n> = 0 for 0 <= n <= N (star = false), or the
// D* analogue (star = true). Failure is reported, not thrown.
PearsonReport verify_pearson(const MomentFunctional& u, const PearsonPair& pp, bool star,
                             std::int64_t N);

// One rung of the ladder u_k = E+(phi_{k-1} u_{k-1}).
struct LadderLevel {
    MomentFunctional u;
    PearsonPair pair;
};

// Constructs u_k together with its Pearson pair. phis, when given, supplies
// phi_0..phi_{k-1} with phi_0 = phi and phi_j | phi_{j-1}; by default
// phi_j = phi throughout. The pair at each level comes from
// D(phi (E+(phi u))) = (D phi + q E+ psi) E+(phi u), reduced through the
// divisor when phi_j is a proper divisor of phi_{j-1}.
LadderLevel ladder(const MomentFunctional& u, int k, std::span<const Poly> phis = {});

}  // namespace sobpoly
