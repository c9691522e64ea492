#include "sobpoly/functional.hpp"

#include <utility>

namespace sobpoly {

PearsonPair tilde_transform(const PearsonPair& pp, const OperatorFamily& fam) {
    switch (fam.kind()) {
        case FamilyKind::Continuous: return pp;
        case FamilyKind::Discrete: return {pp.phi + pp.psi, pp.psi};
        case FamilyKind::QHahn: break;
    }
    const Poly dx{0, fam.q() - 1};  // Delta x = (q-1) x
    return {pp.phi + dx * pp.psi, fam.q() * pp.psi};
}

std::string AdmissibilityResult::str() const {
    switch (kind) {
        case Kind::Admissible: return "admissible";
        case Kind::Singular: return "singular(" + std::to_string(*n0) + ")";
        case Kind::Boundary: return "boundary(n0=" + std::to_string(*n0) + ")";
    }
    return "?";
}

namespace {

// Smallest integer n >= 0 with a + q^{-1}[n]* b = 0, exactly; nullopt if none.
std::optional<std::int64_t> singular_index(const Rational& a, const Rational& b,
                                           const OperatorFamily& fam) {
    if (b.is_zero()) return std::nullopt;  // a = 0 would force deg psi drop; a != 0 here
    if (fam.kind() != FamilyKind::QHahn) {
        const auto n = (-a / b).to_long();
        if (!n || *n < 0) return std::nullopt;
        return *n;
    }
    // q^{-n} = 1 - a (1 - q)/b =: target
    const Rational target = Rational(1) - a * (Rational(1) - fam.q()) / b;
    if (target.sign() <= 0) return std::nullopt;
    const Rational qi = fam.q().inv();
    Rational cur = 1;
    const bool growing = qi > Rational(1);
    for (std::int64_t n = 0; n <= 1 << 14; ++n) {
        if (cur == target) return n;
        if (growing ? cur > target : cur < target) return std::nullopt;
        cur *= qi;
    }
    return std::nullopt;
}

}  // namespace

AdmissibilityResult admissibility(const PearsonPair& pp, const OperatorFamily& fam,
                                  std::int64_t n_max) {
    if (pp.p() != pp.t() - 1) return {AdmissibilityResult::Kind::Admissible, std::nullopt};
    const auto n0 = singular_index(pp.psi.leading(), pp.phi.leading(), fam);
    if (!n0) return {AdmissibilityResult::Kind::Admissible, std::nullopt};
    if (*n0 <= n_max) return {AdmissibilityResult::Kind::Singular, n0};
    return {AdmissibilityResult::Kind::Boundary, n0};
}

MomentFunctional::MomentFunctional(OperatorFamily fam, Generator gen, std::string label,
                                   std::optional<PearsonPair> pearson)
    : st_(std::make_shared<State>(std::move(fam), std::move(gen), std::move(label),
                                  std::move(pearson))) {}

MomentFunctional MomentFunctional::with_pearson(PearsonPair pp) const {
    MomentFunctional v = *this;
    v.st_ = std::make_shared<State>(st_->fam, st_->gen, st_->label, std::move(pp));
    return v;
}

MomentFunctional MomentFunctional::with_label(std::string label) const {
    MomentFunctional v = *this;
    v.st_ = std::make_shared<State>(st_->fam, st_->gen, std::move(label), st_->pearson);
    return v;
}

Rational MomentFunctional::moment(std::int64_t n) const {
    if (n < 0) throw ParameterDomainError("negative moment index");
    std::scoped_lock lock(st_->mu);
    if (std::size_t(n) >= st_->memo.size()) st_->memo.resize(std::size_t(n) + 1);
    auto& slot = st_->memo[std::size_t(n)];
    if (!slot) slot = st_->gen(n, *this);
    return *slot;
}

Rational MomentFunctional::apply(const Poly& p) const {
    Rational acc = 0;
    for (int k = 0; k <= p.degree_or_neg1(); ++k) {
        const Rational c = p.coeff(k);
        if (!c.is_zero()) acc += c * moment(k);
    }
    return acc;
}

MomentFunctional mul_poly(const Poly& pi, const MomentFunctional& u) {
    return {u.family(),
            [pi, u](std::int64_t n, const MomentFunctional&) {
                Rational acc = 0;
                for (int k = 0; k <= pi.degree_or_neg1(); ++k) {
                    const Rational c = pi.coeff(k);
                    if (!c.is_zero()) acc += c * u.moment(n + k);
                }
                return acc;
            },
            "(" + pi.str() + ")*" + u.label()};
}

MomentFunctional div_linear(const MomentFunctional& u, const Rational& c) {
    return {u.family(),
            [c, u](std::int64_t n, const MomentFunctional& self) {
                if (n == 0) return Rational(0);
                return c * self.moment(n - 1) + u.moment(n - 1);
            },
            "(x-" + c.str_compact() + ")^{-1}" + u.label()};
}

MomentFunctional d_functional(const MomentFunctional& u) {
    const Rational f = -u.family().q().inv();
    return {u.family(),
            [u, f](std::int64_t n, const MomentFunctional&) {
                return f * u.apply(u.family().Dstar(Poly::monomial(int(n))));
            },
            "D(" + u.label() + ")"};
}

MomentFunctional dstar_functional(const MomentFunctional& u) {
    const Rational f = -u.family().q();
    return {u.family(),
            [u, f](std::int64_t n, const MomentFunctional&) {
                return f * u.apply(u.family().D(Poly::monomial(int(n))));
            },
            "D*(" + u.label() + ")"};
}

MomentFunctional eplus_functional(const MomentFunctional& u) {
    return {u.family(),
            [u](std::int64_t n, const MomentFunctional&) {
                return u.apply(u.family().Eminus(Poly::monomial(int(n))));
            },
            "E+(" + u.label() + ")"};
}

MomentFunctional eminus_functional(const MomentFunctional& u) {
    return {u.family(),
            [u](std::int64_t n, const MomentFunctional&) {
                return u.apply(u.family().Eplus(Poly::monomial(int(n))));
            },
            "E-(" + u.label() + ")"};
}

MomentFunctional dirac(const OperatorFamily& fam, const Rational& c, const Rational& weight) {
    return {fam,
            [c, weight](std::int64_t n, const MomentFunctional&) { return weight * c.pow(n); },
            "delta_" + c.str_compact()};
}

MomentFunctional add(const MomentFunctional& a, const MomentFunctional& b) {
    return {a.family(),
            [a, b](std::int64_t n, const MomentFunctional&) { return a.moment(n) + b.moment(n); },
            a.label() + "+" + b.label()};
}

MomentFunctional sub(const MomentFunctional& a, const MomentFunctional& b) {
    return {a.family(),
            [a, b](std::int64_t n, const MomentFunctional&) { return a.moment(n) - b.moment(n); },
            a.label() + "-" + b.label()};
}

MomentFunctional scale(const Rational& s, const MomentFunctional& u) {
    return {u.family(),
            [s, u](std::int64_t n, const MomentFunctional&) { return s * u.moment(n); },
            s.str_compact() + "*" + u.label()};
}

MomentFunctional moments_from_pearson(const PearsonPair& pp, const OperatorFamily& fam,
                                      std::map<std::int64_t, Rational> init, std::string label) {
    const int sigma = pp.sigma();
    auto gen = [pp, fam, init = std::move(init), sigma](std::int64_t n,
                                                        const MomentFunctional& self) -> Rational {
        const auto given = init.find(n);
        if (n <= sigma) {
            if (given == init.end()) throw SingularMomentError(n);
            return given->second;
        }
        // Pairing D(phi u) = psi u with x^m, m = n - sigma - 1, gives the
        // relation  -q^{-1} <u, phi D* x^m> - <u, psi x^m> = 0  whose top
        // moment index is n with coefficient -(a + q^{-1}[m]* b).
        const std::int64_t m = n - sigma - 1;
        std::map<std::int64_t, Rational> rel;
        const Poly lhs = pp.phi * fam.Dstar(Poly::monomial(int(m)));
        const Rational qinv = fam.q().inv();
        for (int k = 0; k <= lhs.degree_or_neg1(); ++k) {
            const Rational c = lhs.coeff(k);
            if (!c.is_zero()) rel[k] -= qinv * c;
        }
        for (int k = 0; k <= pp.psi.degree_or_neg1(); ++k) {
            const Rational c = pp.psi.coeff(k);
            if (!c.is_zero()) rel[m + k] -= c;
        }
        Rational top = 0;
        if (const auto it = rel.find(n); it != rel.end()) {
            top = it->second;
            rel.erase(it);
        }
        Rational rest = 0;
        for (const auto& [idx, coeff] : rel) rest += coeff * self.moment(idx);
        if (top.is_zero()) {
            if (!rest.is_zero()) throw InconsistentInitError(n);
            if (given == init.end()) throw SingularMomentError(n);
            return given->second;
        }
        const Rational value = -rest / top;
        if (given != init.end() && given->second != value) throw InconsistentInitError(n);
        return value;
    };
    return {fam, std::move(gen), std::move(label), pp};
}

PearsonReport verify_pearson(const MomentFunctional& u, const PearsonPair& pp, bool star,
                             std::int64_t N) {
    const auto& fam = u.family();
    for (std::int64_t n = 0; n <= N; ++n) {
        const Poly xn = Poly::monomial(int(n));
        const Rational lhs = star ? -fam.q() * u.apply(pp.phi * fam.D(xn))
                                  : -fam.q().inv() * u.apply(pp.phi * fam.Dstar(xn));
        const Rational rhs = u.apply(pp.psi * xn);
        if (lhs != rhs) return {false, n, lhs, rhs};
    }
    return {};
}

LadderLevel ladder(const MomentFunctional& u, int k, std::span<const Poly> phis) {
    if (k < 0) throw ParameterDomainError("ladder level must be nonnegative");
    if (!u.pearson()) throw LadderError("ladder requires a functional with a Pearson pair");
    MomentFunctional cur = u;
    PearsonPair pair = *u.pearson();
    if (!phis.empty() && phis[0] != pair.phi)
        throw LadderError("phis[0] must be the functional's phi");
    const auto& fam = u.family();
    for (int j = 1; j <= k; ++j) {
        const Poly& prev_phi = pair.phi;
        cur = eplus_functional(mul_poly(prev_phi, cur));
        const Poly psi_hat = fam.D(prev_phi) + fam.q() * fam.Eplus(pair.psi);
        Poly next_phi = std::size_t(j) < phis.size() ? phis[std::size_t(j)] : prev_phi;
        Poly next_psi;
        if (next_phi == prev_phi) {
            next_psi = psi_hat;
        } else {
            const auto xi = prev_phi.exact_divide(next_phi);
            if (!xi) throw LadderError("phi_k must divide phi_{k-1}");
            const auto reduced = (psi_hat - fam.D(*xi) * next_phi).exact_divide(fam.Eplus(*xi));
            if (!reduced) throw LadderError("no Pearson pair over the reduced phi at level " +
                                            std::to_string(j));
            next_psi = *reduced;
        }
        pair = PearsonPair(std::move(next_phi), std::move(next_psi));
        cur = cur.with_pearson(pair).with_label("u_" + std::to_string(j) + "[" + u.label() + "]");
    }
    return {cur, pair};
}

}  // namespace sobpoly
