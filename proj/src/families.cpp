#include "sobpoly/families.hpp"

#include <mutex>

namespace sobpoly {

std::string family_name(const FamilySpec& spec) {
    return std::visit(
        [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, JacobiParams>)
                return "jacobi(" + p.alpha.str_compact() + "," + p.beta.str_compact() + ")";
            else if constexpr (std::is_same_v<T, MeixnerParams>)
                return "meixner(" + p.beta.str_compact() + "," + p.c.str_compact() + ")";
            else if constexpr (std::is_same_v<T, QFreudParams>)
                return "qfreud(" + p.q.str_compact() + "," + p.K.str_compact() + "," +
                       p.c1.str_compact() + ")";
            else
                return "medem";
        },
        spec);
}

OperatorFamily operator_family(const FamilySpec& spec) {
    if (std::holds_alternative<MeixnerParams>(spec)) return OperatorFamily::discrete();
    if (const auto* q = std::get_if<QFreudParams>(&spec)) return OperatorFamily::q_hahn(q->q);
    return OperatorFamily::continuous();
}

QFreudChain::QFreudChain(Rational q, Rational K, Rational c1) : q_(std::move(q)), K_(std::move(K)) {
    if (q_.sign() <= 0 || q_ >= Rational(1)) throw ParameterDomainError("q-Freud needs 0 < q < 1");
    if (K_.sign() <= 0) throw ParameterDomainError("q-Freud needs K > 0");
    if (c1.is_zero()) throw ParameterDomainError("q-Freud needs c1 != 0");
    c_.push_back(0);
    c_.push_back(c1);
    c_.push_back((Rational(1) - c1 * c1) / c1);
}

void QFreudChain::ensure(int n) const {
    std::scoped_lock lock(mu_);
    while (int(c_.size()) <= n) {
        const int m = int(c_.size()) - 1;  // recurrence at index m >= 2 produces c_{m+1}
        const Rational &cm = c_[std::size_t(m)], &cm1 = c_[std::size_t(m - 1)],
                       &cm2 = c_[std::size_t(m - 2)];
        if (cm.is_zero() || cm1.is_zero()) throw ChainBreakdownError(m + 1);
        Rational br_m = (q_.pow(m) - 1) / (q_ - 1);
        Rational br_m1 = (q_.pow(m - 1) - 1) / (q_ - 1);
        const Rational lhs = q_ * br_m * cm1 + K_ * q_.pow(1 - m) * cm * cm1 * cm2;
        c_.push_back((lhs - br_m1 * cm) * q_.pow(m + 1) / (K_ * cm * cm1));
    }
}

Rational QFreudChain::c(int n) const {
    if (n < 0) throw ParameterDomainError("chain index must be nonnegative");
    ensure(n);
    std::scoped_lock lock(mu_);
    return c_[std::size_t(n)];
}

namespace {

MomentFunctional make_jacobi(const JacobiParams& p) {
    if (p.alpha <= Rational(-1) || p.beta <= Rational(-1))
        throw ParameterDomainError("Jacobi needs alpha, beta > -1");
    const PearsonPair pp(Poly{1, 0, -1}, Poly{p.beta - p.alpha, -(p.alpha + p.beta + 2)});
    return moments_from_pearson(pp, OperatorFamily::continuous(), {{0, Rational(1)}},
                                family_name(FamilySpec(p)));
}

MomentFunctional make_meixner(const MeixnerParams& p) {
    if (p.beta.sign() <= 0) throw ParameterDomainError("Meixner needs beta > 0");
    if (p.c.sign() <= 0 || p.c >= Rational(1)) throw ParameterDomainError("Meixner needs 0 < c < 1");
    const PearsonPair pp(Poly{0, 1}, Poly{p.beta * p.c, p.c - 1});
    return moments_from_pearson(pp, OperatorFamily::discrete(), {{0, Rational(1)}},
                                family_name(FamilySpec(MeixnerParams{p.beta, p.c})));
}

MomentFunctional make_medem() {
    // D(x^3 w) = (-x^2 + 4) w, 1-singular: (w)_1 and (w)_3 are initial data.
    const PearsonPair pp(Poly{0, 0, 0, 1}, Poly{4, 0, -1});
    return moments_from_pearson(pp, OperatorFamily::continuous(),
                                {{0, Rational(1)}, {1, Rational(0)}, {3, Rational(0)}}, "medem");
}

}  // namespace

MomentFunctional make_qfreud(const QFreudParams& p) {
    const auto fam = OperatorFamily::q_hahn(p.q);
    auto chain = std::make_shared<QFreudChain>(p.q, p.K, p.c1);

    // (u)_n = 2 (J^n)_{00} for the monic tridiagonal J with zero diagonal.
    struct PowerState {
        std::mutex mu;
        std::vector<Rational> v{Rational(1)};
        std::vector<Rational> moments{Rational(2)};
    };
    auto ps = std::make_shared<PowerState>();
    auto gen = [chain, ps](std::int64_t n, const MomentFunctional&) {
        std::scoped_lock lock(ps->mu);
        while (std::int64_t(ps->moments.size()) <= n) {
            auto& v = ps->v;
            std::vector<Rational> w(v.size() + 1, Rational(0));
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i >= 1) w[i] += v[i - 1];
                if (i + 1 < v.size()) w[i] += chain->c(int(i) + 1) * v[i + 1];
            }
            v = std::move(w);
            ps->moments.push_back(Rational(2) * v[0]);
        }
        return ps->moments[std::size_t(n)];
    };

    // The distributional pair actually satisfied by the chain functional.
    const Rational S = p.c1 * p.c1 + p.c1 * chain->c(2);
    const Rational g = (p.K * p.q.pow(-2) * S - p.q) / p.c1;
    const Poly psi{0, g / p.q, 0, -p.K * p.q.pow(-3)};
    const Poly phi = Poly{1} - Poly{0, p.q - 1} * psi;
    return MomentFunctional(fam, std::move(gen), family_name(FamilySpec(p)),
                            PearsonPair(phi, psi));
}

MomentFunctional make_family(const FamilySpec& spec) {
    return std::visit(
        [](const auto& p) -> MomentFunctional {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, JacobiParams>) return make_jacobi(p);
            else if constexpr (std::is_same_v<T, MeixnerParams>) return make_meixner(p);
            else if constexpr (std::is_same_v<T, QFreudParams>) return make_qfreud(p);
            else return make_medem();
        },
        spec);
}

Rational closed_norm_ratio(const FamilySpec& spec, int n) {
    if (n < 0) throw ParameterDomainError("negative index");
    if (n == 0) return 1;
    if (const auto* j = std::get_if<JacobiParams>(&spec)) {
        const Rational z = j->alpha + j->beta + 1;
        Rational r = Rational(4).pow(n);
        for (int k = 1; k <= n; ++k) r *= Rational(long(k)) * (j->alpha + k) * (j->beta + k);
        r /= z + 2 * long(n);
        for (int k = 1; k < n; ++k) r /= z + k;
        for (int k = n; k < 2 * n; ++k) r /= (z + k) * (z + k);
        return r;
    }
    if (const auto* m = std::get_if<MeixnerParams>(&spec)) {
        Rational r = m->c.pow(n) / (Rational(1) - m->c).pow(2 * long(n));
        for (int k = 0; k < n; ++k) r *= (m->beta + k) * Rational(long(k) + 1);
        return r;
    }
    if (const auto* f = std::get_if<QFreudParams>(&spec)) {
        QFreudChain chain(f->q, f->K, f->c1);
        Rational r = 1;
        for (int k = 1; k <= n; ++k) r *= chain.c(k);
        return r;
    }
    throw NoClosedFormError("Medem norms have no closed form");
}

ShiftedFamily u_minus_one(const FamilySpec& spec) {
    MomentFunctional base = make_family(spec);
    std::optional<ShiftedFamily> out;
    if (const auto* j = std::get_if<JacobiParams>(&spec)) {
        if (j->alpha.sign() <= 0 || j->beta.sign() <= 0)
            throw ParameterDomainError("u_{-1} for Jacobi needs alpha, beta > 0");
        out = ShiftedFamily{make_jacobi({j->alpha - 1, j->beta - 1}), Poly{1, 0, -1}};
    } else if (const auto* m = std::get_if<MeixnerParams>(&spec)) {
        if (m->beta <= Rational(1)) throw ParameterDomainError("u_{-1} for Meixner needs beta > 1");
        out = ShiftedFamily{make_meixner({m->beta - 1, m->c}), Poly{0, 1}};
    } else {
        throw NoClosedFormError("u_{-1} is only constructed for the classical families");
    }
    // E+(phi_{-1} u_{-1}) must be proportional to u.
    const MomentFunctional lifted = eplus_functional(mul_poly(out->phi_m1, out->u));
    const Rational ratio = lifted.moment(0) / base.moment(0);
    for (std::int64_t n = 0; n <= 16; ++n)
        if (lifted.moment(n) != ratio * base.moment(n))
            throw RelationViolatedError("u_{-1} validation failed at moment " + std::to_string(n));
    return std::move(*out);
}

}  // namespace sobpoly
