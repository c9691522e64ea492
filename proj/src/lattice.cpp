#include "sobpoly/lattice.hpp"

namespace sobpoly {

Rational OperatorFamily::bracket(std::int64_t n) const {
    if (n < 0) throw ParameterDomainError("bracket index must be nonnegative");
    if (kind_ != FamilyKind::QHahn) return Rational(long(n));
    return (q_.pow(n) - 1) / (q_ - 1);
}

Rational OperatorFamily::bracket_star(std::int64_t n) const {
    if (n < 0) throw ParameterDomainError("bracket index must be nonnegative");
    if (kind_ != FamilyKind::QHahn) return Rational(long(n));
    const Rational qi = q_.inv();
    return (qi.pow(n) - 1) / (qi - 1);
}

Poly OperatorFamily::D(const Poly& p) const {
    switch (kind_) {
        case FamilyKind::Continuous: return p.derivative();
        case FamilyKind::Discrete: return p.shift_arg(1) - p;
        case FamilyKind::QHahn: break;
    }
    // D_q x^n = [n] x^{n-1}
    std::vector<Rational> r;
    if (const auto d = p.degree()) {
        r.resize(std::size_t(*d));
        for (int k = 1; k <= *d; ++k) r[std::size_t(k - 1)] = bracket(k) * p.coeff(k);
    }
    return Poly(std::move(r));
}

Poly OperatorFamily::Dstar(const Poly& p) const {
    switch (kind_) {
        case FamilyKind::Continuous: return p.derivative();
        case FamilyKind::Discrete: return p - p.shift_arg(-1);
        case FamilyKind::QHahn: break;
    }
    std::vector<Rational> r;
    if (const auto d = p.degree()) {
        r.resize(std::size_t(*d));
        for (int k = 1; k <= *d; ++k) r[std::size_t(k - 1)] = bracket_star(k) * p.coeff(k);
    }
    return Poly(std::move(r));
}

Poly OperatorFamily::Eplus(const Poly& p) const {
    switch (kind_) {
        case FamilyKind::Continuous: return p;
        case FamilyKind::Discrete: return p.shift_arg(1);
        case FamilyKind::QHahn: return p.scale_arg(q_);
    }
    return p;
}

Poly OperatorFamily::Eminus(const Poly& p) const {
    switch (kind_) {
        case FamilyKind::Continuous: return p;
        case FamilyKind::Discrete: return p.shift_arg(-1);
        case FamilyKind::QHahn: return p.scale_arg(q_.inv());
    }
    return p;
}

std::string OperatorFamily::name() const {
    switch (kind_) {
        case FamilyKind::Continuous: return "continuous";
        case FamilyKind::Discrete: return "discrete";
        case FamilyKind::QHahn: return "q-hahn(q=" + q_.str_compact() + ")";
    }
    return "?";
}

}  // namespace sobpoly
