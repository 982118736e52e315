#include "k0/norm_atom.hpp"

#include <stdexcept>

namespace k0 {

NormalizedAtom NormalizedAtom::var_var(int l, int r, long long k) {
    if (l == r) return trivial(k == 0);  // no cycles
    NormalizedAtom a;
    a.kind = Kind::VarVar;
    if (k == 0 && l < r) std::swap(l, r);
    a.lhs = l;
    a.rhs = r;
    a.shift = k;
    return a;
}

std::string NormalizedAtom::to_string(const VarInterface& iface) const {
    if (is_trivial()) return truth ? "true" : "false";
    auto [l, r] = to_terms(iface);
    return l.to_string() + " = " + r.to_string();
}

std::pair<Term, Term> NormalizedAtom::to_terms(const VarInterface& iface) const {
    if (kind == Kind::VarVar)
        return {Term::var(iface.name(lhs)), Term::var(iface.name(rhs), shift)};
    if (kind == Kind::VarPoint)
        return {Term::var(iface.name(lhs)), Term::point(point)};
    throw std::logic_error("trivial atom has no term form");
}

NormalizedAtom normalize_atom(const Term& lhs, const Term& rhs,
                              const std::vector<std::string>& scope) {
    auto index = [&](const Term& t) {
        for (size_t i = 0; i < scope.size(); ++i)
            if (scope[i] == t.var_name()) return static_cast<int>(i);
        throw std::invalid_argument("variable not in scope: " + t.var_name());
    };

    if (lhs.is_ground() && rhs.is_ground()) {
        // Distinct orbits never meet; within an orbit equality is offset equality.
        return NormalizedAtom::trivial(lhs.point_base() == rhs.point_base());
    }
    if (lhs.is_var() && rhs.is_var()) {
        int a = index(lhs), b = index(rhs);
        long long s = lhs.shift, t = rhs.shift;
        // f^s(x_a) = f^t(x_b); cancel the common power of f.
        if (a == b) return NormalizedAtom::trivial(s == t);
        if (s <= t) return NormalizedAtom::var_var(a, b, t - s);
        return NormalizedAtom::var_var(b, a, s - t);
    }
    // One side ground: f^s(x) = p.
    const Term& vt = lhs.is_var() ? lhs : rhs;
    const Term& gt = lhs.is_var() ? rhs : lhs;
    int v = index(vt);
    auto shifted = gt.point_base().try_shift(-vt.shift);
    if (!shifted) return NormalizedAtom::trivial(false);  // constants have no f-preimage
    return NormalizedAtom::var_point(v, *shifted);
}

}  // namespace k0
