// Normalized atoms: the canonical forms every equality between terms
// reduces to, using injectivity of f, absence of cycles, and the fact
// that named constants lie outside the image of f.
//
// Shapes after normalization:
//   Trivial(true|false)
//   VarVar   x_l = f^k(x_r) with k >= 0; when k = 0 the larger index is
//            on the left
//   VarPoint x_v = p for an orbit point p
//
// The transient shape f^k(x) = p never survives: it either resolves to
// a VarPoint (shifting p back through f^k) or to Trivial(false) when p
// is a constant-orbit point of depth < k.

#ifndef K0_NORM_ATOM_HPP
#define K0_NORM_ATOM_HPP

#include <compare>
#include <string>
#include <vector>

#include "k0/formula.hpp"

namespace k0 {

struct NormalizedAtom {
    enum class Kind { Trivial, VarVar, VarPoint };

    Kind kind = Kind::Trivial;
    bool truth = false;       // Trivial
    int lhs = -1;             // VarVar / VarPoint: 0-based coordinate index
    int rhs = -1;             // VarVar
    long long shift = 0;      // VarVar: x_lhs = f^shift(x_rhs)
    OrbitPoint point;         // VarPoint: x_lhs = point

    static NormalizedAtom trivial(bool t) {
        NormalizedAtom a;
        a.kind = Kind::Trivial;
        a.truth = t;
        return a;
    }
    static NormalizedAtom var_var(int l, int r, long long k);  // canonicalizes
    static NormalizedAtom var_point(int v, OrbitPoint p) {
        NormalizedAtom a;
        a.kind = Kind::VarPoint;
        a.lhs = v;
        a.point = std::move(p);
        return a;
    }

    bool is_trivial() const { return kind == Kind::Trivial; }
    bool mentions(int var) const {
        return (kind != Kind::Trivial && lhs == var) || (kind == Kind::VarVar && rhs == var);
    }

    friend bool operator==(const NormalizedAtom&, const NormalizedAtom&) = default;
    friend std::strong_ordering operator<=>(const NormalizedAtom& a, const NormalizedAtom& b) {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        if (auto c = a.truth <=> b.truth; c != 0) return c;
        if (auto c = a.lhs <=> b.lhs; c != 0) return c;
        if (auto c = a.rhs <=> b.rhs; c != 0) return c;
        if (auto c = a.shift <=> b.shift; c != 0) return c;
        return a.point <=> b.point;
    }

    std::string to_string(const VarInterface& iface) const;
    // As a pair of terms over the interface (Trivial not representable).
    std::pair<Term, Term> to_terms(const VarInterface& iface) const;
};

// Resolves variable names through `scope` (interface extended with any
// quantified variables); total on well-formed terms.
NormalizedAtom normalize_atom(const Term& lhs, const Term& rhs,
                              const std::vector<std::string>& scope);

inline NormalizedAtom normalize_atom(const Term& lhs, const Term& rhs,
                                     const VarInterface& iface) {
    return normalize_atom(lhs, rhs, iface.vars);
}

}  // namespace k0

#endif
