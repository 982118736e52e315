#include "k0/qf.hpp"

#include <algorithm>
#include <set>

namespace k0 {

std::string Literal::to_string(const VarInterface& iface) const {
    if (atom.is_trivial()) return negated == atom.truth ? "false" : "true";
    if (!negated) return atom.to_string(iface);
    auto [l, r] = atom.to_terms(iface);
    return l.to_string() + " != " + r.to_string();
}

SimpleSet positive_part(const Conjunct& c, int arity) {
    std::vector<NormalizedAtom> atoms;
    for (const auto& lit : c)
        if (!lit.negated) atoms.push_back(lit.atom);
    return SimpleSet::from_atoms(atoms, arity);
}

QFFormula QFFormula::canonicalized() const {
    std::set<Conjunct> seen;
    QFFormula out;
    out.arity = arity;
    for (const auto& conj : disjuncts) {
        Conjunct c;
        bool dead = false;
        for (const auto& lit : conj) {
            if (lit.atom.is_trivial()) {
                if (lit.atom.truth == lit.negated) {  // a false literal
                    dead = true;
                    break;
                }
                continue;  // true literal, drop
            }
            c.push_back(lit);
        }
        if (dead) continue;
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        // complementary pair
        for (size_t i = 0; i + 1 < c.size() && !dead; ++i)
            if (c[i].atom == c[i + 1].atom && c[i].negated != c[i + 1].negated) dead = true;
        if (dead) continue;
        // positives consistent?
        SimpleSet pos = positive_part(c, arity);
        if (pos.is_empty()) continue;
        // a negated literal entailed-false or entailed-true by the positives
        Conjunct kept;
        for (const auto& lit : c) {
            if (!lit.negated) {
                kept.push_back(lit);
                continue;
            }
            SimpleSet with = SimpleSet::from_atoms(
                [&] {
                    auto a = pos.to_atoms();
                    a.push_back(lit.atom);
                    return a;
                }(),
                arity);
            if (with == pos) {  // atom entailed: conjunct contradictory
                dead = true;
                break;
            }
            if (with.is_empty()) continue;  // negation vacuous on this conjunct
            kept.push_back(lit);
        }
        if (dead) continue;
        if (seen.insert(kept).second) out.disjuncts.push_back(std::move(kept));
    }
    std::sort(out.disjuncts.begin(), out.disjuncts.end());
    return out;
}

bool QFFormula::eval(std::span<const long long> tuple, int modulus) const {
    auto atom_holds = [&](const NormalizedAtom& a) -> bool {
        switch (a.kind) {
            case NormalizedAtom::Kind::Trivial:
                return a.truth;
            case NormalizedAtom::Kind::VarVar:
                return tuple[a.lhs] == tuple[a.rhs] + modulus * a.shift;
            case NormalizedAtom::Kind::VarPoint: {
                auto v = a.point.value_in(modulus);
                if (!v) throw std::invalid_argument("generic point in standard-model eval");
                return tuple[a.lhs] == *v;
            }
        }
        return false;
    };
    for (const auto& conj : disjuncts) {
        bool ok = true;
        for (const auto& lit : conj)
            if (atom_holds(lit.atom) == lit.negated) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

long long QFFormula::max_shift_span() const {
    long long m = 0;
    for (const auto& conj : disjuncts)
        for (const auto& lit : conj) {
            if (lit.atom.kind == NormalizedAtom::Kind::VarVar)
                m = std::max(m, lit.atom.shift);
            else if (lit.atom.kind == NormalizedAtom::Kind::VarPoint)
                m = std::max(m, std::abs(lit.atom.point.offset));
        }
    return m;
}

long long QFFormula::max_const_offset() const {
    long long m = 0;
    for (const auto& conj : disjuncts)
        for (const auto& lit : conj)
            if (lit.atom.kind == NormalizedAtom::Kind::VarPoint &&
                lit.atom.point.orbit.is_constant())
                m = std::max(m, lit.atom.point.offset);
    return m;
}

bool QFFormula::constants_only() const {
    for (const auto& conj : disjuncts)
        for (const auto& lit : conj)
            if (lit.atom.kind == NormalizedAtom::Kind::VarPoint &&
                !lit.atom.point.orbit.is_constant())
                return false;
    return true;
}

std::string QFFormula::to_string(const VarInterface& iface) const {
    if (disjuncts.empty()) return "false";
    std::string out;
    for (size_t i = 0; i < disjuncts.size(); ++i) {
        if (i) out += " | ";
        if (disjuncts[i].empty()) {
            out += "true";
            continue;
        }
        for (size_t j = 0; j < disjuncts[i].size(); ++j) {
            if (j) out += " & ";
            out += disjuncts[i][j].to_string(iface);
        }
    }
    return out;
}

FormulaPtr QFFormula::to_formula(const VarInterface& iface) const {
    if (disjuncts.empty()) return Formula::falsity();
    FormulaPtr out;
    for (const auto& conj : disjuncts) {
        FormulaPtr c;
        for (const auto& lit : conj) {
            auto [l, r] = lit.atom.to_terms(iface);
            FormulaPtr f = lit.negated ? Formula::neq(l, r) : Formula::eq(l, r);
            c = c ? Formula::conj(c, f) : f;
        }
        if (!c) c = Formula::truth();
        out = out ? Formula::disj(out, c) : c;
    }
    return out;
}

}  // namespace k0
