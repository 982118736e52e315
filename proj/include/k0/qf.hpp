// Quantifier-free formulas in disjunctive normal form over normalized
// literals.  truth() is the single empty conjunct, falsity() the empty
// disjunction.

#ifndef K0_QF_HPP
#define K0_QF_HPP

#include <compare>
#include <string>
#include <vector>

#include "k0/simple_set.hpp"

namespace k0 {

struct Literal {
    bool negated = false;
    NormalizedAtom atom;

    friend bool operator==(const Literal&, const Literal&) = default;
    friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
        if (auto c = a.atom <=> b.atom; c != 0) return c;
        return a.negated <=> b.negated;
    }
    std::string to_string(const VarInterface& iface) const;
};

using Conjunct = std::vector<Literal>;

struct QFFormula {
    int arity = 0;
    std::vector<Conjunct> disjuncts;

    static QFFormula truth(int arity) { return {arity, {Conjunct{}}}; }
    static QFFormula falsity(int arity) { return {arity, {}}; }

    bool is_false() const { return disjuncts.empty(); }

    // Sorts and dedupes literals and disjuncts, drops conjuncts that are
    // syntactically or semantically contradictory (positive part empty as
    // a simple set, or a literal contradicting the positive part).
    QFFormula canonicalized() const;

    bool eval(std::span<const long long> tuple, int modulus) const;

    long long max_shift_span() const;    // max |shift| / |offset| over literals
    long long max_const_offset() const;
    bool constants_only() const;

    std::string to_string(const VarInterface& iface) const;
    FormulaPtr to_formula(const VarInterface& iface) const;

    friend bool operator==(const QFFormula&, const QFFormula&) = default;
};

// Positive atoms of one conjunct as a simple set.
SimpleSet positive_part(const Conjunct& c, int arity);

}  // namespace k0

#endif
