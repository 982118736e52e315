// First-order formulas over L_N plus generic parameters, and the ordered
// free-variable interface that fixes the ambient power M^n.

#ifndef K0_FORMULA_HPP
#define K0_FORMULA_HPP

#include <memory>
#include <string>
#include <vector>

#include "k0/term.hpp"

namespace k0 {

struct VarInterface {
    std::vector<std::string> vars;

    VarInterface() = default;
    explicit VarInterface(std::vector<std::string> v);

    int size() const { return static_cast<int>(vars.size()); }
    // 0-based index or -1.
    int index_of(const std::string& name) const;
    const std::string& name(int i) const { return vars.at(i); }

    friend bool operator==(const VarInterface&, const VarInterface&) = default;
};

struct Context {
    int modulus = 1;  // N >= 1
    VarInterface iface;
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Kind { True, False, Eq, Neq, Not, And, Or, Exists, Forall };

    Kind kind;
    Term lhs, rhs;        // Eq / Neq
    FormulaPtr a, b;      // Not (a), And/Or (a,b), quantifiers (a = body)
    std::string var;      // quantifier variable

    static FormulaPtr truth();
    static FormulaPtr falsity();
    static FormulaPtr eq(Term l, Term r);
    static FormulaPtr neq(Term l, Term r);
    static FormulaPtr neg(FormulaPtr f);
    static FormulaPtr conj(FormulaPtr l, FormulaPtr r);
    static FormulaPtr disj(FormulaPtr l, FormulaPtr r);
    static FormulaPtr exists(std::string v, FormulaPtr body);
    static FormulaPtr forall(std::string v, FormulaPtr body);

    bool is_atom() const { return kind == Kind::Eq || kind == Kind::Neq; }
    bool is_quantifier_free() const;
};

bool structurally_equal(const Formula& x, const Formula& y);

// Canonical text; parse(print(f)) is structurally equal to f.
std::string print(const Formula& f);

// Largest f-shift appearing in any term (including point offsets),
// and the number of distinct variables; used for oracle bounds.
long long max_term_span(const Formula& f);
int count_distinct_vars(const Formula& f);
bool constants_only(const Formula& f);

}  // namespace k0

#endif
