#include "k0/formula.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace k0 {

VarInterface::VarInterface(std::vector<std::string> v) : vars(std::move(v)) {
    std::set<std::string> seen;
    for (const auto& s : vars) {
        if (s.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(s).second)
            throw std::invalid_argument("duplicate variable in interface: " + s);
    }
}

int VarInterface::index_of(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

static FormulaPtr make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

FormulaPtr Formula::truth() { return make({Formula::Kind::True, {}, {}, nullptr, nullptr, {}}); }
FormulaPtr Formula::falsity() { return make({Formula::Kind::False, {}, {}, nullptr, nullptr, {}}); }
FormulaPtr Formula::eq(Term l, Term r) {
    return make({Kind::Eq, std::move(l), std::move(r), nullptr, nullptr, {}});
}
FormulaPtr Formula::neq(Term l, Term r) {
    return make({Kind::Neq, std::move(l), std::move(r), nullptr, nullptr, {}});
}
FormulaPtr Formula::neg(FormulaPtr f) {
    return make({Kind::Not, {}, {}, std::move(f), nullptr, {}});
}
FormulaPtr Formula::conj(FormulaPtr l, FormulaPtr r) {
    return make({Kind::And, {}, {}, std::move(l), std::move(r), {}});
}
FormulaPtr Formula::disj(FormulaPtr l, FormulaPtr r) {
    return make({Kind::Or, {}, {}, std::move(l), std::move(r), {}});
}
FormulaPtr Formula::exists(std::string v, FormulaPtr body) {
    return make({Kind::Exists, {}, {}, std::move(body), nullptr, std::move(v)});
}
FormulaPtr Formula::forall(std::string v, FormulaPtr body) {
    return make({Kind::Forall, {}, {}, std::move(body), nullptr, std::move(v)});
}

bool Formula::is_quantifier_free() const {
    switch (kind) {
        case Kind::True:
        case Kind::False:
        case Kind::Eq:
        case Kind::Neq:
            return true;
        case Kind::Not:
            return a->is_quantifier_free();
        case Kind::And:
        case Kind::Or:
            return a->is_quantifier_free() && b->is_quantifier_free();
        case Kind::Exists:
        case Kind::Forall:
            return false;
    }
    return false;
}

bool structurally_equal(const Formula& x, const Formula& y) {
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case Formula::Kind::True:
        case Formula::Kind::False:
            return true;
        case Formula::Kind::Eq:
        case Formula::Kind::Neq:
            return x.lhs == y.lhs && x.rhs == y.rhs;
        case Formula::Kind::Not:
            return structurally_equal(*x.a, *y.a);
        case Formula::Kind::And:
        case Formula::Kind::Or:
            return structurally_equal(*x.a, *y.a) && structurally_equal(*x.b, *y.b);
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            return x.var == y.var && structurally_equal(*x.a, *y.a);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Printing.  Precedence: atoms > ~ > & > |.  Quantifier bodies extend
// maximally right, so a quantifier in a non-tail operand gets parentheses.

namespace {

enum Level { LvlOr = 0, LvlAnd = 1, LvlUnary = 2 };

void print_rec(const Formula& f, Level ctx, std::string& out) {
    auto paren = [&](auto&& fn) {
        out += '(';
        fn();
        out += ')';
    };
    switch (f.kind) {
        case Formula::Kind::True: out += "true"; return;
        case Formula::Kind::False: out += "false"; return;
        case Formula::Kind::Eq:
            out += f.lhs.to_string() + " = " + f.rhs.to_string();
            return;
        case Formula::Kind::Neq:
            out += f.lhs.to_string() + " != " + f.rhs.to_string();
            return;
        case Formula::Kind::Not:
            out += '~';
            paren([&] { print_rec(*f.a, LvlOr, out); });
            return;
        case Formula::Kind::And: {
            auto body = [&] {
                print_rec(*f.a, LvlAnd, out);
                out += " & ";
                // right operand at unary level unless it is itself a
                // conjunction chain; quantifier tails keep their scope
                if (f.b->kind == Formula::Kind::Exists || f.b->kind == Formula::Kind::Forall)
                    paren([&] { print_rec(*f.b, LvlOr, out); });
                else
                    print_rec(*f.b, LvlAnd, out);
            };
            if (ctx > LvlAnd) paren(body); else body();
            return;
        }
        case Formula::Kind::Or: {
            auto body = [&] {
                print_rec(*f.a, LvlOr, out);
                out += " | ";
                if (f.b->kind == Formula::Kind::Exists || f.b->kind == Formula::Kind::Forall)
                    paren([&] { print_rec(*f.b, LvlOr, out); });
                else
                    print_rec(*f.b, LvlOr, out);
            };
            if (ctx > LvlOr) paren(body); else body();
            return;
        }
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            auto body = [&] {
                out += (f.kind == Formula::Kind::Exists) ? "E " : "A ";
                out += f.var + ". ";
                print_rec(*f.a, LvlOr, out);
            };
            if (ctx > LvlOr) paren(body); else body();
            return;
        }
    }
}

}  // namespace

std::string print(const Formula& f) {
    std::string out;
    print_rec(f, LvlOr, out);
    return out;
}

// ---------------------------------------------------------------------------

static long long term_span(const Term& t) {
    long long s = t.shift;
    if (t.is_ground()) {
        long long off = t.point_base().offset;
        s += off < 0 ? -off : off;
    }
    return s;
}

long long max_term_span(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::True:
        case Formula::Kind::False:
            return 0;
        case Formula::Kind::Eq:
        case Formula::Kind::Neq:
            return std::max(term_span(f.lhs), term_span(f.rhs));
        case Formula::Kind::Not:
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            return max_term_span(*f.a);
        case Formula::Kind::And:
        case Formula::Kind::Or:
            return std::max(max_term_span(*f.a), max_term_span(*f.b));
    }
    return 0;
}

static void collect_vars(const Formula& f, std::set<std::string>& out) {
    switch (f.kind) {
        case Formula::Kind::Eq:
        case Formula::Kind::Neq:
            if (f.lhs.is_var()) out.insert(f.lhs.var_name());
            if (f.rhs.is_var()) out.insert(f.rhs.var_name());
            return;
        case Formula::Kind::Not:
            collect_vars(*f.a, out);
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
            collect_vars(*f.a, out);
            collect_vars(*f.b, out);
            return;
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            out.insert(f.var);
            collect_vars(*f.a, out);
            return;
        default:
            return;
    }
}

int count_distinct_vars(const Formula& f) {
    std::set<std::string> s;
    collect_vars(f, s);
    return static_cast<int>(s.size());
}

bool constants_only(const Formula& f) {
    auto term_ok = [](const Term& t) {
        return !t.is_ground() || t.point_base().orbit.is_constant();
    };
    switch (f.kind) {
        case Formula::Kind::True:
        case Formula::Kind::False:
            return true;
        case Formula::Kind::Eq:
        case Formula::Kind::Neq:
            return term_ok(f.lhs) && term_ok(f.rhs);
        case Formula::Kind::Not:
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            return constants_only(*f.a);
        case Formula::Kind::And:
        case Formula::Kind::Or:
            return constants_only(*f.a) && constants_only(*f.b);
    }
    return true;
}

}  // namespace k0
