#include "k0/qe.hpp"

#include <stdexcept>

namespace k0 {

namespace {

constexpr size_t kConjunctCap = 200000;

void check_size(const QFFormula& q) {
    if (q.disjuncts.size() > kConjunctCap)
        throw std::runtime_error("DNF blowup beyond desk scale");
}

}  // namespace

QFFormula qf_and(const QFFormula& a, const QFFormula& b) {
    QFFormula out;
    out.arity = std::max(a.arity, b.arity);
    for (const auto& ca : a.disjuncts)
        for (const auto& cb : b.disjuncts) {
            Conjunct c = ca;
            c.insert(c.end(), cb.begin(), cb.end());
            out.disjuncts.push_back(std::move(c));
        }
    check_size(out);
    return out;
}

QFFormula qf_or(const QFFormula& a, const QFFormula& b) {
    QFFormula out;
    out.arity = std::max(a.arity, b.arity);
    out.disjuncts = a.disjuncts;
    out.disjuncts.insert(out.disjuncts.end(), b.disjuncts.begin(), b.disjuncts.end());
    check_size(out);
    return out;
}

QFFormula qf_not(const QFFormula& a) {
    QFFormula acc = QFFormula::truth(a.arity);
    for (const auto& conj : a.disjuncts) {
        QFFormula blade;
        blade.arity = a.arity;
        for (const auto& lit : conj)
            blade.disjuncts.push_back({Literal{!lit.negated, lit.atom}});
        if (blade.disjuncts.empty()) return QFFormula::falsity(a.arity);  // ~true
        acc = qf_and(acc, blade).canonicalized();
    }
    return acc;
}

namespace {

// Substitutes the bound variable y in a literal.
//
// pin mode (case i): y := subst_term (a term free of y); each side with
// y at shift s becomes subst_term.applied(s).
//
// image mode (case ii): f^k(y) = x_src; both sides are raised by f^k and
// f^k(y) is replaced by x_src, so the y-side at shift s becomes
// f^s(x_src) and the other side gains k.
struct Subst {
    int y;
    bool image_mode = false;
    Term subst_term;   // pin mode
    std::string src_name;  // image mode
    long long k = 0;       // image mode

    Literal apply(const Literal& lit, const std::vector<std::string>& scope) const {
        auto [l, r] = lit.atom.to_terms(VarInterface(scope));
        bool ly = l.is_var() && l.var_name() == scope[y];
        bool ry = r.is_var() && r.var_name() == scope[y];
        if (!ly && !ry) return lit;
        if (!image_mode) {
            if (ly) l = subst_term.applied(l.shift);
            if (ry) r = subst_term.applied(r.shift);
        } else {
            // y never occurs on both sides of a normalized atom
            Term& ys = ly ? l : r;
            Term& other = ly ? r : l;
            ys = Term::var(src_name, ys.shift);
            other = other.applied(k);
        }
        return Literal{lit.negated, normalize_atom(l, r, scope)};
    }
};

// Eliminates the variable with index y (the last scope entry) from one
// conjunct; results are appended to `out` whose arity excludes y.
void eliminate_from_conjunct(const Conjunct& conj, int y,
                             const std::vector<std::string>& scope, int modulus,
                             QFFormula& out) {
    // pick a positive pivot literal mentioning y
    int pin_idx = -1, image_idx = -1;
    for (size_t i = 0; i < conj.size(); ++i) {
        const auto& lit = conj[i];
        if (lit.negated || !lit.atom.mentions(y)) continue;
        const auto& a = lit.atom;
        bool is_pin =
            (a.kind == NormalizedAtom::Kind::VarPoint && a.lhs == y) ||
            (a.kind == NormalizedAtom::Kind::VarVar && a.lhs == y) ||
            (a.kind == NormalizedAtom::Kind::VarVar && a.rhs == y && a.shift == 0);
        if (is_pin) {
            pin_idx = static_cast<int>(i);
            break;
        }
        if (image_idx < 0) image_idx = static_cast<int>(i);
    }

    Conjunct result;
    if (pin_idx >= 0) {
        const auto& a = conj[pin_idx].atom;
        Subst sub{y};
        if (a.kind == NormalizedAtom::Kind::VarPoint)
            sub.subst_term = Term::point(a.point);
        else if (a.lhs == y)
            sub.subst_term = Term::var(scope[a.rhs], a.shift);
        else  // x = f^0(y), i.e. y = x
            sub.subst_term = Term::var(scope[a.lhs]);
        for (size_t i = 0; i < conj.size(); ++i) {
            if (static_cast<int>(i) == pin_idx) continue;
            result.push_back(conj[i].atom.mentions(y) ? sub.apply(conj[i], scope) : conj[i]);
        }
    } else if (image_idx >= 0) {
        const auto& a = conj[image_idx].atom;  // x_lhs = f^k(y), k >= 1
        Subst sub{y};
        sub.image_mode = true;
        sub.src_name = scope[a.lhs];
        sub.k = a.shift;
        for (size_t i = 0; i < conj.size(); ++i) {
            if (static_cast<int>(i) == image_idx) continue;
            result.push_back(conj[i].atom.mentions(y) ? sub.apply(conj[i], scope) : conj[i]);
        }
        // solvability guard: x outside the first k levels of every constant orbit
        for (int ci = 1; ci <= modulus; ++ci)
            for (long long j = 0; j < a.shift; ++j) {
                NormalizedAtom g = normalize_atom(
                    Term::var(sub.src_name), Term::point(OrbitPoint(Orbit::constant(ci), j)),
                    scope);
                result.push_back(Literal{true, g});
            }
    } else {
        // only disequalities mention y: drop them
        for (const auto& lit : conj)
            if (!lit.atom.mentions(y)) result.push_back(lit);
    }

    for (const auto& lit : result)
        if (lit.atom.mentions(y)) throw std::logic_error("bound variable survived elimination");
    out.disjuncts.push_back(std::move(result));
}

QFFormula eliminate_exists(const QFFormula& body, std::vector<std::string>& scope,
                           int modulus) {
    int y = static_cast<int>(scope.size()) - 1;
    QFFormula out;
    out.arity = y;
    for (const auto& conj : body.disjuncts)
        eliminate_from_conjunct(conj, y, scope, modulus, out);
    return out.canonicalized();
}

QFFormula eliminate_rec(const Formula& f, std::vector<std::string>& scope, int modulus) {
    int arity = static_cast<int>(scope.size());
    switch (f.kind) {
        case Formula::Kind::True:
            return QFFormula::truth(arity);
        case Formula::Kind::False:
            return QFFormula::falsity(arity);
        case Formula::Kind::Eq:
            return QFFormula{arity, {{Literal{false, normalize_atom(f.lhs, f.rhs, scope)}}}}
                .canonicalized();
        case Formula::Kind::Neq:
            return QFFormula{arity, {{Literal{true, normalize_atom(f.lhs, f.rhs, scope)}}}}
                .canonicalized();
        case Formula::Kind::Not:
            return qf_not(eliminate_rec(*f.a, scope, modulus)).canonicalized();
        case Formula::Kind::And:
            return qf_and(eliminate_rec(*f.a, scope, modulus),
                          eliminate_rec(*f.b, scope, modulus))
                .canonicalized();
        case Formula::Kind::Or:
            return qf_or(eliminate_rec(*f.a, scope, modulus),
                         eliminate_rec(*f.b, scope, modulus))
                .canonicalized();
        case Formula::Kind::Exists: {
            scope.push_back(f.var);
            QFFormula body = eliminate_rec(*f.a, scope, modulus);
            QFFormula out = eliminate_exists(body, scope, modulus);
            scope.pop_back();
            return out;
        }
        case Formula::Kind::Forall: {
            scope.push_back(f.var);
            QFFormula body = qf_not(eliminate_rec(*f.a, scope, modulus)).canonicalized();
            QFFormula out = eliminate_exists(body, scope, modulus);
            scope.pop_back();
            return qf_not(out).canonicalized();
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

QFFormula eliminate(const Formula& f, const Context& ctx) {
    std::vector<std::string> scope = ctx.iface.vars;
    QFFormula q = eliminate_rec(f, scope, ctx.modulus);
    q.arity = ctx.iface.size();
    return q.canonicalized();
}

QFFormula to_dnf(const Formula& f, const Context& ctx) {
    if (!f.is_quantifier_free())
        throw std::invalid_argument("to_dnf expects a quantifier-free formula");
    return eliminate(f, ctx);
}

}  // namespace k0
