#ifndef K0_QE_HPP
#define K0_QE_HPP

#include "k0/qf.hpp"

namespace k0 {

// DNF over normalized literals; pre: f is quantifier-free.
QFFormula to_dnf(const Formula& f, const Context& ctx);

// Quantifier elimination, innermost quantifier first.  Per disjunct and
// bound variable y:
//   (i)  a positive literal pins y (y = f^k(t), t free of y): substitute;
//   (ii) a positive literal reads f^k(y) = t, k >= 1: replace it by the
//        solvability guard  t != f^j(c_i) for all i <= N, j < k, raise the
//        remaining literals by f^k and substitute (shift arithmetic only,
//        no negative powers);
//   (iii) y occurs only in disequalities: drop them (each excludes at
//        most one value and every model is infinite).
QFFormula eliminate(const Formula& f, const Context& ctx);

// DNF combinators (exported for reuse by decompose and tests).
QFFormula qf_and(const QFFormula& a, const QFFormula& b);
QFFormula qf_or(const QFFormula& a, const QFFormula& b);
QFFormula qf_not(const QFFormula& a);

}  // namespace k0

#endif
