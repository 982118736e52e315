// Cells and decompositions: the disjoint normal form
//   set = disjoint union over cells of (positive \ union of negatives).
//
// Invariants: every negative is strictly included in the positive and the
// negatives are irredundant, so a cell is never empty (an irreducible set
// is not a finite union of strictly smaller simple sets).  Disjointness
// of two cells is certified symbolically: positive/\positive is empty or
// contained in a single negative of one of the cells.

#ifndef K0_CELL_HPP
#define K0_CELL_HPP

#include <optional>

#include "k0/simple_set.hpp"

namespace k0 {

struct Cell {
    SimpleSet positive;
    std::vector<SimpleSet> negatives;  // sorted, irredundant, strictly below positive

    Dim dimension() const { return positive.dimension(); }
    bool contains(std::span<const long long> tuple, int modulus) const;
    bool constants_only() const;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend std::strong_ordering operator<=>(const Cell&, const Cell&) = default;

    std::string to_string(const VarInterface& iface) const;
    std::string to_string() const;
};

// Builds a cell, restricting candidates to the positive, dropping the
// empty and redundant ones.  Returns nullopt when the denoted set is
// empty (positive empty, or some candidate swallows the positive).
std::optional<Cell> make_cell(SimpleSet positive, const std::vector<SimpleSet>& candidates);

// Is (a.positive /\ b.positive) minus both negative families nonempty?
bool cells_overlap(const Cell& a, const Cell& b);

// c \ e as a list of pairwise-disjoint cells (possibly empty).
std::vector<Cell> subtract_cell(const Cell& c, const Cell& e);

// c /\ e, when nonempty.
std::optional<Cell> intersect_cells(const Cell& c, const Cell& e);

struct Decomposition {
    int arity = 0;
    std::vector<Cell> cells;

    bool contains(std::span<const long long> tuple, int modulus) const;
    bool constants_only() const;
    Dim dimension() const;  // max over cell positives; -inf when no cells

    // Throws unless all cell invariants hold and all cells are pairwise
    // disjoint by the symbolic certificate.
    void validate() const;

    std::string to_string(const VarInterface& iface) const;
    std::string to_string() const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Cartesian product by coordinate reindexing (b's coordinates shifted).
Decomposition product(const Decomposition& a, const Decomposition& b);

// Union of two decompositions of the same arity; throws unless every
// cross pair is certified disjoint.
Decomposition disjoint_union(const Decomposition& a, const Decomposition& b);

// Irredundant list of maximal positives: the irreducible components of
// the closure of the union.
std::vector<SimpleSet> closure(const Decomposition& d);

// Does the union of `parts` cover exactly the union of `whole`?
// (subtracts cell lists both ways; desk-scale exact check)
bool same_union(const std::vector<Cell>& a, const std::vector<Cell>& b);

}  // namespace k0

#endif
