// Simple sets: canonical constraint systems over n coordinates.
//
// A non-empty simple set partitions its coordinates into free groups
// (f-linked chains, levels normalized to minimum 0) and pinned
// coordinates (tied to an orbit point).  Construction goes through a
// weighted union-find with integer edge offsets; any conflict -- an
// offset cycle, a pin mismatch, or a constant-orbit point pushed below
// offset 0 -- collapses the set to the distinguished Empty value.
//
// Canonical form: groups listed by least coordinate, coordinates sorted
// within each group, levels shifted to min 0, pins sorted by coordinate.
// Two simple sets denote the same point set iff they are equal.

#ifndef K0_SIMPLE_SET_HPP
#define K0_SIMPLE_SET_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "k0/dim.hpp"
#include "k0/norm_atom.hpp"

namespace k0 {

struct FreeGroup {
    std::vector<int> coords;        // sorted ascending
    std::vector<long long> levels;  // parallel to coords; min is 0

    friend bool operator==(const FreeGroup&, const FreeGroup&) = default;
    friend std::strong_ordering operator<=>(const FreeGroup&, const FreeGroup&) = default;
};

struct PinnedCoord {
    int coord = 0;
    OrbitPoint point;

    friend bool operator==(const PinnedCoord&, const PinnedCoord&) = default;
    friend std::strong_ordering operator<=>(const PinnedCoord& a, const PinnedCoord& b) {
        if (auto c = a.coord <=> b.coord; c != 0) return c;
        return a.point <=> b.point;
    }
};

class SimpleSet {
public:
    static SimpleSet empty(int arity);
    static SimpleSet full(int arity);  // M^arity
    static SimpleSet from_atoms(const std::vector<NormalizedAtom>& atoms, int arity);

    int arity() const { return arity_; }
    bool is_empty() const { return empty_; }
    const std::vector<FreeGroup>& groups() const { return groups_; }
    const std::vector<PinnedCoord>& pinned() const { return pinned_; }

    Dim dimension() const;

    SimpleSet intersect(const SimpleSet& other) const;
    // Does *this contain sub?  (sub subset-of *this)
    bool includes(const SimpleSet& sub) const;

    // Coordinate of minimal level per free group (least index tie-break),
    // in group order.
    std::vector<int> determining_assignment() const;

    // Positive atoms whose conjunction defines the set (canonical list).
    std::vector<NormalizedAtom> to_atoms() const;

    // Membership in the standard model; throws on generic pins.
    bool contains(std::span<const long long> tuple, int modulus) const;

    bool constants_only() const;
    long long max_level() const;        // max group level (0 if none)
    long long max_const_offset() const; // max pinned constant offset (0 if none)

    // Pinned point of a coordinate, if any.
    std::optional<OrbitPoint> pin_of(int coord) const;
    // Free group index containing coord, or -1.
    int group_of(int coord) const;

    std::string to_string(const VarInterface& iface) const;
    std::string to_string() const;  // with default names x1..xn

    friend bool operator==(const SimpleSet&, const SimpleSet&) = default;
    friend std::strong_ordering operator<=>(const SimpleSet&, const SimpleSet&) = default;

    static int determining_of_group(const FreeGroup& g);

private:
    int arity_ = 0;
    bool empty_ = false;
    std::vector<FreeGroup> groups_;
    std::vector<PinnedCoord> pinned_;
};

// s-measure style polynomials over N[X], one X^dim term per component.
// Ordered top-degree-lexicographically (the ordinal order on N[X]); this
// order contains the coefficientwise order and X^i <= X^j for i <= j, is
// total, and admits no infinite strictly decreasing sequence.
struct MeasurePoly {
    std::vector<long long> coeffs;  // coeffs[d] = number of components of dimension d

    static MeasurePoly zero() { return {}; }
    static MeasurePoly from_dims(const std::vector<int>& dims);

    void add_dim(int d);
    bool strictly_less(const MeasurePoly& other) const;
    friend bool operator==(const MeasurePoly& a, const MeasurePoly& b) {
        return a.normalized() == b.normalized();
    }
    std::vector<long long> normalized() const;  // trailing zeros trimmed
    std::string to_string() const;
};

// Sum of X^dim over an irredundant component list; throws if some listed
// component is included in another.
MeasurePoly s_measure(const std::vector<SimpleSet>& components);

}  // namespace k0

#endif
