// Orbit points: parameters of the theory, given as (orbit id, offset).
//
// An orbit is either the f-orbit of a named constant c_i (indexed by
// offsets 0, 1, 2, ... since c_i has no f-preimage) or a declared generic
// orbit (indexed by all of Z).  Distinct orbit ids denote disjoint orbits,
// so equality of points is componentwise and decidable.

#ifndef K0_ORBIT_HPP
#define K0_ORBIT_HPP

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace k0 {

struct Orbit {
    enum class Kind { Constant, Generic };

    Kind kind = Kind::Constant;
    int const_index = 0;       // 1-based, valid when kind == Constant
    std::string generic_name;  // valid when kind == Generic

    static Orbit constant(int i) {
        if (i < 1) throw std::invalid_argument("constant index must be >= 1");
        Orbit o;
        o.kind = Kind::Constant;
        o.const_index = i;
        return o;
    }
    static Orbit generic(std::string name) {
        if (name.empty()) throw std::invalid_argument("generic orbit needs a name");
        Orbit o;
        o.kind = Kind::Generic;
        o.generic_name = std::move(name);
        return o;
    }

    bool is_constant() const { return kind == Kind::Constant; }

    friend bool operator==(const Orbit&, const Orbit&) = default;
    friend std::strong_ordering operator<=>(const Orbit& a, const Orbit& b) {
        if (a.kind != b.kind) return a.kind <=> b.kind;
        if (a.kind == Kind::Constant) return a.const_index <=> b.const_index;
        return a.generic_name <=> b.generic_name;
    }

    std::string to_string() const {
        if (is_constant()) return "c" + std::to_string(const_index);
        return "g:" + generic_name;
    }
};

struct OrbitPoint {
    Orbit orbit;
    long long offset = 0;  // >= 0 for constant orbits

    OrbitPoint() = default;
    OrbitPoint(Orbit o, long long off) : orbit(std::move(o)), offset(off) {
        if (orbit.is_constant() && offset < 0)
            throw std::invalid_argument("constant orbit point with negative offset");
    }

    // f^d applied to this point, when the result exists in every model.
    std::optional<OrbitPoint> try_shift(long long d) const {
        long long o = offset + d;
        if (orbit.is_constant() && o < 0) return std::nullopt;
        return OrbitPoint(orbit, o);
    }

    // Value in the standard model (N, f: x -> x+N, c_i = i-1).
    std::optional<long long> value_in(int modulus) const {
        if (!orbit.is_constant()) return std::nullopt;
        return static_cast<long long>(orbit.const_index - 1) + offset * modulus;
    }

    friend bool operator==(const OrbitPoint&, const OrbitPoint&) = default;
    friend std::strong_ordering operator<=>(const OrbitPoint& a, const OrbitPoint& b) {
        if (auto c = a.orbit <=> b.orbit; c != 0) return c;
        return a.offset <=> b.offset;
    }

    std::string to_string() const {
        if (orbit.is_constant()) {
            if (offset == 0) return orbit.to_string();
            return "f^" + std::to_string(offset) + "(" + orbit.to_string() + ")";
        }
        if (offset == 0) return orbit.to_string();
        return orbit.to_string() + "@" + std::to_string(offset);
    }
};

}  // namespace k0

#endif
