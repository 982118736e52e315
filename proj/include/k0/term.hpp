// Terms of L_N: f^shift applied to a variable or to an orbit point.
//
// Nested f-applications are flattened at construction.  Ground terms are
// kept canonical with shift 0 (the shift is folded into the point offset,
// which is always legal since surface shifts are nonnegative).

#ifndef K0_TERM_HPP
#define K0_TERM_HPP

#include <compare>
#include <string>
#include <variant>

#include "k0/orbit.hpp"

namespace k0 {

struct Term {
    struct Var {
        std::string name;
        friend bool operator==(const Var&, const Var&) = default;
        friend std::strong_ordering operator<=>(const Var&, const Var&) = default;
    };

    long long shift = 0;  // iteration count of f, >= 0
    std::variant<Var, OrbitPoint> base;

    static Term var(std::string name, long long shift = 0) {
        Term t;
        t.shift = shift;
        t.base = Var{std::move(name)};
        return t;
    }
    static Term point(OrbitPoint p, long long shift = 0) {
        Term t;
        t.shift = 0;
        t.base = *p.try_shift(shift);  // ground canonical form: fold the shift
        return t;
    }
    static Term constant(int i, long long shift = 0) {
        return point(OrbitPoint(Orbit::constant(i), 0), shift);
    }

    bool is_var() const { return std::holds_alternative<Var>(base); }
    bool is_ground() const { return std::holds_alternative<OrbitPoint>(base); }
    const std::string& var_name() const { return std::get<Var>(base).name; }
    const OrbitPoint& point_base() const { return std::get<OrbitPoint>(base); }

    // f^d applied on top; flattening keeps the representation canonical.
    Term applied(long long d) const {
        Term t = *this;
        if (t.is_ground())
            t.base = *t.point_base().try_shift(d);
        else
            t.shift += d;
        return t;
    }

    friend bool operator==(const Term&, const Term&) = default;

    std::string to_string() const {
        std::string inner =
            is_var() ? var_name() : point_base().to_string();
        if (shift == 0) return inner;
        if (shift == 1) return "f(" + inner + ")";
        return "f^" + std::to_string(shift) + "(" + inner + ")";
    }
};

}  // namespace k0

#endif
