#ifndef K0_DIM_HPP
#define K0_DIM_HPP

#include <compare>
#include <string>

namespace k0 {

// Element of ({-inf} u N, max, +), the dimension semi-ring.
struct Dim {
    bool finite = false;
    int value = 0;

    static Dim neg_inf() { return {}; }
    static Dim of(int v) { return {true, v}; }

    friend Dim max(Dim a, Dim b) {
        if (!a.finite) return b;
        if (!b.finite) return a;
        return of(a.value > b.value ? a.value : b.value);
    }
    friend Dim operator+(Dim a, Dim b) {
        if (!a.finite || !b.finite) return neg_inf();
        return of(a.value + b.value);
    }
    friend bool operator==(Dim, Dim) = default;
    friend bool operator<=(Dim a, Dim b) {
        if (!a.finite) return true;
        if (!b.finite) return false;
        return a.value <= b.value;
    }

    std::string to_string() const { return finite ? std::to_string(value) : "-inf"; }
};

}  // namespace k0

#endif
