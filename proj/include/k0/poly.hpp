// Exact integer polynomials, their mod-N reductions, and the class map
// from decompositions into (Z/NZ)[X].  All intermediate arithmetic stays
// in exact integers; reduction happens only at the boundary.

#ifndef K0_POLY_HPP
#define K0_POLY_HPP

#include <string>
#include <vector>

#include "k0/cell.hpp"

namespace k0 {

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly monomial(int degree, long long coeff = 1);

    const std::vector<long long>& coeffs() const { return c_; }
    long long coeff(int d) const {
        return d >= 0 && d < static_cast<int>(c_.size()) ? c_[d] : 0;
    }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    long long eval(long long x) const;
    std::string to_string() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<long long> c_;
};

class ClassPoly {
public:
    explicit ClassPoly(int modulus) : n_(check(modulus)) {}
    ClassPoly(int modulus, std::vector<long long> coeffs);
    static ClassPoly reduce(const IntPoly& p, int modulus) {
        return ClassPoly(modulus, p.coeffs());
    }

    int modulus() const { return n_; }
    const std::vector<int>& coeffs() const { return c_; }
    int coeff(int d) const { return d >= 0 && d < static_cast<int>(c_.size()) ? c_[d] : 0; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    ClassPoly operator+(const ClassPoly& o) const;
    ClassPoly operator*(const ClassPoly& o) const;
    friend bool operator==(const ClassPoly&, const ClassPoly&) = default;

    // representative with coefficients in [0, N)
    IntPoly lift() const;
    std::string to_string() const;

private:
    static int check(int n);
    int n_;
    std::vector<int> c_;  // residues in [0, n_), trailing zeros trimmed
};

// Equal modulus required; decides equality of Grothendieck classes.
bool classes_equal(const ClassPoly& a, const ClassPoly& b);

// Signed inclusion-exclusion class of a decomposition, in exact integers:
// per cell, sum over subsets K of negatives of (-1)^|K| X^{dim of the
// intersection}.  Branches whose intersection is empty are pruned.
IntPoly int_class_of(const Decomposition& d);
IntPoly int_class_of_cell(const Cell& c);

ClassPoly class_of(const Decomposition& d, int modulus);
ClassPoly class_of_cell(const Cell& c, int modulus);

Dim dim_semiring_value(const Decomposition& d);
// a embeds into F x b for a finite F  iff  dim(a) <= dim(b)
bool dim_preorder_leq(const Decomposition& a, const Decomposition& b);

}  // namespace k0

#endif
