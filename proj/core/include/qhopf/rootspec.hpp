#pragma once

#include <vector>

#include "qhopf/poly.hpp"
#include "qhopf/repring.hpp"

namespace qhopf {

// The l x l loop matrix of fundamental classes: entry (i,j) is the series
// sum_s t_{ls+i-j, j} u^{-s} with s >= 0 for i >= j (t_{0,j} = 1) and s >= 1
// for i < j. Coefficients are modulus-l elements of the representation ring;
// everything is truncated at u^{-D}.
struct LoopMatrix {
    int l = 1;
    int D = 0;
    // entries[i][j][s] = coefficient of u^{-s}
    std::vector<std::vector<std::vector<TElement>>> entries;

    static LoopMatrix build(int l, int D);

    // Exact determinant over the truncated series ring, by cofactor expansion.
    std::vector<TElement> determinant() const;
};

// a_i: the u^{-i} coefficient of det of the loop matrix; a_0 = 1.
TElement det_coeff(int i, int l);

// Class of the Frobenius pullback of the i-th fundamental: (-1)^{l+i} a_i.
TElement frobenius_pullback_fund(int i, int l);

// Character substitution Lambda_{i,0} -> prod_{m=0..l-1} Lambda_{i,m};
// input lives on the trivial lattice (modulus 1), output on modulus l.
CharPoly frobenius_char(const CharPoly& P, int l);

// Membership in the ideal generated by a_1, ..., a_{maxdeg/l} inside the
// modulus-l representation ring, decided degree by degree by exact integer
// linear algebra on the spanning set {monomial * a_i}.
bool in_center_ideal(const TElement& x, int maxdeg);

// Solvability of A x = b over the integers (dense, exact).
bool solve_integer_system(std::vector<std::vector<Int>> A, std::vector<Int> b);

}  // namespace qhopf
