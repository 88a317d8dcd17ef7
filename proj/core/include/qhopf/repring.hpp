#pragma once

#include <utility>
#include <vector>

#include "qhopf/poly.hpp"
#include "qhopf/young.hpp"

namespace qhopf {

// The representation ring Z[t_{i,n}] on the basis of products of fundamental
// classes (PBW basis). TElement values are Laurent polynomials in T-family
// variables, CharPoly values in Lambda-family variables; both respect the
// grading deg t_{i,n} = i, deg Lambda_{i,n} = 1.
using TElement = LaurentPoly;
using CharPoly = LaurentPoly;

LaurentPoly t_gen(int i, int n, int modulus = 0);
LaurentPoly lambda_gen(int i, int n, int modulus = 0);

// Character of the evaluation module of shape lambda at lattice point n,
// truncated at level N: the sum over semistandard tableaux with entries <= N
// of prod over boxes of Lambda_{entry, n + content}.
CharPoly qchar_eval(const Partition& shape, int n, int N, int modulus = 0);

// Lambda_{i,n} -> Y_{i,2n+i-1} * Y_{i-1,2n+i}^{-1}, with Y_0 = Y_N = 1.
// Y-variables live on the finer lattice: a modulus-l input yields a
// modulus-2l output.
LaurentPoly kappa(const CharPoly& P, int N);

// A Lambda-monomial is dominant when its kappa image carries no negative
// exponent after collection.
bool is_dominant(const Monomial& m, int N);

// Membership of a Y-polynomial in the intersection ring generated by
// chi_{i,b} = Y_{i,b} + Y_{i,b+2}^{-1} Y_{i-1,b+1} Y_{i+1,b+1} together with
// the variables of the other rows, decided by leading-term elimination.
bool screening_kernel_member(const LaurentPoly& P, int i, int N);

// Delta(t_{i,n}) = sum_{j=0..i} t_{j,n} (x) t_{i-j,n-j}, a ring map.
TensorPoly coproduct(const TElement& x);

// Antipode: the inverse-matrix entry under the matrix view, extended as a
// ring map. Counit kills every generator.
TElement antipode(const TElement& x);
Int counit(const TElement& x);

// Restriction along a weakly decreasing multiset m of lattice points:
// res_{(m)} t_{i,j} = t_{i-1,j} when m = j-i+1 (mod l in modulus-l mode),
// res with no entries is the identity, everything else dies; products follow
// the splitting rule with at most one entry per factor.
TElement res(const TElement& x, const std::vector<int>& m);

// Unique PBW preimage of a character: greedy peeling of maximal dominant
// monomials into staircase factors. Throws "not a character" if stuck.
TElement express_in_pbw(const CharPoly& P, int N);

// Character expansion of a PBW element at level N (left inverse of the above).
CharPoly char_of_pbw(const TElement& x, int N);

// Spectral reduction t_{i,j} -> t_{i,j mod l}; ring homomorphism.
LaurentPoly specialize_l(const LaurentPoly& x, int l);

// Lower-unitriangular matrix view M_{r,c} = t_{r-c,r-1} over a finite index
// window; in modulus-l mode entries repeat along M_{r+l,c+l} = M_{r,c}.
struct MatrixWindow {
    int lo = 0, hi = 0;
    int modulus = 0;

    LaurentPoly entry(int r, int c) const;          // generator / 0 / 1
    LaurentPoly inverse_entry(int r, int c) const;  // entry of M^{-1}, by substitution

    // Delta(M_{r,c}) = sum_k M_{r,k} (x) M_{k,c} restricted to the window.
    TensorPoly coproduct_entry(int r, int c) const;
};

// (r, c) position of t_{i,n} and back.
std::pair<int, int> entry_of_generator(int i, int n);
std::pair<int, int> generator_at(int r, int c);

// Window must cover every generator occurring in x.
MatrixWindow matrix_view(const TElement& x, int lo, int hi);

}  // namespace qhopf
