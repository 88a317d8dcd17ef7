#pragma once

#include <map>
#include <vector>

#include "qhopf/poly.hpp"

namespace qhopf {

// A snake is a path in the quiver: tail vertex plus edge count. Vertices are
// integers for the infinite linear quiver, residues mod l for the cyclic one.
struct Snake {
    int tail = 0;
    int len = 0;

    auto operator<=>(const Snake&) const = default;
};

// Multiset of snakes over one quiver; quiver_l == 0 means the infinite linear
// quiver, quiver_l == l > 0 the cyclic quiver with l vertices. Canonical form
// keeps snakes sorted by (tail, len).
struct ASet {
    std::vector<Snake> snakes;
    int quiver_l = 0;

    static ASet empty(int quiver_l) { return ASet{{}, quiver_l}; }
    static ASet make(std::vector<Snake> snakes, int quiver_l);

    void canonicalize();
    int total_degree() const;                // number of elements
    std::map<int, int> degree_vector() const;  // vertex -> element count

    auto operator<=>(const ASet&) const = default;
};

// Generator f_d: the only A-set of the given degree vector with all snakes of
// length zero.
ASet f_gen(const std::map<int, int>& d, int quiver_l);
ASet f_gen(int vertex, int quiver_l);

struct HallElement {
    std::map<ASet, Int> terms;
    int quiver_l = 0;

    static HallElement zero(int quiver_l) { return HallElement{{}, quiver_l}; }
    static HallElement basis(const ASet& s, Int c = 1);

    bool is_zero() const { return terms.empty(); }
    Int coeff(const ASet& s) const;
    void add_term(const ASet& s, const Int& c);

    HallElement operator+(const HallElement& o) const;
    HallElement operator-(const HallElement& o) const;
    HallElement scaled(const Int& c) const;

    bool operator==(const HallElement&) const = default;
};

// Structure constants by direct counting: the coefficient of S is the number
// of sub-A-sets of S isomorphic to K with quotient isomorphic to L.
HallElement hall_mul(const ASet& K, const ASet& L);
HallElement hall_mul(const HallElement& a, const HallElement& b);

// Independent route: the same product through the dual coproduct of the
// paired monomials. Both must agree.
HallElement hall_mul_dual(const ASet& K, const ASet& L);

// Delta(S) = sum over splittings S = K (+) L of the snake multiset, each
// ordered pair of classes exactly once.
using HallTensor = std::map<std::pair<ASet, ASet>, Int>;
HallTensor hall_comul(const ASet& s);

// A snake with tail tau and length L is dual to the generator
// t_{L+1, tau+L (mod l)}; an A-set pairs as delta against the corresponding
// monomial. quiver_l == 0 pairs with modulus-0 elements, quiver_l == l with
// modulus-l elements.
Monomial aset_monomial(const ASet& s);
ASet aset_of_monomial(const Monomial& m, int quiver_l);
Int hall_pairing(const HallElement& h, const LaurentPoly& T);

// Central elements of the cyclic-quiver Hall algebra: z_i sums the l single
// snakes of length l*i-1; p_i sums, with coefficient one, the A-sets of i
// snakes of length l-1 (one per multiset of tails).
HallElement central_z(int i, int l);
HallElement central_p(int i, int l);

// Finite part of the unwinding embedding: every snake lifts independently to
// all tails congruent mod l that keep the snake inside [lo, hi]; distinct
// lifted multisets are collected once each.
HallElement unwind(const HallElement& x, int lo, int hi);

// Smallest window [lo, hi] such that every lift of every snake of x that
// meets the support of a degree-D element is present; used by callers that
// compare products.
std::pair<int, int> unwind_safe_window(const HallElement& x, int spectral_lo, int spectral_hi);

// All A-sets with the given total degree whose snakes stay inside
// [window_lo, window_hi] (ignored for the cyclic quiver).
std::vector<ASet> enumerate_asets(int quiver_l, int total_degree, int window_lo, int window_hi);

// Same, exact degree vector.
std::vector<ASet> enumerate_asets_by_degree(int quiver_l, const std::map<int, int>& deg,
                                            int window_lo, int window_hi);

}  // namespace qhopf
