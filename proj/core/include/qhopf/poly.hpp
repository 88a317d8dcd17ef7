#pragma once

#include <compare>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "qhopf/error.hpp"
#include "qhopf/ints.hpp"

namespace qhopf {

// Indexed variable families. Lambda and T live on the lattice a*q^(2n),
// Y on a*q^n; only the integer exponent n is ever stored.
enum class Family : int { Lambda = 0, Y = 1, T = 2 };

struct VarId {
    Family family;
    int row;       // >= 1; row 0 is the unit and is never stored
    int spectral;  // lattice exponent, reduced mod the poly's modulus when > 0

    auto operator<=>(const VarId&) const = default;
};

// Sorted factor list with nonzero exponents; the empty product is 1.
struct Monomial {
    std::vector<std::pair<VarId, int>> factors;

    static Monomial one() { return {}; }
    static Monomial var(VarId v, int exp = 1);

    bool is_one() const { return factors.empty(); }
    int exponent_of(VarId v) const;
    int degree() const;   // sum of exponents
    int tdegree() const;  // sum of row * exponent (grading of the representation ring)

    Monomial operator*(const Monomial& o) const;
    Monomial pow(int e) const;
    Monomial inverse() const;

    auto operator<=>(const Monomial&) const = default;
};

// Sparse Laurent polynomial with exact integer coefficients.
// modulus 0 means the generic (infinite) spectral lattice; modulus l > 0
// keeps every spectral index reduced into [0, l).
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Int>;

    LaurentPoly() = default;
    explicit LaurentPoly(int modulus) : modulus_(modulus) {}

    static LaurentPoly zero(int modulus = 0) { return LaurentPoly(modulus); }
    static LaurentPoly unit(int modulus = 0);
    static LaurentPoly constant(Int c, int modulus = 0);
    static LaurentPoly variable(Family f, int row, int spectral, int modulus = 0, int exp = 1);
    static LaurentPoly from_monomial(Monomial m, Int coeff, int modulus = 0);

    int modulus() const { return modulus_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(const Monomial& m) const;
    std::size_t size() const { return terms_.size(); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const Int& c) const;
    LaurentPoly pow(int e) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);

    bool operator==(const LaurentPoly& o) const = default;

    // Adds c * m, dropping the term if the coefficient cancels.
    void add_term(const Monomial& m, const Int& c);

    // Splits into homogeneous parts keyed by degree (Lambda counting) or
    // tdegree (T-grading).
    std::map<int, LaurentPoly> split_by_degree() const;
    std::map<int, LaurentPoly> split_by_tdegree() const;

private:
    TermMap terms_;
    int modulus_ = 0;
};

// Homomorphic image of P: every variable is replaced by rule(v). Images must
// be single ±monomials wherever P has a negative exponent. The output carries
// out_modulus, and rule must produce polynomials on that lattice.
LaurentPoly substitute(const LaurentPoly& P,
                       const std::function<LaurentPoly(VarId)>& rule,
                       int out_modulus);

// Bilinear container: finite sum of c * (m1 (x) m2) with factor-wise product.
class TensorPoly {
public:
    using Key = std::pair<Monomial, Monomial>;
    using TermMap = std::map<Key, Int>;

    TensorPoly() = default;
    explicit TensorPoly(int modulus) : modulus_(modulus) {}

    static TensorPoly unit(int modulus = 0);
    static TensorPoly from_pair(Monomial a, Monomial b, Int coeff, int modulus = 0);

    int modulus() const { return modulus_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(const Monomial& a, const Monomial& b) const;

    TensorPoly operator+(const TensorPoly& o) const;
    TensorPoly operator-(const TensorPoly& o) const;
    TensorPoly operator*(const TensorPoly& o) const;
    TensorPoly scaled(const Int& c) const;

    bool operator==(const TensorPoly& o) const = default;

    void add_term(const Monomial& a, const Monomial& b, const Int& c);

private:
    TermMap terms_;
    int modulus_ = 0;
};

}  // namespace qhopf
