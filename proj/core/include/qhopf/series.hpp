#pragma once

#include <vector>

#include "qhopf/error.hpp"
#include "qhopf/ints.hpp"

namespace qhopf {

// Truncated power series c_0 + c_1 x + ... + c_D x^D with exact integer
// coefficients. Operations never read beyond the requested truncation degree.
// inv/exp/log run through exact rationals internally; a non-integral final
// coefficient is a hard error (every identity in scope is integral).
struct Series {
    std::vector<Int> c;

    Series() = default;
    explicit Series(std::vector<Int> coeffs) : c(std::move(coeffs)) {}
    static Series zero(int D) { return Series(std::vector<Int>(D + 1, 0)); }
    static Series one(int D);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    Int at(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : Int(0); }

    bool operator==(const Series&) const = default;
};

Series series_add(const Series& a, const Series& b, int D);
Series series_mul(const Series& a, const Series& b, int D);
Series series_pow(const Series& a, int e, int D);  // e < 0 inverts first (needs c_0 = 1)
Series series_inv(const Series& a, int D);         // requires c_0 = 1
Series series_exp(const Series& a, int D);         // requires c_0 = 0
Series series_log(const Series& a, int D);         // requires c_0 = 1; must come out integral

// Rational working layer: intermediates of exp/log chains live here, results
// are forced back to integers at the end.
using RatSeries = std::vector<Rat>;

RatSeries rat_series(const Series& a, int D);
Series integral_series(const RatSeries& a);  // error on a non-integral coefficient
RatSeries rat_mul(const RatSeries& a, const RatSeries& b, int D);
RatSeries rat_exp(const RatSeries& a, int D);  // requires a[0] = 0
RatSeries rat_log(const RatSeries& a, int D);  // requires a[0] = 1

// (1 - x^k)^{±1} truncated at D; building block for product formulas.
Series geometric_factor(int k, int exponent, int D);

}  // namespace qhopf
