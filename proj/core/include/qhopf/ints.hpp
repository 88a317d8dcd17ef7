#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qhopf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Representative of n modulo l in [0, l); identity when l == 0.
inline int reduce_mod(int n, int l) {
    if (l <= 0) return n;
    int r = n % l;
    return r < 0 ? r + l : r;
}

}  // namespace qhopf
