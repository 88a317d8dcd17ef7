#include "qhopf/series.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace qhopf {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Series Series::one(int D) {
    Series s = zero(D);
    s.c[0] = 1;
    return s;
}

Series series_add(const Series& a, const Series& b, int D) {
    Series out = Series::zero(D);
    for (int i = 0; i <= D; ++i) out.c[i] = a.at(i) + b.at(i);
    return out;
}

Series series_mul(const Series& a, const Series& b, int D) {
    Series out = Series::zero(D);
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j) out.c[i + j] += a.at(i) * b.at(j);
    return out;
}

RatSeries rat_series(const Series& a, int D) {
    RatSeries r(D + 1, Rat(0));
    for (int i = 0; i <= D; ++i) r[i] = Rat(a.at(i));
    return r;
}

Series integral_series(const RatSeries& a) {
    Series out;
    out.c.reserve(a.size());
    for (const Rat& x : a) {
        if (denominator(x) != 1) throw DomainError("non-integral series coefficient");
        out.c.push_back(numerator(x));
    }
    return out;
}

RatSeries rat_mul(const RatSeries& a, const RatSeries& b, int D) {
    RatSeries out(D + 1, Rat(0));
    auto at = [](const RatSeries& s, int i) { return i < static_cast<int>(s.size()) ? s[i] : Rat(0); };
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j) out[i + j] += at(a, i) * at(b, j);
    return out;
}

RatSeries rat_exp(const RatSeries& a, int D) {
    if (!a.empty() && a[0] != 0) throw DomainError("series exp needs constant term 0");
    auto at = [](const RatSeries& s, int i) { return i < static_cast<int>(s.size()) ? s[i] : Rat(0); };
    // b' = a' b, i.e. n b_n = sum_{k=1}^{n} k a_k b_{n-k}
    RatSeries b(D + 1, Rat(0));
    b[0] = 1;
    for (int n = 1; n <= D; ++n) {
        Rat s = 0;
        for (int k = 1; k <= n; ++k) s += Rat(k) * at(a, k) * b[n - k];
        b[n] = s / n;
    }
    return b;
}

RatSeries rat_log(const RatSeries& a, int D) {
    if (a.empty() || a[0] != 1) throw DomainError("series log needs constant term 1");
    // log(1 + u) = sum_{k>=1} (-1)^{k+1} u^k / k
    RatSeries u = a;
    u[0] = 0;
    RatSeries acc(D + 1, Rat(0));
    RatSeries upow(D + 1, Rat(0));
    upow[0] = 1;
    for (int k = 1; k <= D; ++k) {
        upow = rat_mul(upow, u, D);
        Rat sign = (k % 2 == 1) ? Rat(1) : Rat(-1);
        for (int i = 0; i <= D; ++i) acc[i] += sign * upow[i] / k;
    }
    return acc;
}

Series series_inv(const Series& a, int D) {
    if (a.at(0) != 1) throw DomainError("series inverse needs constant term 1");
    // b_n = -(sum_{k=1}^{n} a_k b_{n-k})
    Series out = Series::zero(D);
    out.c[0] = 1;
    for (int n = 1; n <= D; ++n) {
        Int s = 0;
        for (int k = 1; k <= n; ++k) s += a.at(k) * out.c[n - k];
        out.c[n] = -s;
    }
    return out;
}

Series series_pow(const Series& a, int e, int D) {
    Series base = e < 0 ? series_inv(a, D) : a;
    int n = e < 0 ? -e : e;
    Series out = Series::one(D);
    for (int i = 0; i < n; ++i) out = series_mul(out, base, D);
    return out;
}

Series series_exp(const Series& a, int D) {
    if (a.at(0) != 0) throw DomainError("series exp needs constant term 0");
    return integral_series(rat_exp(rat_series(a, D), D));
}

Series series_log(const Series& a, int D) {
    return integral_series(rat_log(rat_series(a, D), D));
}

Series geometric_factor(int k, int exponent, int D) {
    Series f = Series::one(D);
    if (k <= D) f.c[k] = -1;
    return series_pow(f, exponent, D);
}

}  // namespace qhopf
