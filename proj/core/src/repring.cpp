#include "qhopf/repring.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qhopf {

LaurentPoly t_gen(int i, int n, int modulus) {
    if (i == 0) return LaurentPoly::unit(modulus);
    return LaurentPoly::variable(Family::T, i, n, modulus);
}

LaurentPoly lambda_gen(int i, int n, int modulus) {
    return LaurentPoly::variable(Family::Lambda, i, n, modulus);
}

CharPoly qchar_eval(const Partition& shape, int n, int N, int modulus) {
    if (static_cast<int>(shape.size()) > N) throw DomainError("shape has more rows than the level");
    CharPoly out(modulus);
    for (const SSTableau& t : ssyt_enumerate(shape, N)) {
        Monomial m;
        for (std::size_t r = 0; r < t.rows.size(); ++r)
            for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
                int content = static_cast<int>(c) - static_cast<int>(r);
                VarId v{Family::Lambda, t.rows[r][c], reduce_mod(n + content, modulus)};
                m = m * Monomial::var(v);
            }
        out.add_term(m, 1);
    }
    return out;
}

LaurentPoly kappa(const CharPoly& P, int N) {
    int out_mod = P.modulus() > 0 ? 2 * P.modulus() : 0;
    return substitute(
        P,
        [&](VarId v) {
            if (v.family != Family::Lambda) throw DomainError("kappa expects Lambda variables");
            if (v.row > N) throw DomainError("row above the level");
            int i = v.row, n = v.spectral;
            Monomial m;
            if (i < N) m = m * Monomial::var({Family::Y, i, reduce_mod(2 * n + i - 1, out_mod)});
            if (i > 1) m = m * Monomial::var({Family::Y, i - 1, reduce_mod(2 * n + i, out_mod)}, -1);
            return LaurentPoly::from_monomial(m, 1, out_mod);
        },
        out_mod);
}

bool is_dominant(const Monomial& m, int N) {
    std::map<std::pair<int, int>, int> yexp;  // (row, y-spectral) -> exponent
    for (const auto& [v, e] : m.factors) {
        if (v.family != Family::Lambda) throw DomainError("dominance expects Lambda variables");
        if (v.row > N) throw DomainError("row above the level");
        int i = v.row, n = v.spectral;
        if (i < N) yexp[{i, 2 * n + i - 1}] += e;
        if (i > 1) yexp[{i - 1, 2 * n + i}] -= e;
    }
    for (const auto& [k, e] : yexp)
        if (e < 0) return false;
    return true;
}

namespace {

// Y_i-dominant total order: compare the row-i exponent sum first, then the
// full exponent vector lexicographically.
struct YOrder {
    int i;
    int ydeg(const Monomial& m) const {
        int d = 0;
        for (const auto& [v, e] : m.factors)
            if (v.family == Family::Y && v.row == i) d += e;
        return d;
    }
    bool less(const Monomial& a, const Monomial& b) const {
        int da = ydeg(a), db = ydeg(b);
        if (da != db) return da < db;
        return a < b;
    }
};

LaurentPoly screening_generator(int i, int b, int N, int modulus) {
    // chi_{i,b} = Y_{i,b} + Y_{i,b+2}^{-1} Y_{i-1,b+1} Y_{i+1,b+1}, rows 0 and N absent.
    LaurentPoly p = LaurentPoly::variable(Family::Y, i, b, modulus);
    Monomial m = Monomial::var({Family::Y, i, reduce_mod(b + 2, modulus)}, -1);
    if (i - 1 >= 1) m = m * Monomial::var({Family::Y, i - 1, reduce_mod(b + 1, modulus)});
    if (i + 1 <= N - 1) m = m * Monomial::var({Family::Y, i + 1, reduce_mod(b + 1, modulus)});
    p.add_term(m, 1);
    return p;
}

}  // namespace

bool screening_kernel_member(const LaurentPoly& P, int i, int N) {
    LaurentPoly R = P;
    YOrder ord{i};
    while (!R.is_zero()) {
        auto head = R.terms().begin();
        for (auto it = R.terms().begin(); it != R.terms().end(); ++it)
            if (ord.less(head->first, it->first)) head = it;
        Monomial lead = head->first;
        Int c = head->second;
        LaurentPoly prod = LaurentPoly::unit(R.modulus());
        for (const auto& [v, e] : lead.factors) {
            if (v.family == Family::Y && v.row == i) {
                if (e < 0) return false;
                prod = prod * screening_generator(i, v.spectral, N, R.modulus()).pow(e);
            } else {
                prod = prod * LaurentPoly::from_monomial(Monomial::var(v, e), 1, R.modulus());
            }
        }
        R -= prod.scaled(c);
    }
    return true;
}

static TensorPoly coproduct_generator(int i, int n, int modulus) {
    TensorPoly out(modulus);
    for (int j = 0; j <= i; ++j) {
        Monomial a = j == 0 ? Monomial::one()
                            : Monomial::var({Family::T, j, reduce_mod(n, modulus)});
        Monomial b = j == i ? Monomial::one()
                            : Monomial::var({Family::T, i - j, reduce_mod(n - j, modulus)});
        out.add_term(a, b, 1);
    }
    return out;
}

TensorPoly coproduct(const TElement& x) {
    TensorPoly out(x.modulus());
    for (const auto& [m, c] : x.terms()) {
        TensorPoly term = TensorPoly::unit(x.modulus());
        for (const auto& [v, e] : m.factors) {
            if (v.family != Family::T) throw DomainError("coproduct expects T variables");
            if (e < 0) throw DomainError("negative exponent in the representation ring");
            TensorPoly g = coproduct_generator(v.row, v.spectral, x.modulus());
            for (int k = 0; k < e; ++k) term = term * g;
        }
        out = out + term.scaled(c);
    }
    return out;
}

namespace {

// S(t_{i,n}) = -t_{i,n} - sum_{j=1}^{i-1} t_{j,n} S(t_{i-j,n-j}):
// forward substitution for the inverse of the unitriangular matrix view.
const LaurentPoly& antipode_generator(int i, int n, int modulus) {
    static std::map<std::tuple<int, int, int>, LaurentPoly> memo;
    auto key = std::make_tuple(i, reduce_mod(n, modulus), modulus);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    LaurentPoly s = -t_gen(i, n, modulus);
    for (int j = 1; j < i; ++j)
        s -= t_gen(j, n, modulus) * antipode_generator(i - j, n - j, modulus);
    return memo.emplace(key, std::move(s)).first->second;
}

}  // namespace

TElement antipode(const TElement& x) {
    TElement out(x.modulus());
    for (const auto& [m, c] : x.terms()) {
        TElement term = LaurentPoly::constant(c, x.modulus());
        for (const auto& [v, e] : m.factors) {
            if (v.family != Family::T) throw DomainError("antipode expects T variables");
            if (e < 0) throw DomainError("negative exponent in the representation ring");
            term = term * antipode_generator(v.row, v.spectral, x.modulus()).pow(e);
        }
        out += term;
    }
    return out;
}

Int counit(const TElement& x) { return x.coeff(Monomial::one()); }

namespace {

struct Gen {
    int row;
    int spectral;
};

// Distribute the multiset m over the factors, at most one entry per factor.
LaurentPoly res_factors(const std::vector<Gen>& factors, std::size_t idx,
                        std::map<int, int>& m, int modulus) {
    if (idx == factors.size())
        return m.empty() ? LaurentPoly::unit(modulus) : LaurentPoly::zero(modulus);
    const Gen& g = factors[idx];
    LaurentPoly out = t_gen(g.row, g.spectral, modulus) * res_factors(factors, idx + 1, m, modulus);
    std::vector<int> values;
    values.reserve(m.size());
    for (const auto& [v, k] : m) values.push_back(v);
    for (int v : values) {
        bool hits = modulus > 0 ? reduce_mod(v, modulus) == reduce_mod(g.spectral - g.row + 1, modulus)
                                : v == g.spectral - g.row + 1;
        if (!hits) continue;
        if (--m[v] == 0) m.erase(v);
        out += t_gen(g.row - 1, g.spectral, modulus) * res_factors(factors, idx + 1, m, modulus);
        ++m[v];
    }
    return out;
}

}  // namespace

TElement res(const TElement& x, const std::vector<int>& m) {
    TElement out(x.modulus());
    for (const auto& [mono, c] : x.terms()) {
        std::vector<Gen> factors;
        for (const auto& [v, e] : mono.factors) {
            if (v.family != Family::T) throw DomainError("res expects T variables");
            if (e < 0) throw DomainError("negative exponent in the representation ring");
            for (int k = 0; k < e; ++k) factors.push_back({v.row, v.spectral});
        }
        std::map<int, int> bag;
        for (int v : m) bag[x.modulus() > 0 ? reduce_mod(v, x.modulus()) : v] += 1;
        out += res_factors(factors, 0, bag, x.modulus()).scaled(c);
    }
    return out;
}

namespace {

// Selection order for peeling: total degree first, then reverse-lexicographic
// comparison of the sorted (row, spectral) factor sequences.
bool peel_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    auto expand = [](const Monomial& m) {
        std::vector<std::pair<int, int>> out;
        for (const auto& [v, e] : m.factors)
            for (int k = 0; k < e; ++k) out.emplace_back(v.row, v.spectral);
        return out;
    };
    std::vector<std::pair<int, int>> xa = expand(a), xb = expand(b);
    for (std::size_t k = xa.size(); k-- > 0;) {
        if (xa[k] != xb[k]) return xa[k] < xb[k];
    }
    return false;
}

// A dominant monomial factors uniquely into staircases along each diagonal
// row + spectral = const; the staircase ending at row i contributes t_{i,d-1}.
std::vector<std::pair<int, int>> peel_factors(const Monomial& m, int N, int modulus) {
    std::map<int, std::map<int, int>> diag;  // d -> row -> multiplicity
    for (const auto& [v, e] : m.factors)
        diag[reduce_mod(v.row + v.spectral, modulus)][v.row] += e;
    std::vector<std::pair<int, int>> out;  // (row, spectral) of fundamental factors
    for (const auto& [d, mults] : diag) {
        auto mult_at = [&](int r) {
            auto it = mults.find(r);
            return it == mults.end() ? 0 : it->second;
        };
        int max_row = mults.rbegin()->first;
        for (int i = max_row; i >= 1; --i) {
            int cnt = mult_at(i) - (i == max_row ? 0 : mult_at(i + 1));
            if (cnt < 0) throw DomainError("not a character");
            for (int k = 0; k < cnt; ++k) out.emplace_back(i, reduce_mod(d - 1, modulus));
        }
    }
    (void)N;
    return out;
}

Partition column_shape(int i) { return Partition(i, 1); }

}  // namespace

TElement express_in_pbw(const CharPoly& P, int N) {
    CharPoly R = P;
    TElement out(P.modulus());
    while (!R.is_zero()) {
        const Monomial* best = nullptr;
        for (const auto& [m, c] : R.terms()) {
            if (!is_dominant(m, N)) continue;
            if (!best || peel_less(*best, m)) best = &m;
        }
        if (!best) throw DomainError("not a character");
        Monomial lead = *best;
        Int c = R.coeff(lead);
        auto factors = peel_factors(lead, N, P.modulus());
        CharPoly prod = LaurentPoly::unit(P.modulus());
        Monomial pbw;
        for (const auto& [i, n] : factors) {
            prod = prod * qchar_eval(column_shape(i), n, N, P.modulus());
            pbw = pbw * Monomial::var({Family::T, i, n});
        }
        R -= prod.scaled(c);
        out.add_term(pbw, c);
    }
    return out;
}

CharPoly char_of_pbw(const TElement& x, int N) {
    CharPoly out(x.modulus());
    for (const auto& [m, c] : x.terms()) {
        CharPoly term = LaurentPoly::unit(x.modulus());
        for (const auto& [v, e] : m.factors) {
            if (v.family != Family::T) throw DomainError("expected T variables");
            CharPoly f = qchar_eval(column_shape(v.row), v.spectral, N, x.modulus());
            term = term * f.pow(e);
        }
        out += term.scaled(c);
    }
    return out;
}

LaurentPoly specialize_l(const LaurentPoly& x, int l) {
    if (l < 1) throw DomainError("modulus must be >= 1");
    if (x.modulus() != 0) throw DomainError("input already carries a modulus");
    return substitute(
        x,
        [&](VarId v) {
            if (v.family == Family::Y) throw DomainError("specialization expects t or Lambda variables");
            return LaurentPoly::variable(v.family, v.row, reduce_mod(v.spectral, l), l);
        },
        l);
}

std::pair<int, int> entry_of_generator(int i, int n) { return {n + 1, n + 1 - i}; }

std::pair<int, int> generator_at(int r, int c) { return {r - c, r - 1}; }

LaurentPoly MatrixWindow::entry(int r, int c) const {
    if (r < c) return LaurentPoly::zero(modulus);
    if (r == c) return LaurentPoly::unit(modulus);
    return t_gen(r - c, r - 1, modulus);
}

LaurentPoly MatrixWindow::inverse_entry(int r, int c) const {
    if (r < lo || c < lo || r > hi || c > hi) throw DomainError("window too small");
    if (r < c) return LaurentPoly::zero(modulus);
    if (r == c) return LaurentPoly::unit(modulus);
    // Forward substitution on M * X = id over the window, column c.
    std::map<int, LaurentPoly> col;
    col[c] = LaurentPoly::unit(modulus);
    for (int k = c + 1; k <= r; ++k) {
        LaurentPoly acc(modulus);
        for (int j = c; j < k; ++j) acc += entry(k, j) * col[j];
        col[k] = -acc;
    }
    return col[r];
}

TensorPoly MatrixWindow::coproduct_entry(int r, int c) const {
    if (r < lo || c < lo || r > hi || c > hi) throw DomainError("window too small");
    TensorPoly out(modulus);
    if (r < c) return out;
    for (int k = c; k <= r; ++k) {
        const LaurentPoly a = entry(r, k), b = entry(k, c);
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) out.add_term(ma, mb, ca * cb);
    }
    return out;
}

MatrixWindow matrix_view(const TElement& x, int lo, int hi) {
    MatrixWindow w{lo, hi, x.modulus()};
    for (const auto& [m, c] : x.terms())
        for (const auto& [v, e] : m.factors) {
            if (v.family != Family::T) throw DomainError("matrix view expects T variables");
            auto [r, col] = entry_of_generator(v.row, v.spectral);
            bool fits = false;
            if (x.modulus() > 0) {
                for (int k = (lo - col) / x.modulus() - 2; !fits && k <= (hi - r) / x.modulus() + 2; ++k)
                    if (col + k * x.modulus() >= lo && r + k * x.modulus() <= hi) fits = true;
            } else {
                fits = col >= lo && r <= hi;
            }
            if (!fits) throw DomainError("window too small");
        }
    return w;
}

}  // namespace qhopf
