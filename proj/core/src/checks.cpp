#include "qhopf/checks.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "qhopf/fock.hpp"
#include "qhopf/hall.hpp"
#include "qhopf/repring.hpp"
#include "qhopf/rootspec.hpp"
#include "qhopf/textio.hpp"

namespace qhopf::checks {

namespace {

int env_maxdeg() {
    const char* s = std::getenv("QHOPF_MAXDEG");
    if (!s) return -1;
    int v = std::atoi(s);
    return v > 0 ? v : -1;
}

std::string on_cases(const std::string& what, long n, const std::string& unit) {
    std::ostringstream os;
    os << "(" << what << ") on " << n << " " << unit;
    return os.str();
}

// ---- monomial enumeration over the representation ring -------------------

struct SpectralRange {
    int lo, hi;  // inclusive; for modulus l > 0 use [0, l)
};

void gen_pbw(int rest, int max_row, const SpectralRange& sp, int modulus, VarId min_var,
             Monomial& cur, std::vector<Monomial>& out) {
    out.push_back(cur);
    for (int i = 1; i <= std::min(rest, max_row); ++i)
        for (int n = sp.lo; n <= sp.hi; ++n) {
            VarId v{Family::T, i, reduce_mod(n, modulus)};
            if (v < min_var) continue;
            Monomial next = cur * Monomial::var(v);
            gen_pbw(rest - i, max_row, sp, modulus, v, next, out);
        }
}

// All PBW monomials of t-degree <= deg with spectral indices in the range.
std::vector<Monomial> pbw_monomials(int deg, const SpectralRange& sp, int modulus) {
    std::vector<Monomial> out;
    Monomial cur;
    gen_pbw(deg, deg, sp, modulus, VarId{Family::T, 0, 0}, cur, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

using Triple = std::map<std::tuple<Monomial, Monomial, Monomial>, Int>;

Triple delta_left(const TensorPoly& t) {
    Triple out;
    for (const auto& [key, c] : t.terms()) {
        TensorPoly d = coproduct(LaurentPoly::from_monomial(key.first, 1, t.modulus()));
        for (const auto& [dk, dc] : d.terms()) {
            auto k = std::make_tuple(dk.first, dk.second, key.second);
            out[k] += dc * c;
            if (out[k] == 0) out.erase(k);
        }
    }
    return out;
}

Triple delta_right(const TensorPoly& t) {
    Triple out;
    for (const auto& [key, c] : t.terms()) {
        TensorPoly d = coproduct(LaurentPoly::from_monomial(key.second, 1, t.modulus()));
        for (const auto& [dk, dc] : d.terms()) {
            auto k = std::make_tuple(key.first, dk.first, dk.second);
            out[k] += dc * c;
            if (out[k] == 0) out.erase(k);
        }
    }
    return out;
}

LaurentPoly mul_s_id(const TensorPoly& t) {
    LaurentPoly out(t.modulus());
    for (const auto& [key, c] : t.terms()) {
        LaurentPoly s = antipode(LaurentPoly::from_monomial(key.first, 1, t.modulus()));
        out += (s * LaurentPoly::from_monomial(key.second, 1, t.modulus())).scaled(c);
    }
    return out;
}

// ---- criterion 1 ----------------------------------------------------------

Report hopf_axioms(const Options& opt) {
    int deg = effective_deg(5, opt);
    Report rep{"hopf-axioms", true, 0, ""};
    for (int modulus : {0, 2, 3}) {
        SpectralRange sp = modulus > 0 ? SpectralRange{0, modulus - 1} : SpectralRange{-3, 3};
        for (const Monomial& m : pbw_monomials(deg, sp, modulus)) {
            LaurentPoly x = LaurentPoly::from_monomial(m, 1, modulus);
            TensorPoly d = coproduct(x);
            if (delta_left(d) != delta_right(d)) {
                rep.pass = false;
                rep.detail = "coassociativity fails on " + print_monomial(m);
                return rep;
            }
            if (!m.is_one()) {
                // multiplicativity: split off the first generator
                VarId v = m.factors.front().first;
                Monomial rest = m * Monomial::var(v, -1);
                TensorPoly split =
                    coproduct(LaurentPoly::variable(Family::T, v.row, v.spectral, modulus)) *
                    coproduct(LaurentPoly::from_monomial(rest, 1, modulus));
                if (split != d) {
                    rep.pass = false;
                    rep.detail = "coproduct not multiplicative on " + print_monomial(m);
                    return rep;
                }
            }
            LaurentPoly folded = mul_s_id(d);
            LaurentPoly expected = LaurentPoly::constant(counit(x), modulus);
            if (folded != expected) {
                rep.pass = false;
                rep.detail = "antipode axiom fails on " + print_monomial(m);
                return rep;
            }
            rep.cases += 3;
        }
    }
    rep.detail = on_cases("coassociativity, compatibility, antipode axiom", rep.cases, "checks");
    return rep;
}

// ---- criterion 2 ----------------------------------------------------------

Report serre_res(const Options& opt) {
    int deg = effective_deg(4, opt);
    Report rep{"serre-res", true, 0, ""};
    SpectralRange sp{-2, 2};
    std::vector<Monomial> monos = pbw_monomials(deg, sp, 0);
    for (const Monomial& m : monos) {
        LaurentPoly x = LaurentPoly::from_monomial(m, 1, 0);
        auto r = [&](int i, const LaurentPoly& p) { return res(p, {i}); };
        for (int i = -5; i <= 3; ++i) {
            for (int j : {i - 1, i + 1}) {
                LaurentPoly lhs = r(i, r(i, r(j, x))) - r(i, r(j, r(i, x))).scaled(2) +
                                  r(j, r(i, r(i, x)));
                if (!lhs.is_zero()) {
                    rep.pass = false;
                    rep.detail = "cubic relation fails on " + print_monomial(m);
                    return rep;
                }
                ++rep.cases;
            }
            for (int j = i + 2; j <= i + 3; ++j) {
                if (r(i, r(j, x)) != r(j, r(i, x))) {
                    rep.pass = false;
                    rep.detail = "commutation fails on " + print_monomial(m);
                    return rep;
                }
                ++rep.cases;
            }
        }
    }
    rep.detail = on_cases("restriction operators satisfy the Serre relations", rep.cases,
                          "operator identities");
    return rep;
}

// ---- criteria 3 and 4 ------------------------------------------------------

std::vector<int> pinned_quivers(const Options& opt) {
    if (opt.quiver_l >= 0) return {opt.quiver_l};
    return {0, 1, 2, 3};
}

std::vector<ASet> asets_up_to(int quiver_l, int maxdeg, int lo, int hi) {
    std::vector<ASet> out;
    for (int d = 0; d <= maxdeg; ++d) {
        auto v = enumerate_asets(quiver_l, d, lo, hi);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

Report hall_dual(const Options& opt) {
    int deg = effective_deg(4, opt);
    Report rep{"hall-dual", true, 0, ""};
    for (int l : pinned_quivers(opt)) {
        std::vector<ASet> all = asets_up_to(l, deg, -2, 2);
        for (const ASet& K : all)
            for (const ASet& L : all) {
                if (K.snakes.empty() || L.snakes.empty()) continue;
                if (K.total_degree() + L.total_degree() > deg) continue;
                if (hall_mul(K, L) != hall_mul_dual(K, L)) {
                    rep.pass = false;
                    rep.detail = "counted != dual for " + print_aset(K) + " * " + print_aset(L);
                    return rep;
                }
                ++rep.cases;
            }
    }
    rep.detail = on_cases("counted == dual", rep.cases, "pairs");
    return rep;
}

HallElement hall_pow_mul(const std::vector<HallElement>& factors) {
    if (factors.empty()) throw DomainError("empty product");
    HallElement acc = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) acc = hall_mul(acc, factors[i]);
    return acc;
}

// Serre relations of the affine Cartan matrix: quartic for l = 2, cubic for
// adjacent vertices when l >= 3, plain commutation at distance >= 2.
bool hall_serre_holds(int l, long& cases) {
    if (l < 2) return true;
    auto f = [&](int i) { return HallElement::basis(f_gen(i, l)); };
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            if (i == j) continue;
            bool adjacent = reduce_mod(i - j, l) == 1 || reduce_mod(j - i, l) == 1;
            if (adjacent) {
                int order = (l == 2) ? 3 : 2;  // 1 - a_ij with a_ij = -2 or -1
                HallElement acc = HallElement::zero(l);
                Int binom = 1;
                for (int k = 0; k <= order; ++k) {
                    std::vector<HallElement> word;
                    for (int t = 0; t < order - k; ++t) word.push_back(f(i));
                    word.push_back(f(j));
                    for (int t = 0; t < k; ++t) word.push_back(f(i));
                    Int c = (k % 2 == 0) ? binom : -binom;
                    acc = acc + hall_pow_mul(word).scaled(c);
                    binom = binom * (order - k) / (k + 1);
                }
                if (!acc.is_zero()) return false;
            } else {
                if (hall_mul(f(i), f(j)) != hall_mul(f(j), f(i))) return false;
            }
            ++cases;
        }
    return true;
}

Report hall_bialgebra(const Options& opt) {
    int deg = effective_deg(4, opt);
    Report rep{"hall-bialgebra", true, 0, ""};
    for (int l : pinned_quivers(opt)) {
        std::vector<ASet> all = asets_up_to(l, deg, -2, 2);
        for (const ASet& K : all)
            for (const ASet& L : all) {
                if (K.snakes.empty() || L.snakes.empty()) continue;
                if (K.total_degree() + L.total_degree() > deg) continue;
                // Delta(K.L) == Delta(K) Delta(L)
                HallTensor lhs;
                for (const auto& [s, c] : hall_mul(K, L).terms)
                    for (const auto& [kk, kc] : hall_comul(s)) {
                        lhs[kk] += kc * c;
                        if (lhs[kk] == 0) lhs.erase(kk);
                    }
                HallTensor rhs;
                for (const auto& [ka, ca] : hall_comul(K))
                    for (const auto& [kb, cb] : hall_comul(L)) {
                        HallElement left = hall_mul(ka.first, kb.first);
                        HallElement right = hall_mul(ka.second, kb.second);
                        for (const auto& [sa, va] : left.terms)
                            for (const auto& [sb, vb] : right.terms) {
                                auto key = std::make_pair(sa, sb);
                                rhs[key] += ca * cb * va * vb;
                                if (rhs[key] == 0) rhs.erase(key);
                            }
                    }
                if (lhs != rhs) {
                    rep.pass = false;
                    rep.detail = "comultiplication not multiplicative on " + print_aset(K) + " * " +
                                 print_aset(L);
                    return rep;
                }
                ++rep.cases;
            }
        if (l >= 1 && !hall_serre_holds(l, rep.cases)) {
            rep.pass = false;
            rep.detail = "Serre relation fails in the cyclic Hall algebra l=" + std::to_string(l);
            return rep;
        }
    }
    rep.detail = on_cases("bialgebra axiom and Serre relations", rep.cases, "checks");
    return rep;
}

// ---- criterion 5 -----------------------------------------------------------

using HallSeries = std::vector<std::map<ASet, Rat>>;  // coefficients of u^0..u^D

HallSeries hs_zero(int D) { return HallSeries(D + 1); }

void hs_add(HallSeries& a, const HallSeries& b, const Rat& scale) {
    for (std::size_t d = 0; d < a.size(); ++d)
        for (const auto& [s, c] : b[d]) {
            a[d][s] += c * scale;
            if (a[d][s] == 0) a[d].erase(s);
        }
}

HallSeries hs_mul(const HallSeries& a, const HallSeries& b, int D) {
    HallSeries out = hs_zero(D);
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j)
            for (const auto& [sa, ca] : a[i])
                for (const auto& [sb, cb] : b[j]) {
                    HallElement p = hall_mul(sa, sb);
                    for (const auto& [s, c] : p.terms) {
                        out[i + j][s] += ca * cb * Rat(c);
                        if (out[i + j][s] == 0) out[i + j].erase(s);
                    }
                }
    return out;
}

Report hall_center(const Options& opt) {
    int deg = effective_deg(3, opt);
    Report rep{"hall-center", true, 0, ""};
    for (int l : {1, 2, 3}) {
        // Newton identity (s+1) p_{s+1} = sum_i (-1)^i p_{s-i} z_{i+1}
        for (int s = 0; s <= deg; ++s) {
            HallElement lhs = central_p(s + 1, l).scaled(s + 1);
            HallElement rhs = HallElement::zero(l);
            for (int i = 0; i <= s; ++i) {
                HallElement term = hall_mul(central_p(s - i, l), central_z(i + 1, l));
                rhs = rhs + (i % 2 == 0 ? term : term.scaled(-1));
            }
            if (lhs != rhs) {
                rep.pass = false;
                rep.detail = "Newton identity fails at s=" + std::to_string(s) +
                             " l=" + std::to_string(l);
                return rep;
            }
            ++rep.cases;
        }
        // sum p_n (-u)^n == exp(-sum z_j u^j / j) up to degree 4
        int D = std::min(4, deg + 1);
        HallSeries lhs = hs_zero(D);
        for (int n = 0; n <= D; ++n) {
            Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);
            for (const auto& [s, c] : central_p(n, l).terms) lhs[n][s] = sign * Rat(c);
        }
        HallSeries arg = hs_zero(D);
        for (int j = 1; j <= D; ++j)
            for (const auto& [s, c] : central_z(j, l).terms) arg[j][s] = -Rat(c) / j;
        HallSeries rhs = hs_zero(D);
        rhs[0][ASet::empty(l)] = 1;
        HallSeries power = rhs;
        Rat factorial = 1;
        for (int k = 1; k <= D; ++k) {
            power = hs_mul(power, arg, D);
            factorial *= k;
            hs_add(rhs, power, Rat(1) / factorial);
        }
        if (lhs != rhs) {
            rep.pass = false;
            rep.detail = "exponential identity fails at l=" + std::to_string(l);
            return rep;
        }
        ++rep.cases;
        // centrality against every A-set with componentwise degree <= 3
        std::vector<ASet> test_sets;
        for (const ASet& s : asets_up_to(l, 3 * l, 0, l - 1)) {
            bool ok = true;
            for (const auto& [v, k] : s.degree_vector())
                if (k > 3) ok = false;
            if (ok && !s.snakes.empty()) test_sets.push_back(s);
        }
        for (int i = 1; i <= deg; ++i) {
            for (const HallElement& zp : {central_z(i, l), central_p(i, l)}) {
                for (const ASet& K : test_sets) {
                    HallElement k = HallElement::basis(K);
                    if (hall_mul(zp, k) != hall_mul(k, zp)) {
                        rep.pass = false;
                        rep.detail = "centrality fails for i=" + std::to_string(i) +
                                     " l=" + std::to_string(l) + " against " + print_aset(K);
                        return rep;
                    }
                    ++rep.cases;
                }
            }
        }
    }
    rep.detail = on_cases("Newton identity, exponential identity, centrality", rep.cases, "checks");
    return rep;
}

// ---- criterion 6 -----------------------------------------------------------

Report matrix_view_suite(const Options& opt) {
    int deg = effective_deg(5, opt);
    Report rep{"matrix-view", true, 0, ""};
    for (int modulus : {0, 2, 3}) {
        for (int i = 1; i <= deg; ++i)
            for (int n = -3; n <= 3; ++n) {
                if (modulus > 0 && (n < 0 || n >= modulus)) continue;
                auto [r, c] = entry_of_generator(i, n);
                if (generator_at(r, c) != std::make_pair(i, n)) {
                    rep.pass = false;
                    rep.detail = "entry lookup not involutive";
                    return rep;
                }
                LaurentPoly x = t_gen(i, n, modulus);
                MatrixWindow w = matrix_view(x, c - 1, r + 1);
                if (w.coproduct_entry(r, c) != coproduct(x)) {
                    rep.pass = false;
                    rep.detail = "matrix coproduct differs on t[" + std::to_string(i) + "," +
                                 std::to_string(n) + "]";
                    return rep;
                }
                if (w.inverse_entry(r, c) != antipode(x)) {
                    rep.pass = false;
                    rep.detail = "matrix inverse differs from antipode";
                    return rep;
                }
                LaurentPoly folded = mul_s_id(coproduct(x));
                if (!folded.is_zero()) {
                    rep.pass = false;
                    rep.detail = "antipode axiom fails on a generator";
                    return rep;
                }
                rep.cases += 3;
            }
    }
    rep.detail = on_cases("matrix coproduct == coproduct, inverse == antipode", rep.cases, "checks");
    return rep;
}

// ---- criterion 7 -----------------------------------------------------------

TensorPoly tensor_of(const LaurentPoly& a, const LaurentPoly& b) {
    TensorPoly out(a.modulus());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add_term(ma, mb, ca * cb);
    return out;
}

LaurentPoly closed_pullback_l2(int i) {
    // t_{i,0} t_{i,1} + sum_{j=1}^i (-1)^j (t_{i+j,0} t_{i-j,1} + t_{i+j,1} t_{i-j,0})
    LaurentPoly out = t_gen(i, 0, 2) * t_gen(i, 1, 2);
    for (int j = 1; j <= i; ++j) {
        LaurentPoly term = t_gen(i + j, 0, 2) * t_gen(i - j, 1, 2) +
                           t_gen(i + j, 1, 2) * t_gen(i - j, 0, 2);
        out += (j % 2 == 0 ? term : -term);
    }
    return out;
}

Report frobenius_suite(const Options& opt) {
    Report rep{"frobenius", true, 0, ""};
    int imax = effective_deg(4, opt);
    // (a) the closed formula at i=1, l=2
    if (frobenius_pullback_fund(1, 2) != parse_poly("t[1,0]*t[1,1] - t[2,0] - t[2,1]", 2)) {
        rep.pass = false;
        rep.detail = "pullback(1,2) differs from the closed formula";
        return rep;
    }
    ++rep.cases;
    if (det_coeff(1, 1) != t_gen(1, 0, 1)) {
        rep.pass = false;
        rep.detail = "1x1 determinant broken";
        return rep;
    }
    ++rep.cases;
    // (b) determinant vs closed formula for l=2, i <= 3
    for (int i = 1; i <= std::min(3, imax); ++i) {
        if (frobenius_pullback_fund(i, 2) != closed_pullback_l2(i)) {
            rep.pass = false;
            rep.detail = "determinant differs from the closed l=2 formula at i=" + std::to_string(i);
            return rep;
        }
        ++rep.cases;
    }
    for (int l = 1; l <= 3; ++l)
        for (int i = 1; i <= imax; ++i) {
            TElement a = det_coeff(i, l);
            // (c) annihilation by every restriction operator
            for (int d = 0; d < l; ++d) {
                if (!res(a, {d}).is_zero()) {
                    rep.pass = false;
                    rep.detail = "res does not annihilate a_" + std::to_string(i);
                    return rep;
                }
                ++rep.cases;
            }
            // (d) group-like determinant series
            TensorPoly expected(l);
            for (int j = 0; j <= i; ++j)
                expected = expected + tensor_of(det_coeff(j, l), det_coeff(i - j, l));
            if (coproduct(a) != expected) {
                rep.pass = false;
                rep.detail = "coproduct of a_" + std::to_string(i) + " is not group-like";
                return rep;
            }
            ++rep.cases;
            // degree l*i in the t-grading
            for (const auto& [m, c] : a.terms())
                if (m.tdegree() != l * i) {
                    rep.pass = false;
                    rep.detail = "a_" + std::to_string(i) + " not homogeneous of degree l*i";
                    return rep;
                }
            ++rep.cases;
        }
    // determinant multiplicativity smoke test at series degree 2: windowed
    // unitriangular numeric specialization is covered by unit tests; here we
    // check the Frobenius character identity instead.
    // (e) character cross-check
    for (int l = 2; l <= 3; ++l)
        for (int i = 1; i <= std::min(3, imax); ++i) {
            int N = i + l;
            CharPoly lhs = char_of_pbw(frobenius_pullback_fund(i, l), N);
            CharPoly rhs = frobenius_char(qchar_eval(Partition(i, 1), 0, N, 1), l);
            if (lhs != rhs) {
                rep.pass = false;
                rep.detail = "character of the pullback differs at i=" + std::to_string(i) +
                             " l=" + std::to_string(l);
                return rep;
            }
            ++rep.cases;
        }
    rep.detail = on_cases("determinant, annihilation, group-like, characters", rep.cases, "checks");
    return rep;
}

// ---- criterion 8 -----------------------------------------------------------

Report pairing_duality(const Options& opt) {
    int deg = effective_deg(4, opt);
    Report rep{"pairing-duality", true, 0, ""};
    for (int l : pinned_quivers(opt)) {
        SpectralRange sp = l > 0 ? SpectralRange{0, l - 1} : SpectralRange{-2, 2};
        std::vector<Monomial> tmon = pbw_monomials(deg, sp, l);
        std::vector<ASet> sets = asets_up_to(l, deg, -2, 2);
        // <g f, T> == <g (x) f, Delta T> and <f, T K> == <Delta f, T (x) K>
        for (const ASet& g : sets)
            for (const ASet& f : sets) {
                if (g.snakes.empty() && f.snakes.empty()) continue;
                if (g.total_degree() + f.total_degree() > deg) continue;
                HallElement gf = hall_mul(g, f);
                for (const Monomial& tm : tmon) {
                    if (tm.tdegree() != g.total_degree() + f.total_degree()) continue;
                    LaurentPoly T = LaurentPoly::from_monomial(tm, 1, l);
                    Int lhs = hall_pairing(gf, T);
                    Int rhs = coproduct(T).coeff(aset_monomial(g), aset_monomial(f));
                    if (lhs != rhs) {
                        rep.pass = false;
                        rep.detail = "pairing incompatible with the coproduct";
                        return rep;
                    }
                    ++rep.cases;
                }
            }
        for (const ASet& f : sets) {
            if (f.snakes.empty()) continue;
            HallTensor df = hall_comul(f);
            for (const Monomial& ta : tmon)
                for (const Monomial& tb : tmon) {
                    if (ta.tdegree() + tb.tdegree() != f.total_degree()) continue;
                    LaurentPoly A = LaurentPoly::from_monomial(ta, 1, l);
                    LaurentPoly B = LaurentPoly::from_monomial(tb, 1, l);
                    Int lhs = hall_pairing(HallElement::basis(f), A * B);
                    Int rhs = 0;
                    for (const auto& [kk, c] : df)
                        rhs += c * hall_pairing(HallElement::basis(kk.first), A) *
                               hall_pairing(HallElement::basis(kk.second), B);
                    if (lhs != rhs) {
                        rep.pass = false;
                        rep.detail = "pairing incompatible with the Hall comultiplication";
                        return rep;
                    }
                    ++rep.cases;
                }
        }
        // <g f_m, T> == <g, res_m T>
        for (const ASet& g : sets) {
            if (g.total_degree() + 1 > deg) continue;
            for (int m = (l > 0 ? 0 : -2); m <= (l > 0 ? l - 1 : 2); ++m) {
                HallElement gfm = hall_mul(g, f_gen(m, l));
                for (const Monomial& tm : tmon) {
                    if (tm.tdegree() != g.total_degree() + 1) continue;
                    LaurentPoly T = LaurentPoly::from_monomial(tm, 1, l);
                    if (hall_pairing(gfm, T) !=
                        hall_pairing(HallElement::basis(g), res(T, {m}))) {
                        rep.pass = false;
                        rep.detail = "restriction is not dual to multiplication by f";
                        return rep;
                    }
                    ++rep.cases;
                }
            }
        }
    }
    // unwind / specialization adjunction on the cyclic quivers
    int adeg = std::min(3, deg);
    for (int l : {2, 3}) {
        std::vector<Monomial> tmon = pbw_monomials(adeg, SpectralRange{-3, 3}, 0);
        for (const ASet& x : asets_up_to(l, adeg, 0, l - 1)) {
            if (x.snakes.empty()) continue;
            HallElement hx = HallElement::basis(x);
            auto [lo, hi] = unwind_safe_window(hx, -3 - adeg, 3 + adeg);
            HallElement w = unwind(hx, lo, hi);
            for (const Monomial& tm : tmon) {
                if (tm.tdegree() != x.total_degree()) continue;
                LaurentPoly T = LaurentPoly::from_monomial(tm, 1, 0);
                if (hall_pairing(w, T) != hall_pairing(hx, specialize_l(T, l))) {
                    rep.pass = false;
                    rep.detail = "unwind is not adjoint to the specialization";
                    return rep;
                }
                ++rep.cases;
            }
        }
    }
    rep.detail = on_cases("Hopf pairing axioms, res duality, unwind adjunction", rep.cases,
                          "checks");
    return rep;
}

// ---- criterion 9 -----------------------------------------------------------

Report eval_modules(const Options& opt) {
    int size_cap = effective_deg(5, opt);
    Report rep{"eval-modules", true, 0, ""};
    // round-trips and screening
    for (int size = 0; size <= size_cap; ++size)
        for (const Partition& lam : partitions_of(size))
            for (int N = std::max<int>(1, lam.size()); N <= 4; ++N) {
                if (static_cast<int>(lam.size()) > N) continue;
                CharPoly chi = qchar_eval(lam, 0, N);
                TElement t = express_in_pbw(chi, N);
                if (char_of_pbw(t, N) != chi) {
                    rep.pass = false;
                    rep.detail = "PBW round-trip fails for " + print_partition(lam) +
                                 " N=" + std::to_string(N);
                    return rep;
                }
                ++rep.cases;
                LaurentPoly y = kappa(chi, N);
                for (int i = 1; i < N; ++i) {
                    if (!screening_kernel_member(y, i, N)) {
                        rep.pass = false;
                        rep.detail = "screening membership fails for " + print_partition(lam);
                        return rep;
                    }
                    ++rep.cases;
                }
            }
    // multiplicativity oracle on PBW monomials of degree <= 4
    {
        int N = 4;
        std::vector<Monomial> monos = pbw_monomials(2, SpectralRange{0, 1}, 0);
        for (const Monomial& a : monos)
            for (const Monomial& b : monos) {
                if (a.tdegree() + b.tdegree() > 4 || a.tdegree() == 0 || b.tdegree() == 0) continue;
                LaurentPoly xa = LaurentPoly::from_monomial(a, 1, 0);
                LaurentPoly xb = LaurentPoly::from_monomial(b, 1, 0);
                if (express_in_pbw(char_of_pbw(xa, N) * char_of_pbw(xb, N), N) != xa * xb) {
                    rep.pass = false;
                    rep.detail = "character map is not multiplicative";
                    return rep;
                }
                ++rep.cases;
            }
    }
    // box removal under restriction, and the level-one sign identity
    for (int size = 1; size <= size_cap; ++size)
        for (const Partition& mu : partitions_of(size)) {
            int N = std::max<int>(size, 1);
            TElement tmu = express_in_pbw(qchar_eval(mu, 0, N), N);
            for (int m = -size - 1; m <= size + 1; ++m) {
                TElement d = res(tmu, {m});
                auto removable = boxes(mu, BoxMode::Removable, m);
                TElement expected(0);
                Partition child;
                if (!removable.empty()) {
                    child = *remove_box(mu, removable.front().first);
                    expected = express_in_pbw(qchar_eval(child, 0, N), N);
                }
                if (d != expected) {
                    rep.pass = false;
                    rep.detail = "restriction does not remove the box of content " +
                                 std::to_string(m) + " from " + print_partition(mu);
                    return rep;
                }
                ++rep.cases;
                // <f_m lam, mu> + <lam, res_m mu> = 0 over the dual bases
                FockSpace space{{0}, 0};
                for (const Partition& lam : partitions_of(size - 1)) {
                    FockVector flam = fock_apply(space, FockOp::F, m, FockVector::basis({lam}));
                    auto it = flam.terms.find(FockKey{mu});
                    Rat lhs = it == flam.terms.end() ? Rat(0) : it->second;
                    Rat rhs = (!removable.empty() && lam == child) ? Rat(1) : Rat(0);
                    if (lhs + rhs != 0) {
                        rep.pass = false;
                        rep.detail = "level-one duality sign identity fails";
                        return rep;
                    }
                    ++rep.cases;
                }
            }
        }
    rep.detail = on_cases("PBW round-trips, screening, box removal, duality signs", rep.cases,
                          "checks");
    return rep;
}

// ---- criterion 10 ----------------------------------------------------------

Report enum_identities(const Options& opt) {
    int deg = effective_deg(10, opt);
    Report rep{"enum-identities", true, 0, ""};
    const std::vector<std::vector<int>> shift_sets = {{0}, {0, 0}, {1, 0}, {2, 1, 0}};
    for (const auto& s : shift_sets) {
        auto [counted, formula] = sdiagram_genfun(s, deg);
        if (counted != formula) {
            rep.pass = false;
            rep.detail = "diagram count differs from the product formula for shifts of size " +
                         std::to_string(s.size());
            return rep;
        }
        ++rep.cases;
    }
    int fdeg = std::min(6, deg);
    const std::vector<std::vector<int>> folded_sets = {{0}, {0, 0}, {1, 0}, {2, 0}};
    for (int l : {2, 3})
        for (const auto& s : folded_sets) {
            auto [counted, character] = folded_genfun(s, l, fdeg);
            if (counted != character) {
                rep.pass = false;
                rep.detail = "acyclic folded count differs from the principal character at l=" +
                             std::to_string(l);
                return rep;
            }
            ++rep.cases;
        }
    rep.detail = on_cases("conjecture checks: counting == characters", rep.cases, "series");
    return rep;
}

// ---- criterion 11 ----------------------------------------------------------

// Monomial-symmetric expansion oracle in max(5, deg+1) variables.
struct SymPoly {
    std::map<std::vector<int>, Rat> coeffs;  // exponent vectors, fixed length
};

SymPoly sym_elementary(int k, int vars) {
    SymPoly p;
    std::vector<int> idx(vars, 0);
    auto rec = [&](auto&& self, int start, int left, std::vector<int>& exp) -> void {
        if (left == 0) {
            p.coeffs[exp] += 1;
            return;
        }
        for (int i = start; i <= vars - left; ++i) {
            exp[i] = 1;
            self(self, i + 1, left - 1, exp);
            exp[i] = 0;
        }
    };
    std::vector<int> exp(vars, 0);
    if (k == 0)
        p.coeffs[exp] = 1;
    else
        rec(rec, 0, k, exp);
    return p;
}

SymPoly sym_power(int k, int vars) {
    SymPoly p;
    for (int i = 0; i < vars; ++i) {
        std::vector<int> exp(vars, 0);
        exp[i] = k;
        p.coeffs[exp] += 1;
    }
    return p;
}

SymPoly sym_mul(const SymPoly& a, const SymPoly& b) {
    SymPoly out;
    for (const auto& [ea, ca] : a.coeffs)
        for (const auto& [eb, cb] : b.coeffs) {
            std::vector<int> e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.coeffs[e] += ca * cb;
            if (out.coeffs[e] == 0) out.coeffs.erase(e);
        }
    return out;
}

// coefficient of the monomial-symmetric function m_lambda
Rat sym_m_coeff(const SymPoly& p, const Partition& lam, int vars) {
    std::vector<int> e(vars, 0);
    for (std::size_t i = 0; i < lam.size(); ++i) e[i] = lam[i];
    auto it = p.coeffs.find(e);
    return it == p.coeffs.end() ? Rat(0) : it->second;
}

Partition aset_to_partition(const ASet& s) {
    Partition p;
    for (const Snake& sn : s.snakes) p.push_back(sn.len + 1);
    std::sort(p.rbegin(), p.rend());
    return p;
}

Report cross_oracle(const Options& opt) {
    int deg = effective_deg(4, opt);
    Report rep{"cross-oracle", true, 0, ""};
    const int vars = deg + 1;
    // H_1 vs symmetric functions: A-set of snake sizes lambda <-> m_lambda,
    // p_i <-> elementary, z_i <-> power sum.
    for (int a = 1; a <= deg; ++a)
        for (int b = a; a + b <= deg; ++b) {
            struct Pair {
                HallElement h;
                SymPoly s;
            };
            std::vector<Pair> products = {
                {hall_mul(central_p(a, 1), central_p(b, 1)),
                 sym_mul(sym_elementary(a, vars), sym_elementary(b, vars))},
                {hall_mul(central_z(a, 1), central_z(b, 1)),
                 sym_mul(sym_power(a, vars), sym_power(b, vars))},
                {hall_mul(central_p(a, 1), central_z(b, 1)),
                 sym_mul(sym_elementary(a, vars), sym_power(b, vars))},
            };
            for (const auto&[h, s] : products) {
                for (const Partition& lam : partitions_of(a + b)) {
                    ASet aset = ASet::empty(1);
                    for (int part : lam) aset.snakes.push_back({0, part - 1});
                    aset.canonicalize();
                    if (Rat(h.coeff(aset)) != sym_m_coeff(s, lam, vars)) {
                        rep.pass = false;
                        rep.detail = "Hall product differs from the symmetric-function oracle";
                        return rep;
                    }
                    ++rep.cases;
                }
            }
        }
    // level-one characters against partition-counting oracles
    int cdeg = std::max(deg, 8);
    Series all = principal_character({0}, 0, cdeg);
    Series odd = principal_character({0}, 2, cdeg);
    for (int n = 0; n <= cdeg; ++n) {
        Int pn = static_cast<long>(partitions_of(n).size());
        Int podd = 0;
        for (const Partition& p : partitions_of(n)) {
            bool all_odd = true;
            for (int part : p)
                if (part % 2 == 0) all_odd = false;
            if (all_odd) podd += 1;
        }
        if (all.at(n) != pn || odd.at(n) != podd) {
            rep.pass = false;
            rep.detail = "level-one character differs from the partition oracle at degree " +
                         std::to_string(n);
            return rep;
        }
        rep.cases += 2;
    }
    rep.detail = on_cases("symmetric functions, partition counts", rep.cases, "checks");
    return rep;
}

const std::vector<std::pair<std::string, Report (*)(const Options&)>>& registry() {
    static const std::vector<std::pair<std::string, Report (*)(const Options&)>> suites = {
        {"hopf-axioms", hopf_axioms},
        {"serre-res", serre_res},
        {"hall-dual", hall_dual},
        {"hall-bialgebra", hall_bialgebra},
        {"hall-center", hall_center},
        {"matrix-view", matrix_view_suite},
        {"frobenius", frobenius_suite},
        {"pairing-duality", pairing_duality},
        {"eval-modules", eval_modules},
        {"enum-identities", enum_identities},
        {"cross-oracle", cross_oracle},
    };
    return suites;
}

}  // namespace

int effective_deg(int pinned, const Options& opt) {
    int deg = pinned;
    if (opt.maxdeg > 0) deg = std::min(deg, opt.maxdeg);
    int env = env_maxdeg();
    if (env > 0) deg = std::min(deg, env);
    return deg;
}

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

bool has_suite(const std::string& name) {
    for (const auto& [n, fn] : registry())
        if (n == name) return true;
    return false;
}

Report run_suite(const std::string& name, const Options& opt) {
    for (const auto& [n, fn] : registry())
        if (n == name) return fn(opt);
    throw DomainError("unknown check suite: " + name);
}

std::vector<Report> run_all(const Options& opt) {
    std::vector<Report> out;
    for (const auto& [name, fn] : registry()) out.push_back(fn(opt));
    return out;
}

}  // namespace qhopf::checks
