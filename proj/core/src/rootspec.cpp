#include "qhopf/rootspec.hpp"

#include <algorithm>

namespace qhopf {

LoopMatrix LoopMatrix::build(int l, int D) {
    if (l < 1) throw DomainError("loop matrix needs l >= 1");
    if (D < 0) throw DomainError("negative truncation degree");
    LoopMatrix M{l, D, {}};
    M.entries.assign(l, std::vector<std::vector<TElement>>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            auto& e = M.entries[i][j];
            e.assign(D + 1, LaurentPoly::zero(l));
            int s0 = i >= j ? 0 : 1;
            for (int s = s0; s <= D; ++s) e[s] = t_gen(l * s + i - j, j, l);
        }
    return M;
}

namespace {

using SeriesT = std::vector<TElement>;  // coefficients of u^0, u^-1, ..., u^-D

SeriesT series_t_mul(const SeriesT& a, const SeriesT& b, int D, int l) {
    SeriesT out(D + 1, LaurentPoly::zero(l));
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j) out[i + j] += a[i] * b[j];
    return out;
}

SeriesT minor_det(const LoopMatrix& M, const std::vector<int>& rows, const std::vector<int>& cols) {
    int D = M.D, l = M.l;
    if (rows.empty()) {
        SeriesT unit(D + 1, LaurentPoly::zero(l));
        unit[0] = LaurentPoly::unit(l);
        return unit;
    }
    SeriesT out(D + 1, LaurentPoly::zero(l));
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<int> sub_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        SeriesT sub = minor_det(M, sub_rows, sub_cols);
        SeriesT term = series_t_mul(M.entries[rows[0]][cols[k]], sub, D, l);
        for (int d = 0; d <= D; ++d)
            if (k % 2 == 0)
                out[d] += term[d];
            else
                out[d] -= term[d];
    }
    return out;
}

}  // namespace

std::vector<TElement> LoopMatrix::determinant() const {
    std::vector<int> idx(l);
    for (int i = 0; i < l; ++i) idx[i] = i;
    return minor_det(*this, idx, idx);
}

TElement det_coeff(int i, int l) {
    if (i < 0 || l < 1) throw DomainError("det_coeff needs i >= 0, l >= 1");
    if (i == 0) return LaurentPoly::unit(l);
    return LoopMatrix::build(l, i).determinant()[i];
}

TElement frobenius_pullback_fund(int i, int l) {
    if (i < 1 || l < 1) throw DomainError("pullback needs i >= 1, l >= 1");
    TElement a = det_coeff(i, l);
    return (l + i) % 2 == 0 ? a : -a;
}

CharPoly frobenius_char(const CharPoly& P, int l) {
    if (P.modulus() != 1) throw DomainError("input must live on the trivial lattice");
    if (l < 1) throw DomainError("modulus must be >= 1");
    return substitute(
        P,
        [&](VarId v) {
            if (v.family != Family::Lambda) throw DomainError("expected Lambda variables");
            Monomial m;
            for (int k = 0; k < l; ++k) m = m * Monomial::var({Family::Lambda, v.row, k});
            return LaurentPoly::from_monomial(m, 1, l);
        },
        l);
}

namespace {

void gen_tmonomials(int degree, int max_row, int l, Monomial& cur, std::vector<Monomial>& out) {
    if (degree == 0) {
        out.push_back(cur);
        return;
    }
    for (int i = std::min(degree, max_row); i >= 1; --i)
        for (int n = 0; n < l; ++n) {
            VarId v{Family::T, i, n};
            // keep factors nonincreasing to avoid duplicates
            if (!cur.factors.empty()) {
                const VarId& last = cur.factors.back().first;
                if (last < v) continue;
            }
            Monomial next = cur * Monomial::var(v);
            gen_tmonomials(degree - i, i, l, next, out);
        }
}

std::vector<Monomial> tmonomials_of_degree(int degree, int l) {
    std::vector<Monomial> out;
    Monomial cur;
    gen_tmonomials(degree, degree, l, cur, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

bool solve_integer_system(std::vector<std::vector<Int>> A, std::vector<Int> b) {
    const std::size_t m = A.size();
    const std::size_t n = m == 0 ? 0 : A[0].size();
    std::size_t k = 0;
    while (k < m && k < n) {
        // minimal nonzero pivot in the trailing submatrix
        std::size_t pi = m, pj = n;
        for (std::size_t i = k; i < m; ++i)
            for (std::size_t j = k; j < n; ++j) {
                if (A[i][j] == 0) continue;
                if (pi == m || abs(A[i][j]) < abs(A[pi][pj])) pi = i, pj = j;
            }
        if (pi == m) break;
        std::swap(A[k], A[pi]);
        std::swap(b[k], b[pi]);
        for (std::size_t i = 0; i < m; ++i) std::swap(A[i][k], A[i][pj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = k + 1; i < m; ++i) {
                if (A[i][k] == 0) continue;
                Int q = A[i][k] / A[k][k];
                for (std::size_t j = k; j < n; ++j) A[i][j] -= q * A[k][j];
                b[i] -= q * b[k];
                if (A[i][k] != 0) {
                    std::swap(A[i], A[k]);
                    std::swap(b[i], b[k]);
                    clean = false;
                }
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (A[k][j] == 0) continue;
                Int q = A[k][j] / A[k][k];
                for (std::size_t i = k; i < m; ++i) A[i][j] -= q * A[i][k];
                if (A[k][j] != 0) {
                    for (std::size_t i = 0; i < m; ++i) std::swap(A[i][j], A[i][k]);
                    clean = false;
                }
            }
        }
        ++k;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (i < k && i < n) {
            if (b[i] % A[i][i] != 0) return false;
        } else if (b[i] != 0) {
            return false;
        }
    }
    return true;
}

bool in_center_ideal(const TElement& x, int maxdeg) {
    int l = x.modulus();
    if (l < 1) throw DomainError("center ideal lives at a root of unity");
    if (x.is_zero()) return true;
    for (const auto& [deg, piece] : x.split_by_tdegree()) {
        if (deg > maxdeg) throw DomainError("degree overflow");
        if (deg == 0 || deg < l) return false;  // no generator fits below degree l
        // spanning set {monomial * a_i : l*i + tdeg(monomial) == deg}
        std::vector<TElement> span;
        for (int i = 1; l * i <= deg; ++i) {
            TElement a = det_coeff(i, l);
            for (const Monomial& mono : tmonomials_of_degree(deg - l * i, l))
                span.push_back(a * LaurentPoly::from_monomial(mono, 1, l));
        }
        std::map<Monomial, std::size_t> index;
        auto touch = [&](const TElement& p) {
            for (const auto& [mono, c] : p.terms())
                index.emplace(mono, index.size());
        };
        touch(piece);
        for (const TElement& s : span) touch(s);
        std::vector<std::vector<Int>> A(index.size(), std::vector<Int>(span.size(), 0));
        std::vector<Int> b(index.size(), 0);
        for (std::size_t c = 0; c < span.size(); ++c)
            for (const auto& [mono, v] : span[c].terms()) A[index[mono]][c] = v;
        for (const auto& [mono, v] : piece.terms()) b[index[mono]] = v;
        if (!solve_integer_system(std::move(A), std::move(b))) return false;
    }
    return true;
}

}  // namespace qhopf
