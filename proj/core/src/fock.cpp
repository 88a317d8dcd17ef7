#include "qhopf/fock.hpp"

#include <algorithm>
#include <set>

#include "qhopf/ints.hpp"

namespace qhopf {

FockVector FockVector::vacuum(std::size_t k) {
    return basis(FockKey(k, Partition{}));
}

FockVector FockVector::basis(FockKey key, Rat c) {
    FockVector v;
    if (c != 0) v.terms[std::move(key)] = std::move(c);
    return v;
}

void FockVector::add_term(const FockKey& key, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

FockVector FockVector::operator+(const FockVector& o) const {
    FockVector out = *this;
    for (const auto& [k, c] : o.terms) out.add_term(k, c);
    return out;
}

FockVector FockVector::operator-(const FockVector& o) const {
    FockVector out = *this;
    for (const auto& [k, c] : o.terms) out.add_term(k, -c);
    return out;
}

FockVector FockVector::scaled(const Rat& c) const {
    FockVector out;
    if (c == 0) return out;
    for (const auto& [k, v] : terms) out.terms[k] = v * c;
    return out;
}

FockVector fock_apply(const FockSpace& space, FockOp op, int m, const FockVector& v) {
    const int l = space.fold_l;
    if (l > 0 && (m < 0 || m >= l)) throw DomainError("folded operator index out of range");
    auto index_hits = [&](int factor, int content) {
        int idx = space.shifts.at(factor) + content;
        return l > 0 ? reduce_mod(idx, l) == m : idx == m;
    };
    FockVector out;
    for (const auto& [key, c] : v.terms) {
        if (key.size() != space.shifts.size()) throw DomainError("tensor rank mismatch");
        for (std::size_t j = 0; j < key.size(); ++j) {
            const Partition& lam = key[j];
            if (op == FockOp::F || op == FockOp::H) {
                for (const auto& [bi, bj] : boxes(lam, BoxMode::Addable)) {
                    if (!index_hits(static_cast<int>(j), bj - bi)) continue;
                    if (op == FockOp::H) {
                        out.add_term(key, c);
                    } else {
                        FockKey nk = key;
                        nk[j] = *add_box(lam, bi);
                        out.add_term(nk, -c);
                    }
                }
            }
            if (op == FockOp::E || op == FockOp::H) {
                for (const auto& [bi, bj] : boxes(lam, BoxMode::Removable)) {
                    if (!index_hits(static_cast<int>(j), bj - bi)) continue;
                    if (op == FockOp::H) {
                        out.add_term(key, -c);
                    } else {
                        FockKey nk = key;
                        nk[j] = *remove_box(lam, bi);
                        out.add_term(nk, -c);
                    }
                }
            }
        }
    }
    return out;
}

namespace {

// Row-reduced span with exact rational elimination; pivot = smallest key.
struct Span {
    std::vector<FockVector> rows;  // each normalized with pivot coefficient 1

    bool insert(FockVector v) {
        for (const FockVector& r : rows) {
            if (v.is_zero()) break;
            const FockKey& pivot = r.terms.begin()->first;
            auto it = v.terms.find(pivot);
            if (it != v.terms.end()) v = v - r.scaled(it->second);
        }
        if (v.is_zero()) return false;
        v = v.scaled(Rat(1) / v.terms.begin()->second);
        rows.push_back(std::move(v));
        std::sort(rows.begin(), rows.end(),
                  [](const FockVector& a, const FockVector& b) {
                      return a.terms.begin()->first < b.terms.begin()->first;
                  });
        return true;
    }
};

}  // namespace

Series principal_character(const std::vector<int>& weights, int l, int Dmax) {
    if (weights.empty()) throw DomainError("need at least one fundamental factor");
    FockSpace space{weights, l};
    Series out = Series::zero(Dmax);
    std::vector<FockVector> layer{FockVector::vacuum(weights.size())};
    out.c[0] = 1;
    for (int d = 1; d <= Dmax; ++d) {
        // operator indices that act nontrivially on the current layer
        std::set<int> indices;
        if (l > 0) {
            for (int m = 0; m < l; ++m) indices.insert(m);
        } else {
            for (const FockVector& w : layer)
                for (const auto& [key, c] : w.terms)
                    for (std::size_t j = 0; j < key.size(); ++j)
                        for (const auto& [bi, bj] : boxes(key[j], BoxMode::Addable))
                            indices.insert(weights[j] + bj - bi);
        }
        Span span;
        std::vector<FockVector> next;
        for (const FockVector& w : layer)
            for (int m : indices) {
                FockVector img = fock_apply(space, FockOp::F, m, w);
                if (!img.is_zero() && span.insert(img)) next.push_back(std::move(img));
            }
        out.c[d] = static_cast<long>(span.rows.size());
        layer = std::move(next);
    }
    return out;
}

std::pair<Series, Series> sdiagram_genfun(const std::vector<int>& shifts, int Dmax) {
    Series counted = Series::zero(Dmax);
    for (int n = 0; n <= Dmax; ++n)
        counted.c[n] = static_cast<long>(sdiagram_enumerate(shifts, n).size());
    int k = static_cast<int>(shifts.size());
    Series formula = Series::one(Dmax);
    for (int i = 1; i <= Dmax; ++i) formula = series_mul(formula, geometric_factor(i, -k, Dmax), Dmax);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            formula = series_mul(formula, geometric_factor(shifts[i] - shifts[j] + j - i, 1, Dmax),
                                 Dmax);
    return {counted, formula};
}

std::pair<Series, Series> folded_genfun(const std::vector<int>& shifts, int l, int Dmax) {
    if (l < 1) throw DomainError("fold modulus must be >= 1");
    Series counted = Series::zero(Dmax);
    for (int n = 0; n <= Dmax; ++n) {
        std::set<std::map<std::pair<int, int>, int>> folded;
        Int acyclic = 0;
        for (const SDiagram& d : sdiagram_enumerate(shifts, n)) {
            FoldedDiagram f = fold_diagram(d, l);
            if (folded.insert(f.boxes).second && f.acyclic) acyclic += 1;
        }
        counted.c[n] = acyclic;
    }
    return {counted, principal_character(shifts, l, Dmax)};
}

}  // namespace qhopf
