#include "qhopf/hall.hpp"

#include <algorithm>
#include <set>

#include "qhopf/repring.hpp"

namespace qhopf {

ASet ASet::make(std::vector<Snake> snakes, int quiver_l) {
    ASet s{std::move(snakes), quiver_l};
    s.canonicalize();
    return s;
}

void ASet::canonicalize() {
    for (Snake& s : snakes) {
        if (s.len < 0) throw DomainError("negative snake length");
        s.tail = reduce_mod(s.tail, quiver_l);
    }
    std::sort(snakes.begin(), snakes.end());
}

int ASet::total_degree() const {
    int d = 0;
    for (const Snake& s : snakes) d += s.len + 1;
    return d;
}

std::map<int, int> ASet::degree_vector() const {
    std::map<int, int> deg;
    for (const Snake& s : snakes)
        for (int t = 0; t <= s.len; ++t) deg[reduce_mod(s.tail + t, quiver_l)] += 1;
    return deg;
}

ASet f_gen(const std::map<int, int>& d, int quiver_l) {
    std::vector<Snake> snakes;
    for (const auto& [v, k] : d) {
        if (k < 0) throw DomainError("negative degree component");
        for (int i = 0; i < k; ++i) snakes.push_back({v, 0});
    }
    return ASet::make(std::move(snakes), quiver_l);
}

ASet f_gen(int vertex, int quiver_l) { return ASet::make({{vertex, 0}}, quiver_l); }

HallElement HallElement::basis(const ASet& s, Int c) {
    HallElement h = zero(s.quiver_l);
    h.add_term(s, c);
    return h;
}

Int HallElement::coeff(const ASet& s) const {
    auto it = terms.find(s);
    return it == terms.end() ? Int(0) : it->second;
}

void HallElement::add_term(const ASet& s, const Int& c) {
    if (c == 0) return;
    if (s.quiver_l != quiver_l) throw DomainError("quiver mismatch");
    auto [it, inserted] = terms.emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

HallElement HallElement::operator+(const HallElement& o) const {
    if (quiver_l != o.quiver_l) throw DomainError("quiver mismatch");
    HallElement out = *this;
    for (const auto& [s, c] : o.terms) out.add_term(s, c);
    return out;
}

HallElement HallElement::operator-(const HallElement& o) const {
    if (quiver_l != o.quiver_l) throw DomainError("quiver mismatch");
    HallElement out = *this;
    for (const auto& [s, c] : o.terms) out.add_term(s, -c);
    return out;
}

HallElement HallElement::scaled(const Int& c) const {
    HallElement out = zero(quiver_l);
    if (c == 0) return out;
    for (const auto& [s, k] : terms) out.terms[s] = k * c;
    return out;
}

namespace {

int head_vertex(const Snake& s, int l) { return reduce_mod(s.tail + s.len, l); }

// Every S with a nonzero structure constant is built by gluing some snakes of
// K onto heads of distinct snakes of L (one edge between the head and the
// tail) and leaving the rest untouched.
void glue_candidates(const ASet& K, const ASet& L, std::size_t idx, std::vector<int>& used,
                     std::vector<Snake>& acc, std::set<ASet>& out) {
    int l = K.quiver_l;
    if (idx == K.snakes.size()) {
        std::vector<Snake> snakes = acc;
        for (std::size_t j = 0; j < L.snakes.size(); ++j)
            if (!used[j]) snakes.push_back(L.snakes[j]);
        out.insert(ASet::make(std::move(snakes), l));
        return;
    }
    const Snake& k = K.snakes[idx];
    acc.push_back(k);  // left free
    glue_candidates(K, L, idx + 1, used, acc, out);
    acc.pop_back();
    for (std::size_t j = 0; j < L.snakes.size(); ++j) {
        if (used[j]) continue;
        const Snake& g = L.snakes[j];
        bool adjacent = l > 0 ? reduce_mod(head_vertex(g, l) + 1, l) == k.tail
                              : g.tail + g.len + 1 == k.tail;
        if (!adjacent) continue;
        used[j] = 1;
        acc.push_back({g.tail, g.len + 1 + k.len});
        glue_candidates(K, L, idx + 1, used, acc, out);
        acc.pop_back();
        used[j] = 0;
    }
}

// Number of ways to cut the snakes of S so the suffixes form K and the
// prefixes form L. A sub-A-set takes a head-suffix of each snake.
Int count_cuts(const ASet& S, const ASet& K, const ASet& L) {
    int l = S.quiver_l;
    int target = K.total_degree();
    std::vector<Snake> sub, quot;
    Int count = 0;
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (idx == S.snakes.size()) {
            if (remaining != 0) return;
            if (ASet::make(sub, l) == K && ASet::make(quot, l) == L) count += 1;
            return;
        }
        const Snake& s = S.snakes[idx];
        int size = s.len + 1;
        for (int take = 0; take <= size && take <= remaining; ++take) {
            if (take > 0) sub.push_back({reduce_mod(s.tail + size - take, l), take - 1});
            if (take < size) quot.push_back({s.tail, size - take - 1});
            self(self, idx + 1, remaining - take);
            if (take > 0) sub.pop_back();
            if (take < size) quot.pop_back();
        }
    };
    rec(rec, 0, target);
    return count;
}

}  // namespace

HallElement hall_mul(const ASet& K, const ASet& L) {
    if (K.quiver_l != L.quiver_l) throw DomainError("quiver mismatch");
    std::set<ASet> candidates;
    std::vector<int> used(L.snakes.size(), 0);
    std::vector<Snake> acc;
    glue_candidates(K, L, 0, used, acc, candidates);
    HallElement out = HallElement::zero(K.quiver_l);
    for (const ASet& S : candidates) out.add_term(S, count_cuts(S, K, L));
    return out;
}

HallElement hall_mul(const HallElement& a, const HallElement& b) {
    if (a.quiver_l != b.quiver_l) throw DomainError("quiver mismatch");
    HallElement out = HallElement::zero(a.quiver_l);
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            HallElement p = hall_mul(ka, kb);
            for (const auto& [s, c] : p.terms) out.add_term(s, c * ca * cb);
        }
    return out;
}

HallElement hall_mul_dual(const ASet& K, const ASet& L) {
    if (K.quiver_l != L.quiver_l) throw DomainError("quiver mismatch");
    int l = K.quiver_l;
    std::map<int, int> deg = K.degree_vector();
    for (const auto& [v, k] : L.degree_vector()) deg[v] += k;
    int lo = 0, hi = 0;
    if (l == 0 && !deg.empty()) {
        lo = deg.begin()->first;
        hi = deg.rbegin()->first;
    }
    Monomial mk = aset_monomial(K), ml = aset_monomial(L);
    HallElement out = HallElement::zero(l);
    for (const ASet& S : enumerate_asets_by_degree(l, deg, lo, hi)) {
        LaurentPoly ts = LaurentPoly::from_monomial(aset_monomial(S), 1, l);
        out.add_term(S, coproduct(ts).coeff(mk, ml));
    }
    return out;
}

HallTensor hall_comul(const ASet& s) {
    // Distinct snakes with multiplicities; every split of the multiset once.
    std::vector<std::pair<Snake, int>> kinds;
    for (const Snake& sn : s.snakes) {
        if (!kinds.empty() && kinds.back().first == sn)
            kinds.back().second += 1;
        else
            kinds.emplace_back(sn, 1);
    }
    HallTensor out;
    std::vector<int> take(kinds.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == kinds.size()) {
            std::vector<Snake> left, right;
            for (std::size_t i = 0; i < kinds.size(); ++i) {
                for (int k = 0; k < take[i]; ++k) left.push_back(kinds[i].first);
                for (int k = take[i]; k < kinds[i].second; ++k) right.push_back(kinds[i].first);
            }
            out[{ASet::make(std::move(left), s.quiver_l),
                 ASet::make(std::move(right), s.quiver_l)}] += 1;
            return;
        }
        for (take[idx] = 0; take[idx] <= kinds[idx].second; ++take[idx]) self(self, idx + 1);
        take[idx] = 0;
    };
    rec(rec, 0);
    return out;
}

Monomial aset_monomial(const ASet& s) {
    Monomial m;
    for (const Snake& sn : s.snakes) {
        VarId v{Family::T, sn.len + 1, reduce_mod(sn.tail + sn.len, s.quiver_l)};
        m = m * Monomial::var(v);
    }
    return m;
}

ASet aset_of_monomial(const Monomial& m, int quiver_l) {
    std::vector<Snake> snakes;
    for (const auto& [v, e] : m.factors) {
        if (v.family != Family::T || e < 0) throw DomainError("not a PBW monomial");
        for (int k = 0; k < e; ++k)
            snakes.push_back({reduce_mod(v.spectral - v.row + 1, quiver_l), v.row - 1});
    }
    return ASet::make(std::move(snakes), quiver_l);
}

Int hall_pairing(const HallElement& h, const LaurentPoly& T) {
    if (h.quiver_l != T.modulus()) throw DomainError("lattice mismatch");
    Int out = 0;
    for (const auto& [s, c] : h.terms) out += c * T.coeff(aset_monomial(s));
    return out;
}

HallElement central_z(int i, int l) {
    if (i < 1 || l < 1) throw DomainError("central element needs i >= 1, l >= 1");
    HallElement out = HallElement::zero(l);
    for (int tail = 0; tail < l; ++tail) out.add_term(ASet::make({{tail, l * i - 1}}, l), 1);
    return out;
}

HallElement central_p(int i, int l) {
    if (i < 0 || l < 1) throw DomainError("central element needs i >= 0, l >= 1");
    HallElement out = HallElement::zero(l);
    std::vector<Snake> acc;
    auto rec = [&](auto&& self, int idx, int min_tail) -> void {
        if (idx == i) {
            out.add_term(ASet::make(acc, l), 1);
            return;
        }
        for (int tail = min_tail; tail < l; ++tail) {
            acc.push_back({tail, l - 1});
            self(self, idx + 1, tail);
            acc.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

HallElement unwind(const HallElement& x, int lo, int hi) {
    if (x.quiver_l < 1) throw DomainError("unwind expects the cyclic quiver");
    int l = x.quiver_l;
    HallElement out = HallElement::zero(0);
    for (const auto& [s, c] : x.terms) {
        std::vector<std::vector<int>> lifts(s.snakes.size());
        for (std::size_t i = 0; i < s.snakes.size(); ++i) {
            const Snake& sn = s.snakes[i];
            for (int tail = lo + reduce_mod(sn.tail - lo, l); tail + sn.len <= hi; tail += l)
                lifts[i].push_back(tail);
        }
        std::set<ASet> seen;  // distinct lifted multisets, once each
        std::vector<Snake> acc;
        auto rec = [&](auto&& self, std::size_t idx) -> void {
            if (idx == s.snakes.size()) {
                seen.insert(ASet::make(acc, 0));
                return;
            }
            for (int tail : lifts[idx]) {
                acc.push_back({tail, s.snakes[idx].len});
                self(self, idx + 1);
                acc.pop_back();
            }
        };
        rec(rec, 0);
        for (const ASet& lifted : seen) out.add_term(lifted, c);
    }
    return out;
}

std::pair<int, int> unwind_safe_window(const HallElement& x, int spectral_lo, int spectral_hi) {
    int maxlen = 0;
    for (const auto& [s, c] : x.terms)
        for (const Snake& sn : s.snakes) maxlen = std::max(maxlen, sn.len);
    return {spectral_lo - maxlen, spectral_hi};
}

namespace {

void gen_asets(int quiver_l, int rest, Snake min_snake, int window_lo, int window_hi,
               std::vector<Snake>& acc, std::vector<ASet>& out) {
    if (rest == 0) {
        out.push_back(ASet::make(acc, quiver_l));
        return;
    }
    int tail_lo = quiver_l > 0 ? 0 : window_lo;
    int tail_hi = quiver_l > 0 ? quiver_l - 1 : window_hi;
    for (int tail = tail_lo; tail <= tail_hi; ++tail)
        for (int len = 0; len + 1 <= rest; ++len) {
            if (quiver_l == 0 && tail + len > window_hi) break;
            Snake s{tail, len};
            if (s < min_snake) continue;
            acc.push_back(s);
            gen_asets(quiver_l, rest - len - 1, s, window_lo, window_hi, acc, out);
            acc.pop_back();
        }
}

}  // namespace

std::vector<ASet> enumerate_asets(int quiver_l, int total_degree, int window_lo, int window_hi) {
    std::vector<ASet> out;
    std::vector<Snake> acc;
    gen_asets(quiver_l, total_degree, Snake{quiver_l > 0 ? 0 : window_lo, 0}, window_lo, window_hi,
              acc, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ASet> enumerate_asets_by_degree(int quiver_l, const std::map<int, int>& deg,
                                            int window_lo, int window_hi) {
    int total = 0;
    for (const auto& [v, k] : deg) total += k;
    std::vector<ASet> out;
    for (const ASet& s : enumerate_asets(quiver_l, total, window_lo, window_hi))
        if (s.degree_vector() == deg) out.push_back(s);
    return out;
}

}  // namespace qhopf
