#include "qhopf/young.hpp"

#include <algorithm>
#include <set>

#include "qhopf/ints.hpp"

namespace qhopf {

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

int partition_size(const Partition& p) {
    int n = 0;
    for (int x : p) n += x;
    return n;
}

static void gen_partitions(int n, int maxPart, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxPart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    return out;
}

static void fill_boxes(const Partition& shape, int N,
                       std::vector<std::vector<int>>& rows, int r, int c,
                       std::vector<SSTableau>& out) {
    if (r == static_cast<int>(shape.size())) {
        out.push_back(SSTableau{shape, rows});
        return;
    }
    int nr = r, nc = c + 1;
    if (nc >= shape[r]) {
        nr = r + 1;
        nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0 && c < shape[r - 1]) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= N; ++v) {
        rows[r][c] = v;
        fill_boxes(shape, N, rows, nr, nc, out);
    }
    rows[r][c] = 0;
}

std::vector<SSTableau> ssyt_enumerate(const Partition& shape, int N) {
    if (!is_partition(shape)) throw DomainError("not a partition");
    std::vector<SSTableau> out;
    if (static_cast<int>(shape.size()) > N) return out;
    if (shape.empty()) {
        out.push_back(SSTableau{shape, {}});
        return out;
    }
    std::vector<std::vector<int>> rows;
    for (int len : shape) rows.emplace_back(len, 0);
    fill_boxes(shape, N, rows, 0, 0, out);
    return out;
}

static bool interlaces(const std::vector<int>& upper, const std::vector<int>& lower) {
    // upper has one more entry than lower (virtually zero-padded)
    auto up = [&](std::size_t i) { return i < upper.size() ? upper[i] : 0; };
    auto lo = [&](std::size_t i) { return i < lower.size() ? lower[i] : 0; };
    for (std::size_t i = 0; i < upper.size(); ++i)
        if (!(up(i) >= lo(i) && (i + 1 >= upper.size() || lo(i) >= up(i + 1)))) return false;
    return true;
}

GZScheme tableau_to_scheme(const SSTableau& t) {
    int N = 0;
    for (const auto& row : t.rows)
        for (int v : row) N = std::max(N, v);
    N = std::max(N, static_cast<int>(t.shape.size()));
    GZScheme s;
    for (int M = 1; M <= N; ++M) {
        std::vector<int> level(M, 0);
        for (std::size_t r = 0; r < t.rows.size() && static_cast<int>(r) < M; ++r) {
            int cnt = 0;
            for (int v : t.rows[r])
                if (v <= M) ++cnt;
            level[r] = cnt;
        }
        s.levels.push_back(level);
    }
    for (std::size_t M = 1; M < s.levels.size(); ++M)
        if (!interlaces(s.levels[M], s.levels[M - 1])) throw DomainError("interlacing violation");
    return s;
}

SSTableau scheme_to_tableau(const GZScheme& s) {
    int N = static_cast<int>(s.levels.size());
    for (int M = 1; M < N; ++M)
        if (!interlaces(s.levels[M], s.levels[M - 1])) throw DomainError("interlacing violation");
    Partition shape;
    if (N > 0)
        for (int x : s.levels[N - 1])
            if (x > 0) shape.push_back(x);
    if (!is_partition(shape)) throw DomainError("interlacing violation");
    std::vector<std::vector<int>> rows;
    for (int len : shape) rows.emplace_back(len, 0);
    auto len_at = [&](int M, int r) {  // r-th part of the M-th subdiagram
        if (M < 1 || r >= M) return 0;
        return r < static_cast<int>(s.levels[M - 1].size()) ? s.levels[M - 1][r] : 0;
    };
    for (int M = 1; M <= N; ++M)
        for (int r = 0; r < M && r < static_cast<int>(rows.size()); ++r)
            for (int c = len_at(M - 1, r); c < len_at(M, r); ++c) rows[r][c] = M;
    return SSTableau{shape, rows};
}

std::vector<std::pair<int, int>> boxes(const Partition& shape, BoxMode mode,
                                       std::optional<int> content, int modulus) {
    std::vector<std::pair<int, int>> out;
    int k = static_cast<int>(shape.size());
    auto keep = [&](int i, int j) {
        if (!content) return true;
        int c = j - i;
        if (modulus > 0) return reduce_mod(c, modulus) == reduce_mod(*content, modulus);
        return c == *content;
    };
    if (mode == BoxMode::Addable) {
        for (int i = 1; i <= k + 1; ++i) {
            int j = (i <= k ? shape[i - 1] : 0) + 1;
            bool ok = (i == 1) || shape[i - 2] >= j;
            if (ok && keep(i, j)) out.emplace_back(i, j);
        }
    } else {
        for (int i = 1; i <= k; ++i) {
            int j = shape[i - 1];
            bool ok = (i == k) || shape[i] < j;
            if (ok && keep(i, j)) out.emplace_back(i, j);
        }
    }
    return out;
}

std::optional<Partition> add_box(const Partition& shape, int row) {
    Partition p = shape;
    if (row == static_cast<int>(p.size()) + 1) {
        p.push_back(1);
    } else if (row >= 1 && row <= static_cast<int>(p.size())) {
        p[row - 1] += 1;
    } else {
        return std::nullopt;
    }
    if (!is_partition(p)) return std::nullopt;
    return p;
}

std::optional<Partition> remove_box(const Partition& shape, int row) {
    if (row < 1 || row > static_cast<int>(shape.size())) return std::nullopt;
    Partition p = shape;
    p[row - 1] -= 1;
    if (p[row - 1] == 0) p.erase(p.begin() + (row - 1));
    if (!is_partition(p)) return std::nullopt;
    return p;
}

SDiagram sdiagram_from_tuple(const std::vector<Partition>& tuple, const std::vector<int>& shifts) {
    SDiagram d;
    d.shifts = shifts;
    for (std::size_t t = 0; t < tuple.size(); ++t) {
        int s = t < shifts.size() ? shifts[t] : 0;
        const Partition& lam = tuple[t];
        for (std::size_t r = 0; r < lam.size(); ++r)
            for (int j = 1; j <= lam[r]; ++j) d.boxes[{static_cast<int>(r) + 1, j + s}] += 1;
    }
    return d;
}

static void gen_tuples(const std::vector<int>& shifts, std::size_t idx, int rest,
                       std::vector<Partition>& cur,
                       std::set<std::map<std::pair<int, int>, int>>& seen,
                       std::vector<SDiagram>& out) {
    if (idx + 1 == shifts.size()) {
        cur.push_back({});
        for (const Partition& last : partitions_of(rest)) {
            cur.back() = last;
            SDiagram d = sdiagram_from_tuple(cur, shifts);
            if (seen.insert(d.boxes).second) out.push_back(d);
        }
        cur.pop_back();
        return;
    }
    for (int n = 0; n <= rest; ++n) {
        for (const Partition& p : partitions_of(n)) {
            cur.push_back(p);
            gen_tuples(shifts, idx + 1, rest - n, cur, seen, out);
            cur.pop_back();
        }
    }
}

std::vector<SDiagram> sdiagram_enumerate(const std::vector<int>& shifts, int n) {
    if (shifts.empty() || shifts.back() != 0) throw DomainError("shifts must end in 0");
    for (std::size_t i = 1; i < shifts.size(); ++i)
        if (shifts[i] > shifts[i - 1]) throw DomainError("shifts must be weakly decreasing");
    std::vector<SDiagram> out;
    std::set<std::map<std::pair<int, int>, int>> seen;
    std::vector<Partition> cur;
    gen_tuples(shifts, 0, n, cur, seen, out);
    return out;
}

FoldedDiagram fold_diagram(const SDiagram& d, int l) {
    if (l < 1) throw DomainError("fold modulus must be >= 1");
    FoldedDiagram f;
    for (const auto& [box, mult] : d.boxes) {
        int j = reduce_mod(box.second - 1, l) + 1;
        f.boxes[{box.first, j}] += mult;
    }
    auto mult_at = [&](int i, int j) {
        auto it = f.boxes.find({i, j});
        return it == f.boxes.end() ? 0 : it->second;
    };
    int max_row = 0;
    for (const auto& [box, mult] : f.boxes) max_row = std::max(max_row, box.first);
    f.acyclic = true;
    for (int i = 1; i <= max_row; ++i) {
        bool row_nonempty = false;
        for (int j = 1; j <= l; ++j)
            if (mult_at(i, j) > 0) row_nonempty = true;
        if (!row_nonempty) continue;
        bool ok = false;
        for (int j = 1; j <= l; ++j)
            if (mult_at(i, j) == mult_at(i + 1, j)) ok = true;
        if (!ok) {
            f.acyclic = false;
            break;
        }
    }
    return f;
}

}  // namespace qhopf
