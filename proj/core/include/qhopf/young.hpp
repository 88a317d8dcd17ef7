#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qhopf/error.hpp"

namespace qhopf {

// Weakly decreasing positive parts; empty is the zero partition.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int partition_size(const Partition& p);
std::vector<Partition> partitions_of(int n);

// Semistandard filling: rows weakly increase, columns strictly increase.
struct SSTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;  // rows[i][j] = entry of box (i+1, j+1)

    bool operator==(const SSTableau&) const = default;
    auto operator<=>(const SSTableau&) const = default;
};

// Triangular array: level[M-1] has M entries (M = 1..N), level[N-1] = shape.
// Interlacing: level[M][i] >= level[M-1][i] >= level[M][i+1], zero-padded.
struct GZScheme {
    std::vector<std::vector<int>> levels;

    bool operator==(const GZScheme&) const = default;
};

// All semistandard tableaux of the given shape with entries in {1..N},
// each exactly once, in lexicographic order of the row-major reading word.
// A shape with more than N rows yields the empty list.
std::vector<SSTableau> ssyt_enumerate(const Partition& shape, int N);

// The i-th subdiagram of the scheme is the shape of boxes with entries <= i;
// the two maps are exact mutual inverses. Interlacing violations are errors.
GZScheme tableau_to_scheme(const SSTableau& t);
SSTableau scheme_to_tableau(const GZScheme& s);

enum class BoxMode { Addable, Removable };

// Boxes (i, j) that can be added to / removed from the diagram, optionally
// filtered by content j - i == m (or == m mod l when modulus > 0).
std::vector<std::pair<int, int>> boxes(const Partition& shape, BoxMode mode,
                                       std::optional<int> content = std::nullopt,
                                       int modulus = 0);

std::optional<Partition> add_box(const Partition& shape, int row);
std::optional<Partition> remove_box(const Partition& shape, int row);

// Union with multiplicity of k Young diagrams, the t-th shifted horizontally
// by s_t. Equality is multiset equality of boxes; shifts are provenance only.
struct SDiagram {
    std::map<std::pair<int, int>, int> boxes;  // (row, column) -> multiplicity
    std::vector<int> shifts;

    bool operator==(const SDiagram& o) const { return boxes == o.boxes; }
};

SDiagram sdiagram_from_tuple(const std::vector<Partition>& tuple, const std::vector<int>& shifts);

// All distinct s-diagrams with n boxes (counted with multiplicity),
// obtained from k-tuples of partitions of total size n, deduplicated.
// Requires s weakly decreasing with s_k = 0.
std::vector<SDiagram> sdiagram_enumerate(const std::vector<int>& shifts, int n);

// Column residues live in {1..l} via j -> ((j-1) mod l) + 1. A folded diagram
// is acyclic when every nonempty row i admits j in {1..l} with
// mult(i, j) == mult(i+1, j).
struct FoldedDiagram {
    std::map<std::pair<int, int>, int> boxes;
    bool acyclic = false;

    bool operator==(const FoldedDiagram& o) const { return boxes == o.boxes; }
};

FoldedDiagram fold_diagram(const SDiagram& d, int l);

}  // namespace qhopf
