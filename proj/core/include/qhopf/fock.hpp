#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qhopf/series.hpp"
#include "qhopf/young.hpp"

namespace qhopf {

// Basis vectors are k-tuples of partitions; coefficients are exact rationals
// (integral in all module actions, rational only inside rank computations).
using FockKey = std::vector<Partition>;

struct FockVector {
    std::map<FockKey, Rat> terms;

    static FockVector vacuum(std::size_t k);
    static FockVector basis(FockKey key, Rat c = 1);

    bool is_zero() const { return terms.empty(); }
    void add_term(const FockKey& key, const Rat& c);

    FockVector operator+(const FockVector& o) const;
    FockVector operator-(const FockVector& o) const;
    FockVector scaled(const Rat& c) const;

    bool operator==(const FockVector&) const = default;
};

// Tensor product of Fock factors, the j-th twisted by lattice shift
// shifts[j]; fold_l > 0 folds all operator indices mod l.
struct FockSpace {
    std::vector<int> shifts;
    int fold_l = 0;
};

enum class FockOp { E, F, H };

// Box-removal/addition operators: on one factor, e_m |lam> = -|lam minus box|
// if a box of shifted content m is removable (f_m adds with the same sign,
// h_m counts +1 addable / -1 removable); extended to the tensor product by
// the Leibniz rule. In folded mode the operator with index m acts as the sum
// of all unfolded operators with index congruent to m mod l.
FockVector fock_apply(const FockSpace& space, FockOp op, int m, const FockVector& v);

// Coefficient at degree d: rank of the span of all words f_{i_1}...f_{i_d}
// applied to the vacuum, by exact elimination. weights lists the lattice
// points s_1..s_k of the fundamental factors; l = 0 runs the unfolded case.
Series principal_character(const std::vector<int>& weights, int l, int Dmax);

// Counting series of s-diagrams vs. the closed product formula
// prod_i (1-x^i)^{-k} * prod_{i<j} (1 - x^{s_i - s_j + j - i}).
std::pair<Series, Series> sdiagram_genfun(const std::vector<int>& shifts, int Dmax);

// Counting series of distinct acyclic l-folded s-diagrams vs. the principal
// character of the corresponding integrable module.
std::pair<Series, Series> folded_genfun(const std::vector<int>& shifts, int l, int Dmax);

}  // namespace qhopf
