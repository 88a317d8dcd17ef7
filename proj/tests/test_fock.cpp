#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qhopf/fock.hpp>
#include <qhopf/textio.hpp>

using namespace qhopf;

namespace {

FockVector basis1(const Partition& p) { return FockVector::basis({p}); }

Series S(std::initializer_list<int> xs) {
    Series s;
    for (int x : xs) s.c.push_back(x);
    return s;
}

}  // namespace

TEST_CASE("box operators") {
    FockSpace level1{{0}, 0};
    CHECK(fock_apply(level1, FockOp::F, 0, FockVector::vacuum(1)) == basis1({1}).scaled(-1));
    for (int m = -3; m <= 3; ++m)
        CHECK(fock_apply(level1, FockOp::E, m, FockVector::vacuum(1)).is_zero());

    FockSpace folded{{0}, 2};
    CHECK(fock_apply(folded, FockOp::F, 1, basis1({1})) ==
          basis1({2}).scaled(-1) + basis1({1, 1}).scaled(-1));
    CHECK(fock_apply(folded, FockOp::F, 0, basis1({1})).is_zero());
    CHECK_THROWS_AS(fock_apply(folded, FockOp::F, 2, basis1({1})), DomainError);

    // shifts move the operator index
    FockSpace shifted{{3}, 0};
    CHECK(fock_apply(shifted, FockOp::F, 3, FockVector::vacuum(1)) == basis1({1}).scaled(-1));

    // Leibniz rule across tensor factors
    FockSpace level2{{0, 0}, 0};
    FockVector v = FockVector::vacuum(2);
    FockVector image = fock_apply(level2, FockOp::F, 0, v);
    CHECK(image == FockVector::basis({{1}, {}}).scaled(-1) +
                       FockVector::basis({{}, {1}}).scaled(-1));
}

TEST_CASE("commutation relations on small partitions") {
    FockSpace level1{{0}, 0};
    for (int size = 0; size <= 5; ++size)
        for (const Partition& lam : partitions_of(size)) {
            FockVector v = basis1(lam);
            for (int m = -5; m <= 5; ++m)
                for (int mp = -5; mp <= 5; ++mp) {
                    FockVector lhs = fock_apply(level1, FockOp::E, m,
                                                fock_apply(level1, FockOp::F, mp, v)) -
                                     fock_apply(level1, FockOp::F, mp,
                                                fock_apply(level1, FockOp::E, m, v));
                    FockVector rhs = m == mp ? fock_apply(level1, FockOp::H, m, v) : FockVector{};
                    CHECK(lhs == rhs);
                }
        }
}

TEST_CASE("folded operators satisfy the affine Serre relations") {
    for (int l : {2, 3}) {
        FockSpace space{{0}, l};
        auto f = [&](int i, const FockVector& v) { return fock_apply(space, FockOp::F, i, v); };
        int order = l == 2 ? 3 : 2;
        for (int size = 0; size <= 4; ++size)
            for (const Partition& lam : partitions_of(size))
                for (int i = 0; i < l; ++i)
                    for (int j = 0; j < l; ++j) {
                        if (i == j) continue;
                        bool adjacent = reduce_mod(i - j, l) == 1 || reduce_mod(j - i, l) == 1;
                        if (!adjacent) continue;
                        FockVector acc;
                        long binom = 1;
                        for (int k = 0; k <= order; ++k) {
                            FockVector w = basis1(lam);
                            for (int t = 0; t < k; ++t) w = f(i, w);
                            w = f(j, w);
                            for (int t = 0; t < order - k; ++t) w = f(i, w);
                            acc = acc + w.scaled(k % 2 == 0 ? binom : -binom);
                            binom = binom * (order - k) / (k + 1);
                        }
                        CHECK(acc.is_zero());
                    }
    }
}

TEST_CASE("principal characters") {
    CHECK(principal_character({0}, 2, 5) == S({1, 1, 1, 2, 2, 3}));
    CHECK(principal_character({0}, 0, 4) == S({1, 1, 2, 3, 5}));
    CHECK(principal_character({0, 0}, 2, 0).at(0) == 1);
    // monotone under enlarging the weight
    Series one = principal_character({0}, 2, 4);
    Series two = principal_character({0, 0}, 2, 4);
    Series mixed = principal_character({1, 0}, 2, 4);
    for (int d = 0; d <= 4; ++d) {
        CHECK(two.at(d) >= one.at(d));
        CHECK(mixed.at(d) >= one.at(d));
    }
}

TEST_CASE("diagram generating functions") {
    auto [c1, f1] = sdiagram_genfun({0}, 4);
    CHECK(c1 == S({1, 1, 2, 3, 5}));
    CHECK(f1 == S({1, 1, 2, 3, 5}));

    auto [c2, f2] = sdiagram_genfun({0, 0}, 3);
    CHECK(c2 == S({1, 1, 3, 5}));
    CHECK(f2 == S({1, 1, 3, 5}));

    auto [c3, f3] = sdiagram_genfun({1, 0}, 2);
    CHECK(f3 == S({1, 2, 4}));
    CHECK(c3 == f3);
}

TEST_CASE("folded generating functions") {
    auto [counted, character] = folded_genfun({0}, 2, 5);
    CHECK(counted.at(3) == 2);
    CHECK(counted == S({1, 1, 1, 2, 2, 3}));
    CHECK(character == counted);
}

TEST_CASE("fock vector text format") {
    FockVector v = FockVector::basis({{2}, {1}}).scaled(-1) + FockVector::basis({{1, 1}, {}});
    CHECK(parse_fock(print_fock(v)) == v);
    CHECK(print_fock(FockVector{}) == "0");
    CHECK(parse_fock("-|[2]> - |[1,1]>") ==
          basis1({2}).scaled(-1) + basis1({1, 1}).scaled(-1));
}
