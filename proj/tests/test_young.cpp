#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qhopf/ints.hpp>
#include <qhopf/textio.hpp>
#include <qhopf/young.hpp>

using namespace qhopf;

namespace {

// Independent oracle: product formula for the dimension of the GL_N module.
Int weyl_dimension(const Partition& lam, int N) {
    std::vector<Int> padded(N, 0);
    for (std::size_t i = 0; i < lam.size(); ++i) padded[i] = lam[i];
    Rat dim = 1;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            dim *= Rat(padded[i] - padded[j] + j - i, j - i);
    CHECK(boost::multiprecision::denominator(dim) == 1);
    return boost::multiprecision::numerator(dim);
}

}  // namespace

TEST_CASE("tableau enumeration on small shapes") {
    auto col = ssyt_enumerate({1, 1}, 2);
    REQUIRE(col.size() == 1);
    CHECK(col[0].rows == std::vector<std::vector<int>>{{1}, {2}});

    auto row = ssyt_enumerate({2}, 2);
    REQUIRE(row.size() == 3);
    CHECK(row[0].rows == std::vector<std::vector<int>>{{1, 1}});
    CHECK(row[1].rows == std::vector<std::vector<int>>{{1, 2}});
    CHECK(row[2].rows == std::vector<std::vector<int>>{{2, 2}});

    auto big = ssyt_enumerate({4, 2, 2, 1}, 4);
    SSTableau displayed{{4, 2, 2, 1}, {{1, 1, 2, 3}, {2, 2}, {3, 4}, {4}}};
    CHECK(std::find(big.begin(), big.end(), displayed) != big.end());

    CHECK(ssyt_enumerate({1, 1, 1}, 2).empty());
}

TEST_CASE("tableau count matches the dimension formula") {
    for (int size = 0; size <= 4; ++size)
        for (const Partition& lam : partitions_of(size))
            for (int N = 1; N <= 4; ++N) {
                if (static_cast<int>(lam.size()) > N) continue;
                CHECK(Int(static_cast<long>(ssyt_enumerate(lam, N).size())) ==
                      weyl_dimension(lam, N));
            }
}

TEST_CASE("triangular scheme bijection") {
    SSTableau displayed{{4, 2, 2, 1}, {{1, 1, 2, 3}, {2, 2}, {3, 4}, {4}}};
    GZScheme s = tableau_to_scheme(displayed);
    REQUIRE(s.levels.size() == 4);
    CHECK(s.levels[0] == std::vector<int>{2});
    CHECK(s.levels[1] == std::vector<int>{3, 2});
    CHECK(s.levels[2] == std::vector<int>{4, 2, 1});
    CHECK(s.levels[3] == std::vector<int>{4, 2, 2, 1});
    CHECK(scheme_to_tableau(s) == displayed);

    SSTableau flat{{3}, {{1, 1, 1}}};
    GZScheme fs = tableau_to_scheme(flat);
    REQUIRE(fs.levels.size() == 1);
    CHECK(fs.levels[0] == std::vector<int>{3});

    auto all = ssyt_enumerate({2, 1}, 3);
    CHECK(all.size() == 8);
    for (const SSTableau& t : all) CHECK(scheme_to_tableau(tableau_to_scheme(t)) == t);

    GZScheme bad{{{1}, {3, 2}}};  // 3 > 1 violates interlacing
    CHECK_THROWS_AS(scheme_to_tableau(bad), DomainError);
}

TEST_CASE("bijection is an involution pair on small shapes") {
    for (int size = 0; size <= 5; ++size)
        for (const Partition& lam : partitions_of(size))
            for (int N = static_cast<int>(lam.size()); N <= 4; ++N) {
                if (N < 1) continue;
                for (const SSTableau& t : ssyt_enumerate(lam, N))
                    CHECK(scheme_to_tableau(tableau_to_scheme(t)) == t);
            }
}

TEST_CASE("addable and removable boxes") {
    CHECK(boxes({1}, BoxMode::Removable, 0) == std::vector<std::pair<int, int>>{{1, 1}});
    CHECK(boxes({1}, BoxMode::Removable, 1).empty());
    CHECK(boxes({1}, BoxMode::Addable) == std::vector<std::pair<int, int>>{{1, 2}, {2, 1}});
    CHECK(boxes({1}, BoxMode::Addable, 0, 2).empty());  // both contents odd
    CHECK(boxes({}, BoxMode::Addable) == std::vector<std::pair<int, int>>{{1, 1}});
}

TEST_CASE("diagram enumeration") {
    CHECK(sdiagram_enumerate({0}, 4).size() == 5);
    CHECK(sdiagram_enumerate({0, 0}, 2).size() == 3);
    for (int n = 0; n <= 12; ++n)
        CHECK(sdiagram_enumerate({0}, n).size() == partitions_of(n).size());

    SDiagram merged = sdiagram_from_tuple({{2, 1}, {3, 1}}, {1, 0});
    std::map<std::pair<int, int>, int> expected{
        {{1, 1}, 1}, {{1, 2}, 2}, {{1, 3}, 2}, {{2, 1}, 1}, {{2, 2}, 1}};
    CHECK(merged.boxes == expected);

    CHECK_THROWS_AS(sdiagram_enumerate({0, 1}, 2), DomainError);
    CHECK_THROWS_AS(sdiagram_enumerate({1}, 2), DomainError);
}

TEST_CASE("folding") {
    SDiagram pic;
    pic.boxes = {{{1, 1}, 1}, {{1, 2}, 2}, {{1, 3}, 1}, {{1, 4}, 1},
                 {{2, 1}, 1}, {{2, 2}, 1}, {{2, 3}, 1}, {{3, 2}, 1}};
    FoldedDiagram f = fold_diagram(pic, 2);
    std::map<std::pair<int, int>, int> expected{
        {{1, 1}, 2}, {{1, 2}, 3}, {{2, 1}, 2}, {{2, 2}, 1}, {{3, 2}, 1}};
    CHECK(f.boxes == expected);
    CHECK(f.acyclic);

    FoldedDiagram row2 = fold_diagram(sdiagram_from_tuple({{2}}, {0}), 2);
    CHECK_FALSE(row2.acyclic);
    CHECK(fold_diagram(sdiagram_from_tuple({{1, 1}}, {0}), 2).acyclic);
}

TEST_CASE("partition text format") {
    CHECK(print_partition({4, 2, 2, 1}) == "[4,2,2,1]");
    CHECK(parse_partition("[4,2,2,1]") == Partition{4, 2, 2, 1});
    CHECK(parse_partition("[]").empty());
    CHECK_THROWS_AS(parse_partition("[1,2]"), ParseError);
    SDiagram d = sdiagram_from_tuple({{2, 1}}, {0});
    CHECK(print_sdiagram(d) == "(1,1,1) (1,2,1) (2,1,1)");
}
