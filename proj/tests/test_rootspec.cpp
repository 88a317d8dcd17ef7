#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qhopf/repring.hpp>
#include <qhopf/rootspec.hpp>
#include <qhopf/textio.hpp>

using namespace qhopf;

namespace {

LaurentPoly T(int i, int n, int mod) { return t_gen(i, n, mod); }

// multiply two truncated loop matrices and compare determinants
using SeriesT = std::vector<TElement>;

SeriesT smul(const SeriesT& a, const SeriesT& b, int D, int l) {
    SeriesT out(D + 1, LaurentPoly::zero(l));
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

TEST_CASE("determinant coefficients") {
    CHECK(det_coeff(0, 2) == LaurentPoly::unit(2));
    CHECK(det_coeff(1, 2) == T(2, 0, 2) + T(2, 1, 2) - T(1, 0, 2) * T(1, 1, 2));
    CHECK(det_coeff(1, 1) == T(1, 0, 1));
    CHECK(det_coeff(2, 1) == T(2, 0, 1));  // the 1x1 determinant is the entry itself
}

TEST_CASE("pullbacks of fundamental classes") {
    CHECK(frobenius_pullback_fund(1, 2) ==
          parse_poly("t[1,0]*t[1,1] - t[2,0] - t[2,1]", 2));
    CHECK(frobenius_pullback_fund(2, 2) ==
          parse_poly("t[2,0]*t[2,1] - t[3,0]*t[1,1] - t[3,1]*t[1,0] + t[4,0] + t[4,1]", 2));
    // annihilated by every restriction operator
    for (int l = 1; l <= 3; ++l)
        for (int i = 1; i <= 3; ++i)
            for (int d = 0; d < l; ++d) CHECK(res(frobenius_pullback_fund(i, l), {d}).is_zero());
}

TEST_CASE("character substitution") {
    CharPoly in = lambda_gen(1, 0, 1) + lambda_gen(2, 0, 1);
    CHECK(frobenius_char(in, 2) ==
          lambda_gen(1, 0, 2) * lambda_gen(1, 1, 2) + lambda_gen(2, 0, 2) * lambda_gen(2, 1, 2));
    CHECK(frobenius_char(LaurentPoly::unit(1), 3) == LaurentPoly::unit(3));
    CHECK_THROWS_AS(frobenius_char(lambda_gen(1, 0, 0), 2), DomainError);
    // the pullback class has exactly that character
    CHECK(char_of_pbw(frobenius_pullback_fund(1, 2), 2) ==
          frobenius_char(qchar_eval({1}, 0, 2, 1), 2));
    // ring homomorphism
    CharPoly a = qchar_eval({1}, 0, 2, 1), b = qchar_eval({1, 1}, 0, 2, 1);
    CHECK(frobenius_char(a * b, 2) == frobenius_char(a, 2) * frobenius_char(b, 2));
}

TEST_CASE("group-like determinant series") {
    for (int l : {2, 3})
        for (int i = 1; i <= 2; ++i) {
            TensorPoly expected(l);
            for (int j = 0; j <= i; ++j) {
                LaurentPoly aj = det_coeff(j, l), ak = det_coeff(i - j, l);
                for (const auto& [ma, ca] : aj.terms())
                    for (const auto& [mb, cb] : ak.terms()) expected.add_term(ma, mb, ca * cb);
            }
            CHECK(coproduct(det_coeff(i, l)) == expected);
        }
}

TEST_CASE("determinant is multiplicative") {
    const int l = 2, D = 2;
    LoopMatrix M = LoopMatrix::build(l, D);
    // square the matrix over the truncated series ring
    std::vector<std::vector<SeriesT>> sq(l, std::vector<SeriesT>(l, SeriesT(D + 1, LaurentPoly::zero(l))));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int k = 0; k < l; ++k) {
                SeriesT prod = smul(M.entries[i][k], M.entries[k][j], D, l);
                for (int d = 0; d <= D; ++d) sq[i][j][d] += prod[d];
            }
    // det of the 2x2 square
    SeriesT det = smul(sq[0][0], sq[1][1], D, l);
    SeriesT off = smul(sq[0][1], sq[1][0], D, l);
    for (int d = 0; d <= D; ++d) det[d] -= off[d];
    SeriesT d1 = M.determinant();
    SeriesT dsq = smul(d1, d1, D, l);
    for (int d = 0; d <= D; ++d) CHECK(det[d] == dsq[d]);
}

TEST_CASE("membership in the determinant ideal") {
    CHECK(in_center_ideal(det_coeff(1, 2), 8));
    CHECK_FALSE(in_center_ideal(T(1, 0, 2), 8));
    CHECK_FALSE(in_center_ideal(T(2, 0, 2) + T(2, 1, 2), 8));
    CHECK(in_center_ideal(det_coeff(1, 2) * T(1, 0, 2), 8));
    CHECK(in_center_ideal(det_coeff(2, 2) - det_coeff(1, 2) * det_coeff(1, 2), 8));
    CHECK(in_center_ideal(LaurentPoly::zero(2), 8));
    CHECK_THROWS_AS(in_center_ideal(T(1, 0, 2).pow(9), 8), DomainError);
}

TEST_CASE("integer linear solver") {
    CHECK(solve_integer_system({{2, 0}, {0, 3}}, {4, 9}));
    CHECK_FALSE(solve_integer_system({{2}}, {3}));
    CHECK(solve_integer_system({{2, 3}}, {1}));  // gcd reaches 1
    CHECK_FALSE(solve_integer_system({{1, 1}, {1, 1}}, {0, 1}));
    CHECK(solve_integer_system({{1, 1}, {1, 1}}, {5, 5}));
}
