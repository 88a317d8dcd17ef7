#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qhopf/hall.hpp>
#include <qhopf/repring.hpp>
#include <qhopf/textio.hpp>

using namespace qhopf;

namespace {

ASet aset(std::initializer_list<Snake> snakes, int l) {
    return ASet::make(std::vector<Snake>(snakes), l);
}

HallElement he(std::initializer_list<std::pair<ASet, int>> terms, int l) {
    HallElement h = HallElement::zero(l);
    for (const auto& [s, c] : terms) h.add_term(s, c);
    return h;
}

}  // namespace

TEST_CASE("products over the infinite linear quiver") {
    ASet f0 = f_gen(0, 0), f1 = f_gen(1, 0);
    CHECK(hall_mul(f0, f1) == he({{aset({{0, 0}, {1, 0}}, 0), 1}}, 0));
    CHECK(hall_mul(f1, f0) ==
          he({{aset({{0, 1}}, 0), 1}, {aset({{0, 0}, {1, 0}}, 0), 1}}, 0));
    CHECK(hall_mul(f0, f0) == he({{aset({{0, 0}, {0, 0}}, 0), 2}}, 0));
}

TEST_CASE("products over the cyclic quiver") {
    ASet f0 = f_gen(0, 1);
    CHECK(hall_mul(f0, f0) ==
          he({{aset({{0, 0}, {0, 0}}, 1), 2}, {aset({{0, 1}}, 1), 1}}, 1));
    // l=2: wrapping glue
    ASet g0 = f_gen(0, 2), g1 = f_gen(1, 2);
    CHECK(hall_mul(g0, g1) ==
          he({{aset({{0, 0}, {1, 0}}, 2), 1}, {aset({{1, 1}}, 2), 1}}, 2));
    CHECK_THROWS_AS(hall_mul(f_gen(0, 2), f_gen(0, 3)), DomainError);
}

TEST_CASE("comultiplication") {
    ASet snake = aset({{0, 2}}, 0);
    HallTensor d = hall_comul(snake);
    REQUIRE(d.size() == 2);
    CHECK(d.at({ASet::empty(0), snake}) == 1);
    CHECK(d.at({snake, ASet::empty(0)}) == 1);

    ASet twice = aset({{3, 0}, {3, 0}}, 0);
    HallTensor dd = hall_comul(twice);
    REQUIRE(dd.size() == 3);
    CHECK(dd.at({aset({{3, 0}}, 0), aset({{3, 0}}, 0)}) == 1);

    // central z_1 at l=2 is primitive
    for (const auto& [s, c] : central_z(1, 2).terms) {
        HallTensor dz = hall_comul(s);
        CHECK(dz.size() == 2);
    }
}

TEST_CASE("pairing") {
    // snakes pair as delta against products of generators
    CHECK(hall_pairing(HallElement::basis(f_gen(1, 0)), t_gen(1, 1)) == 1);
    CHECK(hall_pairing(HallElement::basis(f_gen(1, 0)), t_gen(1, 0)) == 0);
    HallElement f1f0 = hall_mul(f_gen(1, 0), f_gen(0, 0));
    CHECK(hall_pairing(f1f0, t_gen(2, 1)) == 1);
    CHECK(hall_pairing(HallElement::basis(ASet::empty(0)), LaurentPoly::unit()) == 1);
    CHECK_THROWS_AS(hall_pairing(HallElement::basis(f_gen(0, 2)), t_gen(1, 0)), DomainError);
    // duality with the restriction operator
    for (int m : {-1, 0, 1, 2}) {
        LaurentPoly T = t_gen(2, 1) * t_gen(1, 0);
        HallElement g = HallElement::basis(f_gen(0, 0));
        CHECK(hall_pairing(hall_mul(f_gen(0, 0), f_gen(m, 0)), T) ==
              hall_pairing(g, res(T, {m})));
    }
}

TEST_CASE("central elements") {
    CHECK(central_z(1, 2) == he({{aset({{0, 1}}, 2), 1}, {aset({{1, 1}}, 2), 1}}, 2));
    CHECK(central_p(1, 2) == central_z(1, 2));
    ASet AA = aset({{0, 1}, {0, 1}}, 2), AB = aset({{0, 1}, {1, 1}}, 2),
         BB = aset({{1, 1}, {1, 1}}, 2);
    CHECK(central_p(2, 2) == he({{AA, 1}, {AB, 1}, {BB, 1}}, 2));
    // 2 p_2 = z_1^2 - z_2
    HallElement z1 = central_z(1, 2);
    CHECK(central_p(2, 2).scaled(2) == hall_mul(z1, z1) - central_z(2, 2));
}

TEST_CASE("unwinding") {
    HallElement f = HallElement::basis(f_gen(0, 2));
    HallElement w = unwind(f, -3, 3);
    CHECK(w == he({{aset({{-2, 0}}, 0), 1}, {aset({{0, 0}}, 0), 1}, {aset({{2, 0}}, 0), 1}}, 0));

    // compatible with direct sums when the snakes do not collide
    HallElement k = HallElement::basis(f_gen(0, 2)), l = HallElement::basis(f_gen(1, 2));
    HallElement kl = HallElement::basis(aset({{0, 0}, {1, 0}}, 2));
    HallElement sum = HallElement::zero(0);
    for (const auto& [sk, ck] : unwind(k, -3, 3).terms)
        for (const auto& [sl, cl] : unwind(l, -3, 3).terms) {
            std::vector<Snake> merged = sk.snakes;
            merged.insert(merged.end(), sl.snakes.begin(), sl.snakes.end());
            sum.add_term(ASet::make(merged, 0), ck * cl);
        }
    CHECK(unwind(kl, -3, 3) == sum);

    // adjunction against the spectral specialization
    HallElement x = hall_mul(f_gen(0, 2), f_gen(1, 2));
    auto [lo, hi] = unwind_safe_window(x, -3, 3);
    HallElement wx = unwind(x, lo, hi);
    for (const Monomial& tm :
         {Monomial::var({Family::T, 2, 1}), Monomial::var({Family::T, 1, 0}) * Monomial::var({Family::T, 1, 1}),
          Monomial::var({Family::T, 1, -2}) * Monomial::var({Family::T, 1, 3})}) {
        LaurentPoly T = LaurentPoly::from_monomial(tm, 1, 0);
        CHECK(hall_pairing(wx, T) == hall_pairing(x, specialize_l(T, 2)));
    }
}

TEST_CASE("counting agrees with the dual route") {
    for (int l : {0, 2}) {
        std::vector<ASet> sets;
        for (int d = 1; d <= 3; ++d)
            for (const ASet& s : enumerate_asets(l, d, -1, 1)) sets.push_back(s);
        for (const ASet& K : sets)
            for (const ASet& L : sets) {
                if (K.total_degree() + L.total_degree() > 3) continue;
                CHECK(hall_mul(K, L) == hall_mul_dual(K, L));
            }
    }
}

TEST_CASE("text format") {
    ASet s = aset({{0, 1}, {1, 0}}, 0);
    CHECK(print_aset(s) == "{(0:1),(1:0)}");
    CHECK(parse_aset("{(0:1),(1:0)}", 0) == s);
    CHECK(parse_aset("{}", 0) == ASet::empty(0));
    HallElement h = he({{s, -2}, {ASet::empty(0), 1}}, 0);
    CHECK(parse_hall(print_hall(h), 0) == h);
    CHECK_THROWS_AS(parse_aset("{(0:1)", 0), ParseError);
}
