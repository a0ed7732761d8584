#include <algorithm>

#include "doctest.h"

#include "helpers.hpp"
#include "monomialis/bhh.hpp"
#include "monomialis/errors.hpp"
#include "monomialis/ideal.hpp"

using namespace monomialis;

namespace {

MonomialIdeal ideal_xy(const RegistryPtr& reg, std::vector<std::pair<int, int>> exps) {
  std::vector<Monomial> gens;
  for (auto [ex, ey] : exps) {
    gens.push_back(Monomial::variable(reg, 0, static_cast<Monomial::Exp>(ex)) *
                   Monomial::variable(reg, 1, static_cast<Monomial::Exp>(ey)));
  }
  return MonomialIdeal::make(reg, std::move(gens));
}

} // namespace

TEST_CASE("minimalize drops dominated generators") {
  auto reg = VarRegistry::make({"x", "y"});
  const auto x = Monomial::variable(reg, 0);
  CHECK(MonomialIdeal::make(reg, {x, x.pow(2)}).gens() == std::vector<Monomial>{x});

  auto breg = VarRegistry::bhh(1, 2, 1);
  const auto a1 = Monomial::variable(breg, breg->a_var(1));
  const auto a2 = Monomial::variable(breg, breg->a_var(2));
  const auto I = MonomialIdeal::make(breg, {a1.pow(6), a1.pow(5) * a2, a1.pow(6) * a2});
  CHECK(I.num_min_gens() == 2);
  CHECK(I.contains(a1.pow(6) * a2));
}

TEST_CASE("family generators are exactly the expected seven for (1,2,1)") {
  const auto p = BHHParams::make(1, 2, 1);
  const auto B = build_bhh(p);
  const auto& reg = p.registry;
  const auto c = Monomial::variable(reg, reg->c_var(1));
  const auto a1 = Monomial::variable(reg, reg->a_var(1));
  const auto a2 = Monomial::variable(reg, reg->a_var(2));
  const auto x11 = Monomial::variable(reg, reg->x_var(1, 1));
  const auto x12 = Monomial::variable(reg, reg->x_var(1, 2));

  std::vector<Monomial> expected = {
      a1.pow(6), a2.pow(6), a1.pow(5) * a2, a2.pow(5) * a1, c * a1.pow(4) * a2.pow(4),
      a1.pow(4) * x11 * x12.pow(2), a2.pow(4) * x12 * x11.pow(2)};
  CHECK(B.num_min_gens() == 7);
  for (const auto& g : expected) {
    CAPTURE(g.str());
    CHECK(std::find(B.gens().begin(), B.gens().end(), g) != B.gens().end());
  }
  // already minimal: no generator divides another
  for (const auto& g : B.gens())
    for (const auto& h : B.gens())
      if (g != h) CHECK(!g.divides(h));
}

TEST_CASE("sum, product and power basics") {
  auto reg = VarRegistry::make({"x", "y"});
  const auto x = Monomial::variable(reg, 0);
  const auto I = MonomialIdeal::make(reg, {x});
  CHECK(power(I, 1) == I);
  CHECK(power(I, 3) == MonomialIdeal::make(reg, {x.pow(3)}));
  CHECK(power(I, 0) == MonomialIdeal::unit(reg));

  const auto p = BHHParams::make(1, 2, 1);
  const auto B = build_bhh(p);
  // the square decomposes through the distinguished-generator path
  const auto direct = power(B, 2);
  const auto via = sum(product(build_bc(p), power(build_x(p), 1)),
                       power(sum(build_b0(p), build_x(p)), 2));
  CHECK(direct == via);
}

TEST_CASE("intersection matches a brute-force membership oracle") {
  auto reg = VarRegistry::make({"x", "y"});
  const auto I = ideal_xy(reg, {{2, 0}, {0, 1}}); // (x^2, y)
  const auto J = ideal_xy(reg, {{1, 0}, {0, 2}}); // (x, y^2)
  const auto K = intersect(I, J);
  CHECK(K == ideal_xy(reg, {{2, 0}, {1, 1}, {0, 2}}));
  for (const auto& mono : monomialis::test::monomials_up_to_degree(reg, 3))
    CHECK(K.contains(mono) == (I.contains(mono) && J.contains(mono)));

  CHECK(intersect(I, MonomialIdeal::unit(reg)) == I);
  CHECK(intersect(ideal_xy(reg, {{1, 0}}), ideal_xy(reg, {{0, 1}})) ==
        ideal_xy(reg, {{1, 1}}));
}

TEST_CASE("colon by monomial") {
  auto reg = VarRegistry::make({"x", "y"});
  const auto x = Monomial::variable(reg, 0);
  const auto I = ideal_xy(reg, {{2, 1}});
  CHECK(colon(I, Monomial::one(reg)) == I);
  CHECK(colon(I, x) == ideal_xy(reg, {{1, 1}}));

  // a first-power witness colon inside the family
  const auto p = BHHParams::make(1, 2, 1);
  const auto B = build_bhh(p);
  const auto& breg = p.registry;
  const auto c = Monomial::variable(breg, breg->c_var(1));
  const auto a1 = Monomial::variable(breg, breg->a_var(1));
  const auto a2 = Monomial::variable(breg, breg->a_var(2));
  const auto x11 = Monomial::variable(breg, breg->x_var(1, 1));
  const auto x12 = Monomial::variable(breg, breg->x_var(1, 2));
  const auto w = c * a1.pow(3) * a2.pow(4) * x11 * x12.pow(2);
  const auto Q = colon(B, w);
  CHECK(Q == MonomialIdeal::make(breg, {a1, a2, x11}));
  // and the maximal ideal is reached by the all-variables witness
  const auto wmax = a1.pow(4) * a2.pow(4) * x11 * x12;
  CHECK(colon(B, wmax) == MonomialIdeal::make(breg, {c, a1, a2, x11, x12}));
}

TEST_CASE("colon by ideal and saturation") {
  auto reg = VarRegistry::make({"x", "y"});
  const auto x = Monomial::variable(reg, 0);
  const auto I = ideal_xy(reg, {{2, 1}, {3, 0}});
  CHECK_THROWS_AS(colon(I, MonomialIdeal::zero(reg)), PreconditionError);
  CHECK(colon(I, MonomialIdeal::unit(reg)) == I);

  CHECK(saturate(I, Monomial::one(reg)) == I);
  CHECK(saturate(I, x) == MonomialIdeal::unit(reg));

  // saturating the family powers by the full x-row leaves the pure a-block
  const auto p = BHHParams::make(1, 2, 1);
  const auto B = build_bhh(p);
  const auto& breg = p.registry;
  const auto a_fourth = MonomialIdeal::make(
      breg, {Monomial::variable(breg, breg->a_var(1), 4), Monomial::variable(breg, breg->a_var(2), 4)});
  const auto xrow = Monomial::variable(breg, breg->x_var(1, 1)) *
                    Monomial::variable(breg, breg->x_var(1, 2));
  for (unsigned n = 1; n <= 3; ++n)
    CHECK(saturate(power(B, n), xrow) == power(a_fourth, n));
}

TEST_CASE("contains and equality") {
  const auto p = BHHParams::make(1, 2, 1);
  const auto B = build_bhh(p);
  const auto& reg = p.registry;
  CHECK(MonomialIdeal::unit(reg).contains(Monomial::one(reg)));
  CHECK(!MonomialIdeal::zero(reg).contains(Monomial::one(reg)));
  const auto a1 = Monomial::variable(reg, reg->a_var(1));
  const auto a2 = Monomial::variable(reg, reg->a_var(2));
  CHECK(B.contains(a1.pow(5) * a2));
  const auto x11 = Monomial::variable(reg, reg->x_var(1, 1));
  CHECK(power(B, 2).contains(x11 * a1.pow(4) * a2.pow(4) * h_generator(p, 1, 1)));
}

TEST_CASE("substitution") {
  const auto p = BHHParams::make(1, 2, 1);
  const auto B = build_bhh(p);
  const auto& reg = p.registry;

  // identity substitution
  CHECK(B.substitute(reg->c_var(1), Monomial::variable(reg, reg->c_var(1))) == B);

  auto out = VarRegistry::bhh_split(1, 2, 1, 2);
  const auto d1d2 = Monomial::variable(out, out->d_var(1)) * Monomial::variable(out, out->d_var(2));
  const auto Bc = build_bc(p);
  const auto image = Bc.substitute(reg->c_var(1), d1d2);
  const auto a1 = Monomial::variable(out, out->a_var(1));
  const auto a2 = Monomial::variable(out, out->a_var(2));
  CHECK(image == MonomialIdeal::make(out, {d1d2 * a1.pow(4) * a2.pow(4)}));

  auto out3 = VarRegistry::bhh_split(1, 2, 1, 3);
  auto target = Monomial::variable(out3, out3->d_var(1)) * Monomial::variable(out3, out3->d_var(2)) *
                Monomial::variable(out3, out3->d_var(3));
  CHECK(B.substitute(reg->c_var(1), target).num_min_gens() == B.num_min_gens());
}

TEST_CASE("generator counts") {
  auto reg = VarRegistry::make({"x"});
  CHECK(MonomialIdeal::unit(reg).num_min_gens() == 1);
  for (int m = 1; m <= 4; ++m)
    CHECK(build_bhh(BHHParams::make(m, 2, 1)).num_min_gens() ==
          static_cast<std::size_t>(2 * m + 5));
  // the cube stays within the pairwise-product bound C(3,2) + C(8,3)
  const auto B = build_bhh(BHHParams::make(1, 2, 1));
  CHECK(power(B, 3).num_min_gens() <= 3 + 56);
}

TEST_CASE("ideal json round trip") {
  const auto B = build_bhh(BHHParams::make(1, 2, 1));
  const auto j = B.to_json();
  CHECK(j["variables"].size() == 5);
  CHECK(j["generators"].size() == 7);
  // registry equality is structural, so the round trip lands on an equal ideal
  CHECK(MonomialIdeal::from_json(j) == B);
}

TEST_CASE("ideal algebra properties") {
  test::Rng rng(424242);
  auto reg = VarRegistry::make({"x", "y", "z"});
  for (int trial = 0; trial < 60; ++trial) {
    const auto I = test::random_ideal(rng, reg, 4, 4);
    const auto J = test::random_ideal(rng, reg, 4, 4);
    const auto w = test::random_monomial(rng, reg, 3);
    const auto v = test::random_monomial(rng, reg, 3);
    const auto u = test::random_monomial(rng, reg, 5);

    // colon/containment adjunction
    CHECK(colon(I, w).contains(u) == I.contains(u * w));
    CHECK(colon(colon(I, w), v) == colon(I, w * v));

    const auto meet = intersect(I, J);
    const auto join = sum(I, J);
    const auto prod = product(I, J);
    CHECK(I.contains(meet));
    CHECK(J.contains(meet));
    CHECK(join.contains(I));
    CHECK(join.contains(J));
    CHECK(meet.contains(prod));
  }

  const auto B = build_bhh(BHHParams::make(1, 2, 1));
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; b <= 2; ++b)
      CHECK(power(B, a + b) == product(power(B, a), power(B, b)));
}
