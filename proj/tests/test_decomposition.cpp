#include <algorithm>

#include "doctest.h"

#include "helpers.hpp"
#include "monomialis/bhh.hpp"
#include "monomialis/decomposition.hpp"
#include "monomialis/errors.hpp"
#include "monomialis/ggood.hpp"

using namespace monomialis;

namespace {

MonomialIdeal intersect_all(const std::vector<IrreducibleComponent>& components,
                            const RegistryPtr& reg) {
  MonomialIdeal out = MonomialIdeal::unit(reg);
  for (const auto& c : components) out = intersect(out, c.to_ideal());
  return out;
}

bool has_prime(const std::vector<MonomialPrime>& primes, const MonomialPrime& p) {
  return std::find(primes.begin(), primes.end(), p) != primes.end();
}

} // namespace

TEST_CASE("decomposition of textbook ideals") {
  auto reg = VarRegistry::make({"x", "y"});
  const auto x = Monomial::variable(reg, 0);
  const auto y = Monomial::variable(reg, 1);

  SUBCASE("already irreducible") {
    const auto I = MonomialIdeal::make(reg, {x.pow(2), y});
    const auto comps = irreducible_decomposition(I);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].to_ideal() == I);
  }
  SUBCASE("a single product generator splits into the variables") {
    const auto I = MonomialIdeal::make(reg, {x * y});
    const auto comps = irreducible_decomposition(I);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].to_ideal() == MonomialIdeal::make(reg, {x}));
    CHECK(comps[1].to_ideal() == MonomialIdeal::make(reg, {y}));
  }
  SUBCASE("staircase with two corners") {
    const auto I = MonomialIdeal::make(reg, {x.pow(2), x * y, y.pow(3)});
    auto comps = irredundant(irreducible_decomposition(I), I);
    REQUIRE(comps.size() == 2);
    CHECK(intersect_all(comps, reg) == I);
    CHECK(comps[0].to_ideal() == MonomialIdeal::make(reg, {x, y.pow(3)}));
    CHECK(comps[1].to_ideal() == MonomialIdeal::make(reg, {x.pow(2), y}));
  }
  SUBCASE("unit and zero ideals are rejected") {
    CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::unit(reg)), PreconditionError);
    CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::zero(reg)), PreconditionError);
  }
}

TEST_CASE("irredundant filtering") {
  auto reg = VarRegistry::make({"x", "y"});
  const auto x = Monomial::variable(reg, 0);
  const auto y = Monomial::variable(reg, 1);
  const auto cx = IrreducibleComponent::make(reg, {{0, 1}});
  SUBCASE("single component survives") {
    const auto I = MonomialIdeal::make(reg, {x});
    CHECK(irredundant({cx}, I).size() == 1);
  }
  SUBCASE("duplicates collapse") {
    const auto I = MonomialIdeal::make(reg, {x});
    CHECK(irredundant({cx, cx}, I).size() == 1);
  }
  SUBCASE("components absorbed by the rest are dropped") {
    const auto I = MonomialIdeal::make(reg, {x * y, x.pow(2)});
    const auto c1 = IrreducibleComponent::make(reg, {{0, 1}});          // (x)
    const auto c2 = IrreducibleComponent::make(reg, {{0, 2}, {1, 1}});  // (x^2, y)
    const auto c3 = IrreducibleComponent::make(reg, {{1, 1}});          // (y): redundant here
    CHECK(intersect_all({c1, c2}, reg) == I);
    auto filtered = irredundant({c1, c2, c3}, I);
    REQUIRE(filtered.size() == 2);
    CHECK(intersect_all(filtered, reg) == I);
  }
}

TEST_CASE("corner criterion agrees with the one-left-out reference filter") {
  test::Rng rng(777);
  auto reg = VarRegistry::make({"x", "y", "z"});
  int nontrivial = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto I = test::random_ideal(rng, reg, 5, 4);
    if (I.is_zero() || I.is_unit()) continue;
    auto comps = irreducible_decomposition(I);
    auto fast = irredundant(comps, I);
    auto slow = irredundant_by_reintersection(comps);
    CHECK(fast == slow);
    if (comps.size() != fast.size()) ++nontrivial;
  }
  CHECK(nontrivial > 0);

  const auto B = build_bhh(BHHParams::make(1, 2, 1));
  for (unsigned n = 1; n <= 3; ++n) {
    auto In = power(B, n);
    auto comps = irreducible_decomposition(In);
    CHECK(irredundant(comps, In) == irredundant_by_reintersection(comps));
  }
}

TEST_CASE("re-intersection recovers the ideal") {
  test::Rng rng(31337);
  auto reg = VarRegistry::make({"x", "y", "z"});
  for (int trial = 0; trial < 25; ++trial) {
    auto I = test::random_ideal(rng, reg, 5, 5);
    if (I.is_zero() || I.is_unit()) continue;
    auto comps = irredundant(irreducible_decomposition(I), I);
    CHECK(intersect_all(comps, reg) == I);
  }
  const auto B = build_bhh(BHHParams::make(1, 2, 1));
  for (unsigned n = 1; n <= 4; ++n) {
    auto In = power(B, n);
    auto comps = irredundant(irreducible_decomposition(In), In);
    CHECK(intersect_all(comps, In.registry()) == In);
  }
}

TEST_CASE("associated primes of simple ideals") {
  auto reg = VarRegistry::make({"x", "y"});
  const auto x = Monomial::variable(reg, 0);
  const auto primes = associated_primes(MonomialIdeal::make(reg, {x.pow(2)}));
  REQUIRE(primes.size() == 1);
  CHECK(primes[0] == MonomialPrime::make(reg, {0}));
}

TEST_CASE("associated primes of the family match the counting formulas") {
  const auto p = BHHParams::make(1, 2, 1);
  const auto B = build_bhh(p);

  auto count_c = [&](const std::vector<MonomialPrime>& primes) {
    int with_c = 0;
    for (const auto& prime : primes)
      if (prime.contains(p.registry->c_var(1))) ++with_c;
    return with_c;
  };

  const auto first = associated_primes(B);
  CHECK(first.size() == 6);
  CHECK(count_c(first) == 3);

  const auto fourth = associated_primes(power(B, 4));
  CHECK(count_c(fourth) == 0);

  // the minimal prime over the a-block is associated to every power
  const auto minimal = MonomialPrime::make(p.registry, {p.registry->a_var(1), p.registry->a_var(2)});
  for (unsigned n = 1; n <= 4; ++n)
    CHECK(has_prime(associated_primes(power(B, n)), minimal));
}

TEST_CASE("necessity filters on the oracle output") {
  for (auto [m, r] : {std::pair{1, 2}, {2, 2}, {1, 3}}) {
    const auto p = BHHParams::make(m, r, 1);
    const auto B = build_bhh(p);
    for (unsigned n = 1; n <= 3; ++n) {
      for (const auto& prime : associated_primes(power(B, n))) {
        // every associated prime contains the full a-block
        for (int j = 1; j <= r; ++j) CHECK(prime.contains(p.registry->a_var(j)));
        // primes containing c are g-good
        if (prime.contains(p.registry->c_var(1))) CHECK(is_ggood(prime, p));
      }
    }
  }
}

TEST_CASE("persistence of c-free associated primes") {
  const auto p = BHHParams::make(1, 2, 1);
  const auto B = build_bhh(p);
  std::vector<MonomialPrime> previous;
  for (unsigned n = 1; n <= 4; ++n) {
    const auto current = associated_primes(power(B, n));
    for (const auto& prime : previous)
      if (!prime.contains(p.registry->c_var(1))) CHECK(has_prime(current, prime));
    previous = current;
  }
}

TEST_CASE("witness verification") {
  auto reg = VarRegistry::make({"x", "y"});
  const auto x = Monomial::variable(reg, 0);
  const auto I = MonomialIdeal::make(reg, {x.pow(2)});
  CHECK(verify_witness(I, x, MonomialPrime::make(reg, {0})));
  CHECK(!verify_witness(I, x.pow(2), MonomialPrime::make(reg, {0})));

  const auto p = BHHParams::make(1, 2, 1);
  const auto B = build_bhh(p);
  // the first-power witness of a half-row prime certifies it
  GGoodPattern half{1, 2, {0b01u}, false};
  const auto P = half.to_prime(p);
  CHECK(verify_witness(B, witness_firstpower(p, P), P));
  // the maximal ideal is not associated to the fourth power: no witness works
  GGoodPattern all{1, 2, {0b11u}, true};
  const auto maximal = all.to_prime(p);
  const auto w = witness_cfullhalf(p, all, {}, {}, witness_exponent(1), 1);
  CHECK(verify_witness(B, w, maximal));
  CHECK(!verify_witness(power(B, 4), w, maximal));
}

TEST_CASE("spreading correspondence for small instances") {
  SUBCASE("counts equal for (1,2,2) at the first two powers") {
    const auto report1 = spread_compare(BHHParams::make(1, 2, 2), 1);
    CHECK(report1.count_s == 6);
    CHECK(report1.count_one == 6);
    CHECK(report1.ok());
    const auto report2 = spread_compare(BHHParams::make(1, 2, 2), 2);
    CHECK(report2.ok());
  }
  SUBCASE("c-free primes agree verbatim for (1,2,3) squared") {
    const auto report = spread_compare(BHHParams::make(1, 2, 3), 2);
    CHECK(report.cfree_identical);
    CHECK(report.ok());
  }
  SUBCASE("s = 1 is rejected") {
    CHECK_THROWS_AS(spread_compare(BHHParams::make(1, 2, 1), 1), PreconditionError);
  }
}

TEST_CASE("decomposition json shape") {
  auto reg = VarRegistry::make({"x", "y"});
  const auto x = Monomial::variable(reg, 0);
  const auto y = Monomial::variable(reg, 1);
  const auto I = MonomialIdeal::make(reg, {x * y});
  const auto comps = irredundant(irreducible_decomposition(I), I);
  const auto primes = associated_primes(I);
  const auto j = decomposition_to_json(I, comps, primes);
  CHECK(j["components"].size() == 2);
  CHECK(j["associated_primes"].size() == 2);
  CHECK(j["ideal"]["generators"].size() == 1);
}

TEST_CASE("budget deadline aborts long decompositions") {
  const auto B = build_bhh(BHHParams::make(2, 2, 1));
  DecompositionLimits limits;
  limits.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK_THROWS_AS(associated_primes(power(B, 4), limits), BudgetError);
}
