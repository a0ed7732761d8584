// Property suites over randomized inputs and small parameter grids.
// Runs as one command: monomialis_properties

#include <algorithm>

#include "doctest.h"

#include "helpers.hpp"
#include "monomialis/bhh.hpp"
#include "monomialis/decomposition.hpp"
#include "monomialis/ggood.hpp"

using namespace monomialis;

TEST_CASE("colon/containment adjunction") {
  test::Rng rng(112233);
  auto reg = VarRegistry::make({"x", "y", "z", "w"});
  for (int trial = 0; trial < 120; ++trial) {
    const auto I = test::random_ideal(rng, reg, 5, 4);
    const auto w = test::random_monomial(rng, reg, 3);
    const auto v = test::random_monomial(rng, reg, 3);
    const auto u = test::random_monomial(rng, reg, 6);
    CHECK(colon(I, w).contains(u) == I.contains(u * w));
    CHECK(colon(colon(I, w), v) == colon(I, w * v));
  }
}

TEST_CASE("decomposition re-intersection") {
  test::Rng rng(445566);
  auto reg = VarRegistry::make({"x", "y", "z"});
  for (int trial = 0; trial < 40; ++trial) {
    const auto I = test::random_ideal(rng, reg, 6, 5);
    if (I.is_zero() || I.is_unit()) continue;
    const auto comps = irredundant(irreducible_decomposition(I), I);
    MonomialIdeal meet = MonomialIdeal::unit(reg);
    for (const auto& c : comps) meet = intersect(meet, c.to_ideal());
    CHECK(meet == I);
  }
  for (auto [m, r] : {std::pair{1, 2}, {2, 2}, {1, 3}}) {
    const auto B = build_bhh(BHHParams::make(m, r, 1));
    for (unsigned n = 1; n <= 3; ++n) {
      const auto In = power(B, n);
      const auto comps = irredundant(irreducible_decomposition(In), In);
      MonomialIdeal meet = MonomialIdeal::unit(In.registry());
      for (const auto& c : comps) meet = intersect(meet, c.to_ideal());
      CAPTURE(m);
      CAPTURE(r);
      CAPTURE(n);
      CHECK(meet == In);
    }
  }
}

TEST_CASE("spreading correspondence across the parameter grid") {
  for (int m = 1; m <= 2; ++m)
    for (int r = 2; r <= 3; ++r)
      for (int s = 2; s <= 3; ++s)
        for (unsigned n = 1; n <= 3; ++n) {
          CAPTURE(m);
          CAPTURE(r);
          CAPTURE(s);
          CAPTURE(n);
          const auto report = spread_compare(BHHParams::make(m, r, s), n);
          CHECK(report.counts_equal);
          CHECK(report.cfree_identical);
          CHECK(report.c_correspondence);
        }
}

TEST_CASE("persistence of c-free associated primes") {
  for (auto [m, r] : {std::pair{1, 2}, {2, 2}, {1, 3}}) {
    const auto p = BHHParams::make(m, r, 1);
    const auto B = build_bhh(p);
    std::vector<MonomialPrime> previous;
    MonomialIdeal Bn = B;
    for (unsigned n = 1; n <= 4; ++n) {
      if (n > 1) Bn = product(Bn, B);
      const auto current = associated_primes(Bn);
      for (const auto& prime : previous) {
        if (prime.contains(p.registry->c_var(1))) continue;
        CAPTURE(m);
        CAPTURE(r);
        CAPTURE(n);
        CHECK(std::find(current.begin(), current.end(), prime) != current.end());
      }
      previous = current;
    }
  }
}

TEST_CASE("g-good enumeration count equals the Lucas power") {
  for (int r = 1; r <= 6; ++r)
    for (int m = 1; m <= 4; ++m) {
      CAPTURE(r);
      CAPTURE(m);
      CHECK(BigInt(enumerate_ggood(m, r, false).size()) ==
            pow(lucas(r), static_cast<unsigned>(m)));
      // every enumerated pattern encodes a g-good prime
      if (r >= 2 && m <= 2) {
        const auto p = BHHParams::make(m, r, 1);
        for (const auto& pattern : enumerate_ggood(m, r, false))
          CHECK(is_ggood(pattern.to_prime(p), p));
      }
    }
}

TEST_CASE("depth witness consequences at small powers") {
  for (int s = 1; s <= 2; ++s) {
    const auto p = BHHParams::make(1, 2, s);
    const auto& reg = p.registry;
    const auto B = build_bhh(p);
    const auto b0x = sum(build_b0(p), build_x(p));
    for (long long n = 2; n <= 3; ++n) {
      const long long e_n = 5 * n - 5;
      Monomial w = Monomial::variable(reg, reg->a_var(1), static_cast<Monomial::Exp>(e_n));
      for (int j = 1; j <= 2; ++j) w *= Monomial::variable(reg, reg->a_var(j), 4);
      for (int j = 1; j <= 2; ++j) w *= Monomial::variable(reg, reg->x_var(1, j));
      const auto Bn = power(B, static_cast<unsigned>(n));
      const auto target = power(b0x, static_cast<unsigned>(n));
      CAPTURE(s);
      CAPTURE(n);
      CHECK(!Bn.contains(w));
      for (int j = 1; j <= 2; ++j) {
        CHECK(target.contains(w * Monomial::variable(reg, reg->a_var(j))));
        CHECK(target.contains(w * Monomial::variable(reg, reg->x_var(1, j))));
      }
      for (int k = 1; k <= s; ++k)
        CHECK(!Bn.contains(w * Monomial::variable(reg, reg->c_var(k))));
    }
  }
}
