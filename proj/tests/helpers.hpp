#pragma once

#include <cstdint>
#include <vector>

#include "monomialis/ideal.hpp"
#include "monomialis/monomial.hpp"

namespace monomialis::test {

// Small deterministic generator for property-style tests.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9E3779B97F4A7C15ull) {}

  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }

  std::uint32_t below(std::uint32_t bound) { return static_cast<std::uint32_t>(next() % bound); }

private:
  std::uint64_t state_;
};

inline Monomial random_monomial(Rng& rng, const RegistryPtr& reg, Monomial::Exp max_exp) {
  std::vector<Monomial::Exp> exps(static_cast<std::size_t>(reg->size()));
  for (auto& e : exps) e = rng.below(max_exp + 1);
  return Monomial::from_exponents(reg, std::move(exps));
}

inline MonomialIdeal random_ideal(Rng& rng, const RegistryPtr& reg, std::size_t n_gens,
                                  Monomial::Exp max_exp) {
  std::vector<Monomial> gens;
  gens.reserve(n_gens);
  for (std::size_t k = 0; k < n_gens; ++k) {
    Monomial g = random_monomial(rng, reg, max_exp);
    if (g.is_one()) g = g * Monomial::variable(reg, static_cast<int>(rng.below(
                                                        static_cast<std::uint32_t>(reg->size()))));
    gens.push_back(std::move(g));
  }
  return MonomialIdeal::make(reg, std::move(gens));
}

// All monomials of total degree <= bound, for brute-force membership oracles.
inline std::vector<Monomial> monomials_up_to_degree(const RegistryPtr& reg, unsigned bound) {
  std::vector<std::vector<Monomial::Exp>> rows{{}};
  for (int v = 0; v < reg->size(); ++v) {
    std::vector<std::vector<Monomial::Exp>> next;
    for (const auto& row : rows) {
      unsigned used = 0;
      for (auto e : row) used += e;
      for (Monomial::Exp e = 0; e + used <= bound; ++e) {
        auto extended = row;
        extended.push_back(e);
        next.push_back(std::move(extended));
      }
    }
    rows = std::move(next);
  }
  std::vector<Monomial> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.push_back(Monomial::from_exponents(reg, std::move(row)));
  return out;
}

} // namespace monomialis::test
