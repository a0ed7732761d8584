#include "monomialis/betti.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "monomialis/errors.hpp"

namespace monomialis {

LcmLattice lcm_lattice(const MonomialIdeal& I, const BettiLimits& limits) {
  if (I.is_zero() || !I.is_proper())
    throw PreconditionError("lcm lattice requires a proper nonzero ideal");
  std::set<Monomial> elements{Monomial::one(I.registry())};
  for (const auto& g : I.gens()) {
    std::vector<Monomial> fresh;
    fresh.reserve(elements.size());
    for (const auto& e : elements) {
      Monomial joined = lcm(g, e);
      if (elements.find(joined) == elements.end()) fresh.push_back(std::move(joined));
    }
    for (auto& f : fresh) elements.insert(std::move(f));
    if (elements.size() > limits.max_lattice)
      throw CapacityError("lcm lattice exceeds the element cap");
  }
  return LcmLattice{I.registry(), std::vector<Monomial>(elements.begin(), elements.end())};
}

BigInt BettiTable::total(int i) const {
  BigInt sum = 0;
  for (const auto& e : entries)
    if (e.i == i) sum += e.rank;
  return sum;
}

nlohmann::json BettiTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : entries)
    rows.push_back(nlohmann::json{{"i", e.i}, {"degree", e.degree.to_json()}, {"rank", e.rank.str()}});
  return nlohmann::json{{"pd", pd}, {"depth", depth}, {"betti", std::move(rows)}};
}

BettiTable graded_betti(const MonomialIdeal& I, const BettiLimits& limits) {
  if (I.is_zero() || !I.is_proper())
    throw PreconditionError("graded Betti numbers require a proper nonzero ideal");
  const RegistryPtr& reg = I.registry();
  const LcmLattice lattice = lcm_lattice(I, limits);
  const HomologyLimits hlim{std::size_t{1} << 22, limits.max_matrix_entries};

  BettiTable table;
  table.num_vars = reg->size();
  table.entries.push_back(BettiEntry{0, Monomial::one(reg), 1});

  for (const auto& degree : lattice.elements) {
    if (degree.is_one()) continue;

    std::vector<int> support;
    for (int v = 0; v < reg->size(); ++v)
      if (degree.exponent(v) > 0) support.push_back(v);
    if (support.size() > 22) throw CapacityError("multidegree support too large");
    const std::uint32_t full = (std::uint32_t{1} << support.size()) - 1;

    // Faces: variable subsets S of the support with x^degree / x^S still in
    // the ideal.  The face set is downward closed, and its reduced homology
    // in dimension i-2 is the Betti number of R/I at (i, degree).
    std::vector<char> member(static_cast<std::size_t>(full) + 1, 0);
    std::vector<std::uint32_t> faces;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      if (mask != 0) {
        const std::uint32_t parent = mask & (mask - 1);
        if (!member[parent]) continue;
      }
      std::vector<Monomial::Exp> exps(degree.exponents());
      for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
        const int pos = std::countr_zero(bits);
        --exps[static_cast<std::size_t>(support[static_cast<std::size_t>(pos)])];
      }
      if (!I.contains(Monomial::from_exponents(reg, std::move(exps)))) continue;
      member[mask] = 1;
      faces.push_back(mask);
    }

    const auto ranks = reduced_homology_of_masks(static_cast<int>(support.size()), faces, hlim);
    for (std::size_t k = 0; k < ranks.size(); ++k) {
      if (ranks[k] == 0) continue;
      // Entry k is homology in dimension k-1, contributing at i = k+1.
      table.entries.push_back(BettiEntry{static_cast<int>(k) + 1, degree, ranks[k]});
    }
  }

  std::sort(table.entries.begin(), table.entries.end(), [](const BettiEntry& a, const BettiEntry& b) {
    if (a.i != b.i) return a.i < b.i;
    return a.degree < b.degree;
  });
  table.pd = table.entries.back().i; // entries are sorted by homological degree
  table.depth = table.num_vars - table.pd;
  return table;
}

int depth(const MonomialIdeal& I, const BettiLimits& limits) {
  return graded_betti(I, limits).depth;
}

int proj_dim(const MonomialIdeal& I, const BettiLimits& limits) {
  return graded_betti(I, limits).pd;
}

bool depth_zero(const MonomialIdeal& I, const DecompositionLimits& limits) {
  const MonomialPrime maximal = MonomialPrime::full(I.registry());
  for (const auto& prime : associated_primes(I, limits))
    if (prime == maximal) return true;
  return false;
}

int depth_formula(const BHHParams& p, int e, long long n) {
  if (e < 1 || n < 1) throw PreconditionError("depth formula requires e >= 1 and n >= 1");
  if ((n - 1) % p.r == 0 && (n - 1) / p.r <= p.m) return e - 1;
  if (n <= static_cast<long long>(p.r) * p.m + 1) return e;
  return p.s + e - 1;
}

DepthProfile depth_profile(const BHHParams& p, int e, long long n_max, DepthStrategy strategy,
                           const BettiLimits& betti_limits,
                           const DecompositionLimits& decomposition_limits) {
  if (e < 1 || n_max < 1) throw PreconditionError("depth profile requires e >= 1 and n_max >= 1");
  DepthProfile profile;
  profile.m = p.m;
  profile.r = p.r;
  profile.s = p.s;
  profile.e = e;
  profile.strategy = strategy;
  profile.periodic_window_end = static_cast<long long>(p.r) * p.m + 1;
  for (int u = 0; u <= p.m; ++u)
    profile.minima.push_back(static_cast<long long>(p.r) * u + 1);

  std::optional<MonomialIdeal> base;
  std::optional<MonomialIdeal> current;
  if (strategy != DepthStrategy::kFormula) {
    base = e == 1 ? build_bhh(p) : split_ideal(p, e);
    current = *base;
  }

  for (long long n = 1; n <= n_max; ++n) {
    DepthProfileRow row;
    row.n = n;
    if (strategy != DepthStrategy::kFormula && n > 1) current = product(*current, *base);
    try {
      switch (strategy) {
        case DepthStrategy::kFormula:
          row.depth = depth_formula(p, e, n);
          break;
        case DepthStrategy::kBetti:
          row.depth = depth(*current, betti_limits);
          break;
        case DepthStrategy::kZeroDetect:
          row.is_zero = depth_zero(*current, decomposition_limits);
          break;
      }
    } catch (const CapacityError& err) {
      row.error = err.what();
    } catch (const BudgetError& err) {
      row.error = err.what();
    }
    profile.rows.push_back(std::move(row));
  }
  return profile;
}

} // namespace monomialis
