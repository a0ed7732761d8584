#include "monomialis/bhh.hpp"

#include <algorithm>
#include <set>

#include "monomialis/errors.hpp"

namespace monomialis {

BHHParams BHHParams::make(int m, int r, int s) {
  BHHParams p;
  p.m = m;
  p.r = r;
  p.s = s;
  p.registry = VarRegistry::bhh(m, r, s); // validates the ranges
  return p;
}

nlohmann::json BHHParams::to_json() const {
  return nlohmann::json{{"m", m}, {"r", r}, {"s", s}};
}

BHHParams BHHParams::from_json(const nlohmann::json& j) {
  return make(j.at("m").get<int>(), j.at("r").get<int>(), j.at("s").get<int>());
}

MonomialIdeal build_b0(const BHHParams& p) {
  const RegistryPtr& reg = p.registry;
  std::vector<Monomial> gens;
  gens.reserve(static_cast<std::size_t>(2 * p.r));
  for (int j = 1; j <= p.r; ++j) {
    gens.push_back(Monomial::variable(reg, reg->a_var(j), 6));
    gens.push_back(Monomial::variable(reg, reg->a_var(j), 5) *
                   Monomial::variable(reg, reg->a_var(j + 1)));
  }
  return MonomialIdeal::make(reg, std::move(gens));
}

MonomialIdeal build_bc(const BHHParams& p) {
  const RegistryPtr& reg = p.registry;
  Monomial a_block = Monomial::one(reg);
  for (int j = 1; j <= p.r; ++j) a_block *= Monomial::variable(reg, reg->a_var(j), 4);
  std::vector<Monomial> gens;
  gens.reserve(static_cast<std::size_t>(p.s));
  for (int k = 1; k <= p.s; ++k)
    gens.push_back(Monomial::variable(reg, reg->c_var(k)) * a_block);
  return MonomialIdeal::make(reg, std::move(gens));
}

MonomialIdeal build_x(const BHHParams& p) {
  const RegistryPtr& reg = p.registry;
  std::vector<Monomial> gens;
  gens.reserve(static_cast<std::size_t>(p.m * p.r));
  for (int i = 1; i <= p.m; ++i)
    for (int j = 1; j <= p.r; ++j) gens.push_back(h_generator(p, i, j));
  return MonomialIdeal::make(reg, std::move(gens));
}

MonomialIdeal build_bhh(const BHHParams& p) {
  return sum(sum(build_b0(p), build_bc(p)), build_x(p));
}

Monomial h_generator(const BHHParams& p, int i, int j) {
  const RegistryPtr& reg = p.registry;
  if (i < 1 || i > p.m) throw PreconditionError("row index out of range");
  return Monomial::variable(reg, reg->a_var(j), 4) *
         Monomial::variable(reg, reg->x_var(i, j)) *
         Monomial::variable(reg, reg->x_var(i, j + 1), 2);
}

MonomialIdeal power_via_lemma(const BHHParams& p, unsigned n) {
  if (n == 0) throw PreconditionError("power_via_lemma requires n >= 1");
  const MonomialIdeal b0 = build_b0(p);
  const MonomialIdeal bc = build_bc(p);
  const MonomialIdeal x = build_x(p);
  return sum(product(bc, power(x, n - 1)), power(sum(b0, x), n));
}

MonomialIdeal split_ideal(const BHHParams& p, int e) {
  if (e < 1) throw PreconditionError("split arity e must be >= 1");
  const RegistryPtr out = VarRegistry::bhh_split(p.m, p.r, p.s, e);
  Monomial target = Monomial::one(out);
  for (int k = 1; k <= e; ++k) target *= Monomial::variable(out, out->d_var(k));
  return build_bhh(p).substitute(p.registry->c_var(1), target);
}

namespace {

bool is_c_index(const BHHParams& p, int var) { return var < p.s; }

std::set<std::vector<std::string>> name_sets(const std::vector<MonomialPrime>& primes,
                                             bool with_c, const BHHParams& p) {
  std::set<std::vector<std::string>> out;
  for (const auto& prime : primes) {
    bool has_c = false;
    for (int v : prime.vars())
      if (is_c_index(p, v)) has_c = true;
    if (has_c != with_c) continue;
    out.insert(prime.var_names());
  }
  return out;
}

} // namespace

SpreadReport spread_compare(const BHHParams& p, unsigned n, const DecompositionLimits& limits) {
  if (p.s < 2) throw PreconditionError("spread_compare requires s >= 2");
  const BHHParams base = BHHParams::make(p.m, p.r, 1);

  const auto primes_s = associated_primes(power(build_bhh(p), n), limits);
  const auto primes_1 = associated_primes(power(build_bhh(base), n), limits);

  SpreadReport report;
  report.count_s = primes_s.size();
  report.count_one = primes_1.size();
  report.counts_equal = primes_s.size() == primes_1.size();

  const auto cfree_s = name_sets(primes_s, false, p);
  const auto cfree_1 = name_sets(primes_1, false, base);
  report.cfree_identical = cfree_s == cfree_1;
  if (!report.cfree_identical) report.mismatches.push_back("c-free prime sets differ");

  // Each c-containing prime of the s = 1 instance corresponds to one of the
  // s-variable instance with {c_1..c_s} substituted for {c}.
  std::set<std::vector<std::string>> mapped;
  for (const auto& prime : primes_1) {
    bool has_c = false;
    std::vector<std::string> names;
    for (int v : prime.vars()) {
      if (is_c_index(base, v)) {
        has_c = true;
        continue;
      }
      names.push_back(base.registry->name(v));
    }
    if (!has_c) continue;
    std::vector<std::string> image;
    for (int k = 1; k <= p.s; ++k) image.push_back(p.registry->name(p.registry->c_var(k)));
    image.insert(image.end(), names.begin(), names.end());
    std::sort(image.begin(), image.end());
    mapped.insert(std::move(image));
  }
  std::set<std::vector<std::string>> actual;
  for (const auto& s : name_sets(primes_s, true, p)) {
    std::vector<std::string> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    actual.insert(std::move(sorted));
  }
  report.c_correspondence = mapped == actual;
  if (!report.c_correspondence) report.mismatches.push_back("c-containing primes do not correspond");
  return report;
}

} // namespace monomialis
