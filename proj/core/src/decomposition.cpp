#include "monomialis/decomposition.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <set>
#include <unordered_set>

#include "monomialis/errors.hpp"

namespace monomialis {

namespace {

// Flat ideal representation used inside the splitting recursion: generator
// exponent rows of width V, canonically sorted (degree, then lex).  One
// allocation per node instead of one per generator.
struct FlatIdeal {
  int width = 0;
  std::vector<std::uint16_t> data; // ngens * width

  std::size_t ngens() const { return data.size() / static_cast<std::size_t>(width); }
  const std::uint16_t* gen(std::size_t k) const {
    return data.data() + k * static_cast<std::size_t>(width);
  }
};

long long row_degree(const std::uint16_t* g, int width) {
  long long deg = 0;
  for (int v = 0; v < width; ++v) deg += g[v];
  return deg;
}

// (degree, lex) order matching the canonical monomial order.
bool row_less(const std::uint16_t* a, const std::uint16_t* b, int width) {
  const long long da = row_degree(a, width), db = row_degree(b, width);
  if (da != db) return da < db;
  return std::lexicographical_compare(a, a + width, b, b + width);
}

bool row_divides(const std::uint16_t* a, const std::uint16_t* b, int width) {
  for (int v = 0; v < width; ++v)
    if (a[v] > b[v]) return false;
  return true;
}

FlatIdeal flatten(const MonomialIdeal& I) {
  FlatIdeal flat;
  flat.width = I.registry()->size();
  flat.data.reserve(I.gens().size() * static_cast<std::size_t>(flat.width));
  for (const auto& g : I.gens()) {
    for (Monomial::Exp e : g.exponents()) {
      if (e > 0xFFFF) throw CapacityError("exponent too large for the decomposition engine");
      flat.data.push_back(static_cast<std::uint16_t>(e));
    }
  }
  return flat;
}

// Adds the row to the ideal, dropping rows it divides.  The caller guarantees
// no existing row divides the new one (true for both halves of a split).
FlatIdeal with_row(const FlatIdeal& flat, const std::uint16_t* row) {
  const int width = flat.width;
  FlatIdeal out;
  out.width = width;
  out.data.reserve(flat.data.size() + static_cast<std::size_t>(width));
  bool placed = false;
  for (std::size_t k = 0; k < flat.ngens(); ++k) {
    const std::uint16_t* g = flat.gen(k);
    if (row_divides(row, g, width)) continue;
    if (!placed && row_less(row, g, width)) {
      out.data.insert(out.data.end(), row, row + width);
      placed = true;
    }
    out.data.insert(out.data.end(), g, g + width);
  }
  if (!placed) out.data.insert(out.data.end(), row, row + width);
  return out;
}

// 128-bit fingerprint of the canonical byte form.  Collisions would merely
// merge two distinct subtrees; with 128 bits the probability is negligible
// against any realistic node count, and the re-intersection checks in the
// test suites exercise the end-to-end result.
struct Fingerprint {
  std::uint64_t lo = 0, hi = 0;
  bool operator==(const Fingerprint& o) const { return lo == o.lo && hi == o.hi; }
};

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& f) const { return f.lo ^ (f.hi * 0x9E3779B97F4A7C15ull); }
};

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Fingerprint fingerprint(const FlatIdeal& flat) {
  Fingerprint f{0x2545F4914F6CDD1Dull, 0x9E3779B97F4A7C15ull};
  for (std::size_t k = 0; k < flat.data.size(); ++k) {
    const std::uint64_t word = (static_cast<std::uint64_t>(flat.data[k]) << 16) | (k & 0xFFFF);
    f.lo = mix64(f.lo ^ word);
    f.hi = mix64(f.hi + word);
  }
  return f;
}

void check_deadline(const DecompositionLimits& limits, unsigned& tick) {
  if (!limits.deadline) return;
  if ((++tick & 0x3FF) != 0) return;
  if (std::chrono::steady_clock::now() > *limits.deadline)
    throw BudgetError("decomposition exceeded its time budget");
}

} // namespace

IrreducibleComponent IrreducibleComponent::make(
    RegistryPtr reg, std::vector<std::pair<int, Monomial::Exp>> powers) {
  std::sort(powers.begin(), powers.end());
  for (std::size_t k = 0; k < powers.size(); ++k) {
    if (powers[k].second == 0) throw PreconditionError("component exponents must be positive");
    if (k > 0 && powers[k].first == powers[k - 1].first)
      throw PreconditionError("duplicate variable in component");
  }
  return IrreducibleComponent(std::move(reg), std::move(powers));
}

IrreducibleComponent IrreducibleComponent::from_ideal(const MonomialIdeal& I) {
  std::vector<std::pair<int, Monomial::Exp>> powers;
  powers.reserve(I.gens().size());
  for (const auto& g : I.gens()) {
    int var = -1;
    for (int v = 0; v < I.registry()->size(); ++v) {
      if (g.exponent(v) == 0) continue;
      if (var >= 0) throw PreconditionError("generator is not a pure power");
      var = v;
    }
    if (var < 0) throw PreconditionError("unit ideal is not an irreducible component");
    powers.emplace_back(var, g.exponent(var));
  }
  return make(I.registry(), std::move(powers));
}

MonomialIdeal IrreducibleComponent::to_ideal() const {
  std::vector<Monomial> gens;
  gens.reserve(powers_.size());
  for (const auto& [var, exp] : powers_) gens.push_back(Monomial::variable(reg_, var, exp));
  return MonomialIdeal::make(reg_, std::move(gens));
}

MonomialPrime IrreducibleComponent::radical() const {
  std::vector<int> vars;
  vars.reserve(powers_.size());
  for (const auto& [var, exp] : powers_) vars.push_back(var);
  return MonomialPrime::make(reg_, std::move(vars));
}

bool IrreducibleComponent::subset_of(const IrreducibleComponent& other) const {
  auto it = other.powers_.begin();
  for (const auto& [var, exp] : powers_) {
    while (it != other.powers_.end() && it->first < var) ++it;
    if (it == other.powers_.end() || it->first != var || it->second > exp) return false;
  }
  return true;
}

nlohmann::json IrreducibleComponent::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [var, exp] : powers_) j[reg_->name(var)] = exp;
  return j;
}

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I,
                                                            const DecompositionLimits& limits) {
  if (I.is_zero() || !I.is_proper())
    throw PreconditionError("irreducible decomposition requires a proper nonzero ideal");

  const int width = I.registry()->size();
  FlatIdeal root = flatten(I);

  std::vector<FlatIdeal> stack;
  stack.push_back(std::move(root));
  std::unordered_set<Fingerprint, FingerprintHash> seen{fingerprint(stack.back())};
  std::set<std::vector<std::pair<int, Monomial::Exp>>> leaves;
  std::vector<std::uint16_t> row(static_cast<std::size_t>(width));
  unsigned tick = 0;

  while (!stack.empty()) {
    check_deadline(limits, tick);
    FlatIdeal J = std::move(stack.back());
    stack.pop_back();

    // Find the first generator with at least two variables; its first
    // variable provides the pure-power piece of the split.
    std::size_t mixed = J.ngens();
    int var = -1;
    for (std::size_t k = 0; k < J.ngens() && mixed == J.ngens(); ++k) {
      const std::uint16_t* g = J.gen(k);
      int support = 0;
      for (int v = 0; v < width; ++v) {
        if (g[v] == 0) continue;
        if (support++ == 0) var = v;
        if (support > 1) {
          mixed = k;
          break;
        }
      }
    }

    if (mixed == J.ngens()) {
      std::vector<std::pair<int, Monomial::Exp>> powers;
      for (std::size_t k = 0; k < J.ngens(); ++k) {
        const std::uint16_t* g = J.gen(k);
        for (int v = 0; v < width; ++v)
          if (g[v] > 0) powers.emplace_back(v, g[v]);
      }
      std::sort(powers.begin(), powers.end());
      leaves.insert(std::move(powers));
      continue;
    }

    const std::uint16_t* g = J.gen(mixed);
    // Pure-power branch: x_var^e.
    std::fill(row.begin(), row.end(), 0);
    row[static_cast<std::size_t>(var)] = g[var];
    FlatIdeal left = with_row(J, row.data());
    // Complement branch: g with the var coordinate removed.
    std::memcpy(row.data(), g, sizeof(std::uint16_t) * static_cast<std::size_t>(width));
    row[static_cast<std::size_t>(var)] = 0;
    FlatIdeal right = with_row(J, row.data());

    for (FlatIdeal* branch : {&left, &right}) {
      Fingerprint f = fingerprint(*branch);
      if (seen.find(f) != seen.end()) continue;
      if (seen.size() < limits.max_seen) seen.insert(f);
      stack.push_back(std::move(*branch));
    }
  }

  std::vector<IrreducibleComponent> out;
  out.reserve(leaves.size());
  for (auto& powers : leaves)
    out.push_back(IrreducibleComponent::make(I.registry(), powers));
  return out;
}

namespace {

// Saturation of I with respect to the product of the variables outside S:
// for monomial ideals this just strips the outside exponents.
MonomialIdeal localize_at(const MonomialIdeal& I, const std::vector<int>& support) {
  const RegistryPtr& reg = I.registry();
  std::vector<char> in_support(static_cast<std::size_t>(reg->size()), 0);
  for (int v : support) in_support[static_cast<std::size_t>(v)] = 1;
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) {
    std::vector<Monomial::Exp> exps(g.exponents());
    for (int v = 0; v < reg->size(); ++v)
      if (!in_support[static_cast<std::size_t>(v)]) exps[static_cast<std::size_t>(v)] = 0;
    gens.push_back(Monomial::from_exponents(reg, std::move(exps)));
  }
  return MonomialIdeal::make(reg, std::move(gens));
}

} // namespace

std::vector<IrreducibleComponent> irredundant(std::vector<IrreducibleComponent> components,
                                              const MonomialIdeal& I) {
  std::sort(components.begin(), components.end());
  components.erase(std::unique(components.begin(), components.end()), components.end());

  // A component survives in the unique irredundant decomposition exactly when
  // it marks a staircase corner of the localization at its support: the
  // monomial one step inside each of its pure powers lies outside the
  // localized ideal while every support variable pushes it in.
  std::map<std::vector<int>, MonomialIdeal> localized;
  std::vector<IrreducibleComponent> out;
  for (auto& component : components) {
    std::vector<int> support;
    support.reserve(component.powers().size());
    for (const auto& [var, exp] : component.powers()) support.push_back(var);
    auto it = localized.find(support);
    if (it == localized.end())
      it = localized.emplace(support, localize_at(I, support)).first;
    const MonomialIdeal& J = it->second;

    Monomial corner = Monomial::one(I.registry());
    for (const auto& [var, exp] : component.powers())
      if (exp > 1) corner *= Monomial::variable(I.registry(), var, exp - 1);
    if (J.contains(corner)) continue;
    bool socle = true;
    for (const auto& [var, exp] : component.powers()) {
      if (!J.contains(corner * Monomial::variable(I.registry(), var))) {
        socle = false;
        break;
      }
    }
    if (socle) out.push_back(std::move(component));
  }
  return out;
}

std::vector<IrreducibleComponent> irredundant_by_reintersection(
    std::vector<IrreducibleComponent> components) {
  std::sort(components.begin(), components.end());
  components.erase(std::unique(components.begin(), components.end()), components.end());
  if (components.size() <= 1) return components;

  // Reference filter: drop a component whenever the intersection of all the
  // others is contained in it.  Quadratic and slow; kept as the oracle the
  // fast corner criterion is tested against.
  const RegistryPtr& reg = components.front().registry();
  std::vector<MonomialIdeal> suffix(components.size() + 1, MonomialIdeal::unit(reg));
  for (std::size_t i = components.size(); i-- > 0;)
    suffix[i] = intersect(components[i].to_ideal(), suffix[i + 1]);

  MonomialIdeal prefix = MonomialIdeal::unit(reg);
  std::vector<IrreducibleComponent> out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    MonomialIdeal others = intersect(prefix, suffix[i + 1]);
    MonomialIdeal q = components[i].to_ideal();
    if (q.contains(others)) continue;
    prefix = intersect(prefix, q);
    out.push_back(std::move(components[i]));
  }
  return out;
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I,
                                             const DecompositionLimits& limits) {
  std::vector<IrreducibleComponent> components =
      irredundant(irreducible_decomposition(I, limits), I);
  std::vector<MonomialPrime> primes;
  primes.reserve(components.size());
  for (const auto& c : components) primes.push_back(c.radical());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

bool verify_witness(const MonomialIdeal& I, const Monomial& w, const MonomialPrime& P) {
  return colon(I, w) == P.to_ideal();
}

nlohmann::json decomposition_to_json(const MonomialIdeal& I,
                                     const std::vector<IrreducibleComponent>& components,
                                     const std::vector<MonomialPrime>& primes) {
  nlohmann::json j;
  j["ideal"] = I.to_json();
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : components) comps.push_back(c.to_json());
  j["components"] = std::move(comps);
  j["associated_primes"] = primes_to_json(primes);
  return j;
}

nlohmann::json primes_to_json(const std::vector<MonomialPrime>& primes) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : primes) arr.push_back(p.var_names());
  return arr;
}

} // namespace monomialis
