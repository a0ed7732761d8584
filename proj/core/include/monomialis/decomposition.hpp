#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include <json.hpp>

#include "monomialis/ideal.hpp"
#include "monomialis/prime.hpp"

namespace monomialis {

/// Resource guards for the decomposition recursion.  The deadline is
/// cooperative; when it passes, BudgetError is thrown.  max_seen bounds only
/// the memo table, not correctness.
struct DecompositionLimits {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::size_t max_seen = 1u << 22;
};

/// An irreducible monomial ideal: generated by pure variable powers,
/// represented as a sorted (variable, exponent) list.
class IrreducibleComponent {
public:
  static IrreducibleComponent make(RegistryPtr reg,
                                   std::vector<std::pair<int, Monomial::Exp>> powers);

  /// Reads the component off an ideal whose generators are pure powers.
  static IrreducibleComponent from_ideal(const MonomialIdeal& I);

  const RegistryPtr& registry() const { return reg_; }
  const std::vector<std::pair<int, Monomial::Exp>>& powers() const { return powers_; }

  MonomialIdeal to_ideal() const;
  /// The variable-subset prime on the component's support.
  MonomialPrime radical() const;

  /// Ideal containment this <= other, decided componentwise on exponents.
  bool subset_of(const IrreducibleComponent& other) const;

  bool operator==(const IrreducibleComponent& o) const { return powers_ == o.powers_; }
  bool operator<(const IrreducibleComponent& o) const { return powers_ < o.powers_; }

  nlohmann::json to_json() const; // { var: exp, ... }

private:
  IrreducibleComponent(RegistryPtr reg, std::vector<std::pair<int, Monomial::Exp>> powers)
      : reg_(std::move(reg)), powers_(std::move(powers)) {}

  RegistryPtr reg_;
  std::vector<std::pair<int, Monomial::Exp>> powers_;
};

/// Splits I into irreducible components whose intersection equals I.
/// Deterministic: the splitting rule always factors the first non-pure-power
/// generator at its first variable, and the output is sorted.  The result may
/// contain redundant components; see irredundant().
///
/// Preconditions: I proper and nonzero.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I,
                                                            const DecompositionLimits& limits = {});

/// Filters the list down to the unique irredundant decomposition of I (the
/// components must intersect to I).  A component survives iff it marks a
/// staircase corner of the localization of I at its support; this matches the
/// one-left-out reference filter and is far cheaper.
std::vector<IrreducibleComponent> irredundant(std::vector<IrreducibleComponent> components,
                                              const MonomialIdeal& I);

/// Reference irredundancy filter by one-left-out re-intersection; quadratic.
/// Used to cross-check irredundant() in the test suites.
std::vector<IrreducibleComponent> irredundant_by_reintersection(
    std::vector<IrreducibleComponent> components);

/// Ass(R/I): the radicals of an irredundant irreducible decomposition,
/// sorted, without duplicates.
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I,
                                             const DecompositionLimits& limits = {});

/// True iff I : w equals the ideal generated by P's variables, certifying
/// that P is associated to R/I with witness w.
bool verify_witness(const MonomialIdeal& I, const Monomial& w, const MonomialPrime& P);

/// { "ideal": ..., "components": [...], "associated_primes": [[names]...] }
nlohmann::json decomposition_to_json(const MonomialIdeal& I,
                                     const std::vector<IrreducibleComponent>& components,
                                     const std::vector<MonomialPrime>& primes);

/// JSON for a plain associated-prime set: array of arrays of variable names.
nlohmann::json primes_to_json(const std::vector<MonomialPrime>& primes);

} // namespace monomialis
