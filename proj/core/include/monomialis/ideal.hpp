#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "monomialis/monomial.hpp"

namespace monomialis {

/// A monomial ideal in canonical form: the unique minimal generating set,
/// sorted by the canonical monomial order.  Two ideals are equal exactly when
/// their canonical generator lists are equal.
///
/// The zero ideal is the empty list; the unit ideal is the single generator 1.
/// All operations are pure functions of their operands.
class MonomialIdeal {
public:
  static MonomialIdeal zero(RegistryPtr reg);
  static MonomialIdeal unit(RegistryPtr reg);

  /// Canonicalizes: drops generators divisible by another, sorts, dedups.
  static MonomialIdeal make(RegistryPtr reg, std::vector<Monomial> gens);

  const RegistryPtr& registry() const { return reg_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t num_min_gens() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_proper() const { return !is_unit(); }

  /// Membership: some generator divides w.
  bool contains(const Monomial& w) const;
  /// Containment: every generator of other lies in this ideal.
  bool contains(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal& o) const {
    return gens_ == o.gens_ && same_registry(reg_, o.reg_);
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

  /// Sum with a single extra generator, in canonical form.  Returns *this
  /// unchanged when g already lies in the ideal.
  MonomialIdeal plus_generator(const Monomial& g) const;

  /// Replaces every occurrence of `var` by `target` (a monomial on the output
  /// registry); all other variables are mapped by name.  Re-minimalized.
  MonomialIdeal substitute(int var, const Monomial& target) const;

  friend MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
  friend MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
  /// n = 0 yields the unit ideal by convention.
  friend MonomialIdeal power(const MonomialIdeal& I, unsigned n);
  friend MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
  friend MonomialIdeal colon(const MonomialIdeal& I, const Monomial& w);
  friend MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);
  /// Iterates colon by w until the chain stabilizes.
  friend MonomialIdeal saturate(const MonomialIdeal& I, const Monomial& w);

  /// Canonical byte string; equal ideals on the same registry produce equal
  /// keys.  Used for memoization and cache addressing.
  std::string packed_key() const;

  /// { "variables": [names...], "generators": [monomial JSON...] }
  nlohmann::json to_json() const;
  static MonomialIdeal from_json(const nlohmann::json& j);

private:
  MonomialIdeal(RegistryPtr reg, std::vector<Monomial> gens)
      : reg_(std::move(reg)), gens_(std::move(gens)) {}

  RegistryPtr reg_;
  std::vector<Monomial> gens_;
};

/// Canonicalizes a generator list: sorts by the canonical order and drops
/// every monomial divisible by an earlier survivor.
std::vector<Monomial> minimal_generators(std::vector<Monomial> gens);

} // namespace monomialis
