#pragma once

#include <vector>

#include <json.hpp>

#include "monomialis/ideal.hpp"

namespace monomialis {

/// A monomial prime: the ideal generated by a subset of the registry
/// variables.  Canonical representation is the sorted index list.
class MonomialPrime {
public:
  static MonomialPrime make(RegistryPtr reg, std::vector<int> vars);

  /// The prime generated by every registry variable (the maximal ideal).
  static MonomialPrime full(RegistryPtr reg);

  const RegistryPtr& registry() const { return reg_; }
  const std::vector<int>& vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  bool contains(int var) const;
  bool is_full() const { return static_cast<int>(vars_.size()) == reg_->size(); }

  std::vector<std::string> var_names() const;
  MonomialIdeal to_ideal() const;

  bool operator==(const MonomialPrime& o) const {
    return vars_ == o.vars_ && same_registry(reg_, o.reg_);
  }
  bool operator!=(const MonomialPrime& o) const { return !(*this == o); }
  bool operator<(const MonomialPrime& o) const { return vars_ < o.vars_; }

  std::string str() const;
  nlohmann::json to_json() const; // array of variable names

private:
  MonomialPrime(RegistryPtr reg, std::vector<int> vars)
      : reg_(std::move(reg)), vars_(std::move(vars)) {}

  RegistryPtr reg_;
  std::vector<int> vars_;
};

} // namespace monomialis
