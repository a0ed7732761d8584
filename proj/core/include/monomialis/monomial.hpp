#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "monomialis/registry.hpp"

namespace monomialis {

/// A monomial: one non-negative exponent per registry variable.
///
/// Values are immutable in practice (every operation returns a new value) and
/// safe to share across threads.  Exponent arithmetic is checked; overflowing
/// the 32-bit exponent type raises OverflowError instead of wrapping.
class Monomial {
public:
  using Exp = std::uint32_t;

  static Monomial one(RegistryPtr reg);
  static Monomial variable(RegistryPtr reg, int var, Exp k = 1);
  static Monomial from_exponents(RegistryPtr reg, std::vector<Exp> exps);

  const RegistryPtr& registry() const { return reg_; }
  const std::vector<Exp>& exponents() const { return exps_; }
  Exp exponent(int v) const { return exps_.at(static_cast<std::size_t>(v)); }
  std::uint64_t total_degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial& operator*=(const Monomial& rhs);
  friend Monomial operator*(Monomial lhs, const Monomial& rhs) {
    lhs *= rhs;
    return lhs;
  }
  Monomial pow(Exp k) const;

  /// True iff this divides v componentwise.
  bool divides(const Monomial& v) const;

  /// Componentwise max(exponent - w, 0); colon(u, w) * w is the least
  /// multiple of w divisible by u.
  Monomial colon(const Monomial& w) const;

  friend Monomial lcm(const Monomial& u, const Monomial& v);
  friend Monomial gcd(const Monomial& u, const Monomial& v);

  /// Canonical total order: graded-lexicographic in registry order.
  /// Returns <0, 0 or >0.
  friend int compare(const Monomial& u, const Monomial& v);

  bool operator==(const Monomial& o) const {
    return degree_ == o.degree_ && exps_ == o.exps_ && same_registry(reg_, o.reg_);
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  bool operator<(const Monomial& o) const { return compare(*this, o) < 0; }

  /// Text form: `*`-joined `name^exp` factors in registry order, "1" for the
  /// unit, e.g. "a1^4*x[1,1]*x[1,2]^2".
  std::string str() const;

  /// JSON form: object mapping variable name to positive exponent.
  nlohmann::json to_json() const;
  static Monomial from_json(RegistryPtr reg, const nlohmann::json& j);

private:
  Monomial(RegistryPtr reg, std::vector<Exp> exps);

  RegistryPtr reg_;
  std::vector<Exp> exps_;
  std::uint64_t degree_ = 0;
};

} // namespace monomialis
