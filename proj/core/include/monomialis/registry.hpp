#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace monomialis {

class VarRegistry;
using RegistryPtr = std::shared_ptr<const VarRegistry>;

/// Layout metadata attached to registries built for the BHH family.
/// `e == 0` means the plain layout (c-variables present); `e >= 1` means the
/// split layout in which the first c-variable was replaced by d_1..d_e.
struct BhhLayout {
  int m = 0;
  int r = 0;
  int s = 0;
  int e = 0;
};

/// An ordered, immutable set of variable names.  Monomials, ideals and primes
/// all reference one registry; indices into it are the only variable identity
/// used internally.
///
/// For BHH registries the canonical order is c_1..c_s, a_1..a_r, then x_{i,j}
/// row-major.  Column indices j wrap around modulo r, so x_{i,0} = x_{i,r}
/// and x_{i,r+1} = x_{i,1}; the wraparound lives here and nowhere else.
class VarRegistry {
public:
  static RegistryPtr make(std::vector<std::string> names);

  /// Registry for BHH(m,r,s): c-variables ("c" when s = 1, else "c1".."cs"),
  /// then "a1".."ar", then "x[i,j]" row-major.
  static RegistryPtr bhh(int m, int r, int s);

  /// Registry for the e-fold split of BHH(m,r,s): "d1".."de" in place of the
  /// first c-variable, then the remaining c's, a's and x's.
  static RegistryPtr bhh_split(int m, int r, int s, int e);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(const std::string& name) const;

  bool same_names(const VarRegistry& other) const { return names_ == other.names_; }

  bool has_layout() const { return layout_.has_value(); }
  const BhhLayout& layout() const;

  /// Wraps a column index into [1, r].  Accepts any integer, including
  /// negative offsets such as j-2.
  int wrap_col(int j) const;

  int c_var(int k) const;        // k in [1, s]; plain layout only
  int d_var(int k) const;        // k in [1, e]; split layout only
  int a_var(int j) const;        // j wrapped into [1, r]
  int x_var(int i, int j) const; // i in [1, m], j wrapped

private:
  VarRegistry(std::vector<std::string> names, std::optional<BhhLayout> layout);

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::optional<BhhLayout> layout_;
};

/// True when the two registries are the same object or structurally equal.
bool same_registry(const RegistryPtr& a, const RegistryPtr& b);

/// Throws RegistryMismatchError unless same_registry(a, b).
void require_same_registry(const RegistryPtr& a, const RegistryPtr& b);

} // namespace monomialis
