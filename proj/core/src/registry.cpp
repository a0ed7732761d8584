#include "monomialis/registry.hpp"

#include "monomialis/errors.hpp"

namespace monomialis {

namespace {

std::string c_name(int s, int k) {
  // When s = 1 the single c-variable is written plain "c".
  return s == 1 ? std::string("c") : "c" + std::to_string(k);
}

std::string x_name(int i, int j) {
  return "x[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

void check_bhh_params(int m, int r, int s) {
  if (r < 2 || m < 1 || s < 1)
    throw PreconditionError("BHH parameters require r >= 2 and m, s >= 1");
}

} // namespace

VarRegistry::VarRegistry(std::vector<std::string> names, std::optional<BhhLayout> layout)
    : names_(std::move(names)), layout_(layout) {
  index_.reserve(names_.size());
  for (int v = 0; v < static_cast<int>(names_.size()); ++v) {
    auto [it, inserted] = index_.emplace(names_[static_cast<std::size_t>(v)], v);
    if (!inserted) throw PreconditionError("duplicate variable name: " + names_[static_cast<std::size_t>(v)]);
  }
}

RegistryPtr VarRegistry::make(std::vector<std::string> names) {
  return RegistryPtr(new VarRegistry(std::move(names), std::nullopt));
}

RegistryPtr VarRegistry::bhh(int m, int r, int s) {
  check_bhh_params(m, r, s);
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(s + r + m * r));
  for (int k = 1; k <= s; ++k) names.push_back(c_name(s, k));
  for (int j = 1; j <= r; ++j) names.push_back("a" + std::to_string(j));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= r; ++j) names.push_back(x_name(i, j));
  return RegistryPtr(new VarRegistry(std::move(names), BhhLayout{m, r, s, 0}));
}

RegistryPtr VarRegistry::bhh_split(int m, int r, int s, int e) {
  check_bhh_params(m, r, s);
  if (e < 1) throw PreconditionError("split arity e must be >= 1");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(e + (s - 1) + r + m * r));
  for (int k = 1; k <= e; ++k) names.push_back("d" + std::to_string(k));
  for (int k = 2; k <= s; ++k) names.push_back(c_name(s, k));
  for (int j = 1; j <= r; ++j) names.push_back("a" + std::to_string(j));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= r; ++j) names.push_back(x_name(i, j));
  return RegistryPtr(new VarRegistry(std::move(names), BhhLayout{m, r, s, e}));
}

std::optional<int> VarRegistry::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const BhhLayout& VarRegistry::layout() const {
  if (!layout_) throw PreconditionError("registry has no BHH layout");
  return *layout_;
}

int VarRegistry::wrap_col(int j) const {
  const int r = layout().r;
  int w = (j - 1) % r;
  if (w < 0) w += r;
  return w + 1;
}

int VarRegistry::c_var(int k) const {
  const BhhLayout& l = layout();
  if (l.e != 0) throw PreconditionError("split registry has no c-variables at index 1");
  if (k < 1 || k > l.s) throw PreconditionError("c-variable index out of range");
  return k - 1;
}

int VarRegistry::d_var(int k) const {
  const BhhLayout& l = layout();
  if (l.e == 0) throw PreconditionError("plain registry has no d-variables");
  if (k < 1 || k > l.e) throw PreconditionError("d-variable index out of range");
  return k - 1;
}

int VarRegistry::a_var(int j) const {
  const BhhLayout& l = layout();
  const int base = l.e == 0 ? l.s : l.e + (l.s - 1);
  return base + wrap_col(j) - 1;
}

int VarRegistry::x_var(int i, int j) const {
  const BhhLayout& l = layout();
  if (i < 1 || i > l.m) throw PreconditionError("row index out of range");
  const int base = (l.e == 0 ? l.s : l.e + (l.s - 1)) + l.r;
  return base + (i - 1) * l.r + wrap_col(j) - 1;
}

bool same_registry(const RegistryPtr& a, const RegistryPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_names(*b);
}

void require_same_registry(const RegistryPtr& a, const RegistryPtr& b) {
  if (!same_registry(a, b)) throw RegistryMismatchError();
}

} // namespace monomialis
