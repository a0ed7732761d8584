#include "monomialis/prime.hpp"

#include <algorithm>

#include "monomialis/errors.hpp"

namespace monomialis {

MonomialPrime MonomialPrime::make(RegistryPtr reg, std::vector<int> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (int v : vars)
    if (v < 0 || v >= reg->size()) throw PreconditionError("prime variable index out of range");
  return MonomialPrime(std::move(reg), std::move(vars));
}

MonomialPrime MonomialPrime::full(RegistryPtr reg) {
  std::vector<int> vars(static_cast<std::size_t>(reg->size()));
  for (int v = 0; v < reg->size(); ++v) vars[static_cast<std::size_t>(v)] = v;
  return MonomialPrime(std::move(reg), std::move(vars));
}

bool MonomialPrime::contains(int var) const {
  return std::binary_search(vars_.begin(), vars_.end(), var);
}

std::vector<std::string> MonomialPrime::var_names() const {
  std::vector<std::string> names;
  names.reserve(vars_.size());
  for (int v : vars_) names.push_back(reg_->name(v));
  return names;
}

MonomialIdeal MonomialPrime::to_ideal() const {
  std::vector<Monomial> gens;
  gens.reserve(vars_.size());
  for (int v : vars_) gens.push_back(Monomial::variable(reg_, v));
  return MonomialIdeal::make(reg_, std::move(gens));
}

std::string MonomialPrime::str() const {
  std::string out = "(";
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    if (k > 0) out += ", ";
    out += reg_->name(vars_[k]);
  }
  out += ")";
  return out;
}

nlohmann::json MonomialPrime::to_json() const { return nlohmann::json(var_names()); }

} // namespace monomialis
