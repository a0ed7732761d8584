#include "monomialis/ideal.hpp"

#include <algorithm>

#include "monomialis/errors.hpp"

namespace monomialis {

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (auto& g : gens) {
    bool dominated = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(std::move(g));
  }
  return out;
}

MonomialIdeal MonomialIdeal::zero(RegistryPtr reg) { return MonomialIdeal(std::move(reg), {}); }

MonomialIdeal MonomialIdeal::unit(RegistryPtr reg) {
  Monomial one = Monomial::one(reg);
  return MonomialIdeal(std::move(reg), {std::move(one)});
}

MonomialIdeal MonomialIdeal::make(RegistryPtr reg, std::vector<Monomial> gens) {
  for (const auto& g : gens) require_same_registry(reg, g.registry());
  return MonomialIdeal(std::move(reg), minimal_generators(std::move(gens)));
}

bool MonomialIdeal::contains(const Monomial& w) const {
  require_same_registry(reg_, w.registry());
  for (const auto& g : gens_)
    if (g.divides(w)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_registry(reg_, other.reg_);
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

MonomialIdeal MonomialIdeal::plus_generator(const Monomial& g) const {
  require_same_registry(reg_, g.registry());
  for (const auto& h : gens_) {
    if (h.divides(g)) return *this;
  }
  std::vector<Monomial> out;
  out.reserve(gens_.size() + 1);
  bool placed = false;
  for (const auto& h : gens_) {
    if (g.divides(h)) continue;
    if (!placed && g < h) {
      out.push_back(g);
      placed = true;
    }
    out.push_back(h);
  }
  if (!placed) out.push_back(g);
  return MonomialIdeal(reg_, std::move(out));
}

MonomialIdeal MonomialIdeal::substitute(int var, const Monomial& target) const {
  if (var < 0 || var >= reg_->size()) throw PreconditionError("substituted variable not in registry");
  const RegistryPtr& out_reg = target.registry();
  std::vector<int> map(static_cast<std::size_t>(reg_->size()), -1);
  for (int v = 0; v < reg_->size(); ++v) {
    if (v == var) continue;
    auto idx = out_reg->index_of(reg_->name(v));
    if (!idx)
      throw PreconditionError("output registry is missing variable " + reg_->name(v));
    map[static_cast<std::size_t>(v)] = *idx;
  }
  std::vector<Monomial> images;
  images.reserve(gens_.size());
  for (const auto& g : gens_) {
    std::vector<Monomial::Exp> exps(static_cast<std::size_t>(out_reg->size()), 0);
    for (int v = 0; v < reg_->size(); ++v) {
      if (v == var) continue;
      exps[static_cast<std::size_t>(map[static_cast<std::size_t>(v)])] = g.exponent(v);
    }
    Monomial img = Monomial::from_exponents(out_reg, std::move(exps));
    const Monomial::Exp k = g.exponent(var);
    if (k > 0) img *= target.pow(k);
    images.push_back(std::move(img));
  }
  return make(out_reg, std::move(images));
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_registry(I.reg_, J.reg_);
  std::vector<Monomial> gens;
  gens.reserve(I.gens_.size() + J.gens_.size());
  gens.insert(gens.end(), I.gens_.begin(), I.gens_.end());
  gens.insert(gens.end(), J.gens_.begin(), J.gens_.end());
  return MonomialIdeal::make(I.reg_, std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_registry(I.reg_, J.reg_);
  std::vector<Monomial> gens;
  gens.reserve(I.gens_.size() * J.gens_.size());
  for (const auto& g : I.gens_)
    for (const auto& h : J.gens_) gens.push_back(g * h);
  return MonomialIdeal::make(I.reg_, std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, unsigned n) {
  if (n == 0) return MonomialIdeal::unit(I.reg_);
  // Iterated product; re-minimalization at each step keeps the intermediate
  // generator lists small.
  MonomialIdeal result = I;
  for (unsigned k = 2; k <= n; ++k) result = product(result, I);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_registry(I.reg_, J.reg_);
  std::vector<Monomial> gens;
  gens.reserve(I.gens_.size() * J.gens_.size());
  for (const auto& g : I.gens_)
    for (const auto& h : J.gens_) gens.push_back(lcm(g, h));
  return MonomialIdeal::make(I.reg_, std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& w) {
  require_same_registry(I.reg_, w.registry());
  std::vector<Monomial> gens;
  gens.reserve(I.gens_.size());
  for (const auto& g : I.gens_) gens.push_back(g.colon(w));
  return MonomialIdeal::make(I.reg_, std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_registry(I.reg_, J.reg_);
  if (J.is_zero()) throw PreconditionError("colon by the zero ideal");
  MonomialIdeal result = colon(I, J.gens_[0]);
  for (std::size_t k = 1; k < J.gens_.size(); ++k)
    result = intersect(result, colon(I, J.gens_[k]));
  return result;
}

MonomialIdeal saturate(const MonomialIdeal& I, const Monomial& w) {
  // The colon chain is increasing and stabilizes by Noetherianity; at desk
  // scale it settles within a handful of steps.
  MonomialIdeal current = I;
  for (;;) {
    MonomialIdeal next = colon(current, w);
    if (next == current) return current;
    current = std::move(next);
  }
}

std::string MonomialIdeal::packed_key() const {
  std::string key;
  key.reserve(gens_.size() * static_cast<std::size_t>(reg_->size()) * 2);
  for (const auto& g : gens_) {
    for (Monomial::Exp e : g.exponents()) {
      if (e > 0xFFFF) throw CapacityError("exponent too large for canonical key");
      key.push_back(static_cast<char>(e & 0xFF));
      key.push_back(static_cast<char>((e >> 8) & 0xFF));
    }
  }
  return key;
}

nlohmann::json MonomialIdeal::to_json() const {
  nlohmann::json j;
  j["variables"] = reg_->names();
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : gens_) gens.push_back(g.to_json());
  j["generators"] = std::move(gens);
  return j;
}

MonomialIdeal MonomialIdeal::from_json(const nlohmann::json& j) {
  RegistryPtr reg = VarRegistry::make(j.at("variables").get<std::vector<std::string>>());
  std::vector<Monomial> gens;
  for (const auto& g : j.at("generators")) gens.push_back(Monomial::from_json(reg, g));
  return make(reg, std::move(gens));
}

} // namespace monomialis
