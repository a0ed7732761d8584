#include "monomialis/monomial.hpp"

#include <algorithm>
#include <limits>

#include "monomialis/errors.hpp"

namespace monomialis {

namespace {

Monomial::Exp checked_add(Monomial::Exp a, Monomial::Exp b) {
  if (a > std::numeric_limits<Monomial::Exp>::max() - b)
    throw OverflowError("exponent addition overflow");
  return a + b;
}

Monomial::Exp checked_mul(Monomial::Exp a, Monomial::Exp k) {
  if (k != 0 && a > std::numeric_limits<Monomial::Exp>::max() / k)
    throw OverflowError("exponent multiplication overflow");
  return a * k;
}

} // namespace

Monomial::Monomial(RegistryPtr reg, std::vector<Exp> exps)
    : reg_(std::move(reg)), exps_(std::move(exps)) {
  for (Exp e : exps_) degree_ += e;
}

Monomial Monomial::one(RegistryPtr reg) {
  std::vector<Exp> exps(static_cast<std::size_t>(reg->size()), 0);
  return Monomial(std::move(reg), std::move(exps));
}

Monomial Monomial::variable(RegistryPtr reg, int var, Exp k) {
  if (var < 0 || var >= reg->size()) throw PreconditionError("variable index out of range");
  std::vector<Exp> exps(static_cast<std::size_t>(reg->size()), 0);
  exps[static_cast<std::size_t>(var)] = k;
  return Monomial(std::move(reg), std::move(exps));
}

Monomial Monomial::from_exponents(RegistryPtr reg, std::vector<Exp> exps) {
  if (static_cast<int>(exps.size()) != reg->size())
    throw PreconditionError("exponent vector length does not match registry");
  return Monomial(std::move(reg), std::move(exps));
}

Monomial& Monomial::operator*=(const Monomial& rhs) {
  require_same_registry(reg_, rhs.reg_);
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] = checked_add(exps_[i], rhs.exps_[i]);
  degree_ += rhs.degree_;
  return *this;
}

Monomial Monomial::pow(Exp k) const {
  std::vector<Exp> exps(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps[i] = checked_mul(exps_[i], k);
  return Monomial(reg_, std::move(exps));
}

bool Monomial::divides(const Monomial& v) const {
  require_same_registry(reg_, v.reg_);
  if (degree_ > v.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > v.exps_[i]) return false;
  return true;
}

Monomial Monomial::colon(const Monomial& w) const {
  require_same_registry(reg_, w.reg_);
  std::vector<Exp> exps(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    exps[i] = exps_[i] > w.exps_[i] ? exps_[i] - w.exps_[i] : 0;
  return Monomial(reg_, std::move(exps));
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  require_same_registry(u.reg_, v.reg_);
  std::vector<Monomial::Exp> exps(u.exps_.size());
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::max(u.exps_[i], v.exps_[i]);
  return Monomial(u.reg_, std::move(exps));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  require_same_registry(u.reg_, v.reg_);
  std::vector<Monomial::Exp> exps(u.exps_.size());
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::min(u.exps_[i], v.exps_[i]);
  return Monomial(u.reg_, std::move(exps));
}

int compare(const Monomial& u, const Monomial& v) {
  require_same_registry(u.reg_, v.reg_);
  if (u.degree_ != v.degree_) return u.degree_ < v.degree_ ? -1 : 1;
  for (std::size_t i = 0; i < u.exps_.size(); ++i)
    if (u.exps_[i] != v.exps_[i]) return u.exps_[i] < v.exps_[i] ? -1 : 1;
  return 0;
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::string out;
  for (int v = 0; v < reg_->size(); ++v) {
    const Exp e = exps_[static_cast<std::size_t>(v)];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += reg_->name(v);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

nlohmann::json Monomial::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (int v = 0; v < reg_->size(); ++v) {
    const Exp e = exps_[static_cast<std::size_t>(v)];
    if (e > 0) j[reg_->name(v)] = e;
  }
  return j;
}

Monomial Monomial::from_json(RegistryPtr reg, const nlohmann::json& j) {
  std::vector<Exp> exps(static_cast<std::size_t>(reg->size()), 0);
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto idx = reg->index_of(it.key());
    if (!idx) throw PreconditionError("unknown variable in monomial JSON: " + it.key());
    exps[static_cast<std::size_t>(*idx)] = it.value().get<Exp>();
  }
  return Monomial(std::move(reg), std::move(exps));
}

} // namespace monomialis
