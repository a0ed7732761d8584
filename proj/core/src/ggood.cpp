#include "monomialis/ggood.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "monomialis/errors.hpp"

namespace monomialis {

namespace {

int wrap(int j, int r) {
  int w = (j - 1) % r;
  if (w < 0) w += r;
  return w + 1;
}

BigInt pow_int(BigInt base, int exp) {
  BigInt out = 1;
  for (int k = 0; k < exp; ++k) out *= base;
  return out;
}

void check_mn(int m, long long n) {
  if (m < 1 || n < 1) throw PreconditionError("m and n must be >= 1");
}

} // namespace

bool GGoodPattern::row_full(int i) const {
  return rows.at(static_cast<std::size_t>(i - 1)) == (std::uint32_t{1} << r) - 1;
}

int GGoodPattern::row_size(int i) const {
  return std::popcount(rows.at(static_cast<std::size_t>(i - 1)));
}

bool GGoodPattern::has_x(int i, int j) const {
  return (rows.at(static_cast<std::size_t>(i - 1)) >> (wrap(j, r) - 1)) & 1u;
}

std::vector<int> GGoodPattern::full_rows() const {
  std::vector<int> out;
  for (int i = 1; i <= m; ++i)
    if (row_full(i)) out.push_back(i);
  return out;
}

std::vector<std::pair<int, int>> GGoodPattern::partial_positions() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= m; ++i) {
    if (row_full(i)) continue;
    for (int j = 1; j <= r; ++j)
      if (has_x(i, j)) out.emplace_back(i, j);
  }
  return out;
}

MonomialPrime GGoodPattern::to_prime(const BHHParams& p) const {
  if (p.m != m || p.r != r) throw PreconditionError("pattern shape does not match parameters");
  const RegistryPtr& reg = p.registry;
  std::vector<int> vars;
  if (contains_c)
    for (int k = 1; k <= p.s; ++k) vars.push_back(reg->c_var(k));
  for (int j = 1; j <= r; ++j) vars.push_back(reg->a_var(j));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= r; ++j)
      if (has_x(i, j)) vars.push_back(reg->x_var(i, j));
  return MonomialPrime::make(reg, std::move(vars));
}

GGoodPattern GGoodPattern::from_prime(const MonomialPrime& prime, const BHHParams& p) {
  const RegistryPtr& reg = p.registry;
  require_same_registry(prime.registry(), reg);
  for (int j = 1; j <= p.r; ++j)
    if (!prime.contains(reg->a_var(j)))
      throw PreconditionError("prime does not contain every a-variable");
  GGoodPattern pattern;
  pattern.m = p.m;
  pattern.r = p.r;
  pattern.contains_c = prime.contains(reg->c_var(1));
  pattern.rows.assign(static_cast<std::size_t>(p.m), 0);
  for (int i = 1; i <= p.m; ++i)
    for (int j = 1; j <= p.r; ++j)
      if (prime.contains(reg->x_var(i, j)))
        pattern.rows[static_cast<std::size_t>(i - 1)] |= std::uint32_t{1} << (j - 1);
  return pattern;
}

bool ggood_row_ok(std::uint32_t mask, int r) {
  for (int j = 0; j < r; ++j) {
    const bool here = (mask >> j) & 1u;
    const bool next = (mask >> ((j + 1) % r)) & 1u;
    if (!here && !next) return false;
  }
  return true;
}

std::vector<std::uint32_t> ggood_row_masks(int r) {
  if (r < 1 || r > 30) throw PreconditionError("row length out of range");
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << r); ++mask)
    if (ggood_row_ok(mask, r)) out.push_back(mask);
  return out;
}

bool is_ggood(const MonomialPrime& P, const BHHParams& p) {
  const RegistryPtr& reg = p.registry;
  for (int j = 1; j <= p.r; ++j)
    if (!P.contains(reg->a_var(j))) return false;
  for (int i = 1; i <= p.m; ++i) {
    std::uint32_t mask = 0;
    for (int j = 1; j <= p.r; ++j)
      if (P.contains(reg->x_var(i, j))) mask |= std::uint32_t{1} << (j - 1);
    if (!ggood_row_ok(mask, p.r)) return false;
  }
  return true;
}

GGoodEnumerator::GGoodEnumerator(int m, int r, bool with_c)
    : m_(m), r_(r), with_c_(with_c), masks_(ggood_row_masks(r)),
      odometer_(static_cast<std::size_t>(m), 0) {
  if (m < 1) throw PreconditionError("m must be >= 1");
}

void GGoodEnumerator::reset() {
  std::fill(odometer_.begin(), odometer_.end(), 0);
  done_ = false;
}

std::optional<GGoodPattern> GGoodEnumerator::next() {
  if (done_) return std::nullopt;
  GGoodPattern pattern;
  pattern.m = m_;
  pattern.r = r_;
  pattern.contains_c = with_c_;
  pattern.rows.reserve(odometer_.size());
  for (std::size_t i = 0; i < odometer_.size(); ++i) pattern.rows.push_back(masks_[odometer_[i]]);
  // Row-major: the last row spins fastest.
  for (std::size_t i = odometer_.size(); i-- > 0;) {
    if (++odometer_[i] < masks_.size()) return pattern;
    odometer_[i] = 0;
    if (i == 0) done_ = true;
  }
  return pattern;
}

std::vector<GGoodPattern> enumerate_ggood(int m, int r, bool with_c) {
  GGoodEnumerator en(m, r, with_c);
  std::vector<GGoodPattern> out;
  while (auto pattern = en.next()) out.push_back(std::move(*pattern));
  return out;
}

BigInt lucas(int r) {
  if (r < 1) throw PreconditionError("Lucas numbers are defined for r >= 1");
  if (r == 1) return 1;
  BigInt prev = 1, cur = 3; // L_1, L_2
  for (int k = 3; k <= r; ++k) {
    BigInt next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt out = 1;
  for (long long k = 1; k <= b; ++k) {
    out *= a - b + k;
    out /= k;
  }
  return out;
}

BigInt h_count(int m, int r, long long n) {
  check_mn(m, n);
  if (r < 2) throw PreconditionError("r must be >= 2");
  if (r % 2 != 0)
    throw PreconditionError(
        "h_count is defined for even r; for odd r only the maximal ideal qualifies, at n = u*r + 1");
  if (n > 1 + static_cast<long long>(r) * m) return 0;
  const long long q = (n - 1) / r;
  BigInt total = 0;
  for (int i = 0; i <= m; ++i) {
    // (n-1)/r - i/2 <= min(q, m-i), scaled by 2r to stay in integers.
    const long long lhs = 2 * (n - 1) - static_cast<long long>(i) * r;
    const long long rhs = 2 * static_cast<long long>(r) * std::min<long long>(q, m - i);
    if (lhs <= rhs) total += pow_int(2, i) * binomial(m, i);
  }
  return total;
}

BigInt countc(int m, int r, long long n) {
  check_mn(m, n);
  if (r < 2) throw PreconditionError("r must be >= 2");
  const BigInt all = pow_int(lucas(r), m);
  if (r % 2 == 0) return all - pow_int(3, m) + h_count(m, r, n);
  if (n % r == 1 && n <= static_cast<long long>(r) * m + 1) return all;
  return all - 1;
}

BigInt total_count_r2(int m, long long n) {
  check_mn(m, n);
  const long long q = (n - 1) / 2;
  BigInt mid = 0;
  for (int i = 0; i <= m; ++i) {
    // (n-1-i)/2 <= min(q, m-i), scaled by 2.
    if (n - 1 - i <= 2 * std::min<long long>(q, m - i)) mid += pow_int(2, i) * binomial(m, i);
  }
  return pow_int(n == 1 ? 2 : 3, m) + mid + 1;
}

BigInt total_count_r2_alt(int m, long long n) {
  check_mn(m, n);
  BigInt mid = 0;
  for (long long l = 0; l <= m; ++l) {
    const long long b = std::max(n - 1 - l, m - l);
    for (long long t = b; t <= m; ++t) mid += binomial(m, l) * binomial(l, l + t - m);
  }
  const bool no_tail = n <= 2 * m && n % 2 == 0;
  return pow_int(n == 1 ? 2 : 3, m) + mid + (no_tail ? 0 : 1);
}

bool identity_holds(int m, long long n) {
  check_mn(m, n);
  const long long q = (n - 1) / 2;
  BigInt lhs = 0;
  for (int i = 0; i <= m; ++i)
    if (n - 1 <= std::min<long long>(2 * q + i, 2 * static_cast<long long>(m) - i))
      lhs += pow_int(2, i) * binomial(m, i);
  BigInt rhs = 0;
  for (long long l = 0; l <= m; ++l) {
    const long long b = std::max(n - 1 - l, m - l);
    for (long long t = b; t <= m; ++t) rhs += binomial(m, l) * binomial(l, l + t - m);
  }
  if (n <= 2 * m && n % 2 == 0) rhs -= 1;
  return lhs == rhs;
}

std::vector<std::pair<long long, BigInt>> maxima_profile(int m) {
  if (m < 1) throw PreconditionError("m must be >= 1");
  const long long last = 2 * static_cast<long long>(m) + 4;
  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(last));
  for (long long n = 1; n <= last; ++n) values.push_back(total_count_r2(m, n));
  std::vector<std::pair<long long, BigInt>> maxima;
  for (long long n = 1; n <= last; ++n) {
    const BigInt& v = values[static_cast<std::size_t>(n - 1)];
    const bool left = n == 1 || v > values[static_cast<std::size_t>(n - 2)];
    const bool right = n == last || v > values[static_cast<std::size_t>(n)];
    if (left && right) maxima.emplace_back(n, v);
  }
  return maxima;
}

std::vector<MonomialPrime> predicted_ass_r2(int m, int s, long long n) {
  check_mn(m, n);
  if (s < 1) throw PreconditionError("s must be >= 1");
  const BHHParams p = BHHParams::make(m, 2, s);
  const RegistryPtr& reg = p.registry;
  std::set<MonomialPrime> out;

  { // the minimal prime (a_1, a_2)
    out.insert(MonomialPrime::make(reg, {reg->a_var(1), reg->a_var(2)}));
  }

  const std::uint32_t kFull = 0b11, kHalf1 = 0b01, kHalf2 = 0b10;
  const std::uint32_t row_options[3] = {kHalf1, kHalf2, kFull};

  // Full/half-full patterns with c, admitted when n = 2u + v + 1 is feasible.
  std::vector<std::size_t> odo(static_cast<std::size_t>(m), 0);
  for (;;) {
    GGoodPattern pattern;
    pattern.m = m;
    pattern.r = 2;
    pattern.contains_c = true;
    int half = 0;
    for (std::size_t i = 0; i < odo.size(); ++i) {
      pattern.rows.push_back(row_options[odo[i]]);
      if (row_options[odo[i]] != kFull) ++half;
    }
    if (cfullhalf_schedule(pattern, n)) out.insert(pattern.to_prime(p));

    std::size_t i = odo.size();
    for (; i-- > 0;) {
      if (++odo[i] < 3) break;
      odo[i] = 0;
      if (i == 0) {
        i = SIZE_MAX;
        break;
      }
    }
    if (i == SIZE_MAX) break;
  }

  // c-free g-good primes.
  for (auto& pattern : enumerate_ggood(m, 2, false)) {
    if (n == 1) {
      // First power: only patterns with no full row qualify.
      if (!pattern.full_rows().empty()) continue;
    }
    out.insert(pattern.to_prime(p));
  }

  return std::vector<MonomialPrime>(out.begin(), out.end());
}

namespace {

void check_fullhalf_pattern(const GGoodPattern& pattern) {
  if (!pattern.contains_c)
    throw PreconditionError("full/half-full schedule applies to patterns containing c");
  for (int i = 1; i <= pattern.m; ++i) {
    if (pattern.row_full(i)) continue;
    if (pattern.r % 2 != 0 || pattern.row_size(i) * 2 != pattern.r ||
        !ggood_row_ok(pattern.rows[static_cast<std::size_t>(i - 1)], pattern.r))
      throw PreconditionError("pattern rows must be full, or exactly half-full with even r");
  }
}

} // namespace

bool cfullhalf_schedule(const GGoodPattern& pattern, long long n) {
  check_fullhalf_pattern(pattern);
  const long long u_max = static_cast<long long>(pattern.full_rows().size());
  const long long v_max = static_cast<long long>(pattern.partial_positions().size());
  for (long long u = 0; u <= u_max; ++u) {
    const long long v = n - 1 - u * pattern.r;
    if (v >= 0 && v <= v_max) return true;
  }
  return false;
}

Monomial::Exp witness_exponent(long long n) {
  return static_cast<Monomial::Exp>(6 * n + 10);
}

Monomial witness_cfullhalf(const BHHParams& p, const GGoodPattern& pattern,
                           const std::vector<int>& U0,
                           const std::vector<std::pair<int, int>>& V0,
                           Monomial::Exp M, long long n) {
  check_fullhalf_pattern(pattern);
  if (p.m != pattern.m || p.r != pattern.r)
    throw PreconditionError("pattern shape does not match parameters");
  for (int i : U0)
    if (!pattern.row_full(i)) throw PreconditionError("U0 must consist of full rows");
  const auto positions = pattern.partial_positions();
  for (const auto& pos : V0)
    if (std::find(positions.begin(), positions.end(), pos) == positions.end())
      throw PreconditionError("V0 entries must be partial positions of the pattern");
  if (n != static_cast<long long>(p.r) * static_cast<long long>(U0.size()) +
               static_cast<long long>(V0.size()) + 1)
    throw PreconditionError("schedule infeasible: n != r*|U0| + |V0| + 1");

  const RegistryPtr& reg = p.registry;
  Monomial w = Monomial::one(reg);
  for (int j = 1; j <= p.r; ++j) w *= Monomial::variable(reg, reg->a_var(j), 4);
  for (int i = 1; i <= p.m; ++i) {
    if (!pattern.row_full(i)) continue;
    if (std::find(U0.begin(), U0.end(), i) != U0.end()) continue;
    for (int j = 1; j <= p.r; ++j) w *= Monomial::variable(reg, reg->x_var(i, j));
  }
  for (int i = 1; i <= p.m; ++i)
    for (int j = 1; j <= p.r; ++j)
      if (!pattern.has_x(i, j)) w *= Monomial::variable(reg, reg->x_var(i, j), M);
  for (int i : U0)
    for (int j = 1; j <= p.r; ++j) w *= h_generator(p, i, j);
  for (const auto& [i, j] : V0) w *= h_generator(p, i, j);
  return w;
}

Monomial witness_otherc(const BHHParams& p, const MonomialPrime& P, int i0, int j0,
                        Monomial::Exp M, long long n) {
  if (p.r < 3) throw PreconditionError("this witness family requires r >= 3");
  if (n < 1) throw PreconditionError("n must be >= 1");
  const GGoodPattern pattern = GGoodPattern::from_prime(P, p);
  if (!pattern.contains_c || !is_ggood(P, p))
    throw PreconditionError("prime must be g-good and contain c");
  if (!pattern.has_x(i0, j0 - 1) || !pattern.has_x(i0, j0) || pattern.has_x(i0, j0 + 1))
    throw PreconditionError("need x[i0,j0-1], x[i0,j0] inside and x[i0,j0+1] outside the prime");

  const RegistryPtr& reg = p.registry;
  const int j_before = reg->wrap_col(j0 - 1);
  Monomial w = Monomial::one(reg);
  for (int j = 1; j <= p.r; ++j) w *= Monomial::variable(reg, reg->a_var(j), 4);
  for (int i = 1; i <= p.m; ++i) {
    for (int j = 1; j <= p.r; ++j) {
      if (!pattern.has_x(i, j)) {
        w *= Monomial::variable(reg, reg->x_var(i, j), M);
        continue;
      }
      if (!pattern.has_x(i, j + 1)) continue;
      if (n >= 3 && i == i0 && j == j_before) continue;
      w *= Monomial::variable(reg, reg->x_var(i, j));
    }
  }
  return w * h_generator(p, i0, j0).pow(static_cast<Monomial::Exp>(n - 1));
}

Monomial witness_ggood_noc(const BHHParams& p, const MonomialPrime& P, long long n) {
  if (n < 2)
    throw PreconditionError("this witness family requires n >= 2; use the first-power witness");
  const GGoodPattern pattern = GGoodPattern::from_prime(P, p);
  if (pattern.contains_c || !is_ggood(P, p))
    throw PreconditionError("prime must be g-good and c-free");
  const long long e_n = n <= 4 ? 5 * n - 5 : 6 * n - 9;

  const RegistryPtr& reg = p.registry;
  Monomial w = Monomial::variable(reg, reg->c_var(1));
  w *= Monomial::variable(reg, reg->a_var(1), static_cast<Monomial::Exp>(e_n));
  for (int j = 1; j <= p.r; ++j) w *= Monomial::variable(reg, reg->a_var(j), 4);
  for (int i = 1; i <= p.m; ++i) {
    for (int j = 1; j <= p.r; ++j) {
      if (!pattern.has_x(i, j))
        w *= Monomial::variable(reg, reg->x_var(i, j), 2);
      else if (pattern.has_x(i, j + 1))
        w *= Monomial::variable(reg, reg->x_var(i, j));
    }
  }
  return w;
}

Monomial witness_firstpower(const BHHParams& p, const MonomialPrime& P) {
  const GGoodPattern pattern = GGoodPattern::from_prime(P, p);
  if (pattern.contains_c || !is_ggood(P, p))
    throw PreconditionError("prime must be g-good and c-free");

  int j0 = 0;
  for (int j = 1; j <= p.r && j0 == 0; ++j) {
    bool ok = true;
    for (int i = 1; i <= p.m; ++i)
      if (pattern.has_x(i, j) && pattern.has_x(i, j + 1)) {
        ok = false;
        break;
      }
    if (ok) j0 = j;
  }
  if (j0 == 0)
    throw PreconditionError(
        "no column j0 misses x[i,j0] or x[i,j0+1] in every row; the prime is not associated "
        "to the first power");

  // Make sure some row actually misses column j0; otherwise every row misses
  // the next column and j0+1 works in its place.
  bool some_missing = false;
  for (int i = 1; i <= p.m; ++i)
    if (!pattern.has_x(i, j0)) some_missing = true;
  const RegistryPtr& reg = p.registry;
  if (!some_missing) j0 = reg->wrap_col(j0 + 1);

  const int j_last = reg->wrap_col(j0 - 1); // plays the role of column r
  Monomial w = Monomial::variable(reg, reg->c_var(1));
  for (int j = 1; j <= p.r; ++j)
    w *= Monomial::variable(reg, reg->a_var(j), j == j_last ? 3 : 4);
  for (int i = 1; i <= p.m; ++i) {
    for (int j = 1; j <= p.r; ++j) {
      if (!pattern.has_x(i, j)) {
        w *= Monomial::variable(reg, reg->x_var(i, j), 2);
        continue;
      }
      if (j == j_last || pattern.has_x(i, j + 1)) w *= Monomial::variable(reg, reg->x_var(i, j));
    }
  }
  return w;
}

std::optional<long long> CountProfile::constant_from() const {
  if (counts.size() < 2) return std::nullopt;
  std::size_t k = counts.size() - 1;
  while (k > 0 && counts[k - 1].second == counts.back().second) --k;
  if (k == counts.size() - 1) return std::nullopt;
  return counts[k].first;
}

std::string CountProfile::to_csv() const {
  std::string out = "m,r,s,n,count,source\n";
  for (const auto& [n, count] : counts) {
    out += std::to_string(m) + "," + std::to_string(r) + "," + std::to_string(s) + "," +
           std::to_string(n) + "," + count.str() + "," + source + "\n";
  }
  return out;
}

} // namespace monomialis
