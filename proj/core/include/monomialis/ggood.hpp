#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monomialis/bhh.hpp"
#include "monomialis/bigint.hpp"
#include "monomialis/prime.hpp"

namespace monomialis {

/// A g-good prime in pattern form: per row i the set of columns j whose
/// x_{i,j} lies in the prime (bit j-1 of rows[i-1]), plus the c-flag.  The
/// encoded prime always contains a_1..a_r.
///
/// g-goodness means no two cyclically consecutive columns are missing in any
/// row.
struct GGoodPattern {
  int m = 1;
  int r = 2;
  std::vector<std::uint32_t> rows;
  bool contains_c = false;

  bool row_full(int i) const;
  int row_size(int i) const;
  bool has_x(int i, int j) const; // j wrapped modulo r

  /// Rows with every column present.
  std::vector<int> full_rows() const;
  /// Pairs (i,j) with x_{i,j} present and row i not full.
  std::vector<std::pair<int, int>> partial_positions() const;

  MonomialPrime to_prime(const BHHParams& p) const;
  static GGoodPattern from_prime(const MonomialPrime& prime, const BHHParams& p);

  bool operator==(const GGoodPattern& o) const {
    return m == o.m && r == o.r && rows == o.rows && contains_c == o.contains_c;
  }
};

/// True iff the row subset has no two cyclically consecutive missing columns.
bool ggood_row_ok(std::uint32_t mask, int r);

/// All g-good row subsets of [r] in increasing bitmask order; r >= 1.
std::vector<std::uint32_t> ggood_row_masks(int r);

/// True iff P contains a_1..a_r and every row complement is free of
/// 2-or-longer cyclic runs.
bool is_ggood(const MonomialPrime& P, const BHHParams& p);

/// Restartable enumeration of the lucas(r)^m g-good patterns in row-major
/// order (first row varies slowest, subsets in increasing mask order).
class GGoodEnumerator {
public:
  GGoodEnumerator(int m, int r, bool with_c);
  std::optional<GGoodPattern> next();
  void reset();

private:
  int m_;
  int r_;
  bool with_c_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::size_t> odometer_;
  bool done_ = false;
};

/// Materialized enumeration; count equals lucas(r)^m.
std::vector<GGoodPattern> enumerate_ggood(int m, int r, bool with_c);

/// Lucas numbers: L_1 = 1, L_2 = 3, L_{r+2} = L_{r+1} + L_r.
BigInt lucas(int r);

/// C(a, b), zero outside 0 <= b <= a.
BigInt binomial(long long a, long long b);

/// Number of full/half-full g-good primes with c associated to the n-th
/// power, for even r:
///   sum_{i=0}^m 2^i C(m,i) [ (n-1)/r - i/2 <= min(q, m-i) ],  q = floor((n-1)/r),
/// evaluated in exact integer arithmetic.  Zero for n > 1 + r*m.  Odd r is an
/// error; the odd case follows the maximal-ideal rule n = u*r + 1 instead.
BigInt h_count(int m, int r, long long n);

/// Number of associated primes of BHH(m,r,1)^n containing c:
///   even r:  lucas(r)^m - 3^m + h_count(m,r,n)
///   odd r:   lucas(r)^m   when n = 1 mod r and n <= rm+1,  else lucas(r)^m - 1.
BigInt countc(int m, int r, long long n);

/// Total number of associated primes of BHH(m,2,s)^n (independent of s):
///   (3 - [n=1])^m + sum_{i=0}^m 2^i C(m,i) [ (n-1-i)/2 <= min(q, m-i) ] + 1,
/// q = floor((n-1)/2).
BigInt total_count_r2(int m, long long n);

/// The same count through the double-binomial form:
///   (3 - [n=1])^m + sum_l sum_{t=b(l)}^m C(m,l) C(l, l+t-m) + [n odd or n > 2m],
/// b(l) = max(n-1-l, m-l).
BigInt total_count_r2_alt(int m, long long n);

/// Evaluates both sides of the binomial identity relating the two counts and
/// returns their equality.
bool identity_holds(int m, long long n);

/// Strict local maxima of n -> total_count_r2(m, n) scanned over [1, 2m+4].
std::vector<std::pair<long long, BigInt>> maxima_profile(int m);

/// The full census of Ass(BHH(m,2,s)^n) materialized as primes: the minimal
/// prime (a_1,a_2), the scheduled full/half-full patterns with c, and the
/// g-good c-free patterns admitted at this power.
std::vector<MonomialPrime> predicted_ass_r2(int m, int s, long long n);

/// Schedule for a full/half-full pattern with c: true iff n = u*r + v + 1 for
/// some 0 <= u <= #full rows and 0 <= v <= #partial positions.
bool cfullhalf_schedule(const GGoodPattern& pattern, long long n);

/// Witness for a scheduled full/half-full pattern with c: U0 lists the full
/// rows spent as h-blocks, V0 the partial positions spent as single h's;
/// requires n = r*|U0| + |V0| + 1.  M is the exponent on the x's outside the
/// prime (default 6n+10 from witness_exponent).
Monomial witness_cfullhalf(const BHHParams& p, const GGoodPattern& pattern,
                           const std::vector<int>& U0,
                           const std::vector<std::pair<int, int>>& V0,
                           Monomial::Exp M, long long n);

/// Witness for a g-good prime with c that has x_{i0,j0-1}, x_{i0,j0} inside
/// and x_{i0,j0+1} outside; valid for every n >= 1 and requires r >= 3.
Monomial witness_otherc(const BHHParams& p, const MonomialPrime& P, int i0, int j0,
                        Monomial::Exp M, long long n);

/// Witness for a g-good prime without c at powers n >= 2: c a_1^{e_n}
/// a_1^4..a_r^4 X_P with e_n = 5n-5 for n <= 4 and 6n-9 afterwards.
Monomial witness_ggood_noc(const BHHParams& p, const MonomialPrime& P, long long n);

/// Witness for a g-good prime without c at the first power; requires a column
/// j0 such that every row misses x_{i,j0} or x_{i,j0+1}.
Monomial witness_firstpower(const BHHParams& p, const MonomialPrime& P);

/// Default "large" exponent for witness constructions: strictly beyond any
/// rewriting reach inside the n-th power.
Monomial::Exp witness_exponent(long long n);

/// A per-power count series with provenance, emitted as CSV rows
/// `m,r,s,n,count,source`.
struct CountProfile {
  int m = 1;
  int r = 2;
  int s = 1;
  std::string source; // "formula" or "oracle"
  std::vector<std::pair<long long, BigInt>> counts;

  /// First n of the maximal constant tail, when the series ends constant.
  std::optional<long long> constant_from() const;
  std::string to_csv() const;
};

} // namespace monomialis
