#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monomialis/bhh.hpp"
#include "monomialis/bigint.hpp"
#include "monomialis/decomposition.hpp"
#include "monomialis/homology.hpp"
#include "monomialis/ideal.hpp"

namespace monomialis {

/// Resource guards for lattice and Betti computations.
struct BettiLimits {
  std::size_t max_lattice = 20'000;
  std::size_t max_matrix_entries = 5'000'000;
};

/// The lcm lattice of an ideal: all least common multiples of generator
/// subsets, ordered by divisibility, with bottom 1.  Elements are stored in
/// canonical monomial order; the atoms are the minimal generators.
struct LcmLattice {
  RegistryPtr registry;
  std::vector<Monomial> elements;

  const Monomial& bottom() const { return elements.front(); }
  const Monomial& top() const { return elements.back(); }
};

/// Preconditions: I proper, nonzero.  Throws CapacityError past the cap.
LcmLattice lcm_lattice(const MonomialIdeal& I, const BettiLimits& limits = {});

struct BettiEntry {
  int i = 0;        // homological degree in the resolution of R/I
  Monomial degree;  // multidegree
  BigInt rank;
};

/// Multigraded Betti numbers of R/I with the derived scalars.  Over a
/// polynomial ring depth + pd equals the number of variables.
struct BettiTable {
  int num_vars = 0;
  int pd = 0;
  int depth = 0;
  std::vector<BettiEntry> entries; // sorted by (i, degree), zero ranks omitted

  BigInt total(int i) const;
  nlohmann::json to_json() const;
};

/// Exact multigraded Betti table of R/I.  Candidate multidegrees come from
/// the lcm lattice; the rank at each multidegree is the reduced rational
/// homology of the one-step-down divisor complex there, which agrees with the
/// order-complex homology of the open lattice interval below it.
///
/// Preconditions: I proper, nonzero.  Throws CapacityError past the caps.
BettiTable graded_betti(const MonomialIdeal& I, const BettiLimits& limits = {});

int depth(const MonomialIdeal& I, const BettiLimits& limits = {});
int proj_dim(const MonomialIdeal& I, const BettiLimits& limits = {});

/// True iff the maximal ideal (every registry variable) is associated to R/I.
bool depth_zero(const MonomialIdeal& I, const DecompositionLimits& limits = {});

/// Closed-form depth of the e-fold split of BHH(m,r,s) at the n-th power:
///   e-1    when n = r*u + 1 with 0 <= u <= m,
///   e      when n <= r*m + 1 and n is not 1 mod r,
///   s+e-1  when n > r*m + 1.
int depth_formula(const BHHParams& p, int e, long long n);

enum class DepthStrategy { kFormula, kBetti, kZeroDetect };

struct DepthProfileRow {
  long long n = 0;
  std::optional<int> depth;
  std::optional<bool> is_zero; // zero-detect strategy
  std::string error;           // capacity/budget annotation, empty when clean
};

struct DepthProfile {
  int m = 0, r = 0, s = 0, e = 1;
  DepthStrategy strategy = DepthStrategy::kFormula;
  std::vector<DepthProfileRow> rows;
  long long periodic_window_end = 0;  // r*m + 1
  std::vector<long long> minima;      // n = r*u + 1, u = 0..m
};

/// Per-power depth report for the e-fold split of BHH(m,r,s); capacity errors
/// are recorded per row instead of aborting the profile.
DepthProfile depth_profile(const BHHParams& p, int e, long long n_max, DepthStrategy strategy,
                           const BettiLimits& betti_limits = {},
                           const DecompositionLimits& decomposition_limits = {});

} // namespace monomialis
