#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "monomialis/decomposition.hpp"
#include "monomialis/ideal.hpp"

namespace monomialis {

/// Parameters of the Bandari-Herzog-Hibi family BHH(m,r,s) together with the
/// derived variable registry (c's, a's, x's in canonical order).
struct BHHParams {
  int m = 1;
  int r = 2;
  int s = 1;
  RegistryPtr registry;

  /// Validates r >= 2 and m, s >= 1.
  static BHHParams make(int m, int r, int s);

  nlohmann::json to_json() const;
  static BHHParams from_json(const nlohmann::json& j);
};

/// B_0: the pure a-power relations a_j^6 and a_j^5 a_{j+1}, 2r generators.
MonomialIdeal build_b0(const BHHParams& p);

/// B_c: each c-variable times a_1^4 ... a_r^4, s generators.
MonomialIdeal build_bc(const BHHParams& p);

/// X: the generators h_{i,j} = a_j^4 x_{i,j} x_{i,j+1}^2, m*r generators with
/// cyclic column index.
MonomialIdeal build_x(const BHHParams& p);

/// BHH(m,r,s) = B_0 + B_c + X.
MonomialIdeal build_bhh(const BHHParams& p);

/// h_{i,j} = a_j^4 x_{i,j} x_{i,j+1}^2; j is wrapped modulo r.
Monomial h_generator(const BHHParams& p, int i, int j);

/// B^n computed as B_c X^{n-1} + (B_0 + X)^n; agrees with power(build_bhh, n).
MonomialIdeal power_via_lemma(const BHHParams& p, unsigned n);

/// The e-fold split: the first c-variable becomes the product d_1 ... d_e on
/// the extended registry.  e = 1 only renames it to d_1.
MonomialIdeal split_ideal(const BHHParams& p, int e);

/// Result of comparing Ass(BHH(m,r,s)^n) with Ass(BHH(m,r,1)^n).
struct SpreadReport {
  std::size_t count_s = 0;       // primes of the s-variable instance
  std::size_t count_one = 0;     // primes of the s = 1 instance
  bool counts_equal = false;
  bool cfree_identical = false;  // c-free primes agree as variable-name sets
  bool c_correspondence = false; // c <-> {c_1..c_s} swap is a bijection
  std::vector<std::string> mismatches;

  bool ok() const { return counts_equal && cfree_identical && c_correspondence; }
};

/// Decomposes both instances and checks the one-to-one correspondence of
/// associated primes.  Requires s >= 2.
SpreadReport spread_compare(const BHHParams& p, unsigned n,
                            const DecompositionLimits& limits = {});

} // namespace monomialis
