#pragma once

#include <cstdint>
#include <vector>

#include "monomialis/bigint.hpp"

namespace monomialis {

/// Resource guards for homology computations.
struct HomologyLimits {
  std::size_t max_faces = std::size_t{1} << 22;
  std::size_t max_matrix_entries = 5'000'000;
};

/// A finite abstract simplicial complex given by facets (or any face list;
/// the downward closure is taken).  An empty facet list denotes the complex
/// whose only face is the empty face.
struct SimplicialComplex {
  int n_vertices = 0;
  std::vector<std::vector<int>> facets;

  static SimplicialComplex from_facets(int n_vertices, std::vector<std::vector<int>> facets);
};

/// Ranks of the reduced homology over the rationals, from boundary-matrix
/// ranks computed by exact fraction-free integer elimination.  Entry k is the
/// rank of H-tilde in dimension k-1, so entry 0 is the (-1)-dimensional rank
/// (1 for the empty complex, 0 otherwise).
std::vector<long long> reduced_homology_ranks(const SimplicialComplex& complex,
                                              const HomologyLimits& limits = {});

/// Rank of an integer matrix by Bareiss fraction-free elimination.
long long matrix_rank_exact(std::vector<std::vector<BigInt>> matrix);

/// Reduced homology ranks of a complex given as bitmask faces over at most 31
/// vertices, grouped internally by dimension.  Faces must be downward closed
/// and include the empty mask.
std::vector<long long> reduced_homology_of_masks(int n_vertices,
                                                 const std::vector<std::uint32_t>& faces,
                                                 const HomologyLimits& limits = {});

} // namespace monomialis
