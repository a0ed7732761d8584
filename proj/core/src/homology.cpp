#include "monomialis/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "monomialis/errors.hpp"

namespace monomialis {

SimplicialComplex SimplicialComplex::from_facets(int n_vertices,
                                                 std::vector<std::vector<int>> facets) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
      if (v < 0 || v >= n_vertices) throw PreconditionError("facet vertex out of range");
  }
  return SimplicialComplex{n_vertices, std::move(facets)};
}

long long matrix_rank_exact(std::vector<std::vector<BigInt>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<long long>(rank);
}

namespace {

// Ranks from faces grouped by dimension; faces_by_dim[k] holds the
// (k-1)-dimensional faces, so faces_by_dim[0] is the empty face alone.
std::vector<long long> ranks_from_groups(
    const std::vector<std::vector<std::uint32_t>>& faces_by_dim, const HomologyLimits& limits) {
  const int levels = static_cast<int>(faces_by_dim.size());
  std::vector<long long> boundary_rank(static_cast<std::size_t>(levels) + 1, 0);

  for (int level = 1; level < levels; ++level) {
    const auto& lower = faces_by_dim[static_cast<std::size_t>(level - 1)];
    const auto& upper = faces_by_dim[static_cast<std::size_t>(level)];
    if (lower.empty() || upper.empty()) continue;
    if (lower.size() * upper.size() > limits.max_matrix_entries)
      throw CapacityError("boundary matrix exceeds the entry cap");
    std::map<std::uint32_t, std::size_t> row_index;
    for (std::size_t k = 0; k < lower.size(); ++k) row_index[lower[k]] = k;

    std::vector<std::vector<BigInt>> matrix(lower.size(),
                                            std::vector<BigInt>(upper.size(), 0));
    for (std::size_t col = 0; col < upper.size(); ++col) {
      const std::uint32_t face = upper[col];
      int sign = 1;
      for (std::uint32_t bits = face; bits != 0; bits &= bits - 1) {
        const std::uint32_t vertex_bit = bits & (~bits + 1);
        matrix[row_index.at(face ^ vertex_bit)][col] = sign;
        sign = -sign;
      }
    }
    boundary_rank[static_cast<std::size_t>(level)] = matrix_rank_exact(std::move(matrix));
  }

  std::vector<long long> out(static_cast<std::size_t>(levels), 0);
  for (int level = 0; level < levels; ++level) {
    const long long dim_c = static_cast<long long>(faces_by_dim[static_cast<std::size_t>(level)].size());
    out[static_cast<std::size_t>(level)] =
        dim_c - boundary_rank[static_cast<std::size_t>(level)] -
        boundary_rank[static_cast<std::size_t>(level) + 1];
  }
  return out;
}

} // namespace

std::vector<long long> reduced_homology_of_masks(int n_vertices,
                                                 const std::vector<std::uint32_t>& faces,
                                                 const HomologyLimits& limits) {
  if (n_vertices < 0 || n_vertices > 31) throw CapacityError("too many vertices for mask faces");
  std::vector<std::vector<std::uint32_t>> groups(static_cast<std::size_t>(n_vertices) + 1);
  for (std::uint32_t face : faces) groups[static_cast<std::size_t>(std::popcount(face))].push_back(face);
  while (groups.size() > 1 && groups.back().empty()) groups.pop_back();
  for (auto& g : groups) std::sort(g.begin(), g.end());
  return ranks_from_groups(groups, limits);
}

std::vector<long long> reduced_homology_ranks(const SimplicialComplex& complex,
                                              const HomologyLimits& limits) {
  if (complex.n_vertices > 31) throw CapacityError("too many vertices");
  std::set<std::uint32_t> faces{0u};
  for (const auto& facet : complex.facets) {
    if (facet.size() > 22) throw CapacityError("facet too large to expand");
    const std::size_t count = facet.size();
    for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << count); ++subset) {
      std::uint32_t mask = 0;
      for (std::size_t k = 0; k < count; ++k)
        if ((subset >> k) & 1u) mask |= std::uint32_t{1} << facet[k];
      faces.insert(mask);
      if (faces.size() > limits.max_faces) throw CapacityError("face count exceeds the cap");
    }
  }
  return reduced_homology_of_masks(complex.n_vertices,
                                   std::vector<std::uint32_t>(faces.begin(), faces.end()), limits);
}

} // namespace monomialis
