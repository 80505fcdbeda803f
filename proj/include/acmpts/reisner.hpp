#pragma once

// Independent Cohen-Macaulay oracle. The squarefree ideal J_X is the
// Stanley-Reisner ideal of the complex whose facets are, for each p in X,
// all grid variables except a_{1,p_1}, ..., a_{n,p_n}. Reisner's criterion
// then decides CM-ness from reduced homology of links over Q.

#include <cstdint>
#include <optional>
#include <vector>

#include "acmpts/grid.hpp"
#include "acmpts/monomial.hpp"

namespace acmpts {

/// Bitmask over the vertex list of a complex (at most 64 vertices).
using Face = std::uint64_t;

inline int face_size(Face f) noexcept { return __builtin_popcountll(f); }

class SimplicialComplex {
 public:
  /// Facets are deduplicated and facets contained in others dropped. At
  /// least one facet is required; {0} is the complex {∅}.
  SimplicialComplex(std::vector<GridVariable> vertices, std::vector<Face> facets);

  /// Complex on vertices 0..vertex_count-1 with facets given as vertex lists.
  static SimplicialComplex from_facet_lists(int vertex_count,
                                            const std::vector<std::vector<int>>& facets);

  const std::vector<GridVariable>& vertices() const noexcept { return vertices_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }

  int dimension() const;
  bool is_pure() const;
  bool contains(Face face) const;
  /// All faces including ∅, sorted by size then bitmask.
  std::vector<Face> faces() const;
  /// f[k+1] = number of faces of dimension k, k = -1..dim.
  std::vector<std::int64_t> f_vector() const;

 private:
  std::vector<GridVariable> vertices_;
  std::vector<Face> facets_;
};

struct HomologyProfile {
  std::vector<std::int64_t> ranks;  // ranks[k+1] = dim H~_k(Δ; Q), k = -1..dim

  std::int64_t rank(int degree) const {
    const int idx = degree + 1;
    return idx < 0 || idx >= static_cast<int>(ranks.size()) ? 0 : ranks[idx];
  }
};

SimplicialComplex sr_complex(const PointSet& X);

/// {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}. Throws FaceNotInComplex.
SimplicialComplex link(const SimplicialComplex& complex, Face sigma);

/// Reduced Betti numbers over Q from exact boundary-matrix ranks. Throws
/// InternalInvariantViolation if they disagree with the face-count Euler
/// characteristic.
HomologyProfile homology(const SimplicialComplex& complex);

/// Sum of (-1)^k f_k over k = -1..dim.
std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex);

struct LinkFailure {
  Face face = 0;
  int degree = 0;
  std::int64_t rank = 0;
};

struct ReisnerReport {
  bool cohen_macaulay = true;
  bool pure = true;
  std::optional<LinkFailure> failure;  // first failing face in faces() order
  std::size_t links_checked = 0;
};

ReisnerReport reisner_check(const SimplicialComplex& complex);
ReisnerReport reisner_check(const PointSet& X);

/// Reisner verdict for sr_complex(X); the empty configuration counts as CM.
bool is_cm(const PointSet& X);

std::string face_to_string(const SimplicialComplex& complex, Face face);

}  // namespace acmpts
