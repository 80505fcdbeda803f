#include "acmpts/reisner.hpp"

#include <algorithm>

#include "acmpts/error.hpp"
#include "acmpts/exact_rank.hpp"

namespace acmpts {
namespace {

std::vector<Face> maximal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> out;
  for (Face f : faces) {
    const bool covered = std::any_of(faces.begin(), faces.end(), [f](Face g) {
      return g != f && (f & g) == f;
    });
    if (!covered) out.push_back(f);
  }
  return out;
}

// Faces of each dimension, sorted; index k+1 holds dimension k.
std::vector<std::vector<Face>> faces_by_dimension(const SimplicialComplex& complex) {
  std::vector<std::vector<Face>> by_dim(complex.dimension() + 2);
  for (Face f : complex.faces()) by_dim[face_size(f)].push_back(f);
  return by_dim;
}

// Rank of the boundary map C_k -> C_{k-1}.
std::int64_t boundary_rank(const std::vector<Face>& lower, const std::vector<Face>& upper) {
  if (lower.empty() || upper.empty()) return 0;
  IntMatrix m(lower.size(), upper.size());
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const Face f = upper[c];
    int position = 0;
    for (Face rest = f; rest; rest &= rest - 1) {
      const Face bit = rest & (~rest + 1);
      const auto it = std::lower_bound(lower.begin(), lower.end(), f & ~bit);
      m(static_cast<std::size_t>(it - lower.begin()), c) = position % 2 == 0 ? 1 : -1;
      ++position;
    }
  }
  return static_cast<std::int64_t>(exact_rank(m));
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<GridVariable> vertices, std::vector<Face> facets)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() > 64) throw Error(ErrorCode::TooLarge, "more than 64 vertices");
  if (facets.empty()) throw Error(ErrorCode::EmptyConfiguration, "complex needs a facet");
  const Face all = vertices_.size() == 64 ? ~Face{0} : (Face{1} << vertices_.size()) - 1;
  for (Face f : facets) {
    if (f & ~all) throw Error(ErrorCode::FaceNotInComplex, "facet uses an unknown vertex");
  }
  facets_ = maximal_faces(std::move(facets));
}

SimplicialComplex SimplicialComplex::from_facet_lists(int vertex_count,
                                                      const std::vector<std::vector<int>>& facets) {
  std::vector<GridVariable> vertices;
  for (int v = 0; v < vertex_count; ++v) vertices.push_back({1, v + 1});
  std::vector<Face> masks;
  for (const auto& facet : facets) {
    Face f = 0;
    for (int v : facet) {
      if (v < 0 || v >= vertex_count) throw Error(ErrorCode::FaceNotInComplex, "bad vertex id");
      f |= Face{1} << v;
    }
    masks.push_back(f);
  }
  return SimplicialComplex(std::move(vertices), std::move(masks));
}

int SimplicialComplex::dimension() const {
  int best = 0;
  for (Face f : facets_) best = std::max(best, face_size(f));
  return best - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](Face f) { return face_size(f) == face_size(facets_.front()); });
}

bool SimplicialComplex::contains(Face face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](Face f) { return (face & f) == face; });
}

std::vector<Face> SimplicialComplex::faces() const {
  std::vector<Face> out;
  for (Face f : facets_) {
    // Enumerate all submasks of f, including f and 0.
    for (Face sub = f;; sub = (sub - 1) & f) {
      out.push_back(sub);
      if (sub == 0) break;
    }
  }
  std::sort(out.begin(), out.end(), [](Face a, Face b) {
    return face_size(a) != face_size(b) ? face_size(a) < face_size(b) : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
  std::vector<std::int64_t> f(dimension() + 2, 0);
  for (Face face : faces()) ++f[face_size(face)];
  return f;
}

std::string face_to_string(const SimplicialComplex& complex, Face face) {
  if (face == 0) return "∅";
  std::string out = "{";
  bool first = true;
  for (std::size_t v = 0; v < complex.vertices().size(); ++v) {
    if (!(face & (Face{1} << v))) continue;
    if (!first) out += ",";
    out += to_string(complex.vertices()[v]);
    first = false;
  }
  return out + "}";
}

SimplicialComplex sr_complex(const PointSet& X) {
  if (X.is_empty()) throw Error(ErrorCode::EmptyConfiguration, "complex of the empty configuration");
  std::vector<GridVariable> vertices;
  std::vector<int> offset(X.n());
  for (int i = 1; i <= X.n(); ++i) {
    offset[i - 1] = static_cast<int>(vertices.size());
    for (int j = 1; j <= X.dims()[i - 1]; ++j) vertices.push_back({i, j});
  }
  if (vertices.size() > 64) throw Error(ErrorCode::TooLarge, "more than 64 grid hyperplanes");
  const Face all = vertices.size() == 64 ? ~Face{0} : (Face{1} << vertices.size()) - 1;
  std::vector<Face> facets;
  for (const auto& p : X.points()) {
    Face f = all;
    for (int k = 0; k < X.n(); ++k) f &= ~(Face{1} << (offset[k] + p.coords[k] - 1));
    facets.push_back(f);
  }
  return SimplicialComplex(std::move(vertices), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& complex, Face sigma) {
  if (!complex.contains(sigma)) {
    throw Error(ErrorCode::FaceNotInComplex, face_to_string(complex, sigma));
  }
  std::vector<Face> facets;
  for (Face f : complex.facets()) {
    if ((f & sigma) == sigma) facets.push_back(f & ~sigma);
  }
  return SimplicialComplex(complex.vertices(), std::move(facets));
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex) {
  const auto f = complex.f_vector();
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 1 ? 1 : -1) * f[k];  // k = dim + 1
  return chi;
}

HomologyProfile homology(const SimplicialComplex& complex) {
  const auto by_dim = faces_by_dimension(complex);
  const std::size_t levels = by_dim.size();  // dimensions -1..dim
  // boundary[k] = rank of C_{k-1} -> C_{k-2} in level indexing (level = dim + 1).
  std::vector<std::int64_t> boundary(levels + 1, 0);
  for (std::size_t level = 1; level < levels; ++level) {
    boundary[level] = boundary_rank(by_dim[level - 1], by_dim[level]);
  }
  HomologyProfile profile;
  profile.ranks.resize(levels);
  std::int64_t alternating = 0;
  for (std::size_t level = 0; level < levels; ++level) {
    const auto f = static_cast<std::int64_t>(by_dim[level].size());
    profile.ranks[level] = f - boundary[level] - boundary[level + 1];
    alternating += (level % 2 == 1 ? 1 : -1) * profile.ranks[level];
  }
  if (alternating != reduced_euler_characteristic(complex)) {
    throw Error(ErrorCode::InternalInvariantViolation,
                "reduced Betti numbers disagree with the Euler characteristic");
  }
  return profile;
}

ReisnerReport reisner_check(const SimplicialComplex& complex) {
  ReisnerReport report;
  report.pure = complex.is_pure();
  if (!report.pure) {
    report.cohen_macaulay = false;
    return report;
  }
  for (Face sigma : complex.faces()) {
    const SimplicialComplex lk = link(complex, sigma);
    ++report.links_checked;
    const int dim = lk.dimension();
    if (dim <= 0) continue;  // only H~_{-1} could matter and it vanishes on nonempty links
    const HomologyProfile h = homology(lk);
    for (int degree = -1; degree < dim; ++degree) {
      if (h.rank(degree) != 0) {
        report.cohen_macaulay = false;
        report.failure = LinkFailure{sigma, degree, h.rank(degree)};
        return report;
      }
    }
  }
  return report;
}

ReisnerReport reisner_check(const PointSet& X) { return reisner_check(sr_complex(X)); }

bool is_cm(const PointSet& X) {
  if (X.is_empty()) return true;
  return reisner_check(X).cohen_macaulay;
}

}  // namespace acmpts
