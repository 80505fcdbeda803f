#include <doctest.h>

#include "acmpts/error.hpp"
#include "acmpts/monomial.hpp"
#include "acmpts/reisner.hpp"
#include "acmpts/star.hpp"
#include "support.hpp"

using namespace acmpts;
using testing::make;

namespace {

SimplicialComplex complex_of(int vertices, const std::vector<std::vector<int>>& facets) {
  return SimplicialComplex::from_facet_lists(vertices, facets);
}

Face face(std::initializer_list<int> vs) {
  Face f = 0;
  for (int v : vs) f |= Face{1} << v;
  return f;
}

// Reduced Betti numbers from rational ranks of boundary maps built here
// from the face list, independently of the library's homology routine.
std::vector<std::int64_t> betti_brute(const SimplicialComplex& c) {
  const auto faces = c.faces();
  const int top = c.dimension();
  std::vector<std::vector<Face>> by_dim(top + 2);
  for (Face f : faces) by_dim[face_size(f)].push_back(f);
  // rank of boundary from size-k faces to size-(k-1) faces, k >= 1
  std::vector<std::int64_t> rank(top + 3, 0);
  for (int k = 1; k <= top + 1; ++k) {
    std::vector<std::vector<mpq_class>> m(by_dim[k - 1].size(),
                                          std::vector<mpq_class>(by_dim[k].size()));
    for (std::size_t col = 0; col < by_dim[k].size(); ++col) {
      const Face f = by_dim[k][col];
      int pos = 0;
      for (int v = 0; v < 64; ++v) {
        if (!(f & (Face{1} << v))) continue;
        const Face g = f & ~(Face{1} << v);
        for (std::size_t row = 0; row < by_dim[k - 1].size(); ++row) {
          if (by_dim[k - 1][row] == g) m[row][col] = pos % 2 ? -1 : 1;
        }
        ++pos;
      }
    }
    rank[k] = static_cast<std::int64_t>(testing::rank_q(std::move(m)));
  }
  std::vector<std::int64_t> betti(top + 2);
  for (int k = 0; k <= top + 1; ++k) {
    const auto chains = static_cast<std::int64_t>(by_dim[k].size());
    betti[k] = chains - rank[k] - rank[k + 1];
  }
  return betti;
}

}  // namespace

TEST_SUITE("reisner") {
  TEST_CASE("reduced homology of small complexes") {
    const auto triangle = complex_of(3, {{0, 1}, {1, 2}, {0, 2}});
    const HomologyProfile t = homology(triangle);
    CHECK(t.rank(-1) == 0);
    CHECK(t.rank(0) == 0);
    CHECK(t.rank(1) == 1);

    const auto edges = complex_of(4, {{0, 1}, {2, 3}});
    CHECK(homology(edges).rank(0) == 1);
    CHECK(homology(edges).rank(1) == 0);

    const auto square = complex_of(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(homology(square).rank(0) == 0);
    CHECK(homology(square).rank(1) == 1);

    const auto empty_face = complex_of(2, {{}});
    CHECK(empty_face.dimension() == -1);
    CHECK(homology(empty_face).rank(-1) == 1);

    const auto solid = complex_of(3, {{0, 1, 2}});
    CHECK(homology(solid).ranks == std::vector<std::int64_t>{0, 0, 0, 0});

    // Boundary of a tetrahedron is a 2-sphere.
    const auto sphere = complex_of(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(homology(sphere).ranks == std::vector<std::int64_t>{0, 0, 0, 1});
  }

  TEST_CASE("facets are minimalized") {
    const auto c = complex_of(3, {{0, 1}, {0}, {0, 1}, {2}});
    CHECK(c.facets().size() == 2);
    CHECK_FALSE(c.is_pure());
    CHECK(c.contains(face({0, 1})));
    CHECK_FALSE(c.contains(face({1, 2})));
    CHECK(c.f_vector() == std::vector<std::int64_t>{1, 3, 1});
  }

  TEST_CASE("Stanley-Reisner complexes of configurations") {
    const auto point = sr_complex(make({{1, 1}}));
    CHECK(point.vertices().size() == 2);
    CHECK(point.facets() == std::vector<Face>{0});

    // Vertices are ordered a_{1,1}, a_{1,2}, a_{2,1}, a_{2,2}.
    const auto diag = sr_complex(make({{1, 1}, {2, 2}}));
    CHECK(diag.vertices().size() == 4);
    CHECK(diag.facets().size() == 2);
    CHECK(diag.contains(face({1, 3})));
    CHECK(diag.contains(face({0, 2})));
    CHECK(homology(diag).rank(0) == 1);

    const auto grid = sr_complex(make({{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
    CHECK(grid.facets().size() == 4);
    for (Face f : grid.facets()) CHECK(face_size(f) == 2);
    CHECK(homology(grid).rank(1) == 1);
    CHECK(homology(grid).rank(0) == 0);
  }

  TEST_CASE("nonfaces generate the configuration ideal") {
    for (const auto& pts : testing::all_subsets({2, 2, 2})) {
      const PointSet X = make(pts);
      const auto c = sr_complex(X);
      const int nv = static_cast<int>(c.vertices().size());
      CHECK(nv == X.dims()[0] + X.dims()[1] + X.dims()[2]);
      for (Face f : c.facets()) CHECK(face_size(f) == nv - 3);
      std::vector<Monomial> minimal_nonfaces;
      for (Face f = 0; f < (Face{1} << c.vertices().size()); ++f) {
        if (c.contains(f)) continue;
        bool minimal = true;
        for (int v = 0; v < nv; ++v) {
          if ((f & (Face{1} << v)) && !c.contains(f & ~(Face{1} << v))) minimal = false;
        }
        if (!minimal) continue;
        std::map<GridVariable, int> e;
        for (int v = 0; v < nv; ++v) {
          if (f & (Face{1} << v)) e[c.vertices()[v]] = 1;
        }
        minimal_nonfaces.emplace_back(std::move(e));
      }
      CHECK(MonomialIdeal(minimal_nonfaces) == configuration_ideal(X));
    }
  }

  TEST_CASE("links") {
    const auto square = complex_of(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const auto whole = link(square, 0);
    CHECK(whole.facets() == square.facets());
    const auto at_vertex = link(square, face({0}));
    CHECK(at_vertex.facets() == std::vector<Face>{face({1}), face({3})});
    CHECK(homology(at_vertex).rank(0) == 1);

    const auto edges = complex_of(4, {{0, 1}, {2, 3}});
    CHECK(link(edges, face({0})).facets() == std::vector<Face>{face({1})});
    CHECK_THROWS_AS(link(edges, face({0, 2})), Error);
  }

  TEST_CASE("homology agrees with independent boundary ranks and Euler counts") {
    for (const auto& pts : testing::all_subsets({2, 3})) {
      const auto c = sr_complex(make(pts));
      for (Face f : c.faces()) {
        const auto lk = link(c, f);
        const auto h = homology(lk);
        CHECK(h.ranks == betti_brute(lk));
        std::int64_t alternating = 0;
        for (int k = -1; k <= lk.dimension(); ++k) alternating += (k % 2 == 0 ? 1 : -1) * h.rank(k);
        CHECK(alternating == reduced_euler_characteristic(lk));
      }
    }
  }

  TEST_CASE("Cohen-Macaulay verdicts") {
    CHECK(is_cm(make({{1, 1, 1}})));
    CHECK(is_cm(testing::liaison_eleven()));
    CHECK(is_cm(testing::chain_twelve()));
    CHECK_FALSE(is_cm(testing::cube_minus_diagonal()));
    CHECK(is_cm(PointSet::empty(2)));

    const auto report = reisner_check(make({{1, 1}, {2, 2}}));
    CHECK_FALSE(report.cohen_macaulay);
    REQUIRE(report.failure.has_value());
    CHECK(report.failure->face == 0);
    CHECK(report.failure->degree == 0);
    CHECK(report.failure->rank == 1);
  }

  TEST_CASE("Reisner agrees with the star test on small grids") {
    for (const std::vector<int>& dims : {std::vector<int>{2, 2, 2}, {3, 3}, {2, 3}, {2, 2, 3}}) {
      for (const auto& pts : testing::all_subsets(dims)) {
        const PointSet X = make(pts);
        CHECK(is_cm(X) == is_acm(X));
      }
    }
  }

  TEST_CASE("adding a cone vertex does not change the verdict") {
    for (const auto& pts : testing::all_subsets({2, 2, 2})) {
      const PointSet X = make(pts);
      const auto c = sr_complex(X);
      const int v = static_cast<int>(c.vertices().size());
      std::vector<Face> coned;
      for (Face f : c.facets()) coned.push_back(f | (Face{1} << v));
      auto vertices = c.vertices();
      vertices.push_back({1, X.dims()[0] + 1});
      const SimplicialComplex cone(vertices, coned);
      CHECK(reisner_check(cone).cohen_macaulay == reisner_check(c).cohen_macaulay);
    }
  }

  TEST_CASE("verdict is invariant under relabeling") {
    const int perm[] = {3, 1, 2};
    const std::vector<std::vector<int>> levels{{2, 1}, {2, 1}, {1, 2}};
    for (const auto& pts : testing::all_subsets({2, 2, 2})) {
      const PointSet X = make(pts);
      const bool cm = is_cm(X);
      CHECK(is_cm(relabel(X, perm)) == cm);
      if (X.dims() == std::vector<int>{2, 2, 2}) CHECK(is_cm(relabel(X, perm, levels)) == cm);
    }
  }

  TEST_CASE("face rendering") {
    const auto diag = sr_complex(make({{1, 1}, {2, 2}}));
    CHECK(face_to_string(diag, 0) == "∅");
    CHECK(face_to_string(diag, face({0, 2})) == "{a_{1,1},a_{2,1}}");
  }
}
