#include "doctest.h"

#include "fixtures.hpp"
#include "foldwidth/canonical.hpp"
#include "foldwidth/diagram.hpp"
#include "foldwidth/labeling.hpp"

using namespace foldwidth;

namespace {

// subdivide the first edge of component c with a smooth marker
DiagramSpec subdivide(DiagramSpec s, int c, int edge) {
  MapComponent& mc = s.components[c];
  int maxid = 0;
  for (const auto& v : mc.vertices)
    for (int d : v.darts) maxid = std::max(maxid, d);
  auto [a, b] = mc.edges[edge];
  mc.edges.erase(mc.edges.begin() + edge);
  mc.vertices.push_back({VertexKind::smooth, {maxid + 1, maxid + 2}, -1});
  mc.edges.push_back({a, maxid + 1});
  mc.edges.push_back({maxid + 2, b});
  return s;
}

}  // namespace

TEST_CASE("circle diagram: faces and strands") {
  FoldDiagram d = build_diagram(fixtures::d1_spec());
  CHECK(d.faces.size() == 2);
  CHECK(d.outer_face >= 0);
  int inner = 1 - d.outer_face;
  CHECK(d.faces[inner].bounded);
  CHECK(d.faces[inner].circuits == 1);
  CHECK(d.faces[inner].chi_c() == 1);
  CHECK(d.strands.size() == 1);
  CHECK(d.smooth_marks == 1);
}

TEST_CASE("nested and side-by-side circles") {
  FoldDiagram d2 = build_diagram(fixtures::d2_spec());
  REQUIRE(d2.faces.size() == 3);
  int annulus = -1;
  for (size_t f = 0; f < d2.faces.size(); ++f)
    if (d2.faces[f].bounded && d2.faces[f].circuits == 2) annulus = static_cast<int>(f);
  REQUIRE(annulus >= 0);
  CHECK(d2.faces[annulus].chi_c() == 0);
  CHECK(d2.strands.size() == 2);

  FoldDiagram d4 = build_diagram(fixtures::d4_spec());
  REQUIRE(d4.faces.size() == 3);
  CHECK(d4.faces[d4.outer_face].circuits == 2);
  for (size_t f = 0; f < d4.faces.size(); ++f)
    if (d4.faces[f].bounded) CHECK(d4.faces[f].circuits == 1);
}

TEST_CASE("figure-eight face orbits and corner calibration") {
  FoldDiagram d = build_diagram(fixtures::d3_spec());
  REQUIRE(d.faces.size() == 3);  // V=1, E=2, F=3
  CHECK(d.strands.size() == 1);
  // total strand length (both directions) covers all darts
  size_t forward_total = 0;
  for (const auto& s : d.strands) forward_total += s.forward.size();
  CHECK(2 * forward_total == d.comps[0].dart_ids.size());

  // corners in ccw order read (lobe, outer, other lobe, outer)
  int c0 = d.face_at_corner(0, 0, 0);
  int c1 = d.face_at_corner(0, 0, 1);
  int c2 = d.face_at_corner(0, 0, 2);
  int c3 = d.face_at_corner(0, 0, 3);
  CHECK(c1 == d.outer_face);
  CHECK(c3 == d.outer_face);
  CHECK(d.faces[c0].bounded);
  CHECK(d.faces[c2].bounded);
  CHECK(c0 != c2);
}

TEST_CASE("limacon embedding of the same map") {
  FoldDiagram d = build_diagram(fixtures::limacon_spec());
  REQUIRE(d.faces.size() == 3);
  // one bounded corner face appears twice around the crossing
  int c0 = d.face_at_corner(0, 0, 0);
  int c1 = d.face_at_corner(0, 0, 1);
  int c2 = d.face_at_corner(0, 0, 2);
  int c3 = d.face_at_corner(0, 0, 3);
  int outer_hits = (c0 == d.outer_face) + (c1 == d.outer_face) + (c2 == d.outer_face) + (c3 == d.outer_face);
  CHECK(outer_hits == 1);
  CHECK(((c0 == c2) || (c1 == c3)));
}

TEST_CASE("vesica: two crossings, two strands, four faces") {
  FoldDiagram d = build_diagram(fixtures::vesica_spec());
  CHECK(d.faces.size() == 4);
  CHECK(d.strands.size() == 2);
  CHECK(d.crossings == 2);
}

TEST_CASE("deltoid: cusp bookkeeping") {
  FoldDiagram d = build_diagram(fixtures::d7_spec());
  CHECK(d.cusps == 3);
  CHECK(d.faces.size() == 3);  // outer, middle (disk minus deltoid), deltoid interior
  // wedge of every cusp points at the deltoid's interior face
  auto [wf, of] = cusp_faces(d, 1, 0);
  auto [wf1, of1] = cusp_faces(d, 1, 1);
  CHECK(wf == wf1);
  CHECK(of == of1);
  CHECK(d.faces[wf].bounded);
  CHECK(d.faces[wf].circuits == 1);
  CHECK(d.faces[of].circuits == 2);  // the annular region between circle and deltoid
}

TEST_CASE("structural validation errors") {
  SUBCASE("cusp with three darts") {
    DiagramSpec s;
    MapComponent mc;
    mc.vertices.push_back({VertexKind::cusp, {0, 1, 2}, 0});
    mc.edges = {{0, 1}};
    s.components.push_back(mc);
    s.placements.push_back({kOuter, -1, 0});
    CHECK_THROWS_WITH_AS(build_diagram(s), doctest::Contains("BadDegree"), DiagramError);
  }
  SUBCASE("dart listed twice") {
    DiagramSpec s;
    MapComponent mc;
    mc.vertices.push_back({VertexKind::smooth, {0, 0}, -1});
    mc.edges = {{0, 0}};
    s.components.push_back(mc);
    s.placements.push_back({kOuter, -1, 0});
    CHECK_THROWS_WITH_AS(build_diagram(s), doctest::Contains("UnpairedDart"), DiagramError);
  }
  SUBCASE("unpaired dart") {
    DiagramSpec s;
    MapComponent mc;
    mc.vertices.push_back({VertexKind::smooth, {0, 1}, -1});
    s.components.push_back(mc);
    s.placements.push_back({kOuter, -1, 0});
    CHECK_THROWS_WITH_AS(build_diagram(s), doctest::Contains("UnpairedDart"), DiagramError);
  }
  SUBCASE("non-planar rotation system") {
    DiagramSpec s;
    MapComponent mc;
    mc.vertices.push_back({VertexKind::crossing, {0, 1, 2, 3}, -1});
    mc.edges = {{0, 2}, {1, 3}};  // the torus curve
    s.components.push_back(mc);
    s.placements.push_back({kOuter, -1, 0});
    CHECK_THROWS_WITH_AS(build_diagram(s), doctest::Contains("EulerFailure"), DiagramError);
  }
  SUBCASE("cyclic placement") {
    DiagramSpec s = fixtures::d2_spec();
    s.placements[0] = {1, 1, 0};
    s.placements[1] = {0, 1, 0};
    CHECK_THROWS_WITH_AS(build_diagram(s), doctest::Contains("CyclicPlacement"), DiagramError);
  }
  SUBCASE("dangling placement face") {
    DiagramSpec s = fixtures::d2_spec();
    s.placements[1].parent_face = 99;
    CHECK_THROWS_WITH_AS(build_diagram(s), doctest::Contains("DanglingPlacementFace"), DiagramError);
  }
  SUBCASE("empty diagram") {
    CHECK_THROWS_WITH_AS(build_diagram(DiagramSpec{}), doctest::Contains("EmptyDiagram"), DiagramError);
  }
}

TEST_CASE("canonical codes: invariance under relabeling") {
  std::mt19937 rng(20240811);
  for (const DiagramSpec& s :
       {fixtures::d1_spec(), fixtures::d2_spec(), fixtures::d3_spec(), fixtures::d4_spec(),
        fixtures::d6_spec(), fixtures::d7_spec(), fixtures::vesica_spec(), fixtures::limacon_spec()}) {
    CanonicalCode base = canonical_code(build_diagram(s));
    for (int i = 0; i < 100; ++i) {
      DiagramSpec r = fixtures::relabel(s, rng);
      CHECK(canonical_code(build_diagram(r)) == base);
    }
  }
}

TEST_CASE("canonical codes distinguish embeddings") {
  CanonicalCode d2 = canonical_code(build_diagram(fixtures::d2_spec()));
  CanonicalCode d4 = canonical_code(build_diagram(fixtures::d4_spec()));
  CHECK(!(d2 == d4));

  CanonicalCode d3 = canonical_code(build_diagram(fixtures::d3_spec()));
  CanonicalCode lim = canonical_code(build_diagram(fixtures::limacon_spec()));
  CHECK(!(d3 == lim));

  // inside-out deltoid differs from the deltoid
  DiagramSpec flipped = fixtures::d6_spec();
  flipped.placements[0].outer_face = 1;
  CHECK(!(canonical_code(build_diagram(fixtures::d6_spec())) == canonical_code(build_diagram(flipped))));
}

TEST_CASE("canonical codes ignore smooth markers") {
  DiagramSpec s = fixtures::d7_spec();
  CanonicalCode base = canonical_code(build_diagram(s));
  DiagramSpec t = subdivide(s, 0, 0);
  t = subdivide(t, 1, 1);
  CHECK(canonical_code(build_diagram(t)) == base);
}

TEST_CASE("figure-eight equals its mirror under reflection closure") {
  FoldDiagram d = build_diagram(fixtures::d3_spec());
  FoldDiagram m = build_diagram(mirror_spec(d));
  CHECK(canonical_code(d, true) == canonical_code(m, true));
}

TEST_CASE("strand partition covers all darts once per direction") {
  for (const DiagramSpec& s : {fixtures::d3_spec(), fixtures::vesica_spec(), fixtures::d7_spec()}) {
    FoldDiagram d = build_diagram(s);
    size_t total = 0, darts = 0;
    for (const auto& st : d.strands) total += 2 * st.forward.size();
    for (const auto& bc : d.comps) darts += bc.dart_ids.size();
    CHECK(total == darts);
  }
}
