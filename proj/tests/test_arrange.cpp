#include "doctest.h"

#include "fixtures.hpp"
#include "foldwidth/arrange.hpp"

using namespace foldwidth;

namespace {

Polyline circle(Vec2 c, double r, bool ccw = true, int n = 96) {
  Polyline out;
  for (int i = 0; i < n; ++i) {
    double a = (ccw ? 1 : -1) * 2 * M_PI * (i + 0.13) / n;
    out.push_back(c + Vec2{r * std::cos(a), r * std::sin(a)});
  }
  return out;
}

}  // namespace

TEST_CASE("arrangement of a single circle is the circle diagram") {
  Arrangement arr = build_arrangement({circle({0, 0}, 10)});
  CHECK(canonical_code(arr.diagram) == canonical_code(build_diagram(fixtures::d1_spec())));
}

TEST_CASE("arrangement recovers nesting and side-by-side placement") {
  Arrangement nested = build_arrangement({circle({0, 0}, 10), circle({1, 0}, 4)});
  CHECK(canonical_code(nested.diagram) == canonical_code(build_diagram(fixtures::d2_spec())));

  Arrangement apart = build_arrangement({circle({0, 0}, 10), circle({30, 0}, 4)});
  CHECK(canonical_code(apart.diagram) == canonical_code(build_diagram(fixtures::d4_spec())));

  Arrangement deep = build_arrangement(
      {circle({0, 0}, 10), circle({0.5, 0}, 6), circle({0.1, 0}, 2.5)});
  FoldDiagram chain3 = build_diagram([] {
    DiagramSpec s;
    for (int i = 0; i < 3; ++i) s.components.push_back(fixtures::circle_component());
    s.placements.push_back({kOuter, -1, 0});
    s.placements.push_back({0, 1, 0});
    s.placements.push_back({1, 1, 0});
    return s;
  }());
  CHECK(canonical_code(deep.diagram) == canonical_code(chain3));
}

TEST_CASE("arrangement of two overlapping circles matches the vesica") {
  Arrangement arr = build_arrangement({circle({-3, 0}, 5), circle({3, 0}, 5)});
  FoldDiagram ves = build_diagram(fixtures::vesica_spec());
  CHECK(arr.diagram.crossings == 2);
  CHECK(canonical_code(arr.diagram, true) == canonical_code(ves, true));

  // the realization certifies the labeling: widths at witnesses and rot
  auto labs = enumerate_labelings(arr.diagram);
  REQUIRE(labs.size() == 1);
  CHECK(rotation_degree_numeric(arr.diagram, labs[0], arr.realization) ==
        euler_char_stratified(arr.diagram, labs[0]));
}

TEST_CASE("self-intersecting curve builds the figure-eight map") {
  // a lemniscate-like curve: two lobes side by side
  Polyline fig;
  for (int i = 0; i < 256; ++i) {
    double t = 2 * M_PI * (i + 0.31) / 256;
    fig.push_back({6 * std::sin(2 * t) / (1 + std::cos(t) * std::cos(t) * 0.4),
                   7 * std::sin(t)});
  }
  Arrangement arr = build_arrangement({fig});
  CHECK(arr.diagram.crossings == 1);
  CHECK(arr.diagram.strands.size() == 1);
  // one immersed circle, two lobes: structurally the figure-eight embedding
  CHECK(canonical_code(arr.diagram, true) == canonical_code(build_diagram(fixtures::d3_spec()), true));
  CHECK(enumerate_labelings(arr.diagram).empty());
}

TEST_CASE("arrangement rejects near-tangent crossings") {
  Polyline a = circle({0, 0}, 5.0, true, 512);
  Polyline b = circle({9.998, 0}, 5.0, true, 512);
  CHECK_THROWS_AS(build_arrangement({a, b}), DiagramError);
}
