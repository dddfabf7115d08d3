#include "doctest.h"

#include "fixtures.hpp"
#include "foldwidth/realize.hpp"

using namespace foldwidth;

namespace {

// circle > circle > two-dimple circle; widths are forced to {0,2,4,2}
DiagramSpec dimple_nest_spec() {
  DiagramSpec s;
  s.components.push_back(fixtures::circle_component());
  s.components.push_back(fixtures::circle_component());
  MapComponent dimple = fixtures::deltoid_component(2);
  for (auto& v : dimple.vertices) v.wedge_corner = 1;  // wedges toward the outside
  s.components.push_back(dimple);
  s.placements.push_back({kOuter, -1, 0});
  s.placements.push_back({0, 1, 0});
  s.placements.push_back({1, 1, 0});
  return s;
}

}  // namespace

TEST_CASE("tangent line winding of model curves") {
  RealizedCurve circle_ccw = polar_cusped_circle({0, 0}, 10, {}, true);
  CHECK(line_field_winding(circle_ccw.pts) == 2);
  RealizedCurve circle_cw = polar_cusped_circle({0, 0}, 10, {}, false);
  CHECK(line_field_winding(circle_cw.pts) == -2);

  // deltoid: three outward cusps traversed ccw
  RealizedCurve deltoid = polar_cusped_circle({0, 0}, 10, {true, true, true}, true);
  CHECK(line_field_winding(deltoid.pts) == -1);

  // one inward dimple traversed ccw (cardioid-like)
  RealizedCurve card = polar_cusped_circle({0, 0}, 10, {false}, true);
  CHECK(line_field_winding(card.pts) == 3);
}

TEST_CASE("ray width sees nesting and orientation") {
  RealizedCurve a = polar_cusped_circle({0, 0}, 10, {}, true);
  RealizedCurve b = polar_cusped_circle({0, 0}, 4, {}, true);
  std::vector<const Polyline*> curves{&a.pts, &b.pts};
  CHECK(ray_width(curves, {0, 0}) == 4);
  CHECK(ray_width(curves, {7, 0}) == 2);
  CHECK(ray_width(curves, {14, 0}) == 0);
  RealizedCurve b_cw = polar_cusped_circle({0, 0}, 4, {}, false);
  std::vector<const Polyline*> mixed{&a.pts, &b_cw.pts};
  CHECK(ray_width(mixed, {0, 0}) == 0);
}

TEST_CASE("numeric rotation equals stratified chi on crossing-free diagrams") {
  auto check_diagram = [](const DiagramSpec& spec) {
    FoldDiagram d = build_diagram(spec);
    for (const auto& lab : enumerate_labelings(d)) {
      auto real = realize_crossing_free(d, lab);
      REQUIRE(real.has_value());
      CHECK(rotation_degree_numeric(d, lab, *real) == euler_char_stratified(d, lab));
    }
  };
  check_diagram(fixtures::d1_spec());
  check_diagram(fixtures::d2_spec());
  check_diagram(fixtures::d4_spec());
  check_diagram(fixtures::d7_spec());
  check_diagram(fixtures::d7_spec(4));
  check_diagram(dimple_nest_spec());
}

TEST_CASE("dimple nest realizes a chi zero surface") {
  FoldDiagram d = build_diagram(dimple_nest_spec());
  auto labs = enumerate_labelings(d);
  REQUIRE(labs.size() == 1);
  CHECK(euler_char_stratified(d, labs[0]) == 0);
  CHECK(width_stats(d, labs[0]).tw == 8);
  auto real = realize_crossing_free(d, labs[0]);
  REQUIRE(real.has_value());
  CHECK(rotation_degree_numeric(d, labs[0], *real) == 0);
}

TEST_CASE("realization verification rejects a flipped curve") {
  FoldDiagram d = build_diagram(fixtures::d2_spec());
  auto labs = enumerate_labelings(d);
  WidthLabeling lab = labs[1];  // {0,2,4}: both circles counterclockwise
  auto real = realize_crossing_free(d, lab);
  REQUIRE(real.has_value());
  FullRealization broken = *real;
  std::reverse(broken.geom.curves[1].pts.begin(), broken.geom.curves[1].pts.end());
  CHECK_THROWS_AS(rotation_degree_numeric(d, lab, broken), DiagramError);
}

TEST_CASE("crossing diagrams are not realized by the polar layout") {
  FoldDiagram d = build_diagram(fixtures::vesica_spec());
  auto labs = enumerate_labelings(d);
  CHECK(!realize_crossing_free(d, labs[0]).has_value());
}
