#include "doctest.h"

#include "foldwidth/generators.hpp"

using namespace foldwidth;

namespace {

void check_shipped_labeling(const GeneratedDiagram& g) {
  // the shipped labeling must be re-derivable by plain enumeration
  auto labs = enumerate_labelings(g.diagram);
  bool found = false;
  for (const auto& lab : labs) found |= lab.widths == g.labeling.widths;
  CHECK(found);
  CHECK(check_local_patterns(g.diagram, g.labeling).all_pass);
  CHECK(thom_parity(g.diagram, g.labeling));
}

void check_rot(const GeneratedDiagram& g) {
  REQUIRE(g.realization.has_value());
  CHECK(rotation_degree_numeric(g.diagram, g.labeling, *g.realization) ==
        euler_char_stratified(g.diagram, g.labeling));
}

std::multiset<int> bounded_widths(const GeneratedDiagram& g) {
  std::multiset<int> out;
  for (auto& [f, w] : width_stats(g.diagram, g.labeling).per_face) out.insert(w);
  return out;
}

}  // namespace

TEST_CASE("trivial nests") {
  GeneratedDiagram one = gen_trivial(parse_forest("()"));
  CHECK(width_stats(one.diagram, one.labeling).w == 2);
  CHECK(width_stats(one.diagram, one.labeling).tw == 2);
  CHECK(euler_char_stratified(one.diagram, one.labeling) == 2);
  check_shipped_labeling(one);
  check_rot(one);

  GeneratedDiagram row = gen_trivial(parse_forest("()()()"));
  CHECK(bounded_widths(row) == std::multiset<int>{2, 2, 2});
  CHECK(width_stats(row.diagram, row.labeling).tw == 6);
  CHECK(euler_char_stratified(row.diagram, row.labeling) == 6);  // three spheres
  check_shipped_labeling(row);
  check_rot(row);

  GeneratedDiagram nest = gen_trivial(parse_forest("(())"));
  CHECK(width_stats(nest.diagram, nest.labeling).w == 2);
  CHECK(euler_char_stratified(nest.diagram, nest.labeling) == 0);  // torus shadow
  check_shipped_labeling(nest);
  check_rot(nest);

  GeneratedDiagram handle2 = gen_trivial(parse_forest("(()())"));
  CHECK(euler_char_stratified(handle2.diagram, handle2.labeling) == -2);  // genus two
  check_shipped_labeling(handle2);
  check_rot(handle2);

  CHECK_THROWS_AS(parse_forest("(()"), DiagramError);
  CHECK_THROWS_AS(parse_forest("())("), DiagramError);
}

TEST_CASE("spun bridge diagrams") {
  GeneratedDiagram s2 = gen_spun_bridge(2);
  WidthStats st = width_stats(s2.diagram, s2.labeling);
  CHECK(st.w == 4);
  CHECK(st.tw == 8);
  CHECK(euler_char_stratified(s2.diagram, s2.labeling) == 2);
  CHECK(bounded_widths(s2) == std::multiset<int>{2, 2, 4});
  check_shipped_labeling(s2);
  check_rot(s2);

  GeneratedDiagram s3 = gen_spun_bridge(3);
  CHECK(width_stats(s3.diagram, s3.labeling).w <= 6);
  CHECK(euler_char_stratified(s3.diagram, s3.labeling) == 2);
  check_shipped_labeling(s3);
  check_rot(s3);

  // the spun 2-bridge covers a sphere
  AssemblyResult res = enumerate_assemblies(s2.diagram, s2.labeling);
  CHECK(!res.assemblies.empty());
  bool sphere_seen = false;
  for (const auto& as : res.assemblies) {
    CombinatorialSurface surf = build_surface(s2.diagram, s2.labeling, as);
    if (surf.components == 1 && surf.orientable && surf.chi == 2) sphere_seen = true;
  }
  CHECK(sphere_seen);
}

TEST_CASE("braid closures") {
  for (auto [b, r] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {2, 2}, {3, 2}, {3, 4}, {4, 2}, {4, 4}}) {
    GeneratedDiagram g = gen_braid_closure({b, r});
    WidthStats st = width_stats(g.diagram, g.labeling);
    if (r >= 1) CHECK(st.w == 2 * b + 2);
    else CHECK(st.w == 2 * b);
    CHECK(g.diagram.cusps == 3 * r);
    CHECK(euler_char_stratified(g.diagram, g.labeling) == 2 * b - r);
    check_shipped_labeling(g);
    check_rot(g);
    REQUIRE(g.braid_w_within_twice_degree.has_value());
    CHECK(*g.braid_w_within_twice_degree == (st.w <= 2 * b));
  }
  CHECK_THROWS_AS(gen_braid_closure({2, 3}), DiagramError);  // odd branch count
  CHECK_THROWS_AS(gen_braid_closure({0, 0}), DiagramError);
}

TEST_CASE("ribbon: single ball is the circle diagram") {
  GeneratedDiagram g = gen_ribbon({1, {}});
  CHECK(width_stats(g.diagram, g.labeling).w == 2);
  CHECK(euler_char_stratified(g.diagram, g.labeling) == 2);
  check_shipped_labeling(g);
  check_rot(g);
}

TEST_CASE("ribbon: two balls and a plain tube make a sphere shadow") {
  GeneratedDiagram g = gen_ribbon({2, {{0, 1, {}}}});
  CHECK(g.diagram.crossings == 0);
  CHECK(width_stats(g.diagram, g.labeling).w == 2);
  CHECK(euler_char_stratified(g.diagram, g.labeling) == 2);
  check_shipped_labeling(g);
  check_rot(g);
}

TEST_CASE("ribbon: a tube passing over a ball forces width 4") {
  GeneratedDiagram g = gen_ribbon({2, {{0, 1, {{0, true}}}}});
  CHECK(g.diagram.crossings == 4);
  CHECK(width_stats(g.diagram, g.labeling).w == 4);
  CHECK(euler_char_stratified(g.diagram, g.labeling) == 2);
  check_shipped_labeling(g);
  check_rot(g);

  // the classic ribbon 2-knot shadow covers a sphere
  AssemblyResult res = enumerate_assemblies(g.diagram, g.labeling, 16);
  bool sphere_seen = false;
  for (const auto& as : res.assemblies) {
    CombinatorialSurface surf = build_surface(g.diagram, g.labeling, as);
    if (surf.components == 1 && surf.orientable && surf.chi == 2) sphere_seen = true;
  }
  CHECK(sphere_seen);
}

TEST_CASE("ribbon: self tube over its own ball (torus ribbon)") {
  GeneratedDiagram g = gen_ribbon({1, {{0, 0, {{0, true}}}}});
  CHECK(width_stats(g.diagram, g.labeling).w == 4);
  CHECK(euler_char_stratified(g.diagram, g.labeling) == 0);
  check_shipped_labeling(g);
  check_rot(g);
}

TEST_CASE("ribbon: theta configuration") {
  GeneratedDiagram g = gen_ribbon({2, {{0, 1, {}}, {0, 1, {}}}});
  CHECK(width_stats(g.diagram, g.labeling).w == 2);
  CHECK(euler_char_stratified(g.diagram, g.labeling) == 0);
  check_shipped_labeling(g);
  check_rot(g);
}

TEST_CASE("ribbon: three balls in a chain") {
  GeneratedDiagram g = gen_ribbon({3, {{0, 1, {}}, {1, 2, {}}}});
  CHECK(width_stats(g.diagram, g.labeling).w == 2);
  CHECK(euler_char_stratified(g.diagram, g.labeling) == 2);
  check_shipped_labeling(g);
  check_rot(g);
}

TEST_CASE("ribbon: disconnected spec is rejected") {
  CHECK_THROWS_AS(gen_ribbon({2, {}}), DiagramError);
  CHECK_THROWS_AS(gen_ribbon({3, {{0, 1, {}}}}), DiagramError);
}
