#include "doctest.h"

#include "fixtures.hpp"
#include "foldwidth/canonical.hpp"
#include "foldwidth/invariants.hpp"

using namespace foldwidth;

namespace {

WidthLabeling only_labeling(const FoldDiagram& d) {
  auto labs = enumerate_labelings(d);
  REQUIRE(labs.size() == 1);
  return labs[0];
}

DiagramSpec subdivide_first_edge(DiagramSpec s, int c) {
  MapComponent& mc = s.components[c];
  int maxid = 0;
  for (const auto& v : mc.vertices)
    for (int d : v.darts) maxid = std::max(maxid, d);
  auto [a, b] = mc.edges[0];
  mc.edges.erase(mc.edges.begin());
  mc.vertices.push_back({VertexKind::smooth, {maxid + 1, maxid + 2}, -1});
  mc.edges.push_back({a, maxid + 1});
  mc.edges.push_back({maxid + 2, b});
  return s;
}

}  // namespace

TEST_CASE("stratified Euler characteristic on the worked diagrams") {
  FoldDiagram d1 = build_diagram(fixtures::d1_spec());
  CHECK(euler_char_stratified(d1, only_labeling(d1)) == 2);

  FoldDiagram d2 = build_diagram(fixtures::d2_spec());
  auto labs = enumerate_labelings(d2);
  REQUIRE(labs.size() == 2);
  CHECK(euler_char_stratified(d2, labs[0]) == 0);  // {0,2,0}: torus
  CHECK(euler_char_stratified(d2, labs[1]) == 4);  // {0,2,4}: two spheres

  FoldDiagram d7 = build_diagram(fixtures::d7_spec());
  WidthLabeling lab = only_labeling(d7);
  CHECK(euler_char_stratified(d7, lab) == 1);  // projective plane
  CHECK(thom_parity(d7, lab));

  FoldDiagram lim = build_diagram(fixtures::limacon_spec());
  CHECK(euler_char_stratified(lim, only_labeling(lim)) == 4);

  FoldDiagram ves = build_diagram(fixtures::vesica_spec());
  CHECK(euler_char_stratified(ves, only_labeling(ves)) == 4);
}

TEST_CASE("thom parity on the worked diagrams") {
  FoldDiagram d1 = build_diagram(fixtures::d1_spec());
  CHECK(thom_parity(d1, only_labeling(d1)));
  FoldDiagram d4 = build_diagram(fixtures::d4_spec());
  CHECK(thom_parity(d4, only_labeling(d4)));
}

TEST_CASE("induced orientation puts the higher face forward-left") {
  for (const DiagramSpec& s : {fixtures::d1_spec(), fixtures::d2_spec(), fixtures::d7_spec(),
                               fixtures::vesica_spec(), fixtures::limacon_spec()}) {
    FoldDiagram d = build_diagram(s);
    for (const auto& lab : enumerate_labelings(d)) {
      auto fwd = induced_orientation(d, lab);  // throws on inconsistency
      for (int c = 0; c < d.num_components(); ++c)
        for (size_t dd = 0; dd < fwd[c].size(); ++dd)
          if (fwd[c][dd])
            CHECK(lab.widths[d.left_face(c, static_cast<int>(dd))] ==
                  lab.widths[d.right_face(c, static_cast<int>(dd))] + 2);
    }
  }
}

TEST_CASE("nested circle orientations oppose for the torus labeling") {
  FoldDiagram d2 = build_diagram(fixtures::d2_spec());
  auto labs = enumerate_labelings(d2);
  REQUIRE(labs.size() == 2);
  // torus labeling {0,2,0}: circles oriented with the annulus on opposite sides
  auto fwd0 = induced_orientation(d2, labs[0]);
  // sphere-pair labeling {0,2,4}: both higher-inside
  auto fwd1 = induced_orientation(d2, labs[1]);
  CHECK(fwd0 != fwd1);
}

TEST_CASE("chi is invariant under smooth subdivision") {
  DiagramSpec s = fixtures::d7_spec();
  FoldDiagram base = build_diagram(s);
  int chi0 = euler_char_stratified(base, only_labeling(base));
  DiagramSpec t = subdivide_first_edge(subdivide_first_edge(s, 0), 1);
  FoldDiagram dd = build_diagram(t);
  CHECK(euler_char_stratified(dd, only_labeling(dd)) == chi0);
}

TEST_CASE("chi is invariant under mirroring") {
  for (const DiagramSpec& s : {fixtures::d7_spec(), fixtures::limacon_spec(), fixtures::vesica_spec()}) {
    FoldDiagram d = build_diagram(s);
    FoldDiagram m = build_diagram(mirror_spec(d));
    auto dl = enumerate_labelings(d);
    auto ml = enumerate_labelings(m);
    REQUIRE(dl.size() == ml.size());
    std::vector<int> a, b;
    for (const auto& l : dl) a.push_back(euler_char_stratified(d, l));
    for (const auto& l : ml) b.push_back(euler_char_stratified(m, l));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("compute_invariants bundles the fields") {
  FoldDiagram d7 = build_diagram(fixtures::d7_spec());
  DiagramInvariants inv = compute_invariants(d7, only_labeling(d7));
  CHECK(inv.w == 4);
  CHECK(inv.tw == 6);
  CHECK(inv.crossings == 0);
  CHECK(inv.cusps == 3);
  CHECK(inv.chi == 1);
  CHECK(inv.parity_ok);
  CHECK(inv.loops == 2);
  CHECK(inv.strands == 2);
}
