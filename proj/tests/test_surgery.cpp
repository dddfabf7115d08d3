#include "doctest.h"

#include "fixtures.hpp"
#include "foldwidth/generators.hpp"
#include "foldwidth/surgery.hpp"

using namespace foldwidth;

namespace {

bool split_recovers(const LabeledDiagram& sum, const CanonicalCode& a, const CanonicalCode& b) {
  for (auto& [p1, p2] : split_options(sum.diagram, sum.labeling)) {
    CanonicalCode c1 = canonical_code(p1.diagram);
    CanonicalCode c2 = canonical_code(p2.diagram);
    if ((c1 == a && c2 == b) || (c1 == b && c2 == a)) return true;
  }
  return false;
}

void check_sum(const GeneratedDiagram& g1, const GeneratedDiagram& g2) {
  WidthStats s1 = width_stats(g1.diagram, g1.labeling);
  WidthStats s2 = width_stats(g2.diagram, g2.labeling);
  LabeledDiagram sum = connected_sum(g1.diagram, g1.labeling, g2.diagram, g2.labeling);
  WidthStats ss = width_stats(sum.diagram, sum.labeling);
  CHECK(ss.w == std::max(s1.w, s2.w));
  CHECK(ss.tw == s1.tw + s2.tw - 2);
  CHECK(euler_char_stratified(sum.diagram, sum.labeling) ==
        euler_char_stratified(g1.diagram, g1.labeling) +
            euler_char_stratified(g2.diagram, g2.labeling) - 2);
  // the shipped labeling is honestly admissible
  bool found = false;
  for (const auto& lab : enumerate_labelings(sum.diagram)) found |= lab.widths == sum.labeling.widths;
  CHECK(found);
  CHECK(split_recovers(sum, canonical_code(g1.diagram), canonical_code(g2.diagram)));
}

}  // namespace

TEST_CASE("sphere # sphere") {
  GeneratedDiagram c = gen_trivial(parse_forest("()"));
  LabeledDiagram sum = connected_sum(c.diagram, c.labeling, c.diagram, c.labeling);
  WidthStats st = width_stats(sum.diagram, sum.labeling);
  CHECK(st.w == 2);
  CHECK(st.tw == 2);
  CHECK(euler_char_stratified(sum.diagram, sum.labeling) == 2);
  CHECK(split_recovers(sum, canonical_code(c.diagram), canonical_code(c.diagram)));
}

TEST_CASE("spun # spun keeps width 4") {
  GeneratedDiagram s2 = gen_spun_bridge(2);
  check_sum(s2, s2);
}

TEST_CASE("braid # circle keeps the braid width") {
  GeneratedDiagram b = gen_braid_closure({3, 4});
  GeneratedDiagram c = gen_trivial(parse_forest("()"));
  LabeledDiagram sum = connected_sum(b.diagram, b.labeling, c.diagram, c.labeling);
  CHECK(width_stats(sum.diagram, sum.labeling).w == 8);
  check_sum(b, c);
}

TEST_CASE("sums of nested diagrams with floating pieces split back") {
  GeneratedDiagram torus = gen_trivial(parse_forest("(())"));
  check_sum(torus, torus);
  GeneratedDiagram row = gen_trivial(parse_forest("()()"));
  check_sum(row, torus);
}

TEST_CASE("ribbon sums") {
  GeneratedDiagram rib = gen_ribbon({2, {{0, 1, {{0, true}}}}});
  GeneratedDiagram s2 = gen_spun_bridge(2);
  check_sum(rib, s2);
}

TEST_CASE("split refuses where no corridor separates") {
  FoldDiagram d1 = build_diagram(fixtures::d1_spec());
  auto labs = enumerate_labelings(d1);
  CHECK(!split(d1, labs[0]).has_value());

  // two disjoint circles: no corridor face at all
  FoldDiagram d4 = build_diagram(fixtures::d4_spec());
  auto labs4 = enumerate_labelings(d4);
  CHECK(!split(d4, labs4[0]).has_value());
}

TEST_CASE("split halves satisfy the width bookkeeping") {
  GeneratedDiagram s2 = gen_spun_bridge(2);
  LabeledDiagram sum = connected_sum(s2.diagram, s2.labeling, s2.diagram, s2.labeling);
  int tw = width_stats(sum.diagram, sum.labeling).tw;
  int w = width_stats(sum.diagram, sum.labeling).w;
  auto options = split_options(sum.diagram, sum.labeling);
  CHECK(!options.empty());
  for (auto& [a, b] : options) {
    WidthStats sa = width_stats(a.diagram, a.labeling);
    WidthStats sb = width_stats(b.diagram, b.labeling);
    CHECK(sa.tw + sb.tw == tw + 2);
    CHECK(std::max(sa.w, sb.w) == w);
  }
}
