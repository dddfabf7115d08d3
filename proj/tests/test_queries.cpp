#include "doctest.h"

#include "fixtures.hpp"
#include "foldwidth/catalog.hpp"

using namespace foldwidth;

TEST_CASE("width integration is well-defined for every orientation choice") {
  // the +-2 cochain is closed around every vertex, so integrating from the
  // outer face never hits a contradiction, whatever directions are chosen
  for (const DiagramSpec& spec :
       {fixtures::d1_spec(), fixtures::d2_spec(), fixtures::d3_spec(), fixtures::d4_spec(),
        fixtures::d6_spec(), fixtures::d7_spec(4), fixtures::vesica_spec(), fixtures::limacon_spec()}) {
    FoldDiagram d = build_diagram(spec);
    int s = static_cast<int>(d.strands.size());
    for (uint32_t mask = 0; mask < (1u << s); ++mask) {
      std::vector<uint8_t> orient(s);
      for (int i = 0; i < s; ++i) orient[i] = (mask >> i) & 1;
      std::vector<int> widths;
      CHECK(detail::integrate_widths(d, orient, widths));
    }
  }
}

TEST_CASE("sphere catalog: chi 2, connected realizable, tw <= 6") {
  Catalog cat = enumerate_diagrams({2, 4, 3, 6, true});
  auto spheres = query(cat, [](const CatalogEntry& e) {
    return e.inv.chi == 2 && e.inv.tw <= 6 && connected_realizable(e);
  });
  CHECK(!spheres.empty());
  for (const CatalogEntry& e : spheres) {
    CHECK(verdict(e, false).kind == Verdict::strongly_trivial);
    CHECK(e.inv.w <= 4);
  }
}

TEST_CASE("projective plane catalog: chi 1, tw <= 6, every entry cusped") {
  Catalog cat = enumerate_diagrams({2, 4, 3, 6, true});
  auto planes = query(cat, [](const CatalogEntry& e) { return e.inv.chi == 1 && e.inv.tw <= 6; });
  CHECK(!planes.empty());
  for (const CatalogEntry& e : planes) {
    CHECK(e.inv.cusps >= 1);
    if (connected_realizable(e)) CHECK(verdict(e, false).kind == Verdict::trivial);
  }
}

TEST_CASE("Klein bottle configurations are exported without a verdict") {
  Catalog cat = enumerate_diagrams({2, 4, 3, 6, true});
  auto kleins = query(cat, [](const CatalogEntry& e) {
    if (e.inv.chi != 0 || e.inv.tw > 6) return false;
    for (const SurfaceSummary& s : e.surfaces)
      if (!s.orientable && s.components == 1) return true;
    return false;
  });
  CHECK(!kleins.empty());
  for (const CatalogEntry& e : kleins) CHECK(verdict(e, true).kind == Verdict::unknown);
}

TEST_CASE("cusped entries have total width at least six") {
  Catalog cat = enumerate_diagrams({1, 4, 2, 8, true});
  for (const CatalogEntry& e : cat.entries) {
    if (e.inv.cusps > 0) CHECK(e.inv.tw >= 6);
    CHECK(static_cast<size_t>(e.inv.strands) >= 1);
  }
}
