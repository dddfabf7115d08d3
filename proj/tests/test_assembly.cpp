#include "doctest.h"

#include "fixtures.hpp"
#include "foldwidth/assembly.hpp"
#include "foldwidth/canonical.hpp"

using namespace foldwidth;

namespace {

WidthLabeling lab_with_tw(const FoldDiagram& d, int tw) {
  for (auto& lab : enumerate_labelings(d))
    if (width_stats(d, lab).tw == tw) return lab;
  REQUIRE(false);
  return {};
}

}  // namespace

TEST_CASE("circle: one assembly, a sphere") {
  FoldDiagram d = build_diagram(fixtures::d1_spec());
  auto labs = enumerate_labelings(d);
  REQUIRE(labs.size() == 1);
  AssemblyResult res = enumerate_assemblies(d, labs[0]);
  CHECK(res.complete);
  REQUIRE(res.assemblies.size() == 1);
  CombinatorialSurface s = build_surface(d, labs[0], res.assemblies[0]);
  CHECK(s.chi == 2);
  CHECK(s.components == 1);
  CHECK(s.orientable);
  CHECK(s.pieces[0].genus == 0);
}

TEST_CASE("nested circles, torus labeling: one assembly, a torus") {
  FoldDiagram d = build_diagram(fixtures::d2_spec());
  WidthLabeling lab = lab_with_tw(d, 2);  // widths {0,2,0}
  AssemblyResult res = enumerate_assemblies(d, lab);
  CHECK(res.complete);
  REQUIRE(res.assemblies.size() == 1);
  CombinatorialSurface s = build_surface(d, lab, res.assemblies[0]);
  CHECK(s.chi == 0);
  CHECK(s.components == 1);
  CHECK(s.orientable);
  CHECK(s.pieces[0].genus == 1);
}

TEST_CASE("nested circles, width 4 labeling: two nested spheres") {
  FoldDiagram d = build_diagram(fixtures::d2_spec());
  WidthLabeling lab = lab_with_tw(d, 6);  // widths {0,2,4}
  AssemblyResult res = enumerate_assemblies(d, lab);
  CHECK(res.complete);
  REQUIRE(res.assemblies.size() == 1);
  for (const auto& as : res.assemblies) {
    CombinatorialSurface s = build_surface(d, lab, as);
    CHECK(s.chi == 4);
    CHECK(s.components == 2);
    CHECK(s.orientable);
    for (const auto& p : s.pieces) CHECK(p.chi == 2);
  }
}

TEST_CASE("deltoid in a circle covers a projective plane") {
  FoldDiagram d = build_diagram(fixtures::d7_spec());
  auto labs = enumerate_labelings(d);
  REQUIRE(labs.size() == 1);
  AssemblyResult res = enumerate_assemblies(d, labs[0]);
  CHECK(res.complete);
  CHECK(!res.assemblies.empty());
  for (const auto& as : res.assemblies) {
    CombinatorialSurface s = build_surface(d, labs[0], as);
    CHECK(s.chi == 1);
    CHECK(s.components == 1);
    CHECK(!s.orientable);
    CHECK(s.pieces[0].genus == 1);  // one cross-cap
  }
}

TEST_CASE("vesica covers a sphere pair") {
  FoldDiagram d = build_diagram(fixtures::vesica_spec());
  auto labs = enumerate_labelings(d);
  REQUIRE(labs.size() == 1);
  AssemblyResult res = enumerate_assemblies(d, labs[0]);
  CHECK(res.complete);
  CHECK(!res.assemblies.empty());
  for (const auto& as : res.assemblies) {
    CombinatorialSurface s = build_surface(d, labs[0], as);
    CHECK(s.chi == 4);
    CHECK(s.components == 2);
    CHECK(s.orientable);
  }
}

TEST_CASE("limacon labeling admits no assembly") {
  // The widths {0,2,4} satisfy every local pattern, but the single strand
  // would have to carry both fold lines at the crossing: the inner edge's
  // fold pair would need to equal its own complement. No surface projects
  // onto this labeled diagram.
  FoldDiagram d = build_diagram(fixtures::limacon_spec());
  auto labs = enumerate_labelings(d);
  REQUIRE(labs.size() == 1);
  AssemblyResult res = enumerate_assemblies(d, labs[0]);
  CHECK(res.complete);
  CHECK(res.assemblies.empty());
}

TEST_CASE("assembly chi always equals the stratified chi") {
  for (const DiagramSpec& spec : {fixtures::d1_spec(), fixtures::d2_spec(), fixtures::d4_spec(),
                                  fixtures::d7_spec(), fixtures::vesica_spec(), fixtures::limacon_spec()}) {  // limacon: vacuously
    FoldDiagram d = build_diagram(spec);
    for (const auto& lab : enumerate_labelings(d)) {
      AssemblyResult res = enumerate_assemblies(d, lab, 32);
      for (const auto& as : res.assemblies)
        CHECK(build_surface(d, lab, as).chi == euler_char_stratified(d, lab));  // throws otherwise too
    }
  }
}

TEST_CASE("assembly enumeration is deterministic and mirror-stable") {
  FoldDiagram d = build_diagram(fixtures::d7_spec());
  auto labs = enumerate_labelings(d);
  AssemblyResult a = enumerate_assemblies(d, labs[0]);
  AssemblyResult b = enumerate_assemblies(d, labs[0]);
  REQUIRE(a.assemblies.size() == b.assemblies.size());
  for (size_t i = 0; i < a.assemblies.size(); ++i)
    CHECK(a.assemblies[i].gluings == b.assemblies[i].gluings);

  FoldDiagram m = build_diagram(mirror_spec(d));
  auto mlabs = enumerate_labelings(m);
  REQUIRE(mlabs.size() == 1);
  AssemblyResult mres = enumerate_assemblies(m, mlabs[0]);
  REQUIRE(mres.assemblies.size() == a.assemblies.size());
  for (const auto& as : mres.assemblies) {
    CombinatorialSurface s = build_surface(m, mlabs[0], as);
    CHECK(!s.orientable);
    CHECK(s.chi == 1);
  }
}

TEST_CASE("tampered assemblies are rejected") {
  FoldDiagram d = build_diagram(fixtures::d7_spec());
  auto labs = enumerate_labelings(d);
  AssemblyResult res = enumerate_assemblies(d, labs[0]);
  REQUIRE(!res.assemblies.empty());
  SurfaceAssembly bad = res.assemblies[0];
  // break a deltoid edge continuation so the cusp model fails
  for (auto& g : bad.gluings) {
    if (g.continuation.size() == 2) {
      std::swap(g.continuation[0], g.continuation[1]);
      break;
    }
  }
  CHECK_THROWS_AS(build_surface(d, labs[0], bad), DiagramError);
}

TEST_CASE("width bound enforced") {
  FoldDiagram d = build_diagram(fixtures::d1_spec());
  WidthLabeling lab{{0, 12}, {1}};
  lab.widths[d.outer_face] = 0;
  lab.widths[1 - d.outer_face] = 12;
  CHECK_THROWS_AS(enumerate_assemblies(d, lab), DiagramError);
}
