#pragma once

// Shared hand-built diagrams for the test suites. Names follow the worked
// examples used across the docs: d1 is the embedded circle, d2 two nested
// circles, d3 the figure-eight, d4 two circles side by side, d6 a lone
// deltoid (three cusps), d7 a deltoid nested in a circle.

#include <random>

#include "foldwidth/diagram.hpp"

namespace fixtures {

using namespace foldwidth;

inline MapComponent circle_component() {
  MapComponent mc;
  mc.vertices.push_back({VertexKind::smooth, {0, 1}, -1});
  mc.edges.push_back({0, 1});
  return mc;
}

// three cusps in a cycle; wedge_corner 0 points every wedge at the face
// containing darts {1,3,5}
inline MapComponent deltoid_component(int cusp_count = 3) {
  MapComponent mc;
  for (int i = 0; i < cusp_count; ++i)
    mc.vertices.push_back({VertexKind::cusp, {2 * i, 2 * i + 1}, 0});
  for (int i = 0; i < cusp_count; ++i)
    mc.edges.push_back({2 * i + 1, (2 * i + 2) % (2 * cusp_count)});
  return mc;
}

inline DiagramSpec d1_spec() {
  DiagramSpec s;
  s.components.push_back(circle_component());
  s.placements.push_back({kOuter, -1, 0});
  return s;
}

inline DiagramSpec d2_spec() {  // nested circles
  DiagramSpec s;
  s.components.push_back(circle_component());
  s.components.push_back(circle_component());
  s.placements.push_back({kOuter, -1, 0});
  s.placements.push_back({0, 1, 0});
  return s;
}

inline DiagramSpec d4_spec() {  // side-by-side circles
  DiagramSpec s;
  s.components.push_back(circle_component());
  s.components.push_back(circle_component());
  s.placements.push_back({kOuter, -1, 0});
  s.placements.push_back({kOuter, -1, 0});
  return s;
}

inline MapComponent figure_eight_component() {
  MapComponent mc;
  mc.vertices.push_back({VertexKind::crossing, {0, 1, 2, 3}, -1});
  mc.edges.push_back({0, 1});
  mc.edges.push_back({2, 3});
  return mc;
}

inline DiagramSpec d3_spec() {  // figure-eight: outer face is the doubled orbit {0,2}
  DiagramSpec s;
  s.components.push_back(figure_eight_component());
  s.placements.push_back({kOuter, -1, 0});
  return s;
}

inline DiagramSpec limacon_spec() {  // same map, one lobe unbounded
  DiagramSpec s;
  s.components.push_back(figure_eight_component());
  s.placements.push_back({kOuter, -1, 1});
  return s;
}

inline DiagramSpec d6_spec(int cusps = 3) {  // lone deltoid
  DiagramSpec s;
  s.components.push_back(deltoid_component(cusps));
  s.placements.push_back({kOuter, -1, 0});
  return s;
}

inline DiagramSpec d7_spec(int cusps = 3) {  // deltoid inside a circle
  DiagramSpec s;
  s.components.push_back(circle_component());
  s.components.push_back(deltoid_component(cusps));
  s.placements.push_back({kOuter, -1, 0});
  s.placements.push_back({0, 1, 0});
  return s;
}

inline DiagramSpec vesica_spec() {  // two circles crossing twice
  DiagramSpec s;
  MapComponent mc;
  mc.vertices.push_back({VertexKind::crossing, {0, 1, 2, 3}, -1});
  mc.vertices.push_back({VertexKind::crossing, {4, 5, 6, 7}, -1});
  mc.edges = {{0, 5}, {1, 4}, {2, 7}, {3, 6}};
  s.components.push_back(mc);
  s.placements.push_back({kOuter, -1, 0});
  return s;
}

// Random relabeling preserving the embedded diagram: permutes dart ids,
// vertex order, edge order and component order, and rotates rotation lists.
inline DiagramSpec relabel(const DiagramSpec& in, std::mt19937& rng) {
  DiagramSpec out;
  int nc = static_cast<int>(in.components.size());
  std::vector<int> comp_perm(nc);
  std::iota(comp_perm.begin(), comp_perm.end(), 0);
  std::shuffle(comp_perm.begin(), comp_perm.end(), rng);
  std::vector<int> comp_inv(nc);
  for (int i = 0; i < nc; ++i) comp_inv[comp_perm[i]] = i;

  out.components.resize(nc);
  out.placements.resize(nc);
  std::vector<std::map<int, int>> dart_map(nc);  // old comp -> old dart id -> new dart id
  for (int newc = 0; newc < nc; ++newc) {
    int oldc = comp_perm[newc];
    const MapComponent& mc = in.components[oldc];
    int ndarts = 0;
    for (const auto& v : mc.vertices) ndarts += static_cast<int>(v.darts.size());
    std::vector<int> ids(ndarts);
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    // sparse ids now and then
    if (rng() % 3 == 0)
      for (int& x : ids) x = 3 * x + 1;
    int next = 0;
    std::map<int, int>& dm = dart_map[oldc];
    MapComponent nm;
    std::vector<int> vperm(mc.vertices.size());
    std::iota(vperm.begin(), vperm.end(), 0);
    std::shuffle(vperm.begin(), vperm.end(), rng);
    for (int vi : vperm) {
      Vertex v = mc.vertices[vi];
      int deg = static_cast<int>(v.darts.size());
      int shift = static_cast<int>(rng() % deg);
      std::vector<int> rot(deg);
      for (int i = 0; i < deg; ++i) rot[i] = v.darts[(shift + i) % deg];
      v.darts = rot;
      if (v.kind == VertexKind::cusp) v.wedge_corner = ((v.wedge_corner - shift) % deg + deg) % deg;
      for (int& dptr : v.darts) {
        dm[dptr] = ids[next++];
        dptr = dm[dptr];
      }
      nm.vertices.push_back(std::move(v));
    }
    for (auto [a, b] : mc.edges) {
      if (rng() % 2) std::swap(a, b);
      nm.edges.push_back({dm[a], dm[b]});
    }
    std::shuffle(nm.edges.begin(), nm.edges.end(), rng);
    out.components[newc] = std::move(nm);
  }
  // placements: remap component indices and face ids (face id = min dart of orbit,
  // recompute through built components)
  std::vector<BuiltComponent> old_built, new_built;
  for (int c = 0; c < nc; ++c) old_built.push_back(detail::build_component(in.components[c], c));
  for (int c = 0; c < nc; ++c) new_built.push_back(detail::build_component(out.components[c], c));
  auto face_in_new = [&](int oldc, int old_face_id) {
    int of = old_built[oldc].face_index_of_id(old_face_id);
    int some_old_dart = old_built[oldc].dart_ids[old_built[oldc].faces[of].orbit.front()];
    int newc = comp_inv[oldc];
    int nd = new_built[newc].dart_of_id(dart_map[oldc].at(some_old_dart));
    return new_built[newc].faces[new_built[newc].dart_face[nd]].min_dart_id;
  };
  for (int oldc = 0; oldc < nc; ++oldc) {
    const Placement& p = in.placements[oldc];
    Placement np;
    np.outer_face = face_in_new(oldc, p.outer_face);
    if (p.parent == kOuter) {
      np.parent = kOuter;
    } else {
      np.parent = comp_inv[p.parent];
      np.parent_face = face_in_new(p.parent, p.parent_face);
    }
    out.placements[comp_inv[oldc]] = np;
  }
  return out;
}

}  // namespace fixtures
