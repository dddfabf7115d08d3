#pragma once

// Canonical codes for fold diagrams: equal codes iff the diagrams are
// isomorphic as embedded planar diagrams (orientation-preserving), with
// smooth markers forgotten. The code is a minimal BFS dart-code per map
// component, extended by the designated outer face and the nesting tree,
// minimized over all root darts; with reflect on, the minimum of the code
// and the mirror image's code is taken.

#include <cassert>
#include <queue>

#include "diagram.hpp"

namespace foldwidth {

struct CanonicalCode {
  std::string bytes;
  bool operator==(const CanonicalCode& o) const { return bytes == o.bytes; }
  bool operator<(const CanonicalCode& o) const { return bytes < o.bytes; }
};

namespace detail {

// Remove smooth markers from a component, keeping original dart ids.
// Returns false if the component reduces to a bare circle.
inline bool suppress_smooth(MapComponent& mc) {
  for (;;) {
    int smooth = -1;
    for (size_t i = 0; i < mc.vertices.size(); ++i)
      if (mc.vertices[i].kind == VertexKind::smooth) { smooth = static_cast<int>(i); break; }
    if (smooth < 0) return true;
    int a = mc.vertices[smooth].darts[0], b = mc.vertices[smooth].darts[1];
    int ea = -1, eb = -1;
    for (size_t e = 0; e < mc.edges.size(); ++e) {
      if (mc.edges[e].first == a || mc.edges[e].second == a) ea = static_cast<int>(e);
      if (mc.edges[e].first == b || mc.edges[e].second == b) eb = static_cast<int>(e);
    }
    if (ea == eb) return false;  // the loop edge: a bare circle
    int x = mc.edges[ea].first == a ? mc.edges[ea].second : mc.edges[ea].first;
    int y = mc.edges[eb].first == b ? mc.edges[eb].second : mc.edges[eb].first;
    if (eb < ea) std::swap(ea, eb);
    mc.edges.erase(mc.edges.begin() + eb);
    mc.edges.erase(mc.edges.begin() + ea);
    mc.edges.push_back({x, y});
    mc.vertices.erase(mc.vertices.begin() + smooth);
    if (mc.vertices.empty()) return false;
  }
}

// BFS dart-code of a connected component for a fixed root dart.
// Appends tokens to `out`; fills face ranks (canonical face numbering) and
// exposes dart numbering for corner bookkeeping.
struct WalkCode {
  std::string tokens;
  std::vector<int> face_rank;  // by built face index
};

inline WalkCode walk_code(const MapComponent& mc, const BuiltComponent& bc, int root) {
  int n = static_cast<int>(bc.dart_ids.size());
  std::vector<int> vlabel(mc.vertices.size(), -1);
  std::vector<int> ventry(mc.vertices.size(), -1);
  std::vector<int> dnum(n, -1);
  std::vector<int> order;  // vertices in label order
  vlabel[bc.dart_vertex[root]] = 0;
  ventry[bc.dart_vertex[root]] = root;
  order.push_back(bc.dart_vertex[root]);
  int next_label = 1;
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int v = order[qi];
    const Vertex& vx = mc.vertices[v];
    int deg = static_cast<int>(vx.darts.size());
    int ep = bc.dart_pos[ventry[v]];
    for (int i = 0; i < deg; ++i) {
      int dd = bc.dart_of_id(vx.darts[(ep + i) % deg]);
      dnum[dd] = vlabel[v] * 4 + i;
      int p = bc.alpha[dd];
      int w = bc.dart_vertex[p];
      if (vlabel[w] < 0) {
        vlabel[w] = next_label++;
        ventry[w] = p;
        order.push_back(w);
      }
    }
  }
  WalkCode wc;
  for (int v : order) {
    const Vertex& vx = mc.vertices[v];
    int deg = static_cast<int>(vx.darts.size());
    int ep = bc.dart_pos[ventry[v]];
    switch (vx.kind) {
      case VertexKind::crossing: wc.tokens += 'x'; break;
      case VertexKind::cusp: {
        int rel = ((vx.wedge_corner - ep) % deg + deg) % deg;
        wc.tokens += 'c';
        wc.tokens += static_cast<char>('0' + rel);
        break;
      }
      case VertexKind::smooth: wc.tokens += 's'; break;  // only for unsuppressed use
    }
    for (int i = 0; i < deg; ++i) {
      int dd = bc.dart_of_id(vx.darts[(ep + i) % deg]);
      wc.tokens += '.';
      wc.tokens += std::to_string(dnum[bc.alpha[dd]]);
    }
    wc.tokens += ';';
  }
  // canonical face order: by minimal dart number in the orbit
  int nf = static_cast<int>(bc.faces.size());
  std::vector<std::pair<int, int>> fmin(nf);
  for (int f = 0; f < nf; ++f) {
    int m = INT32_MAX;
    for (int dd : bc.faces[f].orbit) m = std::min(m, dnum[dd]);
    fmin[f] = {m, f};
  }
  std::sort(fmin.begin(), fmin.end());
  wc.face_rank.assign(nf, -1);
  for (int r = 0; r < nf; ++r) wc.face_rank[fmin[r].second] = r;
  return wc;
}

// Containment-normalized parent of each component: the global face its
// designated outer face belongs to, expressed through that face's host.
struct Nesting {
  // per component: parent component (or kOuter) and the parent's built face index
  std::vector<int> parent;
  std::vector<int> parent_face_index;
  std::vector<std::vector<int>> children;  // by component
  std::vector<int> roots;
};

inline Nesting nesting_of(const FoldDiagram& d) {
  Nesting nest;
  int nc = d.num_components();
  nest.parent.assign(nc, kOuter);
  nest.parent_face_index.assign(nc, -1);
  nest.children.resize(nc);
  for (int c = 0; c < nc; ++c) {
    int designated = d.comps[c].face_index_of_id(d.spec.placements[c].outer_face);
    int g = d.global_face_of(c, designated);
    if (g == d.outer_face) {
      nest.roots.push_back(c);
    } else {
      auto [pc, pf] = d.face_host[g];
      nest.parent[c] = pc;
      nest.parent_face_index[c] = pf;
      nest.children[pc].push_back(c);
    }
  }
  return nest;
}

inline std::string component_subtree_code(const FoldDiagram& d, const Nesting& nest, int c,
                                          std::vector<std::string>& memo) {
  if (!memo[c].empty()) return memo[c];
  // children codes grouped by the parent-side built face index
  std::map<int, std::vector<std::string>> kids;  // built face index -> codes
  for (int ch : nest.children[c])
    kids[nest.parent_face_index[ch]].push_back(component_subtree_code(d, nest, ch, memo));
  for (auto& [f, v] : kids) std::sort(v.begin(), v.end());

  MapComponent mc = d.spec.components[c];
  bool nontrivial = suppress_smooth(mc);
  if (!nontrivial) {
    // bare circle: all children sit on its single bounded side
    std::string code = "O(";
    std::vector<std::string> all;
    for (auto& [f, v] : kids) for (auto& s : v) all.push_back(s);
    std::sort(all.begin(), all.end());
    for (auto& s : all) code += s;
    code += ')';
    return memo[c] = code;
  }

  BuiltComponent bc = detail::build_component(mc, c);
  // map original built-face indices to suppressed built-face indices via a
  // surviving dart id (every suppressed face keeps at least one)
  std::vector<int> orig_to_new(d.comps[c].faces.size(), -1);
  for (size_t of = 0; of < d.comps[c].faces.size(); ++of) {
    for (int dd : d.comps[c].faces[of].orbit) {
      int id = d.comps[c].dart_ids[dd];
      if (bc.has_dart_id(id)) { orig_to_new[of] = bc.dart_face[bc.dart_of_id(id)]; break; }
    }
  }
  int designated_new = orig_to_new[d.comps[c].face_index_of_id(d.spec.placements[c].outer_face)];

  std::string best;
  int n = static_cast<int>(bc.dart_ids.size());
  for (int root = 0; root < n; ++root) {
    WalkCode wc = walk_code(mc, bc, root);
    std::string code = wc.tokens;
    code += "o";
    code += std::to_string(wc.face_rank[designated_new]);
    for (auto& [of, v] : kids) {
      code += "[";
      code += std::to_string(wc.face_rank[orig_to_new[of]]);
      code += ":";
      for (auto& s : v) code += s;
      code += "]";
    }
    if (best.empty() || code < best) best = std::move(code);
  }
  return memo[c] = best;
}

inline std::string diagram_code_oriented(const FoldDiagram& d) {
  Nesting nest = nesting_of(d);
  std::vector<std::string> memo(d.num_components());
  std::vector<std::string> roots;
  for (int r : nest.roots) roots.push_back(component_subtree_code(d, nest, r, memo));
  std::sort(roots.begin(), roots.end());
  std::string out = "{";
  for (auto& s : roots) out += s;
  out += "}";
  return out;
}

}  // namespace detail

// Mirror image of a diagram: rotation lists reversed, cusp wedges remapped,
// placement face references carried across by corner correspondence.
inline DiagramSpec mirror_spec(const FoldDiagram& d) {
  DiagramSpec m = d.spec;
  for (auto& mc : m.components)
    for (auto& v : mc.vertices) {
      std::reverse(v.darts.begin(), v.darts.end());
      if (v.kind == VertexKind::cusp) {
        int deg = static_cast<int>(v.darts.size());
        v.wedge_corner = ((deg - 2 - v.wedge_corner) % deg + deg) % deg;
      }
    }
  // rebuild components to locate mirrored faces, then remap placement faces
  std::vector<BuiltComponent> mirrored;
  for (size_t c = 0; c < m.components.size(); ++c)
    mirrored.push_back(detail::build_component(m.components[c], static_cast<int>(c)));

  auto remap_face = [&](int c, int face_id) {
    const BuiltComponent& ob = d.comps[c];
    int of = ob.face_index_of_id(face_id);
    // take a corner of the original face: (vertex, corner c0) with
    // face_at_corner = of; its mirror corner is (vertex, deg-2-c0).
    for (size_t vi = 0; vi < d.spec.components[c].vertices.size(); ++vi) {
      const Vertex& v = d.spec.components[c].vertices[vi];
      int deg = static_cast<int>(v.darts.size());
      for (int corner = 0; corner < deg; ++corner) {
        int dd = ob.dart_of_id(v.darts[(corner + 1) % deg]);
        if (ob.dart_face[dd] != of) continue;
        int mc_corner = ((deg - 2 - corner) % deg + deg) % deg;
        const Vertex& mv = m.components[c].vertices[vi];
        int mdd = mirrored[c].dart_of_id(mv.darts[(mc_corner + 1) % deg]);
        return mirrored[c].faces[mirrored[c].dart_face[mdd]].min_dart_id;
      }
    }
    fail(ErrorKind::DanglingPlacementFace, "mirror face remap failed");
  };

  for (size_t c = 0; c < m.placements.size(); ++c) {
    Placement& p = m.placements[c];
    p.outer_face = remap_face(static_cast<int>(c), p.outer_face);
    if (p.parent != kOuter) p.parent_face = remap_face(p.parent, p.parent_face);
  }
  return m;
}

inline CanonicalCode canonical_code(const FoldDiagram& d, bool reflect = false) {
  std::string code = detail::diagram_code_oriented(d);
  if (reflect) {
    FoldDiagram md = build_diagram(mirror_spec(d));
    std::string mcode = detail::diagram_code_oriented(md);
    if (mcode < code) code = std::move(mcode);
  }
  return CanonicalCode{std::move(code)};
}

}  // namespace foldwidth
