#pragma once

// Combinatorial model of the singular image of a generic surface-to-plane
// projection: an embedded planar map whose vertices are fold crossings,
// cusps, or artificial smooth markers, together with a nesting placement
// forest for disconnected diagrams.
//
// Conventions used throughout:
//   - every vertex stores its darts in counterclockwise rotation order;
//   - alpha(d) is the dart at the other end of d's edge;
//   - faces are the orbits of next(d) = sigma(alpha(d)), where sigma is the
//     ccw successor within the rotation list;
//   - corner c of a vertex is the sector swept ccw from rotation[c] to
//     rotation[c+1]; the face at that corner is face_of(rotation[c+1]);
//   - for a dart d traversed away from its vertex, face_of(d) lies on its
//     right and face_of(alpha(d)) on its left.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace foldwidth {

enum class VertexKind { crossing, cusp, smooth };

enum class ErrorKind {
  UnpairedDart,
  BadDegree,
  EulerFailure,
  CyclicPlacement,
  DanglingPlacementFace,
  EmptyDiagram,
  LabelingMismatch,
  BoundExceeded,
  InconsistentAssembly,
  RealizationMismatch,
  InvalidNesting,
  DisconnectedSpec,
  SyntaxError,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnpairedDart: return "UnpairedDart";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::EulerFailure: return "EulerFailure";
    case ErrorKind::CyclicPlacement: return "CyclicPlacement";
    case ErrorKind::DanglingPlacementFace: return "DanglingPlacementFace";
    case ErrorKind::EmptyDiagram: return "EmptyDiagram";
    case ErrorKind::LabelingMismatch: return "LabelingMismatch";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::InconsistentAssembly: return "InconsistentAssembly";
    case ErrorKind::RealizationMismatch: return "RealizationMismatch";
    case ErrorKind::InvalidNesting: return "InvalidNesting";
    case ErrorKind::DisconnectedSpec: return "DisconnectedSpec";
    case ErrorKind::SyntaxError: return "SyntaxError";
  }
  return "?";
}

class DiagramError : public std::runtime_error {
 public:
  DiagramError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw DiagramError(kind, what);
}

// ---------------------------------------------------------------- raw spec

struct Vertex {
  VertexKind kind = VertexKind::smooth;
  std::vector<int> darts;  // ccw rotation, dart ids
  int wedge_corner = -1;   // cusps only: 0 or 1
};

struct MapComponent {
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;  // unordered dart-id pairs
};

constexpr int kOuter = -1;

struct Placement {
  int parent = kOuter;  // component index, or kOuter
  int parent_face = -1; // local face id of parent (min dart in orbit); unused when parent == kOuter
  int outer_face = -1;  // local face id of this component that faces its surroundings
};

struct DiagramSpec {
  std::vector<MapComponent> components;
  std::vector<Placement> placements;  // one per component
};

// ------------------------------------------------------------- built form

struct LocalFace {
  int min_dart_id = -1;    // the face id used by placements and documents
  std::vector<int> orbit;  // dense dart indices in traversal order
};

struct BuiltComponent {
  std::vector<int> dart_ids;        // dense index -> id
  std::vector<int> dart_index;     // id -> dense index, -1 gaps
  std::vector<int> dart_vertex;     // dense -> vertex index
  std::vector<int> dart_pos;        // dense -> position in rotation list
  std::vector<int> alpha;           // dense -> dense
  std::vector<int> dart_edge;       // dense -> edge index
  std::vector<LocalFace> faces;     // sorted by min_dart_id
  std::vector<int> dart_face;       // dense -> face index

  bool has_dart_id(int id) const {
    return id >= 0 && id < static_cast<int>(dart_index.size()) && dart_index[id] >= 0;
  }
  int dart_of_id(int id) const {
    if (!has_dart_id(id)) fail(ErrorKind::UnpairedDart, "unknown dart id " + std::to_string(id));
    return dart_index[id];
  }
  int face_index_of_id(int face_id) const {
    for (size_t i = 0; i < faces.size(); ++i)
      if (faces[i].min_dart_id == face_id) return static_cast<int>(i);
    return -1;
  }
};

struct GlobalFace {
  bool bounded = true;
  // members as (component, local face index), sorted
  std::vector<std::pair<int, int>> members;
  int circuits = 0;  // boundary circuits = number of member local faces
  int chi_c() const { return bounded ? 2 - circuits : 0; }
};

// One circle of the singular set's image, traced through the diagram.
struct Strand {
  int component = 0;
  std::vector<int> forward;  // dense darts of the chosen forward orbit, starting at the minimal dart id
};

struct FoldDiagram {
  DiagramSpec spec;
  std::vector<BuiltComponent> comps;
  std::vector<GlobalFace> faces;     // deterministic order, see build_diagram
  int outer_face = -1;               // index into faces
  std::vector<Strand> strands;
  // host of a bounded global face: the unique member that is not some
  // component's designated outer face (the side it is seen from).
  std::vector<std::pair<int, int>> face_host;  // per face: (comp, local face) or (-1,-1) for the outer face

  int crossings = 0;
  int cusps = 0;
  int smooth_marks = 0;

  int num_components() const { return static_cast<int>(comps.size()); }

  // global face index of a (component, local face index) pair
  int global_face_of(int c, int lf) const { return face_of_local_[c][lf]; }

  int sigma(int c, int d) const {
    const auto& v = spec.components[c].vertices[comps[c].dart_vertex[d]];
    int deg = static_cast<int>(v.darts.size());
    int p = (comps[c].dart_pos[d] + 1) % deg;
    return comps[c].dart_of_id(v.darts[p]);
  }
  // continue along the strand through the vertex that dart d belongs to
  int strand_continue(int c, int d) const {
    const auto& v = spec.components[c].vertices[comps[c].dart_vertex[d]];
    int deg = static_cast<int>(v.darts.size());
    int step = (v.kind == VertexKind::crossing) ? 2 : 1;
    int p = (comps[c].dart_pos[d] + step) % deg;
    return comps[c].dart_of_id(v.darts[p]);
  }
  // face on the right of dart d (traversed away from its vertex)
  int right_face(int c, int d) const { return global_face_of(c, comps[c].dart_face[d]); }
  int left_face(int c, int d) const { return global_face_of(c, comps[c].dart_face[comps[c].alpha[d]]); }

  // face at corner (vertex, corner index) of component c
  int face_at_corner(int c, int vtx, int corner) const {
    const auto& v = spec.components[c].vertices[vtx];
    int deg = static_cast<int>(v.darts.size());
    int d = comps[c].dart_of_id(v.darts[(corner + 1) % deg]);
    return global_face_of(c, comps[c].dart_face[d]);
  }

  // strand lookup: per (component, dense dart): strand index, and whether the
  // dart lies on the forward orbit of its strand
  int strand_of(int c, int d) const { return strand_of_[c][d]; }
  bool dart_forward(int c, int d) const { return dart_forward_[c][d]; }

  // filled by build_diagram
  std::vector<std::vector<int>> face_of_local_;
  std::vector<std::vector<int>> strand_of_;
  std::vector<std::vector<uint8_t>> dart_forward_;
};

namespace detail {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

inline BuiltComponent build_component(const MapComponent& mc, int comp_index) {
  BuiltComponent b;
  const std::string where = "component " + std::to_string(comp_index);
  if (mc.vertices.empty()) fail(ErrorKind::EmptyDiagram, where + " has no vertices");

  int max_id = -1;
  for (const auto& v : mc.vertices)
    for (int id : v.darts) {
      if (id < 0) fail(ErrorKind::UnpairedDart, where + " has negative dart id");
      if (id > 1000000) fail(ErrorKind::UnpairedDart, where + " dart id too large");
      max_id = std::max(max_id, id);
    }
  b.dart_index.assign(max_id + 1, -1);
  for (size_t vi = 0; vi < mc.vertices.size(); ++vi) {
    const Vertex& v = mc.vertices[vi];
    size_t want = v.kind == VertexKind::crossing ? 4 : 2;
    if (v.darts.size() != want)
      fail(ErrorKind::BadDegree, where + " vertex " + std::to_string(vi) + " has " +
                                     std::to_string(v.darts.size()) + " darts");
    if (v.kind == VertexKind::cusp) {
      if (v.wedge_corner != 0 && v.wedge_corner != 1)
        fail(ErrorKind::BadDegree, where + " cusp vertex " + std::to_string(vi) + " needs wedge_corner 0 or 1");
    } else if (v.wedge_corner != -1) {
      fail(ErrorKind::BadDegree, where + " non-cusp vertex " + std::to_string(vi) + " carries wedge_corner");
    }
    for (size_t p = 0; p < v.darts.size(); ++p) {
      int id = v.darts[p];
      if (b.dart_index[id] >= 0)
        fail(ErrorKind::UnpairedDart, where + " dart " + std::to_string(id) + " listed twice");
      int dense = static_cast<int>(b.dart_ids.size());
      b.dart_index[id] = dense;
      b.dart_ids.push_back(id);
      b.dart_vertex.push_back(static_cast<int>(vi));
      b.dart_pos.push_back(static_cast<int>(p));
    }
  }

  int n = static_cast<int>(b.dart_ids.size());
  b.alpha.assign(n, -1);
  b.dart_edge.assign(n, -1);
  for (size_t ei = 0; ei < mc.edges.size(); ++ei) {
    auto [ia, ib] = mc.edges[ei];
    if (ia == ib) fail(ErrorKind::UnpairedDart, where + " edge pairs dart " + std::to_string(ia) + " with itself");
    if (!b.has_dart_id(ia) || !b.has_dart_id(ib))
      fail(ErrorKind::UnpairedDart, where + " edge references unknown dart");
    int a = b.dart_index[ia], c = b.dart_index[ib];
    if (b.alpha[a] != -1 || b.alpha[c] != -1)
      fail(ErrorKind::UnpairedDart, where + " dart paired twice by edges");
    b.alpha[a] = c;
    b.alpha[c] = a;
    b.dart_edge[a] = b.dart_edge[c] = static_cast<int>(ei);
  }
  for (int d = 0; d < n; ++d)
    if (b.alpha[d] == -1)
      fail(ErrorKind::UnpairedDart, where + " dart " + std::to_string(b.dart_ids[d]) + " has no edge");

  // connectivity over vertices through edges
  {
    std::vector<char> seen(mc.vertices.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int id : mc.vertices[v].darts) {
        int w = b.dart_vertex[b.alpha[b.dart_index[id]]];
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      fail(ErrorKind::EulerFailure, where + " is not connected");
  }

  // faces: orbits of next(d) = sigma(alpha(d))
  b.dart_face.assign(n, -1);
  std::vector<LocalFace> faces;
  for (int d0 = 0; d0 < n; ++d0) {
    if (b.dart_face[d0] != -1) continue;
    LocalFace f;
    int d = d0;
    do {
      b.dart_face[d] = static_cast<int>(faces.size());
      f.orbit.push_back(d);
      // next = sigma(alpha(d))
      int a = b.alpha[d];
      const Vertex& v = mc.vertices[b.dart_vertex[a]];
      int deg = static_cast<int>(v.darts.size());
      d = b.dart_index[v.darts[(b.dart_pos[a] + 1) % deg]];
    } while (d != d0);
    f.min_dart_id = b.dart_ids[*std::min_element(
        f.orbit.begin(), f.orbit.end(),
        [&](int x, int y) { return b.dart_ids[x] < b.dart_ids[y]; })];
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(),
            [](const LocalFace& x, const LocalFace& y) { return x.min_dart_id < y.min_dart_id; });
  std::vector<int> remap(faces.size());
  for (size_t i = 0; i < faces.size(); ++i)
    for (int d : faces[i].orbit) b.dart_face[d] = static_cast<int>(i);
  (void)remap;
  b.faces = std::move(faces);

  int V = static_cast<int>(mc.vertices.size());
  int E = static_cast<int>(mc.edges.size());
  int F = static_cast<int>(b.faces.size());
  if (V - E + F != 2)
    fail(ErrorKind::EulerFailure, where + ": V-E+F = " + std::to_string(V - E + F) +
                                      ", rotation system is not planar");
  return b;
}

}  // namespace detail

// Validates a raw spec and computes faces, global faces, and strands.
inline FoldDiagram build_diagram(const DiagramSpec& spec) {
  if (spec.components.empty()) fail(ErrorKind::EmptyDiagram, "diagram has no components");
  if (spec.placements.size() != spec.components.size())
    fail(ErrorKind::DanglingPlacementFace, "need exactly one placement per component");

  FoldDiagram d;
  d.spec = spec;
  for (size_t c = 0; c < spec.components.size(); ++c)
    d.comps.push_back(detail::build_component(spec.components[c], static_cast<int>(c)));

  int nc = d.num_components();
  // placement indices and faces
  for (int c = 0; c < nc; ++c) {
    const Placement& p = spec.placements[c];
    if (p.parent != kOuter && (p.parent < 0 || p.parent >= nc || p.parent == c))
      fail(ErrorKind::DanglingPlacementFace, "placement of component " + std::to_string(c) + " has bad parent");
    if (d.comps[c].face_index_of_id(p.outer_face) < 0)
      fail(ErrorKind::DanglingPlacementFace,
           "outer_face " + std::to_string(p.outer_face) + " is not a face of component " + std::to_string(c));
    if (p.parent != kOuter && d.comps[p.parent].face_index_of_id(p.parent_face) < 0)
      fail(ErrorKind::DanglingPlacementFace,
           "parent_face " + std::to_string(p.parent_face) + " is not a face of component " +
               std::to_string(p.parent));
  }
  // forest check
  for (int c = 0; c < nc; ++c) {
    int cur = c, steps = 0;
    while (cur != kOuter) {
      cur = spec.placements[cur].parent;
      if (++steps > nc) fail(ErrorKind::CyclicPlacement, "placement parents contain a cycle");
    }
  }

  // global faces: union-find over (component, local face) plus a virtual
  // outer node; each component's designated outer face merges with its
  // parent_face (or with the outer node).
  std::vector<int> base(nc + 1, 0);
  for (int c = 0; c < nc; ++c) base[c + 1] = base[c] + static_cast<int>(d.comps[c].faces.size());
  int total = base[nc];
  detail::UnionFind uf(total + 1);
  const int outer_node = total;
  for (int c = 0; c < nc; ++c) {
    const Placement& p = spec.placements[c];
    int self = base[c] + d.comps[c].face_index_of_id(p.outer_face);
    if (p.parent == kOuter)
      uf.unite(self, outer_node);
    else
      uf.unite(self, base[p.parent] + d.comps[p.parent].face_index_of_id(p.parent_face));
  }

  std::map<int, std::vector<std::pair<int, int>>> classes;  // root -> members
  for (int c = 0; c < nc; ++c)
    for (size_t lf = 0; lf < d.comps[c].faces.size(); ++lf)
      classes[uf.find(base[c] + static_cast<int>(lf))].push_back({c, static_cast<int>(lf)});

  std::vector<std::pair<std::pair<int, int>, int>> order;  // (min member key, root)
  for (auto& [root, members] : classes) {
    std::sort(members.begin(), members.end());
    order.push_back({{members.front().first, d.comps[members.front().first].faces[members.front().second].min_dart_id},
                     root});
  }
  std::sort(order.begin(), order.end());

  d.face_of_local_.resize(nc);
  for (int c = 0; c < nc; ++c) d.face_of_local_[c].assign(d.comps[c].faces.size(), -1);
  int outer_root = uf.find(outer_node);
  for (auto& [key, root] : order) {
    (void)key;
    GlobalFace g;
    g.members = classes[root];
    g.circuits = static_cast<int>(g.members.size());
    g.bounded = (root != outer_root);
    int gid = static_cast<int>(d.faces.size());
    if (!g.bounded) d.outer_face = gid;
    for (auto& [c, lf] : g.members) d.face_of_local_[c][lf] = gid;
    d.faces.push_back(std::move(g));
  }
  if (d.outer_face < 0) fail(ErrorKind::CyclicPlacement, "no component is placed in the outer region");

  // hosts: the unique member of a bounded face that is not a designated outer
  d.face_host.assign(d.faces.size(), {-1, -1});
  for (size_t g = 0; g < d.faces.size(); ++g) {
    if (!d.faces[g].bounded) continue;
    for (auto& [c, lf] : d.faces[g].members) {
      int designated = d.comps[c].face_index_of_id(spec.placements[c].outer_face);
      if (lf != designated) {
        if (d.face_host[g].first != -1)
          fail(ErrorKind::CyclicPlacement, "global face with two host sides");
        d.face_host[g] = {c, lf};
      }
    }
    if (d.face_host[g].first == -1)
      fail(ErrorKind::CyclicPlacement, "bounded global face without a host side");
  }

  // strands: orbits of f(x) = strand_continue(alpha(x)); each undirected
  // strand is a pair of mutually reversed orbits.
  d.strand_of_.resize(nc);
  d.dart_forward_.resize(nc);
  for (int c = 0; c < nc; ++c) {
    int n = static_cast<int>(d.comps[c].dart_ids.size());
    d.strand_of_[c].assign(n, -1);
    d.dart_forward_[c].assign(n, 0);
  }
  for (int c = 0; c < nc; ++c) {
    const auto& bc = d.comps[c];
    int n = static_cast<int>(bc.dart_ids.size());
    std::vector<int> orbit_of(n, -1);
    std::vector<std::vector<int>> orbits;
    for (int d0 = 0; d0 < n; ++d0) {
      if (orbit_of[d0] != -1) continue;
      std::vector<int> orb;
      int x = d0;
      do {
        orbit_of[x] = static_cast<int>(orbits.size());
        orb.push_back(x);
        x = d.strand_continue(c, bc.alpha[x]);
      } while (x != d0);
      orbits.push_back(std::move(orb));
    }
    std::vector<char> used(orbits.size(), 0);
    // deterministic: scan darts by dense index (dense order follows vertex/rotation listing)
    std::vector<std::pair<int, std::pair<int, int>>> starts;  // (min dart id, (orbit, reverse orbit))
    for (size_t o = 0; o < orbits.size(); ++o) {
      if (used[o]) continue;
      int rev = orbit_of[bc.alpha[orbits[o][0]]];
      used[o] = used[rev] = 1;
      int best = INT32_MAX, bwhich = static_cast<int>(o);
      for (int x : orbits[o]) best = std::min(best, bc.dart_ids[x]);
      for (int x : orbits[rev])
        if (bc.dart_ids[x] < best) { best = bc.dart_ids[x]; bwhich = rev; }
      starts.push_back({best, {bwhich, static_cast<int>(o) == bwhich ? rev : static_cast<int>(o)}});
    }
    std::sort(starts.begin(), starts.end());
    for (auto& [mindart, pair] : starts) {
      auto [fwd, rev] = pair;
      Strand s;
      s.component = c;
      // start the cycle at the minimal dart id
      auto& orb = orbits[fwd];
      int pos = 0;
      for (size_t i = 0; i < orb.size(); ++i)
        if (bc.dart_ids[orb[i]] == mindart) pos = static_cast<int>(i);
      for (size_t i = 0; i < orb.size(); ++i) s.forward.push_back(orb[(pos + i) % orb.size()]);
      int sid = static_cast<int>(d.strands.size());
      for (int x : orbits[fwd]) { d.strand_of_[c][x] = sid; d.dart_forward_[c][x] = 1; }
      for (int x : orbits[rev]) d.strand_of_[c][x] = sid;
      d.strands.push_back(std::move(s));
    }
  }

  for (const auto& mc : spec.components)
    for (const auto& v : mc.vertices) {
      if (v.kind == VertexKind::crossing) ++d.crossings;
      else if (v.kind == VertexKind::cusp) ++d.cusps;
      else ++d.smooth_marks;
    }
  return d;
}

// Number of map components that carry no crossing vertex (bare or cusped
// circles); this is what enumeration bounds call "loops".
inline int loop_components(const FoldDiagram& d) {
  int loops = 0;
  for (const auto& mc : d.spec.components) {
    bool crossing = false;
    for (const auto& v : mc.vertices) crossing |= (v.kind == VertexKind::crossing);
    if (!crossing) ++loops;
  }
  return loops;
}

inline int num_fold_components(const FoldDiagram& d) { return static_cast<int>(d.strands.size()); }

}  // namespace foldwidth
