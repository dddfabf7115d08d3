#pragma once

// Reconstruction of the covered surface over a labeled diagram. Over every
// edge the two extra sheets of the high side fold into each other and the
// remaining sheets continue across; an assembly is a choice of that data for
// every edge, subject to the local models at crossings (sheets continue
// straight through the other strand) and cusps (the two branches' fold pairs
// share exactly one sheet). Assemblies are deduplicated up to per-face sheet
// renumbering.

#include <functional>
#include <unordered_set>

#include "invariants.hpp"

namespace foldwidth {

struct EdgeGluing {
  std::pair<int, int> fold_pair{-1, -1};  // high-side sheets, first < second
  std::vector<int> continuation;          // low sheet -> high sheet
  bool operator==(const EdgeGluing& o) const {
    return fold_pair == o.fold_pair && continuation == o.continuation;
  }
};

struct SurfaceAssembly {
  std::vector<EdgeGluing> gluings;  // by global edge index (see AssemblyContext)
};

struct AssemblyResult {
  std::vector<SurfaceAssembly> assemblies;
  bool complete = true;  // false when max_results truncated the search
};

namespace detail {

struct EdgeInfo {
  int comp = 0, edge = 0;
  int low_face = -1, high_face = -1;  // global face ids
  int n = 0;                          // low width
};

struct CrossingInfo {
  int comp = 0, vertex = 0;
  int n = 0;
  // global edge ids by role: e[0]=A|B, e[1]=B|C, e[2]=D|C, e[3]=A|D
  // with corner widths A=n, B=n+2, C=n+4, D=n+2 in ccw order from the n corner
  int e1 = -1, e2 = -1, e3 = -1, e4 = -1;
  int corner_a = 0;  // ccw corner index carrying width n
};

struct CuspInfo {
  int comp = 0, vertex = 0;
  int e1 = -1, e2 = -1;  // the two branches, both low|wedge
  int n = 0;             // low width
};

struct SmoothInfo {
  int comp = 0, vertex = 0;
  int e1 = -1, e2 = -1;
};

struct AssemblyContext {
  const FoldDiagram* fd = nullptr;
  const WidthLabeling* lab = nullptr;
  std::vector<EdgeInfo> edges;
  std::vector<std::vector<int>> edge_id;  // per comp: edge index -> global id
  std::vector<CrossingInfo> crossings;
  std::vector<CuspInfo> cusps;
  std::vector<SmoothInfo> smooths;
};

inline AssemblyContext make_context(const FoldDiagram& fd, const WidthLabeling& lab) {
  if (lab.widths.size() != fd.faces.size())
    fail(ErrorKind::LabelingMismatch, "labeling face count does not match diagram");
  AssemblyContext ctx;
  ctx.fd = &fd;
  ctx.lab = &lab;
  ctx.edge_id.resize(fd.num_components());
  for (int c = 0; c < fd.num_components(); ++c) {
    const auto& bc = fd.comps[c];
    int ne = static_cast<int>(fd.spec.components[c].edges.size());
    ctx.edge_id[c].assign(ne, -1);
    for (int e = 0; e < ne; ++e) {
      int d0 = bc.dart_of_id(fd.spec.components[c].edges[e].first);
      EdgeInfo info;
      info.comp = c;
      info.edge = e;
      int fa = fd.right_face(c, d0), fb = fd.left_face(c, d0);
      if (lab.widths[fa] > lab.widths[fb]) std::swap(fa, fb);
      info.low_face = fa;
      info.high_face = fb;
      info.n = lab.widths[fa];
      ctx.edge_id[c][e] = static_cast<int>(ctx.edges.size());
      ctx.edges.push_back(info);
    }
  }
  for (int c = 0; c < fd.num_components(); ++c) {
    const auto& bc = fd.comps[c];
    for (size_t vi = 0; vi < fd.spec.components[c].vertices.size(); ++vi) {
      const Vertex& v = fd.spec.components[c].vertices[vi];
      auto edge_of_dart = [&](int pos) {
        int dd = bc.dart_of_id(v.darts[((pos % static_cast<int>(v.darts.size())) +
                                        static_cast<int>(v.darts.size())) %
                                       static_cast<int>(v.darts.size())]);
        return ctx.edge_id[c][bc.dart_edge[dd]];
      };
      if (v.kind == VertexKind::crossing) {
        CrossingInfo ci;
        ci.comp = c;
        ci.vertex = static_cast<int>(vi);
        int a = 0, best = INT32_MAX;
        for (int corner = 0; corner < 4; ++corner) {
          int w = lab.widths[fd.face_at_corner(c, static_cast<int>(vi), corner)];
          if (w < best) { best = w; a = corner; }
        }
        ci.corner_a = a;
        ci.n = best;
        ci.e1 = edge_of_dart(a + 1);
        ci.e2 = edge_of_dart(a + 2);
        ci.e3 = edge_of_dart(a + 3);
        ci.e4 = edge_of_dart(a);
        ctx.crossings.push_back(ci);
      } else if (v.kind == VertexKind::cusp) {
        CuspInfo ci;
        ci.comp = c;
        ci.vertex = static_cast<int>(vi);
        ci.e1 = edge_of_dart(0);
        ci.e2 = edge_of_dart(1);
        auto [wf, of] = cusp_faces(fd, c, static_cast<int>(vi));
        (void)wf;
        ci.n = lab.widths[of];
        ctx.cusps.push_back(ci);
      } else {
        SmoothInfo si;
        si.comp = c;
        si.vertex = static_cast<int>(vi);
        si.e1 = edge_of_dart(0);
        si.e2 = edge_of_dart(1);
        if (si.e1 != si.e2) ctx.smooths.push_back(si);
      }
    }
  }
  return ctx;
}

inline bool crossing_ok(const CrossingInfo& ci,
                        const std::vector<EdgeGluing>& g, const std::vector<char>& assigned) {
  bool h1 = assigned[ci.e1], h2 = assigned[ci.e2], h3 = assigned[ci.e3], h4 = assigned[ci.e4];
  auto pair_set = [](const EdgeGluing& eg) {
    return std::pair<int, int>(eg.fold_pair.first, eg.fold_pair.second);
  };
  if (h1 && h2 && h3) {
    int t1 = g[ci.e2].continuation[g[ci.e1].fold_pair.first];
    int t2 = g[ci.e2].continuation[g[ci.e1].fold_pair.second];
    if (t1 > t2) std::swap(t1, t2);
    if (std::pair<int, int>(t1, t2) != pair_set(g[ci.e3])) return false;
  }
  if (h4 && h3 && h2) {
    int t1 = g[ci.e3].continuation[g[ci.e4].fold_pair.first];
    int t2 = g[ci.e3].continuation[g[ci.e4].fold_pair.second];
    if (t1 > t2) std::swap(t1, t2);
    if (std::pair<int, int>(t1, t2) != pair_set(g[ci.e2])) return false;
  }
  if (h1 && h2 && h3 && h4) {
    for (int s = 0; s < ci.n; ++s)
      if (g[ci.e2].continuation[g[ci.e1].continuation[s]] !=
          g[ci.e3].continuation[g[ci.e4].continuation[s]])
        return false;
  }
  return true;
}

// The low sheet on which the two branch continuations differ (the sheet that
// runs into the cusp point), or -1 if the constraint fails.
inline int cusp_middle_sheet(const EdgeGluing& a, const EdgeGluing& b) {
  auto in_pair = [](const EdgeGluing& g, int x) {
    return g.fold_pair.first == x || g.fold_pair.second == x;
  };
  int shared = 0, only_a = -1, only_b = -1;
  for (int x : {a.fold_pair.first, a.fold_pair.second}) {
    if (in_pair(b, x)) ++shared;
    else only_a = x;
  }
  for (int x : {b.fold_pair.first, b.fold_pair.second})
    if (!in_pair(a, x)) only_b = x;
  if (shared != 1) return -1;
  int mismatch = -1;
  for (size_t s = 0; s < a.continuation.size(); ++s) {
    if (a.continuation[s] != b.continuation[s]) {
      if (mismatch != -1) return -1;
      mismatch = static_cast<int>(s);
    }
  }
  if (mismatch == -1) return -1;
  if (a.continuation[mismatch] != only_b || b.continuation[mismatch] != only_a) return -1;
  return mismatch;
}

inline bool cusp_ok(const CuspInfo& ci, const std::vector<EdgeGluing>& g,
                    const std::vector<char>& assigned) {
  if (!assigned[ci.e1] || !assigned[ci.e2]) return true;
  return cusp_middle_sheet(g[ci.e1], g[ci.e2]) >= 0;
}

inline bool smooth_ok(const SmoothInfo& si, const std::vector<EdgeGluing>& g,
                      const std::vector<char>& assigned) {
  if (!assigned[si.e1] || !assigned[si.e2]) return true;
  return g[si.e1] == g[si.e2];
}

// Canonical form of an assembly up to independent sheet renumbering per face:
// minimal BFS transcripts of the sheet adjacency graph, one per surface
// component, sorted.
inline std::string assembly_canonical(const AssemblyContext& ctx, const SurfaceAssembly& as) {
  const FoldDiagram& fd = *ctx.fd;
  const WidthLabeling& lab = *ctx.lab;
  // nodes: (face, sheet) for bounded faces of positive width
  std::vector<std::pair<int, int>> nodes;
  std::map<std::pair<int, int>, int> node_id;
  for (size_t f = 0; f < fd.faces.size(); ++f) {
    if (!fd.faces[f].bounded) continue;
    for (int s = 0; s < lab.widths[f]; ++s) {
      node_id[{static_cast<int>(f), s}] = static_cast<int>(nodes.size());
      nodes.push_back({static_cast<int>(f), s});
    }
  }
  std::vector<std::vector<int>> inv(ctx.edges.size());
  for (size_t e = 0; e < ctx.edges.size(); ++e) {
    inv[e].assign(lab.widths[ctx.edges[e].high_face], -1);
    for (size_t s = 0; s < as.gluings[e].continuation.size(); ++s)
      inv[e][as.gluings[e].continuation[s]] = static_cast<int>(s);
  }
  // adjacency in a label-independent order, computed once
  int n = static_cast<int>(nodes.size());
  std::vector<std::vector<std::tuple<int, char, int>>> adj(n);  // (edge, tag, neighbor)
  for (int node = 0; node < n; ++node) {
    auto [f, s] = nodes[node];
    for (size_t e = 0; e < ctx.edges.size(); ++e) {
      const EdgeInfo& ei = ctx.edges[e];
      const EdgeGluing& eg = as.gluings[e];
      if (ei.low_face == f && s < ei.n)
        adj[node].push_back({static_cast<int>(e), 'c', node_id.at({ei.high_face, eg.continuation[s]})});
      if (ei.high_face == f) {
        if (eg.fold_pair.first == s)
          adj[node].push_back({static_cast<int>(e), 'f', node_id.at({f, eg.fold_pair.second})});
        else if (eg.fold_pair.second == s)
          adj[node].push_back({static_cast<int>(e), 'f', node_id.at({f, eg.fold_pair.first})});
        else if (inv[e][s] >= 0)
          adj[node].push_back({static_cast<int>(e), 'u', node_id.at({ei.low_face, inv[e][s]})});
      }
    }
  }
  auto neighbors = [&](int node) -> const std::vector<std::tuple<int, char, int>>& {
    return adj[node];
  };
  // surface components of the node graph
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] != -1) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto& [e, tag, y] : neighbors(x))
        if (comp[y] == -1) { comp[y] = ncomp; stack.push_back(y); }
    }
    ++ncomp;
  }

  auto transcript = [&](int root) {
    std::vector<int> num(n, -1), order;
    num[root] = 0;
    order.push_back(root);
    for (size_t q = 0; q < order.size(); ++q)
      for (auto& [e, tag, y] : neighbors(order[q]))
        if (num[y] == -1) { num[y] = static_cast<int>(order.size()); order.push_back(y); }
    std::string out;
    for (int x : order) {
      for (auto& [e, tag, y] : neighbors(x)) {
        out += std::to_string(e);
        out += tag;
        out += std::to_string(num[y]);
        out += ',';
      }
      out += ';';
    }
    return out;
  };

  std::vector<std::string> parts(ncomp);
  for (int i = 0; i < n; ++i) {
    std::string t = transcript(i);
    if (parts[comp[i]].empty() || t < parts[comp[i]]) parts[comp[i]] = std::move(t);
  }
  std::sort(parts.begin(), parts.end());
  std::string all;
  for (auto& p : parts) { all += p; all += '|'; }
  return all;
}

}  // namespace detail

// Backtracking enumeration of assemblies, deduplicated up to sheet
// renumbering, in deterministic order. Stops after max_results distinct
// assemblies or max_leaves raw candidates, whichever comes first
// (result.complete reports whether the search was exhausted).
inline AssemblyResult enumerate_assemblies(const FoldDiagram& fd, const WidthLabeling& lab,
                                           int max_results = 64, long max_leaves = 100000) {
  for (size_t f = 0; f < fd.faces.size(); ++f)
    if (fd.faces[f].bounded && lab.widths[f] > 10)
      fail(ErrorKind::BoundExceeded, "face width above the assembly bound of 10");

  detail::AssemblyContext ctx = detail::make_context(fd, lab);
  int ne = static_cast<int>(ctx.edges.size());
  std::vector<EdgeGluing> g(ne);
  std::vector<char> assigned(ne, 0);

  // constraints indexed by edge for incremental checking
  std::vector<std::vector<int>> cross_at(ne), cusp_at(ne), smooth_at(ne);
  for (size_t i = 0; i < ctx.crossings.size(); ++i)
    for (int e : {ctx.crossings[i].e1, ctx.crossings[i].e2, ctx.crossings[i].e3, ctx.crossings[i].e4})
      cross_at[e].push_back(static_cast<int>(i));
  for (size_t i = 0; i < ctx.cusps.size(); ++i)
    for (int e : {ctx.cusps[i].e1, ctx.cusps[i].e2}) cusp_at[e].push_back(static_cast<int>(i));
  for (size_t i = 0; i < ctx.smooths.size(); ++i)
    for (int e : {ctx.smooths[i].e1, ctx.smooths[i].e2}) smooth_at[e].push_back(static_cast<int>(i));

  AssemblyResult result;
  std::set<std::string> seen;
  std::vector<std::pair<std::string, SurfaceAssembly>> found;
  bool truncated = false;
  long leaves = 0;

  std::function<void(int)> dfs = [&](int e) {
    if (truncated) return;
    if (e == ne) {
      if (++leaves > max_leaves) { truncated = true; return; }
      SurfaceAssembly as{g};
      std::string canon = detail::assembly_canonical(ctx, as);
      if (seen.insert(canon).second) {
        found.push_back({std::move(canon), std::move(as)});
        if (static_cast<int>(found.size()) >= max_results) truncated = true;
      }
      return;
    }
    const detail::EdgeInfo& ei = ctx.edges[e];
    int h = ei.n + 2;

    auto try_gluing = [&](std::pair<int, int> pair, std::vector<int> cont) {
      if (truncated) return;
      g[e].fold_pair = pair;
      g[e].continuation = std::move(cont);
      assigned[e] = 1;
      bool ok = true;
      for (int idx : smooth_at[e]) ok &= detail::smooth_ok(ctx.smooths[idx], g, assigned);
      for (int idx : cusp_at[e]) ok = ok && detail::cusp_ok(ctx.cusps[idx], g, assigned);
      for (int idx : cross_at[e]) ok = ok && detail::crossing_ok(ctx.crossings[idx], g, assigned);
      if (ok) dfs(e + 1);
      assigned[e] = 0;
    };

    // constraints with an already-assigned partner generate the candidates
    // directly: a smooth mate copies the gluing, a cusp mate determines it up
    // to the shared fold sheet and the new one
    for (int idx : smooth_at[e]) {
      const detail::SmoothInfo& si = ctx.smooths[idx];
      int other = si.e1 == e ? si.e2 : si.e1;
      if (!assigned[other]) continue;
      try_gluing(g[other].fold_pair, g[other].continuation);
      return;
    }
    for (int idx : cusp_at[e]) {
      const detail::CuspInfo& ci = ctx.cusps[idx];
      int other = ci.e1 == e ? ci.e2 : ci.e1;
      if (!assigned[other]) continue;
      const EdgeGluing& go = g[other];
      for (int u : {go.fold_pair.first, go.fold_pair.second}) {
        int keep = u == go.fold_pair.first ? go.fold_pair.second : go.fold_pair.first;
        for (size_t sstar = 0; sstar < go.continuation.size() && !truncated; ++sstar) {
          int r = go.continuation[sstar];  // the new fold sheet of this branch
          std::vector<int> cont = go.continuation;
          cont[sstar] = keep;  // the branch frees the mate's other fold sheet
          try_gluing({std::min(u, r), std::max(u, r)}, std::move(cont));
        }
      }
      return;
    }

    std::vector<int> rest(ei.n);
    for (int i = 0; i < h && !truncated; ++i) {
      for (int j = i + 1; j < h && !truncated; ++j) {
        int k = 0;
        for (int s = 0; s < h; ++s)
          if (s != i && s != j) rest[k++] = s;
        std::sort(rest.begin(), rest.end());
        do {
          try_gluing({i, j}, rest);
        } while (std::next_permutation(rest.begin(), rest.end()) && !truncated);
      }
    }
  };
  dfs(0);

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [canon, as] : found) result.assemblies.push_back(std::move(as));
  result.complete = !truncated;
  return result;
}

struct SurfacePiece {
  int chi = 0;
  bool orientable = true;
  int genus = 0;  // orientable genus, or non-orientable genus (chi = 2 - genus)
};

struct CombinatorialSurface {
  int chi = 0;
  int components = 0;
  bool orientable = true;
  std::vector<SurfacePiece> pieces;
  int cells2 = 0, cells1 = 0, cells0 = 0;
};

// Builds the covered surface of an assembly as a cell structure, verifies the
// local models and closedness, and computes chi (asserted equal to the
// stratified count), connectivity, and orientability per component.
inline CombinatorialSurface build_surface(const FoldDiagram& fd, const WidthLabeling& lab,
                                          const SurfaceAssembly& as) {
  detail::AssemblyContext ctx = detail::make_context(fd, lab);
  int ne = static_cast<int>(ctx.edges.size());
  if (static_cast<int>(as.gluings.size()) != ne)
    fail(ErrorKind::InconsistentAssembly, "assembly edge count mismatch");
  for (int e = 0; e < ne; ++e) {
    const EdgeGluing& eg = as.gluings[e];
    int h = ctx.edges[e].n + 2;
    if (eg.fold_pair.first < 0 || eg.fold_pair.second >= h ||
        eg.fold_pair.first >= eg.fold_pair.second ||
        static_cast<int>(eg.continuation.size()) != ctx.edges[e].n)
      fail(ErrorKind::InconsistentAssembly, "malformed gluing");
    std::vector<char> hit(h, 0);
    hit[eg.fold_pair.first] = hit[eg.fold_pair.second] = 1;
    for (int t : eg.continuation) {
      if (t < 0 || t >= h || hit[t]) fail(ErrorKind::InconsistentAssembly, "continuation not injective");
      hit[t] = 1;
    }
  }
  std::vector<char> assigned(ne, 1);
  for (const auto& si : ctx.smooths)
    if (!detail::smooth_ok(si, as.gluings, assigned))
      fail(ErrorKind::InconsistentAssembly, "smooth vertex gluings differ");
  for (const auto& ci : ctx.cusps)
    if (!detail::cusp_ok(ci, as.gluings, assigned))
      fail(ErrorKind::InconsistentAssembly, "cusp local model violated");
  for (const auto& ci : ctx.crossings)
    if (!detail::crossing_ok(ci, as.gluings, assigned))
      fail(ErrorKind::InconsistentAssembly, "crossing local model violated");

  // 2-cells
  std::vector<std::pair<int, int>> cells;  // (face, sheet)
  std::map<std::pair<int, int>, int> cell_id;
  for (size_t f = 0; f < fd.faces.size(); ++f) {
    if (!fd.faces[f].bounded) continue;
    for (int s = 0; s < lab.widths[f]; ++s) {
      cell_id[{static_cast<int>(f), s}] = static_cast<int>(cells.size());
      cells.push_back({static_cast<int>(f), s});
    }
  }

  // union-find with orientation parity: continuation keeps sign, fold flips
  int n = static_cast<int>(cells.size());
  std::vector<int> parent(n), parity(n, 0);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::pair<int, int>(int)> find = [&](int x) -> std::pair<int, int> {
    if (parent[x] == x) return {x, 0};
    auto [r, p] = find(parent[x]);
    parent[x] = r;
    parity[x] ^= p;
    return {r, parity[x]};
  };
  std::vector<char> comp_nonorient_root(n, 0);
  auto unite = [&](int a, int b, int flip) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if ((pa ^ pb) != flip) comp_nonorient_root[ra] = 1;
      return;
    }
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ flip;
    comp_nonorient_root[rb] |= comp_nonorient_root[ra];
  };

  int arcs = 0;
  for (int e = 0; e < ne; ++e) {
    const detail::EdgeInfo& ei = ctx.edges[e];
    const EdgeGluing& eg = as.gluings[e];
    unite(cell_id.at({ei.high_face, eg.fold_pair.first}),
          cell_id.at({ei.high_face, eg.fold_pair.second}), 1);
    ++arcs;
    for (int s = 0; s < ei.n; ++s) {
      unite(cell_id.at({ei.low_face, s}), cell_id.at({ei.high_face, eg.continuation[s]}), 0);
      ++arcs;
    }
  }

  // 0-cells per vertex with arc-end wiring; verify every end finds its point
  // and that all arcs at a point live in one surface component.
  int points = 0;
  long chi_check = 0;
  std::map<int, long> comp_chi;       // root -> chi contribution
  auto root_of_cell = [&](int cellidx) { return find(cellidx).first; };

  for (auto& [fc, s] : cells) chi_check += fd.faces[fc].chi_c();
  for (auto& cl : cells) comp_chi[root_of_cell(cell_id.at(cl))] += fd.faces[cl.first].chi_c();
  chi_check -= arcs;
  for (int e = 0; e < ne; ++e) {
    const detail::EdgeInfo& ei = ctx.edges[e];
    comp_chi[root_of_cell(cell_id.at({ei.high_face, as.gluings[e].fold_pair.first}))] -= 1;
    for (int s = 0; s < ei.n; ++s) comp_chi[root_of_cell(cell_id.at({ei.low_face, s}))] -= 1;
  }

  // fiber points: assign per vertex from the local models
  for (int c = 0; c < fd.num_components(); ++c) {
    const auto& bc = fd.comps[c];
    for (size_t vi = 0; vi < fd.spec.components[c].vertices.size(); ++vi) {
      const Vertex& v = fd.spec.components[c].vertices[vi];
      // representative cell per fiber point, to attach chi and check components
      std::vector<int> point_cells;
      if (v.kind == VertexKind::smooth) {
        int e = ctx.edge_id[c][bc.dart_edge[bc.dart_of_id(v.darts[0])]];
        const detail::EdgeInfo& ei = ctx.edges[e];
        point_cells.push_back(cell_id.at({ei.high_face, as.gluings[e].fold_pair.first}));
        for (int s = 0; s < ei.n; ++s) point_cells.push_back(cell_id.at({ei.low_face, s}));
      } else if (v.kind == VertexKind::cusp) {
        int e1 = ctx.edge_id[c][bc.dart_edge[bc.dart_of_id(v.darts[0])]];
        int e2 = ctx.edge_id[c][bc.dart_edge[bc.dart_of_id(v.darts[1])]];
        int mid = detail::cusp_middle_sheet(as.gluings[e1], as.gluings[e2]);
        const detail::EdgeInfo& ei = ctx.edges[e1];
        point_cells.push_back(cell_id.at({ei.high_face, as.gluings[e1].fold_pair.first}));
        for (int s = 0; s < ei.n; ++s)
          if (s != mid) point_cells.push_back(cell_id.at({ei.low_face, s}));
      } else {
        // crossing: two fold points plus one far point per low sheet
        const detail::CrossingInfo* ci = nullptr;
        for (const auto& cand : ctx.crossings)
          if (cand.comp == c && cand.vertex == static_cast<int>(vi)) ci = &cand;
        const detail::EdgeInfo& e1i = ctx.edges[ci->e1];
        const detail::EdgeInfo& e4i = ctx.edges[ci->e4];
        point_cells.push_back(cell_id.at({e1i.high_face, as.gluings[ci->e1].fold_pair.first}));
        point_cells.push_back(cell_id.at({e4i.high_face, as.gluings[ci->e4].fold_pair.first}));
        for (int s = 0; s < ci->n; ++s) point_cells.push_back(cell_id.at({e1i.low_face, s}));
      }
      points += static_cast<int>(point_cells.size());
      chi_check += static_cast<long>(point_cells.size());
      for (int cl : point_cells) comp_chi[root_of_cell(cl)] += 1;
    }
  }

  if (chi_check != euler_char_stratified(fd, lab))
    fail(ErrorKind::InconsistentAssembly, "cell complex chi disagrees with stratified count");

  CombinatorialSurface surf;
  surf.cells2 = n;
  surf.cells1 = arcs;
  surf.cells0 = points;
  surf.chi = static_cast<int>(chi_check);
  for (auto& [root, chi] : comp_chi) {
    SurfacePiece piece;
    piece.chi = static_cast<int>(chi);
    piece.orientable = !comp_nonorient_root[root];
    piece.genus = piece.orientable ? (2 - piece.chi) / 2 : (2 - piece.chi);
    surf.orientable &= piece.orientable;
    surf.pieces.push_back(piece);
  }
  surf.components = static_cast<int>(surf.pieces.size());
  std::sort(surf.pieces.begin(), surf.pieces.end(), [](const SurfacePiece& a, const SurfacePiece& b) {
    return std::tie(a.chi, a.orientable, a.genus) < std::tie(b.chi, b.orientable, b.genus);
  });
  return surf;
}

}  // namespace foldwidth
