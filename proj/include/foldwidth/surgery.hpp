#pragma once

// Connected sum and splitting of labeled diagrams. The sum cuts one
// outermost fold edge of each summand and joins the four ends with two new
// edges routed through the outer region, merging the two width-2 faces into
// one corridor face. Splitting searches for such a corridor (a width-2 face
// meeting the outer face along two edges whose removal separates the
// diagram) and caps the cut ends with fold arcs. Components floating in the
// corridor or in the outer region are not anchored to a side by the
// combinatorics, so the splitter enumerates their assignments.

#include "canonical.hpp"
#include "labeling.hpp"

namespace foldwidth {

struct LabeledDiagram {
  FoldDiagram diagram;
  WidthLabeling labeling;
};

namespace detail {

// deterministic outermost fold edge: the first edge bordering the outer face
inline std::pair<int, int> outermost_edge(const FoldDiagram& fd) {
  for (int c = 0; c < fd.num_components(); ++c) {
    const auto& bc = fd.comps[c];
    for (size_t e = 0; e < fd.spec.components[c].edges.size(); ++e) {
      int d0 = bc.dart_of_id(fd.spec.components[c].edges[e].first);
      if (fd.right_face(c, d0) == fd.outer_face || fd.left_face(c, d0) == fd.outer_face)
        return {c, static_cast<int>(e)};
    }
  }
  fail(ErrorKind::EmptyDiagram, "no outermost edge");
}

// width of every new global face inherited through surviving darts; fails if
// the members disagree (which identifies the twisted wall pairing)
inline std::optional<std::vector<int>> inherit_widths(
    const FoldDiagram& merged,
    const std::function<std::optional<int>(int comp, int dart_id)>& old_width_of) {
  std::vector<int> widths(merged.faces.size(), INT32_MIN);
  for (size_t g = 0; g < merged.faces.size(); ++g) {
    for (auto& [c, lf] : merged.faces[g].members) {
      for (int dense : merged.comps[c].faces[lf].orbit) {
        auto w = old_width_of(c, merged.comps[c].dart_ids[dense]);
        if (!w) continue;
        if (widths[g] == INT32_MIN) widths[g] = *w;
        else if (widths[g] != *w) return std::nullopt;
      }
    }
    if (widths[g] == INT32_MIN) return std::nullopt;
  }
  return widths;
}

}  // namespace detail

// Places d2 beside d1, cuts one outermost fold edge of each, and joins the
// ends with a two-edge corridor. The two outermost width-2 faces merge into
// the corridor face: w = max(w1, w2), tw = tw1 + tw2 - 2, chi = chi1 + chi2 - 2.
inline LabeledDiagram connected_sum(const FoldDiagram& d1, const WidthLabeling& lab1,
                                    const FoldDiagram& d2, const WidthLabeling& lab2) {
  auto [c1, e1] = detail::outermost_edge(d1);
  auto [c2, e2] = detail::outermost_edge(d2);
  int n1 = d1.num_components(), n2 = d2.num_components();
  if (d1.spec.placements[c1].parent != kOuter || d2.spec.placements[c2].parent != kOuter)
    fail(ErrorKind::EmptyDiagram, "outermost edge not on a root component");

  int off = 0;
  for (const auto& v : d1.spec.components[c1].vertices)
    for (int dd : v.darts) off = std::max(off, dd + 1);

  auto [p, q] = d1.spec.components[c1].edges[e1];
  auto [r0, s0] = d2.spec.components[c2].edges[e2];
  int r = r0 + off, s = s0 + off;

  // component index maps into the merged spec
  auto map2 = [&](int j) { return j == c2 ? c1 : (j < c2 ? n1 + j : n1 + j - 1); };

  for (int attempt = 0; attempt < 2; ++attempt) {
    DiagramSpec spec;
    spec.components.reserve(n1 + n2);
    spec.components = d1.spec.components;
    spec.components.reserve(n1 + n2);
    MapComponent& merged = spec.components[c1];
    merged.edges.erase(merged.edges.begin() + e1);
    for (const Vertex& v : d2.spec.components[c2].vertices) {
      Vertex nv = v;
      for (int& dd : nv.darts) dd += off;
      merged.vertices.push_back(std::move(nv));
    }
    for (size_t e = 0; e < d2.spec.components[c2].edges.size(); ++e) {
      if (static_cast<int>(e) == e2) continue;
      auto [x, y] = d2.spec.components[c2].edges[e];
      merged.edges.push_back({x + off, y + off});
    }
    if (attempt == 0) {
      merged.edges.push_back({p, s});
      merged.edges.push_back({q, r});
    } else {
      merged.edges.push_back({p, r});
      merged.edges.push_back({q, s});
    }
    for (int j = 0; j < n2; ++j) {
      if (j == c2) continue;
      spec.components.push_back(d2.spec.components[j]);
    }

    // provisional placements; merged-component face ids need the new orbits
    BuiltComponent mb = detail::build_component(merged, c1);
    auto merged_face = [&](bool from_d2, int dart_id) {
      int id = from_d2 ? dart_id + off : dart_id;
      return mb.faces[mb.dart_face[mb.dart_of_id(id)]].min_dart_id;
    };
    auto remap_face_of = [&](const FoldDiagram& src, int comp, int face_id, bool from_d2) {
      int lf = src.comps[comp].face_index_of_id(face_id);
      int dart_id = src.comps[comp].dart_ids[src.comps[comp].faces[lf].orbit.front()];
      return merged_face(from_d2, dart_id);
    };

    spec.placements.assign(spec.components.size(), Placement{});
    bool ok = true;
    for (int j = 0; j < n1 && ok; ++j) {
      Placement pl = d1.spec.placements[j];
      if (j == c1) pl.outer_face = remap_face_of(d1, c1, pl.outer_face, false);
      else if (pl.parent == c1) pl.parent_face = remap_face_of(d1, c1, pl.parent_face, false);
      spec.placements[j] = pl;
    }
    for (int j = 0; j < n2 && ok; ++j) {
      if (j == c2) continue;
      Placement pl = d2.spec.placements[j];
      if (pl.parent == c2) {
        pl.parent = c1;
        pl.parent_face = remap_face_of(d2, c2, pl.parent_face, true);
      } else if (pl.parent != kOuter) {
        pl.parent = map2(pl.parent);
      }
      spec.placements[map2(j)] = pl;
    }

    FoldDiagram fd;
    try {
      fd = build_diagram(spec);
    } catch (const DiagramError&) {
      continue;
    }
    auto widths = detail::inherit_widths(fd, [&](int comp, int dart_id) -> std::optional<int> {
      if (comp == c1)
        return dart_id >= off ? lab2.widths[d2.right_face(c2, d2.comps[c2].dart_of_id(dart_id - off))]
                              : lab1.widths[d1.right_face(c1, d1.comps[c1].dart_of_id(dart_id))];
      if (comp < n1) return lab1.widths[d1.right_face(comp, d1.comps[comp].dart_of_id(dart_id))];
      int j = comp - n1 >= c2 ? comp - n1 + 1 : comp - n1;
      return lab2.widths[d2.right_face(j, d2.comps[j].dart_of_id(dart_id))];
    });
    if (!widths) continue;
    auto lab = labeling_from_widths(fd, *widths);
    if (!lab) continue;
    return LabeledDiagram{std::move(fd), std::move(*lab)};
  }
  fail(ErrorKind::EulerFailure, "no planar wall pairing for the connected sum");
}

// ---------------------------------------------------------------- splitting

namespace detail {

struct SplitCut {
  int host = 0;              // component carrying the corridor
  int corridor_face = 0;     // global face id, width 2
  int edge_a = 0, edge_b = 0;  // edge indices on host
  std::vector<char> part_of_vertex;  // 0/1 per host vertex
  std::vector<int> movable;  // component indices free to go to either side
};

inline std::vector<SplitCut> split_cuts(const FoldDiagram& fd, const WidthLabeling& lab) {
  std::vector<SplitCut> cuts;
  for (size_t g = 0; g < fd.faces.size(); ++g) {
    if (!fd.faces[g].bounded || lab.widths[g] != 2) continue;
    auto [host, hostlf] = fd.face_host[g];
    (void)hostlf;
    std::vector<int> eg;
    for (size_t e = 0; e < fd.spec.components[host].edges.size(); ++e) {
      int d0 = fd.comps[host].dart_of_id(fd.spec.components[host].edges[e].first);
      int fa = fd.right_face(host, d0), fb = fd.left_face(host, d0);
      if ((fa == static_cast<int>(g) && fb == fd.outer_face) ||
          (fb == static_cast<int>(g) && fa == fd.outer_face))
        eg.push_back(static_cast<int>(e));
    }
    if (eg.size() < 2) continue;
    const MapComponent& mc = fd.spec.components[host];
    for (size_t i = 0; i < eg.size(); ++i) {
      for (size_t j = i + 1; j < eg.size(); ++j) {
        // connectivity of the host minus the two edges
        std::vector<std::vector<int>> adj(mc.vertices.size());
        const auto& bc = fd.comps[host];
        for (size_t e = 0; e < mc.edges.size(); ++e) {
          if (static_cast<int>(e) == eg[i] || static_cast<int>(e) == eg[j]) continue;
          int va = bc.dart_vertex[bc.dart_of_id(mc.edges[e].first)];
          int vb = bc.dart_vertex[bc.dart_of_id(mc.edges[e].second)];
          adj[va].push_back(vb);
          adj[vb].push_back(va);
        }
        std::vector<char> part(mc.vertices.size(), -1);
        std::vector<int> stack{0};
        part[0] = 0;
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          for (int w : adj[v])
            if (part[w] == -1) { part[w] = 0; stack.push_back(w); }
        }
        bool split_in_two = false;
        for (size_t v = 0; v < part.size(); ++v)
          if (part[v] == -1) { part[v] = 1; split_in_two = true; }
        if (!split_in_two) continue;
        // both remaining pieces must be internally connected
        {
          std::vector<char> seen(mc.vertices.size(), 0);
          int v1 = -1;
          for (size_t v = 0; v < part.size(); ++v)
            if (part[v] == 1) { v1 = static_cast<int>(v); break; }
          std::vector<int> st{v1};
          seen[v1] = 1;
          while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int w : adj[v])
              if (!seen[w]) { seen[w] = 1; st.push_back(w); }
          }
          bool ok = true;
          for (size_t v = 0; v < part.size(); ++v)
            if (part[v] == 1 && !seen[v]) ok = false;
          if (!ok) continue;
        }
        SplitCut cut;
        cut.host = host;
        cut.corridor_face = static_cast<int>(g);
        cut.edge_a = eg[i];
        cut.edge_b = eg[j];
        cut.part_of_vertex = part;
        // movable subtrees: children of the corridor face and other roots
        for (int c = 0; c < fd.num_components(); ++c) {
          if (c == host) continue;
          int designated = fd.comps[c].face_index_of_id(fd.spec.placements[c].outer_face);
          int into = fd.global_face_of(c, designated);
          if (into == static_cast<int>(g) || into == fd.outer_face) cut.movable.push_back(c);
        }
        cuts.push_back(std::move(cut));
      }
    }
  }
  return cuts;
}

// Builds one side of a cut: `side` selects the host part, `go_side` the
// movable subtrees assigned here.
inline std::optional<LabeledDiagram> split_piece(const FoldDiagram& fd, const WidthLabeling& lab,
                                                 const SplitCut& cut, int side,
                                                 const std::set<int>& go_side) {
  const MapComponent& mc = fd.spec.components[cut.host];
  const auto& bc = fd.comps[cut.host];

  // collect the component subtrees that live on this side: the host part,
  // plus children anchored at faces of the host whose orbit is in this part,
  // plus the movable subtrees chosen
  std::set<int> keep;
  std::function<void(int)> take_subtree;
  detail::Nesting nest = detail::nesting_of(fd);
  take_subtree = [&](int c) {
    keep.insert(c);
    for (int k : nest.children[c]) take_subtree(k);
  };
  for (int c = 0; c < fd.num_components(); ++c) {
    if (c == cut.host) continue;
    if (nest.parent[c] != cut.host) continue;
    int anchor_face = nest.parent_face_index[c];
    int g = fd.global_face_of(cut.host, anchor_face);
    if (g == cut.corridor_face) continue;  // movable, handled below
    int dart0 = bc.faces[anchor_face].orbit.front();
    if (cut.part_of_vertex[bc.dart_vertex[dart0]] == side) take_subtree(c);
  }
  for (int c : cut.movable)
    if (go_side.count(c)) take_subtree(c);

  // the host part with cap edge
  MapComponent part;
  std::vector<int> vmap(mc.vertices.size(), -1);
  for (size_t v = 0; v < mc.vertices.size(); ++v) {
    if (cut.part_of_vertex[v] != side) continue;
    vmap[v] = static_cast<int>(part.vertices.size());
    part.vertices.push_back(mc.vertices[v]);
  }
  if (part.vertices.empty()) return std::nullopt;
  std::vector<int> stubs;
  for (size_t e = 0; e < mc.edges.size(); ++e) {
    auto [x, y] = mc.edges[e];
    if (static_cast<int>(e) == cut.edge_a || static_cast<int>(e) == cut.edge_b) {
      for (int dd : {x, y})
        if (cut.part_of_vertex[bc.dart_vertex[bc.dart_of_id(dd)]] == side) stubs.push_back(dd);
      continue;
    }
    int va = bc.dart_vertex[bc.dart_of_id(x)];
    if (cut.part_of_vertex[va] == side) part.edges.push_back({x, y});
  }
  if (stubs.size() != 2) return std::nullopt;
  part.edges.push_back({stubs[0], stubs[1]});

  DiagramSpec spec;
  spec.components.push_back(part);
  std::vector<int> cmap(fd.num_components(), -1);
  cmap[cut.host] = 0;
  std::vector<int> kept_sorted(keep.begin(), keep.end());
  for (int c : kept_sorted) {
    cmap[c] = static_cast<int>(spec.components.size());
    spec.components.push_back(fd.spec.components[c]);
  }

  BuiltComponent pb = detail::build_component(part, 0);
  auto part_face_of_dart = [&](int dart_id) {
    return pb.faces[pb.dart_face[pb.dart_of_id(dart_id)]].min_dart_id;
  };
  // remnants: orbit holding a stub dart on the corridor side / outer side
  auto old_global_of_dart = [&](int dart_id) {
    return fd.right_face(cut.host, bc.dart_of_id(dart_id));
  };
  int outer_face_id = -1, corridor_face_id = -1;
  for (int dd : stubs) {
    if (old_global_of_dart(dd) == fd.outer_face) outer_face_id = part_face_of_dart(dd);
    else corridor_face_id = part_face_of_dart(dd);
  }
  if (outer_face_id < 0) {
    // both stub darts faced the corridor; find the outer remnant directly
    for (int dense = 0; dense < static_cast<int>(pb.dart_ids.size()) && outer_face_id < 0; ++dense) {
      if (fd.right_face(cut.host, bc.dart_of_id(pb.dart_ids[dense])) == fd.outer_face)
        outer_face_id = pb.faces[pb.dart_face[dense]].min_dart_id;
    }
  }
  if (corridor_face_id < 0) {
    for (int dense = 0; dense < static_cast<int>(pb.dart_ids.size()) && corridor_face_id < 0; ++dense) {
      if (fd.right_face(cut.host, bc.dart_of_id(pb.dart_ids[dense])) == cut.corridor_face)
        corridor_face_id = pb.faces[pb.dart_face[dense]].min_dart_id;
    }
  }
  if (outer_face_id < 0) return std::nullopt;

  spec.placements.assign(spec.components.size(), Placement{});
  spec.placements[0] = {kOuter, -1, outer_face_id};
  for (int c : kept_sorted) {
    Placement pl = fd.spec.placements[c];
    int designated = fd.comps[c].face_index_of_id(pl.outer_face);
    int into = fd.global_face_of(c, designated);
    if (into == fd.outer_face) {
      pl.parent = kOuter;
      pl.parent_face = -1;
    } else if (into == cut.corridor_face) {
      if (corridor_face_id < 0) return std::nullopt;
      pl.parent = 0;
      pl.parent_face = corridor_face_id;
    } else if (pl.parent == cut.host) {
      // anchored at an intact face of the host: same face id, new orbit ids match
      pl.parent = 0;
      int old_lf = fd.comps[cut.host].face_index_of_id(pl.parent_face);
      int dart_id = bc.dart_ids[fd.comps[cut.host].faces[old_lf].orbit.front()];
      pl.parent_face = part_face_of_dart(dart_id);
    } else {
      pl.parent = cmap[pl.parent];
      if (pl.parent < 0) return std::nullopt;
    }
    spec.placements[cmap[c]] = pl;
  }

  FoldDiagram piece;
  try {
    piece = build_diagram(spec);
  } catch (const DiagramError&) {
    return std::nullopt;
  }
  auto widths = detail::inherit_widths(piece, [&](int comp, int dart_id) -> std::optional<int> {
    int oldc = comp == 0 ? cut.host : kept_sorted[comp - 1];
    return lab.widths[fd.right_face(oldc, fd.comps[oldc].dart_of_id(dart_id))];
  });
  if (!widths) return std::nullopt;
  auto plab = labeling_from_widths(piece, *widths);
  if (!plab) return std::nullopt;
  return LabeledDiagram{std::move(piece), std::move(*plab)};
}

}  // namespace detail

// All ways to split off a corridor; each option is a pair of admissible
// labeled pieces. Components floating in the corridor or the outer region
// are enumerated over both sides.
inline std::vector<std::pair<LabeledDiagram, LabeledDiagram>> split_options(
    const FoldDiagram& fd, const WidthLabeling& lab, size_t max_options = 64) {
  std::vector<std::pair<LabeledDiagram, LabeledDiagram>> out;
  for (const detail::SplitCut& cut : detail::split_cuts(fd, lab)) {
    if (cut.movable.size() > 12) fail(ErrorKind::BoundExceeded, "too many floating components");
    for (uint32_t mask = 0; mask < (1u << cut.movable.size()); ++mask) {
      std::set<int> side0;
      for (size_t i = 0; i < cut.movable.size(); ++i)
        if ((mask >> i) & 1) side0.insert(cut.movable[i]);
      std::set<int> side1;
      for (int c : cut.movable)
        if (!side0.count(c)) side1.insert(c);
      auto a = detail::split_piece(fd, lab, cut, 0, side0);
      if (!a) continue;
      auto b = detail::split_piece(fd, lab, cut, 1, side1);
      if (!b) continue;
      out.push_back({std::move(*a), std::move(*b)});
      if (out.size() >= max_options) return out;
    }
  }
  return out;
}

// First splitting in deterministic order, or nullopt when no corridor
// separates the diagram.
inline std::optional<std::pair<LabeledDiagram, LabeledDiagram>> split(const FoldDiagram& fd,
                                                                      const WidthLabeling& lab) {
  auto options = split_options(fd, lab, 1);
  if (options.empty()) return std::nullopt;
  return std::move(options.front());
}

}  // namespace foldwidth
