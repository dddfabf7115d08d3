#pragma once

// Width labelings of a fold diagram. A labeling assigns an even width >= 0
// to every global face, with the unbounded face at 0 and a difference of
// exactly 2 across every edge. Labelings are parameterized by an orientation
// choice per strand: the face on the forward-left of a strand is the higher
// one, so integrating from the outer face decides all widths.

#include "diagram.hpp"

namespace foldwidth {

struct WidthLabeling {
  std::vector<int> widths;           // by global face index
  std::vector<uint8_t> orientation;  // per strand: 1 = the stored forward orbit is the travel direction
};

namespace detail {

// The dart of edge (c, d/alpha(d)) that points along the chosen direction of
// its strand.
inline int directed_dart(const FoldDiagram& fd, int c, int d, const std::vector<uint8_t>& orient) {
  int s = fd.strand_of(c, d);
  bool fwd_stored = fd.dart_forward(c, d);
  bool want_stored = orient[s] != 0;
  return (fwd_stored == want_stored) ? d : fd.comps[c].alpha[d];
}

// Integrate widths across the face dual from the outer face. Returns false
// if the orientation choice is inconsistent (never expected on a plane
// diagram; asserted by property tests).
inline bool integrate_widths(const FoldDiagram& fd, const std::vector<uint8_t>& orient,
                             std::vector<int>& widths) {
  int nf = static_cast<int>(fd.faces.size());
  widths.assign(nf, INT32_MIN);
  widths[fd.outer_face] = 0;
  // edge constraints: width[left(dd)] = width[right(dd)] + 2
  struct Constraint { int lo_face, hi_face; };
  std::vector<Constraint> cons;
  for (int c = 0; c < fd.num_components(); ++c) {
    const auto& bc = fd.comps[c];
    for (int d = 0; d < static_cast<int>(bc.dart_ids.size()); ++d) {
      if (d > bc.alpha[d]) continue;  // one dart per edge
      int dd = directed_dart(fd, c, d, orient);
      cons.push_back({fd.right_face(c, dd), fd.left_face(c, dd)});
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& con : cons) {
      if (widths[con.lo_face] != INT32_MIN) {
        int v = widths[con.lo_face] + 2;
        if (widths[con.hi_face] == INT32_MIN) { widths[con.hi_face] = v; changed = true; }
        else if (widths[con.hi_face] != v) return false;
      }
      if (widths[con.hi_face] != INT32_MIN) {
        int v = widths[con.hi_face] - 2;
        if (widths[con.lo_face] == INT32_MIN) { widths[con.lo_face] = v; changed = true; }
        else if (widths[con.lo_face] != v) return false;
      }
    }
  }
  for (int f = 0; f < nf; ++f)
    if (widths[f] == INT32_MIN) return false;  // unreachable face (cannot happen when connected by edges)
  return true;
}

}  // namespace detail

// The two faces at a cusp: (wedge-corner face, other face).
inline std::pair<int, int> cusp_faces(const FoldDiagram& fd, int c, int vtx) {
  const Vertex& v = fd.spec.components[c].vertices[vtx];
  int wf = fd.face_at_corner(c, vtx, v.wedge_corner);
  int of = fd.face_at_corner(c, vtx, 1 - v.wedge_corner);
  return {wf, of};
}

// Crossing local model: the four corner widths in cyclic order read
// n, n+2, n+2, n+4 (opposite corners n and n+4, the other two both n+2).
inline bool crossing_pattern_ok(const FoldDiagram& fd, const std::vector<int>& widths, int c, int vtx) {
  int a = widths[fd.face_at_corner(c, vtx, 0)];
  int b = widths[fd.face_at_corner(c, vtx, 1)];
  int e = widths[fd.face_at_corner(c, vtx, 2)];
  int f = widths[fd.face_at_corner(c, vtx, 3)];
  int lo = std::min(std::min(a, b), std::min(e, f));
  return (std::abs(a - e) == 4 && b == f && b == lo + 2) ||
         (std::abs(b - f) == 4 && a == e && a == lo + 2);
}

// Checks the full WidthLabeling invariant set: outer face 0, all widths >= 0
// and even, +-2 across edges, the cusp rule (wedge side = other + 2, smaller
// >= 2), and the crossing pattern.
inline bool widths_admissible(const FoldDiagram& fd, const std::vector<int>& widths) {
  if (static_cast<int>(widths.size()) != static_cast<int>(fd.faces.size())) return false;
  if (widths[fd.outer_face] != 0) return false;
  for (int w : widths)
    if (w < 0 || (w % 2) != 0) return false;
  for (int c = 0; c < fd.num_components(); ++c) {
    const auto& bc = fd.comps[c];
    for (int d = 0; d < static_cast<int>(bc.dart_ids.size()); ++d) {
      if (d > bc.alpha[d]) continue;
      int a = fd.right_face(c, d), b = fd.left_face(c, d);
      if (std::abs(widths[a] - widths[b]) != 2) return false;
    }
    for (size_t vi = 0; vi < fd.spec.components[c].vertices.size(); ++vi) {
      const Vertex& v = fd.spec.components[c].vertices[vi];
      if (v.kind == VertexKind::cusp) {
        auto [wf, of] = cusp_faces(fd, c, static_cast<int>(vi));
        if (widths[wf] != widths[of] + 2) return false;
        if (widths[of] < 2) return false;
      } else if (v.kind == VertexKind::crossing) {
        if (!crossing_pattern_ok(fd, widths, c, static_cast<int>(vi))) return false;
      }
    }
  }
  return true;
}

// Recover the orientation choice that induces the given widths: along every
// strand the higher face must sit consistently on the forward left.
inline std::optional<std::vector<uint8_t>> orientation_from_widths(const FoldDiagram& fd,
                                                                   const std::vector<int>& widths) {
  std::vector<uint8_t> orient(fd.strands.size(), 0);
  for (size_t s = 0; s < fd.strands.size(); ++s) {
    const Strand& st = fd.strands[s];
    int c = st.component;
    int decided = -1;
    for (int d : st.forward) {
      int lo = fd.right_face(c, d), hi = fd.left_face(c, d);
      int diff = widths[hi] - widths[lo];
      if (diff != 2 && diff != -2) return std::nullopt;
      int bit = diff == 2 ? 1 : 0;  // stored forward direction has higher on the left
      if (decided == -1) decided = bit;
      else if (decided != bit) return std::nullopt;
    }
    orient[s] = static_cast<uint8_t>(decided);
  }
  return orient;
}

inline std::optional<WidthLabeling> labeling_from_widths(const FoldDiagram& fd,
                                                         const std::vector<int>& widths) {
  if (!widths_admissible(fd, widths)) return std::nullopt;
  auto orient = orientation_from_widths(fd, widths);
  if (!orient) return std::nullopt;
  return WidthLabeling{widths, *orient};
}

// All admissible labelings, sorted by (tw, w, widths lexicographically).
// An empty result means the diagram is not the full singular image of any
// surface projection.
inline std::vector<WidthLabeling> enumerate_labelings(const FoldDiagram& fd) {
  int s = static_cast<int>(fd.strands.size());
  if (s > 24) fail(ErrorKind::BoundExceeded, "too many strands to enumerate orientations");
  std::vector<WidthLabeling> out;
  for (uint32_t mask = 0; mask < (1u << s); ++mask) {
    std::vector<uint8_t> orient(s);
    for (int i = 0; i < s; ++i) orient[i] = (mask >> i) & 1;
    std::vector<int> widths;
    if (!detail::integrate_widths(fd, orient, widths)) continue;
    if (!widths_admissible(fd, widths)) continue;
    out.push_back(WidthLabeling{std::move(widths), std::move(orient)});
  }
  auto key = [&](const WidthLabeling& lab) {
    int w = 0, tw = 0;
    for (size_t f = 0; f < lab.widths.size(); ++f) {
      if (static_cast<int>(f) == fd.outer_face) continue;
      w = std::max(w, lab.widths[f]);
      tw += lab.widths[f];
    }
    return std::tuple<int, int, std::vector<int>>(tw, w, lab.widths);
  };
  std::sort(out.begin(), out.end(),
            [&](const WidthLabeling& a, const WidthLabeling& b) { return key(a) < key(b); });
  return out;
}

struct WidthStats {
  int w = 0;
  int tw = 0;
  std::vector<std::pair<int, int>> per_face;  // (global face index, width), bounded faces only
};

inline WidthStats width_stats(const FoldDiagram& fd, const WidthLabeling& lab) {
  if (lab.widths.size() != fd.faces.size())
    fail(ErrorKind::LabelingMismatch, "labeling face count does not match diagram");
  WidthStats st;
  for (size_t f = 0; f < lab.widths.size(); ++f) {
    if (static_cast<int>(f) == fd.outer_face) continue;
    st.w = std::max(st.w, lab.widths[f]);
    st.tw += lab.widths[f];
    st.per_face.push_back({static_cast<int>(f), lab.widths[f]});
  }
  return st;
}

// Independent re-verification of the local width patterns of Lemma-level
// local models: crossings must read n, n+2, n+2, n+4 around (opposite
// corners n and n+4), cusps n, n+2 with n >= 2, and everything even.
struct PatternReport {
  struct Item {
    int component = 0;
    int vertex = 0;
    VertexKind kind = VertexKind::smooth;
    bool pass = true;
    std::string detail;
  };
  std::vector<Item> items;
  bool all_pass = true;
};

inline PatternReport check_local_patterns(const FoldDiagram& fd, const WidthLabeling& lab) {
  PatternReport rep;
  if (lab.widths.size() != fd.faces.size())
    fail(ErrorKind::LabelingMismatch, "labeling face count does not match diagram");
  for (int c = 0; c < fd.num_components(); ++c) {
    for (size_t vi = 0; vi < fd.spec.components[c].vertices.size(); ++vi) {
      const Vertex& v = fd.spec.components[c].vertices[vi];
      PatternReport::Item item;
      item.component = c;
      item.vertex = static_cast<int>(vi);
      item.kind = v.kind;
      auto corner_width = [&](int corner) { return lab.widths[fd.face_at_corner(c, static_cast<int>(vi), corner)]; };
      if (v.kind == VertexKind::crossing) {
        int a = corner_width(0), b = corner_width(1), e = corner_width(2), f = corner_width(3);
        bool ok = true;
        for (int x : {a, b, e, f}) ok &= (x >= 0) && (x % 2 == 0);
        ok &= crossing_pattern_ok(fd, lab.widths, c, static_cast<int>(vi));
        item.pass = ok;
        if (!ok)
          item.detail = "corners " + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(e) + "," + std::to_string(f);
      } else if (v.kind == VertexKind::cusp) {
        auto [wf, of] = cusp_faces(fd, c, static_cast<int>(vi));
        int hw = lab.widths[wf], lw = lab.widths[of];
        bool ok = (hw == lw + 2) && (lw >= 2) && (lw % 2 == 0);
        item.pass = ok;
        if (!ok) item.detail = "wedge " + std::to_string(hw) + " vs " + std::to_string(lw);
      } else {
        int a = corner_width(0), b = corner_width(1);
        item.pass = std::abs(a - b) == 2;
        if (!item.pass) item.detail = "sides " + std::to_string(a) + "," + std::to_string(b);
      }
      rep.all_pass &= item.pass;
      rep.items.push_back(std::move(item));
    }
  }
  return rep;
}

}  // namespace foldwidth
