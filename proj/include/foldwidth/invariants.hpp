#pragma once

// Numerical invariants of a labeled diagram. The Euler characteristic of the
// covered surface is computed as a stratified fiber count over faces, edges
// and vertices; it equals the rotation degree of the singular image's
// tangent line field, which the realization oracle cross-checks numerically.

#include "labeling.hpp"

namespace foldwidth {

struct DiagramInvariants {
  int w = 0;
  int tw = 0;
  int crossings = 0;
  int cusps = 0;
  int chi = 0;
  bool parity_ok = true;
  int strands = 0;
  int map_components = 0;
  int loops = 0;
};

// Direction of travel per dart: dart d is "forward" when the higher face is
// on its left. Returned as one flag per dense dart per component; along every
// strand the flags agree with the strand's chosen orientation (asserted).
inline std::vector<std::vector<uint8_t>> induced_orientation(const FoldDiagram& fd,
                                                             const WidthLabeling& lab) {
  if (lab.widths.size() != fd.faces.size())
    fail(ErrorKind::LabelingMismatch, "labeling face count does not match diagram");
  std::vector<std::vector<uint8_t>> fwd(fd.num_components());
  for (int c = 0; c < fd.num_components(); ++c) {
    const auto& bc = fd.comps[c];
    fwd[c].assign(bc.dart_ids.size(), 0);
    for (int d = 0; d < static_cast<int>(bc.dart_ids.size()); ++d) {
      int hi = fd.left_face(c, d), lo = fd.right_face(c, d);
      int diff = lab.widths[hi] - lab.widths[lo];
      if (std::abs(diff) != 2)
        fail(ErrorKind::LabelingMismatch, "labeling does not step by 2 across an edge");
      bool forward = diff == 2;
      fwd[c][d] = forward;
      // consistency with the labeling's stored orientation choice
      int s = fd.strand_of(c, d);
      bool stored_dir = fd.dart_forward(c, d) == (lab.orientation[s] != 0);
      if (forward != stored_dir)
        fail(ErrorKind::LabelingMismatch, "orientation choice does not match widths");
    }
  }
  return fwd;
}

// chi(F) = sum_faces w * chi_c  -  sum_edges (w_low + 1)  +  sum_vertices m(v)
// with m(crossing) = n_min + 2, m(cusp) = n_small, m(smooth) = w_low + 1.
inline int euler_char_stratified(const FoldDiagram& fd, const WidthLabeling& lab) {
  if (lab.widths.size() != fd.faces.size())
    fail(ErrorKind::LabelingMismatch, "labeling face count does not match diagram");
  long chi = 0;
  for (size_t f = 0; f < fd.faces.size(); ++f)
    if (fd.faces[f].bounded) chi += static_cast<long>(lab.widths[f]) * fd.faces[f].chi_c();
  for (int c = 0; c < fd.num_components(); ++c) {
    const auto& bc = fd.comps[c];
    for (int d = 0; d < static_cast<int>(bc.dart_ids.size()); ++d) {
      if (d > bc.alpha[d]) continue;
      chi -= std::min(lab.widths[fd.right_face(c, d)], lab.widths[fd.left_face(c, d)]) + 1;
    }
    for (size_t vi = 0; vi < fd.spec.components[c].vertices.size(); ++vi) {
      const Vertex& v = fd.spec.components[c].vertices[vi];
      if (v.kind == VertexKind::crossing) {
        int nmin = INT32_MAX;
        for (int corner = 0; corner < 4; ++corner)
          nmin = std::min(nmin, lab.widths[fd.face_at_corner(c, static_cast<int>(vi), corner)]);
        chi += nmin + 2;
      } else if (v.kind == VertexKind::cusp) {
        auto [wf, of] = cusp_faces(fd, c, static_cast<int>(vi));
        chi += std::min(lab.widths[wf], lab.widths[of]);
      } else {
        int a = lab.widths[fd.face_at_corner(c, static_cast<int>(vi), 0)];
        int b = lab.widths[fd.face_at_corner(c, static_cast<int>(vi), 1)];
        chi += std::min(a, b) + 1;
      }
    }
  }
  return static_cast<int>(chi);
}

inline bool thom_parity(const FoldDiagram& fd, const WidthLabeling& lab) {
  return ((fd.cusps - euler_char_stratified(fd, lab)) % 2) == 0;
}

inline DiagramInvariants compute_invariants(const FoldDiagram& fd, const WidthLabeling& lab) {
  DiagramInvariants inv;
  WidthStats st = width_stats(fd, lab);
  inv.w = st.w;
  inv.tw = st.tw;
  inv.crossings = fd.crossings;
  inv.cusps = fd.cusps;
  inv.chi = euler_char_stratified(fd, lab);
  inv.parity_ok = ((fd.cusps - inv.chi) % 2) == 0;
  inv.strands = static_cast<int>(fd.strands.size());
  inv.map_components = fd.num_components();
  inv.loops = loop_components(fd);
  return inv;
}

}  // namespace foldwidth
