#pragma once

// Geometric realizations of labeled diagrams and the numeric rotation
// oracle. A realization supplies one closed curve per strand, traversed in
// the direction induced by the labeling, plus a witness point inside every
// global face. Verification re-derives the widths at all witnesses by signed
// ray casting and matches each curve's cusp itinerary against the strand's,
// so a realization that disagrees with the combinatorics is rejected.

#include "canonical.hpp"
#include "geometry.hpp"
#include "invariants.hpp"

namespace foldwidth {

struct FullRealization {
  Realization geom;
  std::vector<std::pair<int, Vec2>> face_witness;  // (global face id, sample point)
};

namespace detail {

// cusp visits of a strand in travel order under the labeling's orientation
inline std::vector<std::pair<int, int>> strand_cusp_itinerary(const FoldDiagram& fd,
                                                              const WidthLabeling& lab, int s) {
  const Strand& st = fd.strands[s];
  int c = st.component;
  std::vector<std::pair<int, int>> visits;  // (component, vertex)
  for (int d : st.forward) {
    int far = fd.comps[c].alpha[d];
    int v = fd.comps[c].dart_vertex[far];
    if (fd.spec.components[c].vertices[v].kind == VertexKind::cusp) visits.push_back({c, v});
  }
  if (!lab.orientation[s]) std::reverse(visits.begin(), visits.end());
  return visits;
}

inline bool cyclically_equal(const std::vector<std::pair<int, int>>& a,
                             const std::vector<std::pair<int, int>>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (size_t shift = 0; shift < a.size(); ++shift) {
    bool ok = true;
    for (size_t i = 0; i < a.size() && ok; ++i) ok = a[(i + shift) % a.size()] == b[i];
    if (ok) return true;
  }
  return false;
}

}  // namespace detail

// Throws RealizationMismatch unless the realization traces to the labeled
// diagram: one curve per strand, matching cusp itineraries, and ray-cast
// widths equal to the labeling at a witness inside every global face.
inline void verify_realization(const FoldDiagram& fd, const WidthLabeling& lab,
                               const FullRealization& real) {
  if (lab.widths.size() != fd.faces.size())
    fail(ErrorKind::LabelingMismatch, "labeling face count does not match diagram");
  if (real.geom.curves.size() != fd.strands.size())
    fail(ErrorKind::RealizationMismatch, "curve count differs from strand count");
  std::vector<char> used(fd.strands.size(), 0);
  for (const auto& curve : real.geom.curves) {
    if (curve.strand < 0 || curve.strand >= static_cast<int>(fd.strands.size()) || used[curve.strand])
      fail(ErrorKind::RealizationMismatch, "curves do not biject onto strands");
    used[curve.strand] = 1;
    if (curve.pts.size() < 8) fail(ErrorKind::RealizationMismatch, "degenerate curve");
    if (curve.cusp_pts.size() != curve.cusp_vertex.size())
      fail(ErrorKind::RealizationMismatch, "cusp mark bookkeeping broken");
    auto want = detail::strand_cusp_itinerary(fd, lab, curve.strand);
    if (!detail::cyclically_equal(want, curve.cusp_vertex))
      fail(ErrorKind::RealizationMismatch, "cusp itinerary does not match the strand");
  }
  std::vector<char> seen(fd.faces.size(), 0);
  std::vector<const Polyline*> all;
  for (const auto& curve : real.geom.curves) all.push_back(&curve.pts);
  for (const auto& [face, pt] : real.face_witness) {
    if (face < 0 || face >= static_cast<int>(fd.faces.size()))
      fail(ErrorKind::RealizationMismatch, "witness references unknown face");
    seen[face] = 1;
    if (ray_width(all, pt) != lab.widths[face])
      fail(ErrorKind::RealizationMismatch, "witness width disagrees with labeling");
  }
  for (size_t f = 0; f < fd.faces.size(); ++f)
    if (!seen[f]) fail(ErrorKind::RealizationMismatch, "face without witness");
}

// Mapping degree of the tangent line field along the realized singular
// image; equals the stratified Euler characteristic when the realization is
// faithful.
inline int rotation_degree_numeric(const FoldDiagram& fd, const WidthLabeling& lab,
                                   const FullRealization& real) {
  verify_realization(fd, lab, real);
  int rot = 0;
  for (const auto& curve : real.geom.curves) rot += line_field_winding(curve.pts);
  return rot;
}

// Realize a crossing-free labeled diagram with nested polar curves following
// the placement tree. Returns nullopt when the diagram has crossings (those
// realizations come from the generators, which carry their own geometry).
inline std::optional<FullRealization> realize_crossing_free(const FoldDiagram& fd,
                                                            const WidthLabeling& lab) {
  if (fd.crossings > 0) return std::nullopt;
  detail::Nesting nest = detail::nesting_of(fd);
  int nc = fd.num_components();
  std::vector<Vec2> center(nc);
  std::vector<double> radius(nc, 0.0);

  std::function<void(const std::vector<int>&, Vec2, double)> layout =
      [&](const std::vector<int>& kids, Vec2 mid, double avail) {
        int n = static_cast<int>(kids.size());
        for (int j = 0; j < n; ++j) {
          int c = kids[j];
          double slot = 2.0 * avail / n;
          center[c] = mid + Vec2{-avail + slot * (j + 0.5), 0};
          radius[c] = 0.75 * avail / n;
          layout(nest.children[c], center[c], 0.55 * (radius[c] - 0.22 * radius[c]));
        }
      };
  // roots side by side
  {
    int n = static_cast<int>(nest.roots.size());
    for (int j = 0; j < n; ++j) {
      int c = nest.roots[j];
      center[c] = Vec2{30.0 * j, 0};
      radius[c] = 10.0;
      layout(nest.children[c], center[c], 0.55 * (radius[c] - 0.22 * radius[c]));
    }
  }

  FullRealization real;
  for (int c = 0; c < nc; ++c) {
    // a crossing-free component carries exactly one strand
    int s = -1;
    for (size_t i = 0; i < fd.strands.size(); ++i)
      if (fd.strands[i].component == c) s = static_cast<int>(i);
    int designated = fd.comps[c].face_index_of_id(fd.spec.placements[c].outer_face);
    int inner_local = 1 - designated;  // simple closed curve: two local faces
    int inner_g = fd.global_face_of(c, inner_local);
    int outer_g = fd.global_face_of(c, designated);
    bool ccw = lab.widths[inner_g] > lab.widths[outer_g];

    auto itinerary = detail::strand_cusp_itinerary(fd, lab, s);
    std::vector<bool> spikes;
    for (auto& [cc, vv] : itinerary) {
      auto [wf, of] = cusp_faces(fd, cc, vv);
      (void)of;
      spikes.push_back(wf == inner_g);  // wedge toward the inside: tip points out
    }
    RealizedCurve curve = polar_cusped_circle(center[c], radius[c], spikes, ccw);
    curve.strand = s;
    curve.cusp_vertex = itinerary;
    real.geom.curves.push_back(std::move(curve));

    int k = static_cast<int>(spikes.size());
    double ang = k > 0 ? M_PI / k : 0.61;
    double rr = 0.8 * (radius[c] - 0.22 * radius[c]);
    real.face_witness.push_back({inner_g, center[c] + Vec2{rr * std::cos(ang), rr * std::sin(ang)}});
  }
  // the unbounded face
  double far = 0;
  for (const auto& curve : real.geom.curves)
    for (const Vec2& p : curve.pts) far = std::max(far, std::abs(p.x) + std::abs(p.y));
  real.face_witness.push_back({fd.outer_face, Vec2{far + 17.0, 3.21}});
  return real;
}

}  // namespace foldwidth
