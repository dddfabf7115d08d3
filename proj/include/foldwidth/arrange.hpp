#pragma once

// Builds the combinatorial diagram of a concrete drawing: a set of closed,
// oriented polylines with transversal crossings. Rotation systems come from
// crossing angles, placements from ray-cast containment, and the result is
// validated by build_diagram, so a drawing that does not form a legal fold
// diagram fails loudly. Used by generators that are easiest to specify as
// pictures; catalog enumeration never goes through here.

#include "realize.hpp"

namespace foldwidth {

struct Arrangement {
  DiagramSpec spec;
  FoldDiagram diagram;
  std::vector<int> curve_strand;      // per input curve
  std::vector<uint8_t> curve_forward; // per input curve: travel equals the stored forward orbit
  FullRealization realization;        // travel-oriented curves plus witnesses for every face
};

namespace detail {

struct ArrangeEvent {
  int seg = 0;
  double t = 0;
  int hit = -1;   // crossing id
  int role = 0;   // 0: first incident curve of the hit, 1: second
  bool operator<(const ArrangeEvent& o) const { return std::tie(seg, t) < std::tie(o.seg, o.t); }
};

}  // namespace detail

inline Arrangement build_arrangement(const std::vector<Polyline>& curves, double eps = 0.03) {
  struct Hit {
    int ca, sa, cb, sb;
    double ta, tb;
    Vec2 p;
    Vec2 dira, dirb;
  };
  std::vector<Hit> hits;
  auto seg_count = [&](int c) { return static_cast<int>(curves[c].size()); };
  auto seg = [&](int c, int s) {
    return std::pair<Vec2, Vec2>{curves[c][s], curves[c][(s + 1) % seg_count(c)]};
  };
  for (int ca = 0; ca < static_cast<int>(curves.size()); ++ca) {
    for (int cb = ca; cb < static_cast<int>(curves.size()); ++cb) {
      for (int sa = 0; sa < seg_count(ca); ++sa) {
        int sb0 = (ca == cb) ? sa + 1 : 0;
        for (int sb = sb0; sb < seg_count(cb); ++sb) {
          if (ca == cb) {
            int m = seg_count(ca);
            int diff = (sb - sa) % m;
            if (diff == 0 || diff == 1 || diff == m - 1) continue;
          }
          auto [p1, q1] = seg(ca, sa);
          auto [p2, q2] = seg(cb, sb);
          Vec2 d1 = q1 - p1, d2 = q2 - p2;
          double denom = cross(d1, d2);
          if (std::abs(denom) < 1e-10 * norm(d1) * norm(d2)) continue;
          Vec2 w = p2 - p1;
          double t1 = cross(w, d2) / denom;
          double t2 = cross(w, d1) / denom;
          if (t1 < -1e-9 || t1 > 1 + 1e-9 || t2 < -1e-9 || t2 > 1 + 1e-9) continue;
          if (t1 < 1e-6 || t1 > 1 - 1e-6 || t2 < 1e-6 || t2 > 1 - 1e-6)
            fail(ErrorKind::RealizationMismatch, "crossing too close to a sample point");
          if (std::abs(denom) < 0.05 * norm(d1) * norm(d2))
            fail(ErrorKind::RealizationMismatch, "crossing is nearly tangent");
          hits.push_back({ca, sa, cb, sb, t1, t2, p1 + d1 * t1, unit(d1), unit(d2)});
        }
      }
    }
  }

  // events per curve in travel order
  std::vector<std::vector<detail::ArrangeEvent>> events(curves.size());
  for (size_t h = 0; h < hits.size(); ++h) {
    events[hits[h].ca].push_back({hits[h].sa, hits[h].ta, static_cast<int>(h), 0});
    events[hits[h].cb].push_back({hits[h].sb, hits[h].tb, static_cast<int>(h), 1});
  }
  for (auto& ev : events) std::sort(ev.begin(), ev.end());

  // darts: 4 per hit (A-out, A-in, B-out, B-in), then 2 per smooth marker
  int ndarts = 4 * static_cast<int>(hits.size());
  std::vector<Vec2> dart_pos(ndarts), dart_dir(ndarts);
  for (size_t h = 0; h < hits.size(); ++h) {
    const Hit& ht = hits[h];
    int base = 4 * static_cast<int>(h);
    dart_pos[base + 0] = dart_pos[base + 1] = dart_pos[base + 2] = dart_pos[base + 3] = ht.p;
    dart_dir[base + 0] = ht.dira;
    dart_dir[base + 1] = ht.dira * -1.0;
    dart_dir[base + 2] = ht.dirb;
    dart_dir[base + 3] = ht.dirb * -1.0;
  }
  std::vector<int> marker_base(curves.size(), -1);
  for (size_t c = 0; c < curves.size(); ++c) {
    if (!events[c].empty()) continue;
    marker_base[c] = ndarts;
    dart_pos.push_back(curves[c][0]);
    dart_dir.push_back(unit(curves[c][1] - curves[c][0]));
    dart_pos.push_back(curves[c][0]);
    dart_dir.push_back(unit(curves[c][curves[c].size() - 1] - curves[c][0]));
    ndarts += 2;
  }

  // union curves into map components through shared hits
  int ncur = static_cast<int>(curves.size());
  detail::UnionFind uf(ncur);
  for (const Hit& h : hits) uf.unite(h.ca, h.cb);
  std::map<int, int> comp_of_root;
  std::vector<int> curve_comp(ncur);
  for (int c = 0; c < ncur; ++c) {
    int r = uf.find(c);
    if (!comp_of_root.count(r)) comp_of_root[r] = static_cast<int>(comp_of_root.size());
    curve_comp[c] = comp_of_root[r];
  }
  int ncomp = static_cast<int>(comp_of_root.size());

  DiagramSpec spec;
  spec.components.resize(ncomp);
  // crossing vertices, rotation by angle
  std::vector<int> hit_comp(hits.size());
  for (size_t h = 0; h < hits.size(); ++h) {
    const Hit& ht = hits[h];
    hit_comp[h] = curve_comp[ht.ca];
    int base = 4 * static_cast<int>(h);
    std::vector<int> rot{base, base + 1, base + 2, base + 3};
    std::sort(rot.begin(), rot.end(), [&](int a, int b) {
      return std::atan2(dart_dir[a].y, dart_dir[a].x) < std::atan2(dart_dir[b].y, dart_dir[b].x);
    });
    spec.components[hit_comp[h]].vertices.push_back({VertexKind::crossing, rot, -1});
  }
  for (int c = 0; c < ncur; ++c) {
    if (marker_base[c] < 0) continue;
    spec.components[curve_comp[c]].vertices.push_back(
        {VertexKind::smooth, {marker_base[c], marker_base[c] + 1}, -1});
  }

  // arcs: per curve, between consecutive events
  struct Arc {
    int curve = 0;
    int from_ev = 0;  // arc runs from events[from_ev] to the next event
    int fwd_dart = -1, back_dart = -1;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> curve_arcs(ncur);
  auto out_dart = [&](const detail::ArrangeEvent& ev) { return 4 * ev.hit + (ev.role ? 2 : 0); };
  auto in_dart = [&](const detail::ArrangeEvent& ev) { return 4 * ev.hit + (ev.role ? 3 : 1); };
  for (int c = 0; c < ncur; ++c) {
    if (events[c].empty()) {
      Arc a{c, -1, marker_base[c], marker_base[c] + 1};
      curve_arcs[c].push_back(static_cast<int>(arcs.size()));
      spec.components[curve_comp[c]].edges.push_back({a.fwd_dart, a.back_dart});
      arcs.push_back(a);
      continue;
    }
    int ne = static_cast<int>(events[c].size());
    for (int k = 0; k < ne; ++k) {
      Arc a{c, k, out_dart(events[c][k]), in_dart(events[c][(k + 1) % ne])};
      curve_arcs[c].push_back(static_cast<int>(arcs.size()));
      spec.components[curve_comp[c]].edges.push_back({a.fwd_dart, a.back_dart});
      arcs.push_back(a);
    }
  }

  // temporary builds per component to locate faces
  std::vector<BuiltComponent> built;
  for (int c = 0; c < ncomp; ++c) built.push_back(detail::build_component(spec.components[c], c));

  // leftmost polyline point of each map component decides its outer face
  std::vector<int> comp_outer_face(ncomp, -1);
  std::vector<Vec2> comp_probe(ncomp);
  auto arc_of_position = [&](int c, int segidx, double t) {
    // the arc of curve c covering position t of segment segidx
    if (events[c].empty()) return curve_arcs[c][0];
    int ne = static_cast<int>(events[c].size());
    detail::ArrangeEvent key{segidx, t, 0, 0};
    int idx = -1;  // last event strictly before the position, cyclically
    for (int k = 0; k < ne; ++k)
      if (events[c][k] < key) idx = k;
    if (idx < 0) idx = ne - 1;  // before the first event: the wrap-around arc
    return curve_arcs[c][idx];
  };
  auto face_on_side = [&](int comp, const Arc& a, bool left) {
    int dart = left ? a.back_dart : a.fwd_dart;
    // left of travel is the left of the forward dart, i.e. the face of its partner
    int dense = built[comp].dart_of_id(dart);
    return built[comp].dart_face[dense];
  };
  for (int comp = 0; comp < ncomp; ++comp) {
    int best_curve = -1, best_idx = -1;
    for (int c = 0; c < ncur; ++c) {
      if (curve_comp[c] != comp) continue;
      for (size_t i = 0; i < curves[c].size(); ++i) {
        Vec2 p = curves[c][i];
        if (best_curve < 0 || std::tie(p.x, p.y) < std::tie(curves[best_curve][best_idx].x,
                                                            curves[best_curve][best_idx].y)) {
          best_curve = c;
          best_idx = static_cast<int>(i);
        }
      }
    }
    comp_probe[comp] = curves[best_curve][best_idx];
    int m = seg_count(best_curve);
    Vec2 leave = unit(curves[best_curve][(best_idx + 1) % m] - curves[best_curve][best_idx]);
    Vec2 arrive = unit(curves[best_curve][best_idx] - curves[best_curve][(best_idx + m - 1) % m]);
    // the side test degenerates on a horizontal segment; the other one of the
    // two segments at the extreme point is then steep
    Vec2 s = leave;
    int arcidx = arc_of_position(best_curve, best_idx, 0.0);
    if (std::abs(arrive.y) > std::abs(leave.y)) {
      s = arrive;
      arcidx = arc_of_position(best_curve, (best_idx + m - 1) % m, 0.9999);
    }
    const Arc& a = arcs[arcidx];
    bool outward_left = cross(s, Vec2{-1, 0}) > 0;
    comp_outer_face[comp] = face_on_side(comp, a, outward_left);
  }

  // containment: which local face of component Y holds a probe point
  auto locate_in = [&](Vec2 q, int compY) -> int {
    for (int attempt = 0; attempt < 24; ++attempt) {
      double ang = 0.523 + attempt * 0.271;
      Vec2 r{std::cos(ang), std::sin(ang)};
      double best_t = 1e30;
      int best_arc = -1, best_seg = -1, best_curvehit = -1;
      bool clean = true;
      for (int c = 0; c < ncur && clean; ++c) {
        if (curve_comp[c] != compY) continue;
        int m = seg_count(c);
        for (int i = 0; i < m && clean; ++i) {
          Vec2 p = curves[c][i];
          Vec2 d2 = curves[c][(i + 1) % m] - p;
          double denom = cross(r, d2);
          if (std::abs(denom) < 1e-10 * norm(d2)) continue;
          Vec2 w = p - q;
          double tv = cross(w, d2) / denom;
          double vv = cross(w, r) / denom;
          if (tv <= 1e-9) continue;
          if (vv <= 1e-7 || vv >= 1 - 1e-7) {
            if (vv > -1e-7 && vv < 1 + 1e-7) clean = false;
            continue;
          }
          if (tv < best_t) {
            best_t = tv;
            best_arc = arc_of_position(c, i, vv);
            best_seg = i;
            best_curvehit = c;
          }
        }
      }
      if (!clean) continue;
      if (best_arc < 0) return -1;  // outside Y entirely
      const Arc& a = arcs[best_arc];
      Vec2 p = curves[best_curvehit][best_seg];
      Vec2 d2 = unit(curves[best_curvehit][(best_seg + 1) % seg_count(best_curvehit)] - p);
      bool q_left = cross(d2, q - p) > 0;  // q relative to the hit segment
      return face_on_side(compY, a, q_left);
    }
    fail(ErrorKind::RealizationMismatch, "containment probe failed");
  };

  spec.placements.assign(ncomp, Placement{});
  std::vector<int> depth(ncomp, 0);
  std::vector<std::vector<int>> inside_face(ncomp, std::vector<int>(ncomp, -1));
  for (int x = 0; x < ncomp; ++x) {
    for (int y = 0; y < ncomp; ++y) {
      if (x == y) continue;
      int f = locate_in(comp_probe[x], y);
      if (f >= 0 && f != comp_outer_face[y]) {
        inside_face[x][y] = f;
        ++depth[x];
      }
    }
  }
  for (int x = 0; x < ncomp; ++x) {
    Placement p;
    p.outer_face = built[x].faces[comp_outer_face[x]].min_dart_id;
    int parent = -1;
    for (int y = 0; y < ncomp; ++y)
      if (inside_face[x][y] >= 0 && (parent < 0 || depth[y] > depth[parent])) parent = y;
    if (parent >= 0) {
      p.parent = parent;
      p.parent_face = built[parent].faces[inside_face[x][parent]].min_dart_id;
    }
    spec.placements[x] = p;
  }

  Arrangement arr;
  arr.spec = spec;
  arr.diagram = build_diagram(spec);

  // realization: one curve per strand; here every input curve is a strand
  arr.curve_strand.assign(ncur, -1);
  arr.curve_forward.assign(ncur, 0);
  for (int c = 0; c < ncur; ++c) {
    const Arc& a = arcs[curve_arcs[c][0]];
    int comp = curve_comp[c];
    int dense = arr.diagram.comps[comp].dart_of_id(a.fwd_dart);
    arr.curve_strand[c] = arr.diagram.strand_of(comp, dense);
    arr.curve_forward[c] = arr.diagram.dart_forward(comp, dense);
    RealizedCurve rc;
    rc.strand = arr.curve_strand[c];
    rc.pts = curves[c];
    arr.realization.geom.curves.push_back(std::move(rc));
  }
  {
    std::set<int> strands(arr.curve_strand.begin(), arr.curve_strand.end());
    if (static_cast<int>(strands.size()) != static_cast<int>(arr.diagram.strands.size()))
      fail(ErrorKind::RealizationMismatch, "curves do not traverse distinct strands");
  }

  // face witnesses: near-vertex samples on the right of a dart of each face
  for (size_t f = 0; f < arr.diagram.faces.size(); ++f) {
    if (static_cast<int>(f) == arr.diagram.outer_face) {
      double far = 0;
      for (const auto& c : curves)
        for (const Vec2& p : c) far = std::max(far, std::abs(p.x) + std::abs(p.y));
      arr.realization.face_witness.push_back({static_cast<int>(f), Vec2{far + 13.0, 1.77}});
      continue;
    }
    auto [comp, lf] = arr.diagram.faces[f].members.front();
    int dense = arr.diagram.comps[comp].faces[lf].orbit.front();
    int id = arr.diagram.comps[comp].dart_ids[dense];
    Vec2 pos = dart_pos[id], dir = dart_dir[id];
    Vec2 sample = pos + dir * (5 * eps) - perp(dir) * eps;
    arr.realization.face_witness.push_back({static_cast<int>(f), sample});
  }
  return arr;
}

}  // namespace foldwidth
