#pragma once

// Constructors for the worked diagram families: nested trivial circles, the
// spun m-bridge profile, braid closures with three-cusp branch triangles,
// and ribbon surfaces built from balls joined by routed tube corridors. Each
// generator ships the diagram together with its intended labeling and, where
// available, a geometric realization for the rotation oracle.

#include "arrange.hpp"
#include "assembly.hpp"

namespace foldwidth {

struct GeneratedDiagram {
  std::string name;
  FoldDiagram diagram;
  WidthLabeling labeling;
  std::optional<FullRealization> realization;
  // experiment hook: whether w <= 2*degree held for a braid closure; recorded,
  // never asserted
  std::optional<bool> braid_w_within_twice_degree;
};

inline MapComponent circle_component() {
  MapComponent mc;
  mc.vertices.push_back({VertexKind::smooth, {0, 1}, -1});
  mc.edges.push_back({0, 1});
  return mc;
}

// k cusps in a cycle; with wedge_corner 0 every wedge points at the face
// traced by the odd darts (the inside, for the standard placement below)
inline MapComponent cusped_circle_component(int k, int wedge_corner = 0) {
  MapComponent mc;
  for (int i = 0; i < k; ++i) mc.vertices.push_back({VertexKind::cusp, {2 * i, 2 * i + 1}, wedge_corner});
  for (int i = 0; i < k; ++i) mc.edges.push_back({2 * i + 1, (2 * i + 2) % (2 * k)});
  return mc;
}

namespace detail {

// labeling from per-component inner widths (crossing-free nests only)
inline WidthLabeling nest_labeling(const FoldDiagram& fd, const std::vector<int>& inner_width) {
  std::vector<int> widths(fd.faces.size(), 0);
  for (size_t g = 0; g < fd.faces.size(); ++g) {
    if (static_cast<int>(g) == fd.outer_face) continue;
    widths[g] = inner_width[fd.face_host[g].first];
  }
  auto lab = labeling_from_widths(fd, widths);
  if (!lab) fail(ErrorKind::InvalidNesting, "constructed widths are not admissible");
  return *lab;
}

}  // namespace detail

// ------------------------------------------------------------- gen_trivial

struct NestNode {
  std::vector<NestNode> kids;
};

// forest written in parentheses, e.g. "(()())()"
inline std::vector<NestNode> parse_forest(const std::string& text) {
  std::vector<NestNode> roots;
  std::vector<NestNode*> stack;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') continue;
    if (ch == '(') {
      std::vector<NestNode>& into = stack.empty() ? roots : stack.back()->kids;
      into.push_back(NestNode{});
      stack.push_back(&into.back());
    } else if (ch == ')') {
      if (stack.empty()) fail(ErrorKind::InvalidNesting, "unbalanced ')'");
      stack.pop_back();
    } else {
      fail(ErrorKind::InvalidNesting, std::string("unexpected character '") + ch + "'");
    }
  }
  if (!stack.empty()) fail(ErrorKind::InvalidNesting, "unbalanced '('");
  if (roots.empty()) fail(ErrorKind::InvalidNesting, "empty forest");
  return roots;
}

// circles only, widths alternating 2/0 by nesting depth
inline GeneratedDiagram gen_trivial(const std::vector<NestNode>& forest) {
  if (forest.empty()) fail(ErrorKind::InvalidNesting, "empty forest");
  DiagramSpec spec;
  std::vector<int> inner_width;
  std::function<void(const NestNode&, int, int)> add = [&](const NestNode& node, int parent, int depth) {
    int idx = static_cast<int>(spec.components.size());
    spec.components.push_back(circle_component());
    spec.placements.push_back(parent < 0 ? Placement{kOuter, -1, 0} : Placement{parent, 1, 0});
    inner_width.push_back(depth % 2 == 1 ? 2 : 0);
    for (const NestNode& kid : node.kids) add(kid, idx, depth + 1);
  };
  for (const NestNode& root : forest) add(root, -1, 1);

  GeneratedDiagram out;
  out.name = "trivial";
  out.diagram = build_diagram(spec);
  out.labeling = detail::nest_labeling(out.diagram, inner_width);
  out.realization = realize_crossing_free(out.diagram, out.labeling);
  return out;
}

// --------------------------------------------------------- gen_spun_bridge

// Concentric profile of spinning a plat-positioned m-bridge arc: widths from
// the outside in read 2, 4, ..., 2m, 2m-2, ..., 2 over 2m-1 circles.
inline GeneratedDiagram gen_spun_bridge(int m) {
  if (m < 2) fail(ErrorKind::InvalidNesting, "bridge index must be at least 2");
  int rings = 2 * m - 1;
  DiagramSpec spec;
  std::vector<int> inner_width(rings);
  for (int j = 0; j < rings; ++j) {
    spec.components.push_back(circle_component());
    spec.placements.push_back(j == 0 ? Placement{kOuter, -1, 0} : Placement{j - 1, 1, 0});
    inner_width[j] = j < m ? 2 * (j + 1) : 2 * (rings - j);
  }
  GeneratedDiagram out;
  out.name = "spun-" + std::to_string(m);
  out.diagram = build_diagram(spec);
  out.labeling = detail::nest_labeling(out.diagram, inner_width);
  out.realization = realize_crossing_free(out.diagram, out.labeling);
  return out;
}

// -------------------------------------------------------- gen_braid_closure

struct BraidSpec {
  int degree = 1;         // b >= 1
  int branch_points = 0;  // r >= 0, even (orientable closed cover)
};

// b concentric circles of widths 2..2b, with each branch point deformed into
// a three-cusp triangle of width 2b+2 inside the innermost disk
inline GeneratedDiagram gen_braid_closure(const BraidSpec& bs) {
  if (bs.degree < 1) fail(ErrorKind::InvalidNesting, "braid degree must be at least 1");
  if (bs.branch_points < 0 || bs.branch_points % 2 != 0)
    fail(ErrorKind::InvalidNesting, "branch point count must be even and non-negative");
  DiagramSpec spec;
  std::vector<int> inner_width;
  for (int j = 0; j < bs.degree; ++j) {
    spec.components.push_back(circle_component());
    spec.placements.push_back(j == 0 ? Placement{kOuter, -1, 0} : Placement{j - 1, 1, 0});
    inner_width.push_back(2 * (j + 1));
  }
  for (int t = 0; t < bs.branch_points; ++t) {
    spec.components.push_back(cusped_circle_component(3, 0));
    spec.placements.push_back({bs.degree - 1, 1, 0});
    inner_width.push_back(2 * bs.degree + 2);
  }
  GeneratedDiagram out;
  out.name = "braid-" + std::to_string(bs.degree) + "-" + std::to_string(bs.branch_points);
  out.diagram = build_diagram(spec);
  out.labeling = detail::nest_labeling(out.diagram, inner_width);
  out.realization = realize_crossing_free(out.diagram, out.labeling);
  WidthStats st = width_stats(out.diagram, out.labeling);
  out.braid_w_within_twice_degree = st.w <= 2 * bs.degree;
  return out;
}

// --------------------------------------------------------------- gen_ribbon

struct RibbonPass {
  int ball = 0;
  bool over = false;  // false: routed beside, leaves no trace
};

struct RibbonTube {
  int from = 0, to = 0;
  std::vector<RibbonPass> passes;
};

struct RibbonSpec {
  int balls = 1;
  std::vector<RibbonTube> tubes;
};

namespace detail {

// cut every interior corner so no turn reaches 90 degrees (the line-field
// winding is ambiguous there)
inline Polyline chamfer_path(const Polyline& core, double c) {
  Polyline out{core.front()};
  for (size_t i = 1; i + 1 < core.size(); ++i) {
    Vec2 din = core[i] - core[i - 1];
    Vec2 dout = core[i + 1] - core[i];
    double turn = std::abs(std::atan2(cross(din, dout), dot(din, dout)));
    if (turn < 0.7) {
      out.push_back(core[i]);
      continue;
    }
    double ci = std::min({c, 0.4 * norm(din), 0.4 * norm(dout)});
    out.push_back(core[i] - unit(din) * ci);
    out.push_back(core[i] + unit(dout) * ci);
  }
  out.push_back(core.back());
  return out;
}

inline Polyline offset_polyline(const Polyline& core, double off) {
  Polyline out;
  int n = static_cast<int>(core.size());
  for (int i = 0; i < n; ++i) {
    Vec2 din = i > 0 ? unit(core[i] - core[i - 1]) : unit(core[1] - core[0]);
    Vec2 dout = i + 1 < n ? unit(core[i + 1] - core[i]) : din;
    Vec2 nsum = perp(din) + perp(dout);
    Vec2 nrm = norm(nsum) < 1e-9 ? perp(din) : unit(nsum);
    double miter = off / std::max(0.4, dot(nrm, perp(din)));  // miter join
    out.push_back(core[i] + nrm * miter);
  }
  return out;
}

inline void subdivide_polyline(Polyline& pts, double maxlen) {
  Polyline out;
  int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    Vec2 a = pts[i], b = pts[(i + 1) % n];
    out.push_back(a);
    int extra = static_cast<int>(norm(b - a) / maxlen);
    for (int j = 1; j <= extra; ++j) out.push_back(a + (b - a) * (static_cast<double>(j) / (extra + 1)));
  }
  pts = std::move(out);
}

}  // namespace detail

// Ball boundaries as unit circles on a row, tubes as corridors of width 2
// routed above or below the row; a pass over a ball dips the corridor across
// the ball's disk, creating four crossings and a width-4 patch.
inline GeneratedDiagram gen_ribbon(const RibbonSpec& rs) {
  if (rs.balls < 1) fail(ErrorKind::InvalidNesting, "need at least one ball");
  for (const RibbonTube& t : rs.tubes) {
    if (t.from < 0 || t.from >= rs.balls || t.to < 0 || t.to >= rs.balls)
      fail(ErrorKind::InvalidNesting, "tube endpoint out of range");
    for (const RibbonPass& p : t.passes)
      if (p.ball < 0 || p.ball >= rs.balls) fail(ErrorKind::InvalidNesting, "pass out of range");
  }
  {
    detail::UnionFind uf(rs.balls);
    for (const RibbonTube& t : rs.tubes) uf.unite(t.from, t.to);
    for (int j = 1; j < rs.balls; ++j)
      if (uf.find(j) != uf.find(0))
        fail(ErrorKind::DisconnectedSpec, "ball/tube incidence graph is not connected");
  }

  const double spacing = 5.0, R = 1.0, delta = 0.07;
  const double gamma = std::asin(delta / R);
  auto center = [&](int j) { return Vec2{spacing * j, 0.0}; };

  // route side: greedy 2-coloring of the interval interleaving graph
  int nt = static_cast<int>(rs.tubes.size());
  std::vector<int> side(nt, +1);  // +1 above, -1 below
  auto interleaves = [&](int i, int j) {
    int a1 = std::min(rs.tubes[i].from, rs.tubes[i].to), b1 = std::max(rs.tubes[i].from, rs.tubes[i].to);
    int a2 = std::min(rs.tubes[j].from, rs.tubes[j].to), b2 = std::max(rs.tubes[j].from, rs.tubes[j].to);
    return (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
  };
  for (int i = 0; i < nt; ++i)
    for (int j = 0; j < i; ++j)
      if (interleaves(i, j) && side[j] == side[i]) side[i] = -side[j];

  // lanes: shorter corridors run lower so nested runs stay nested
  std::vector<int> lane_rank(nt, 0);
  {
    std::vector<int> order(nt);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int la = std::abs(rs.tubes[a].to - rs.tubes[a].from), lb = std::abs(rs.tubes[b].to - rs.tubes[b].from);
      return std::tie(la, a) < std::tie(lb, b);
    });
    std::vector<int> rank_above, rank_below;
    for (int idx : order) (side[idx] > 0 ? rank_above : rank_below).push_back(idx);
    for (size_t i = 0; i < rank_above.size(); ++i) lane_rank[rank_above[i]] = static_cast<int>(i);
    for (size_t i = 0; i < rank_below.size(); ++i) lane_rank[rank_below[i]] = static_cast<int>(i);
  }

  // slots: tube ends per ball and side, ordered by partner position
  struct End { int tube, other_ball; double angle = 0; };
  std::vector<std::vector<End>> ends(rs.balls);
  for (int t = 0; t < nt; ++t) {
    ends[rs.tubes[t].from].push_back({t, rs.tubes[t].to, 0});
    ends[rs.tubes[t].to].push_back({t, rs.tubes[t].from, 0});
  }
  // angle per (tube, which end): record into a lookup
  std::map<std::pair<int, int>, double> slot_angle;  // (tube, 0=from/1=to) -> angle
  for (int j = 0; j < rs.balls; ++j) {
    for (int s : {+1, -1}) {
      std::vector<End*> here;
      for (End& e : ends[j])
        if (side[e.tube] == s) here.push_back(&e);
      // sorted order runs from the rightmost slot to the leftmost: corridors
      // heading right sit on the right (lowest lane innermost), self loops in
      // the middle, corridors heading left on the left (highest lane outermost)
      auto group = [&](End* e) { return e->other_ball > j ? 0 : (e->other_ball == j ? 1 : 2); };
      std::sort(here.begin(), here.end(), [&](End* a, End* b) {
        if (group(a) != group(b)) return group(a) < group(b);
        if (group(a) == 0) return lane_rank[a->tube] < lane_rank[b->tube];
        if (group(a) == 2) return lane_rank[a->tube] > lane_rank[b->tube];
        return a->tube < b->tube;
      });
      int n = static_cast<int>(here.size());
      for (int k = 0; k < n; ++k) {
        double base = s > 0 ? M_PI / 2 : -M_PI / 2;
        double ang = base + s * 0.55 * (k - (n - 1) / 2.0);
        here[k]->angle = ang;
        const RibbonTube& tube = rs.tubes[here[k]->tube];
        int which = (tube.from == j && !slot_angle.count({here[k]->tube, 0})) ? 0 : 1;
        slot_angle[{here[k]->tube, which}] = ang;
      }
    }
  }

  // open ball arcs between gaps, in ccw order
  std::vector<Polyline> pieces;                    // directed pieces to stitch
  std::vector<std::array<Vec2, 2>> piece_ends;     // start, end
  auto circle_point = [&](int j, double ang) { return center(j) + Vec2{R * std::cos(ang), R * std::sin(ang)}; };
  std::vector<std::vector<double>> gaps(rs.balls);  // slot angles per ball
  for (auto& [key, ang] : slot_angle) {
    int ball = key.second == 0 ? rs.tubes[key.first].from : rs.tubes[key.first].to;
    gaps[ball].push_back(ang);
  }
  for (int j = 0; j < rs.balls; ++j) {
    std::sort(gaps[j].begin(), gaps[j].end());
    if (gaps[j].empty()) {
      Polyline circle;
      for (int i = 0; i < 128; ++i) circle.push_back(circle_point(j, 2 * M_PI * (i + 0.21) / 128));
      pieces.push_back(circle);
      piece_ends.push_back({circle.front(), circle.front()});  // closed on its own
      continue;
    }
    int ng = static_cast<int>(gaps[j].size());
    for (int g = 0; g < ng; ++g) {
      double from = gaps[j][g] + gamma;
      double to = gaps[j][(g + 1) % ng] - gamma + (g + 1 == ng ? 2 * M_PI : 0);
      Polyline arc;
      int steps = std::max(24, static_cast<int>((to - from) / 0.05));
      for (int i = 0; i <= steps; ++i) arc.push_back(circle_point(j, from + (to - from) * i / steps));
      pieces.push_back(arc);
      piece_ends.push_back({arc.front(), arc.back()});
    }
  }

  // corridors
  std::vector<std::pair<Polyline, Polyline>> tube_walls(nt);  // (minus: fwd, plus: to reverse)
  std::vector<int> dips_used(rs.balls, 0);
  for (int t = 0; t < nt; ++t) {
    const RibbonTube& tube = rs.tubes[t];
    int s = side[t];
    double H = s * (2.2 + 0.8 * lane_rank[t]);
    double a_ang = slot_angle.at({t, 0}), b_ang = slot_angle.at({t, 1});
    Vec2 pa = circle_point(tube.from, a_ang), pb = circle_point(tube.to, b_ang);
    Vec2 ra = center(tube.from) + Vec2{1.6 * R * std::cos(a_ang), 1.6 * R * std::sin(a_ang)};
    Vec2 rb = center(tube.to) + Vec2{1.6 * R * std::cos(b_ang), 1.6 * R * std::sin(b_ang)};
    Polyline core{pa, ra, Vec2{ra.x, H}};
    // dips over balls, ordered along the run
    std::vector<std::pair<double, int>> dips;
    for (const RibbonPass& p : tube.passes)
      if (p.over) dips.push_back({center(p.ball).x, p.ball});
    bool leftward = rb.x < ra.x;
    std::sort(dips.begin(), dips.end());
    if (leftward) std::reverse(dips.begin(), dips.end());
    for (auto& [cx, ball] : dips) {
      int k = dips_used[ball]++;
      if (k > 3) fail(ErrorKind::BoundExceeded, "too many passes over one ball");
      double half = 0.75 * R + 0.05 * k;
      double depth = s * (0.15 + 0.22 * k);
      double x0 = cx + (leftward ? half : -half), x1 = cx + (leftward ? -half : half);
      core.push_back({x0, H});
      core.push_back({x0, depth});
      core.push_back({x1, depth});
      core.push_back({x1, H});
    }
    core.push_back({rb.x, H});
    core.push_back(rb);
    core.push_back(pb);
    core = detail::chamfer_path(core, 0.16);
    Polyline minus = detail::offset_polyline(core, -delta);
    Polyline plus = detail::offset_polyline(core, +delta);
    // snap wall ends onto the circles at the gap edges
    minus.front() = circle_point(tube.from, a_ang - gamma);
    minus.back() = circle_point(tube.to, b_ang + gamma);
    plus.front() = circle_point(tube.from, a_ang + gamma);
    plus.back() = circle_point(tube.to, b_ang - gamma);
    tube_walls[t] = {minus, plus};
    pieces.push_back(minus);
    piece_ends.push_back({minus.front(), minus.back()});
    Polyline plus_rev(plus.rbegin(), plus.rend());
    pieces.push_back(plus_rev);
    piece_ends.push_back({plus_rev.front(), plus_rev.back()});
  }

  // stitch directed pieces into closed loops by matching endpoints
  auto key_of = [](Vec2 p) {
    return std::pair<long long, long long>(std::llround(p.x * 1e7), std::llround(p.y * 1e7));
  };
  std::map<std::pair<long long, long long>, int> start_at;
  for (size_t i = 0; i < pieces.size(); ++i) {
    auto k = key_of(piece_ends[i][0]);
    if (start_at.count(k)) fail(ErrorKind::RealizationMismatch, "ribbon stitching is ambiguous");
    start_at[k] = static_cast<int>(i);
  }
  std::vector<char> used(pieces.size(), 0);
  std::vector<Polyline> loops;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (used[i]) continue;
    Polyline loop;
    int cur = static_cast<int>(i);
    do {
      used[cur] = 1;
      const Polyline& p = pieces[cur];
      bool closed_piece = key_of(piece_ends[cur][0]) == key_of(piece_ends[cur][1]) && p.size() > 3;
      loop.insert(loop.end(), p.begin(), p.end() - (closed_piece ? 0 : 1));
      if (closed_piece) break;
      auto it = start_at.find(key_of(piece_ends[cur][1]));
      if (it == start_at.end()) fail(ErrorKind::RealizationMismatch, "ribbon stitching broke");
      cur = it->second;
    } while (!used[cur]);
    // start each loop at its |y|-extreme point, away from the ball slots
    size_t best = 0;
    for (size_t k = 0; k < loop.size(); ++k)
      if (std::abs(loop[k].y) > std::abs(loop[best].y)) best = k;
    std::rotate(loop.begin(), loop.begin() + best, loop.end());
    loops.push_back(std::move(loop));
  }

  Arrangement arr = build_arrangement(loops, 0.02);

  // widths by covering count: 2 per ball disk or corridor strip above a point
  auto coverage = [&](Vec2 q) {
    int cov = 0;
    for (int j = 0; j < rs.balls; ++j)
      if (norm(q - center(j)) < R) ++cov;
    for (int t = 0; t < nt; ++t) {
      Polyline strip = tube_walls[t].first;
      strip.insert(strip.end(), tube_walls[t].second.rbegin(), tube_walls[t].second.rend());
      if (point_in_polygon(strip, q)) ++cov;
    }
    return 2 * cov;
  };
  std::vector<int> widths(arr.diagram.faces.size(), 0);
  for (auto& [face, pt] : arr.realization.face_witness)
    widths[face] = face == arr.diagram.outer_face ? 0 : coverage(pt);
  auto lab = labeling_from_widths(arr.diagram, widths);
  if (!lab) fail(ErrorKind::RealizationMismatch, "ribbon widths are not admissible");

  GeneratedDiagram out;
  out.name = "ribbon-" + std::to_string(rs.balls) + "b" + std::to_string(nt) + "t";
  out.diagram = std::move(arr.diagram);
  out.labeling = std::move(*lab);
  out.realization = std::move(arr.realization);

  WidthStats st = width_stats(out.diagram, out.labeling);
  if (st.w > 4) fail(ErrorKind::RealizationMismatch, "ribbon width exceeded 4");
  int chi = euler_char_stratified(out.diagram, out.labeling);
  if (chi != 2 * rs.balls - 2 * nt)
    fail(ErrorKind::RealizationMismatch, "ribbon Euler characteristic is off");
  return out;
}

}  // namespace foldwidth
