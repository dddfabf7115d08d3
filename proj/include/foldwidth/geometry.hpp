#pragma once

// Plane geometry helpers for realizations: closed polylines with marked cusp
// tips, signed ray-cast widths, and polar cusped-circle construction. The
// combinatorial diagram stays normative; geometry exists for the rotation
// oracle, the ribbon generator, and the SVG renderer.

#include <cmath>

#include "diagram.hpp"

namespace foldwidth {

struct Vec2 {
  double x = 0, y = 0;
  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
};
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }
inline Vec2 unit(Vec2 a) { double n = norm(a); return {a.x / n, a.y / n}; }
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }  // +90 degrees

using Polyline = std::vector<Vec2>;  // closed: back connects to front

// A closed curve realizing one strand, traversed in its positive direction.
struct RealizedCurve {
  int strand = -1;                         // index into FoldDiagram::strands
  Polyline pts;
  std::vector<int> cusp_pts;               // point indices of cusp tips, in travel order
  std::vector<std::pair<int, int>> cusp_vertex;  // parallel: (component, vertex index)
};

struct Realization {
  std::vector<RealizedCurve> curves;
};

// Signed fiber count at a point: +2 for each oriented curve crossing of a ray
// to infinity whose left side faces the query point. Retries a few ray
// directions to dodge near-degenerate hits.
inline int ray_width(const std::vector<const Polyline*>& curves, Vec2 x) {
  double far = 1.0;
  for (const Polyline* c : curves)
    for (const Vec2& p : *c) far = std::max(far, std::abs(p.x) + std::abs(p.y));
  far = far * 3 + 10 + std::abs(x.x) + std::abs(x.y);
  for (int attempt = 0; attempt < 24; ++attempt) {
    double ang = 0.137 + attempt * 0.261799;
    Vec2 r{std::cos(ang), std::sin(ang)};
    Vec2 d1 = r * far;  // ray: x + tv*d1, tv in (0, 1)
    bool clean = true;
    int total = 0;
    for (const Polyline* c : curves) {
      int m = static_cast<int>(c->size());
      for (int i = 0; i < m && clean; ++i) {
        Vec2 p = (*c)[i], q = (*c)[(i + 1) % m];
        Vec2 d2 = q - p;
        Vec2 w = p - x;
        double denom = cross(d1, d2);
        if (std::abs(denom) < 1e-12 * norm(d1) * norm(d2)) {
          // parallel: suspicious only if the segment lies on the ray line
          if (std::abs(cross(r, w)) < 1e-9) clean = false;
          continue;
        }
        double tv = cross(w, d2) / denom;
        double vv = cross(w, d1) / denom;
        if (tv <= 1e-12 || tv >= 1) continue;
        if (vv <= 1e-7 || vv >= 1 - 1e-7) {
          if (vv > -1e-7 && vv < 1 + 1e-7) clean = false;  // grazes a sample point
          continue;
        }
        total += cross(d2, r) < 0 ? 2 : -2;
      }
      if (!clean) break;
    }
    if (clean) return total;
  }
  fail(ErrorKind::RealizationMismatch, "ray width query failed to find a clean direction");
}

// Total winding of the tangent line field along a closed polyline, in units
// of pi. Cusps flip the tangent vector but not the line, so angle steps are
// folded into (-pi/2, pi/2].
inline int line_field_winding(const Polyline& pts) {
  int m = static_cast<int>(pts.size());
  double total = 0;
  double prev = 0;
  bool have_prev = false;
  for (int i = 0; i < m + 1; ++i) {
    Vec2 s = pts[(i + 1) % m] - pts[i % m];
    if (norm(s) < 1e-12) continue;
    double ang = std::atan2(s.y, s.x);
    if (have_prev) {
      double d = ang - prev;
      while (d > M_PI / 2) d -= M_PI;
      while (d <= -M_PI / 2) d += M_PI;
      // a corner at +-90 degrees has no well-defined line-field step
      if (std::abs(d) > M_PI / 2 - 0.01)
        fail(ErrorKind::RealizationMismatch, "tangent corner too sharp for the line field");
      if (i <= m) total += d;
    }
    prev = ang;
    have_prev = true;
    if (i == m) break;
  }
  double turns = total / M_PI;
  double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 0.2)
    fail(ErrorKind::RealizationMismatch, "line winding is not an integer multiple of pi");
  return static_cast<int>(rounded);
}

// A circle of radius R around `center` with the given cusp tips, sampled as a
// closed polyline in the requested direction (ccw = counterclockwise).
// spike_out[i] puts tip i outside the base circle (wedge facing the center).
inline RealizedCurve polar_cusped_circle(Vec2 center, double R, const std::vector<bool>& spike_out,
                                         bool ccw, int samples_per_arc = 48) {
  RealizedCurve out;
  int k = static_cast<int>(spike_out.size());
  double dir = ccw ? 1.0 : -1.0;
  if (k == 0) {
    int n = std::max(64, samples_per_arc);
    for (int i = 0; i < n; ++i) {
      double a = dir * 2 * M_PI * i / n;
      out.pts.push_back(center + Vec2{R * std::cos(a), R * std::sin(a)});
    }
    return out;
  }
  double h = 0.22 * R;
  double dphi = std::min(0.38, M_PI / (2.2 * k));
  auto radial = [&](double phi) { return Vec2{std::cos(phi), std::sin(phi)}; };
  std::vector<double> tip_phi(k);
  for (int i = 0; i < k; ++i) tip_phi[i] = dir * 2 * M_PI * i / k;
  double a = 0.85 * h, b = 0.9 * R * std::sin(dphi);
  auto cusp_frame = [&](int i, Vec2& tip, Vec2& u, Vec2& v) {
    Vec2 e = radial(tip_phi[i]);
    tip = center + e * (spike_out[i] ? R + h : R - h);
    u = e * (spike_out[i] ? -1.0 : 1.0);  // wedge direction
    v = perp(e) * dir;                    // travel-tangential at the tip
  };

  for (int i = 0; i < k; ++i) {
    Vec2 tip, u, v;
    cusp_frame(i, tip, u, v);
    // cusp arc, travel order t from -1 to 1
    int nc = samples_per_arc / 2;
    for (int j = 0; j <= 2 * nc; ++j) {
      double t = -1.0 + static_cast<double>(j) / nc;
      Vec2 p = tip + u * (a * t * t) + v * (b * t * t * t);
      if (j == nc) out.cusp_pts.push_back(static_cast<int>(out.pts.size()));
      out.pts.push_back(p);
    }
    // blend to the next cusp arc start
    Vec2 here = tip + u * a + v * b;
    Vec2 ntip, nu, nv;
    cusp_frame((i + 1) % k, ntip, nu, nv);
    Vec2 nstart = ntip + nu * a - nv * b;
    double r_here = norm(here - center), r_next = norm(nstart - center);
    double phi_here = std::atan2((here - center).y, (here - center).x);
    double phi_next = std::atan2((nstart - center).y, (nstart - center).x);
    double gap = dir * (phi_next - phi_here);
    while (gap <= 1e-9) gap += 2 * M_PI;
    while (gap > 2 * M_PI) gap -= 2 * M_PI;
    int nb = std::max(8, static_cast<int>(samples_per_arc * gap / (2 * M_PI / k)));
    for (int j = 1; j < nb; ++j) {
      double f = static_cast<double>(j) / nb;
      double smooth = 0.5 - 0.5 * std::cos(M_PI * f);
      double rr = r_here + (r_next - r_here) * smooth;
      double pp = phi_here + dir * gap * f;
      out.pts.push_back(center + Vec2{rr * std::cos(pp), rr * std::sin(pp)});
    }
  }
  return out;
}

inline bool point_in_polygon(const Polyline& poly, Vec2 x) {
  // even-odd rule
  bool in = false;
  int m = static_cast<int>(poly.size());
  for (int i = 0; i < m; ++i) {
    Vec2 p = poly[i], q = poly[(i + 1) % m];
    if ((p.y > x.y) != (q.y > x.y)) {
      double t = (x.y - p.y) / (q.y - p.y);
      if (p.x + t * (q.x - p.x) > x.x) in = !in;
    }
  }
  return in;
}

}  // namespace foldwidth
