#pragma once

// Schematic SVG rendering. Crossing-free diagrams are drawn from their polar
// realization with per-face width labels; diagrams with crossings fall back
// to a combinatorial sketch (vertices on circles, edges as curves). The
// drawing is best effort; the combinatorial data stays normative.

#include <iomanip>

#include "realize.hpp"

namespace foldwidth {

namespace detail {

inline std::string fmt(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

}  // namespace detail

inline std::string render_svg(const FoldDiagram& fd, const WidthLabeling* lab = nullptr) {
  std::ostringstream body;
  double minx = 1e30, miny = 1e30, maxx = -1e30, maxy = -1e30;
  auto grow = [&](double x, double y) {
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  };

  std::optional<FullRealization> real;
  std::optional<WidthLabeling> own;
  if (lab) {
    real = realize_crossing_free(fd, *lab);
  } else {
    auto labs = enumerate_labelings(fd);
    if (!labs.empty()) {
      own = labs.front();
      lab = &*own;
      real = realize_crossing_free(fd, *lab);
    }
  }

  if (real) {
    for (const RealizedCurve& c : real->geom.curves) {
      body << "<path fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"0.12\" d=\"M";
      for (size_t i = 0; i < c.pts.size(); ++i) {
        body << detail::fmt(c.pts[i].x) << ',' << detail::fmt(-c.pts[i].y) << (i + 1 < c.pts.size() ? " L" : " Z");
        grow(c.pts[i].x, -c.pts[i].y);
      }
      body << "\"/>\n";
      for (int idx : c.cusp_pts)
        body << "<circle cx=\"" << detail::fmt(c.pts[idx].x) << "\" cy=\"" << detail::fmt(-c.pts[idx].y)
             << "\" r=\"0.2\" fill=\"#c22\"/>\n";
    }
    for (auto& [face, pt] : real->face_witness) {
      body << "<text x=\"" << detail::fmt(pt.x) << "\" y=\"" << detail::fmt(-pt.y)
           << "\" font-size=\"1.2\" text-anchor=\"middle\" fill=\"#246\">" << lab->widths[face]
           << "</text>\n";
      grow(pt.x, -pt.y);
    }
  } else {
    // combinatorial sketch: each component's vertices around a circle
    double xoff = 0;
    for (int c = 0; c < fd.num_components(); ++c) {
      const MapComponent& mc = fd.spec.components[c];
      const auto& bc = fd.comps[c];
      int nv = static_cast<int>(mc.vertices.size());
      double R = 4 + nv;
      std::vector<Vec2> pos(nv);
      for (int v = 0; v < nv; ++v) {
        double ang = 2 * M_PI * v / std::max(1, nv);
        pos[v] = {xoff + R * std::cos(ang), R * std::sin(ang)};
        grow(pos[v].x - 1, -pos[v].y - 1);
        grow(pos[v].x + 1, -pos[v].y + 1);
      }
      for (size_t e = 0; e < mc.edges.size(); ++e) {
        int va = bc.dart_vertex[bc.dart_of_id(mc.edges[e].first)];
        int vb = bc.dart_vertex[bc.dart_of_id(mc.edges[e].second)];
        Vec2 a = pos[va], b = pos[vb];
        Vec2 mid = (a + b) * 0.5;
        Vec2 away = va == vb ? Vec2{1.5 + 0.9 * (e % 3), 1.0 + 0.9 * (e % 3)}
                             : perp(unit(b - a)) * (0.6 + 0.9 * static_cast<double>(e % 3));
        Vec2 ctrl = mid + away;
        body << "<path fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"0.12\" d=\"M"
             << detail::fmt(a.x) << ',' << detail::fmt(-a.y) << " Q" << detail::fmt(ctrl.x) << ','
             << detail::fmt(-ctrl.y) << ' ' << detail::fmt(b.x) << ',' << detail::fmt(-b.y) << "\"/>\n";
        grow(ctrl.x, -ctrl.y);
      }
      for (int v = 0; v < nv; ++v) {
        const char* color = mc.vertices[v].kind == VertexKind::crossing ? "#222"
                            : mc.vertices[v].kind == VertexKind::cusp  ? "#c22"
                                                                       : "#888";
        if (mc.vertices[v].kind == VertexKind::crossing) {
          body << "<path stroke=\"" << color << "\" stroke-width=\"0.15\" d=\"M"
               << detail::fmt(pos[v].x - 0.4) << ',' << detail::fmt(-pos[v].y - 0.4) << " L"
               << detail::fmt(pos[v].x + 0.4) << ',' << detail::fmt(-pos[v].y + 0.4) << " M"
               << detail::fmt(pos[v].x - 0.4) << ',' << detail::fmt(-pos[v].y + 0.4) << " L"
               << detail::fmt(pos[v].x + 0.4) << ',' << detail::fmt(-pos[v].y - 0.4) << "\"/>\n";
        } else {
          body << "<circle cx=\"" << detail::fmt(pos[v].x) << "\" cy=\"" << detail::fmt(-pos[v].y)
               << "\" r=\"0.25\" fill=\"" << color << "\"/>\n";
        }
      }
      xoff += 2 * R + 6;
    }
    if (lab) {
      std::string legend = "widths:";
      for (size_t f = 0; f < lab->widths.size(); ++f)
        legend += " f" + std::to_string(f) + "=" + std::to_string(lab->widths[f]) +
                  (static_cast<int>(f) == fd.outer_face ? "*" : "");
      body << "<text x=\"" << detail::fmt(minx) << "\" y=\"" << detail::fmt(maxy + 3)
           << "\" font-size=\"1.4\" fill=\"#246\">" << legend << "</text>\n";
      maxy += 5;
    }
  }

  if (minx > maxx) { minx = miny = 0; maxx = maxy = 10; }
  double pad = 2;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << detail::fmt(minx - pad) << ' ' << detail::fmt(miny - pad) << ' '
      << detail::fmt(maxx - minx + 2 * pad) << ' ' << detail::fmt(maxy - miny + 2 * pad) << "\">\n"
      << body.str() << "</svg>\n";
  return out.str();
}

// Renders a realization directly (used for generator output with geometry).
inline std::string render_svg(const FoldDiagram& fd, const WidthLabeling& lab,
                              const FullRealization& real) {
  std::ostringstream body;
  double minx = 1e30, miny = 1e30, maxx = -1e30, maxy = -1e30;
  for (const RealizedCurve& c : real.geom.curves) {
    body << "<path fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"0.12\" d=\"M";
    for (size_t i = 0; i < c.pts.size(); ++i) {
      body << detail::fmt(c.pts[i].x) << ',' << detail::fmt(-c.pts[i].y)
           << (i + 1 < c.pts.size() ? " L" : " Z");
      minx = std::min(minx, c.pts[i].x);
      maxx = std::max(maxx, c.pts[i].x);
      miny = std::min(miny, -c.pts[i].y);
      maxy = std::max(maxy, -c.pts[i].y);
    }
    body << "\"/>\n";
  }
  for (auto& [face, pt] : real.face_witness)
    body << "<text x=\"" << detail::fmt(pt.x) << "\" y=\"" << detail::fmt(-pt.y)
         << "\" font-size=\"1.2\" text-anchor=\"middle\" fill=\"#246\">" << lab.widths[face]
         << "</text>\n";
  (void)fd;
  double pad = 3;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << detail::fmt(minx - pad) << ' ' << detail::fmt(miny - pad) << ' '
      << detail::fmt(maxx - minx + 2 * pad) << ' ' << detail::fmt(maxy - miny + 2 * pad) << "\">\n"
      << body.str() << "</svg>\n";
  return out.str();
}

}  // namespace foldwidth
