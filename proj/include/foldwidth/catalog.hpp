#pragma once

// Exhaustive enumeration of admissible labeled diagrams inside complexity
// bounds. Connected map components are generated by a dart-gluing search
// (all pairings of crossing darts, filtered to planar connected maps) and
// decorated with cusps along their edges; diagrams are all placement forests
// of such components; labelings come from enumerate_labelings; everything is
// deduplicated by canonical code. The catalog also evaluates the small-width
// characterizations as machine-checked verdicts.

#include <atomic>
#include <mutex>
#include <thread>

#include "generators.hpp"

namespace foldwidth {

struct EnumBounds {
  int max_crossings = 2;
  int max_cusps = 4;
  int max_loops = 3;  // components without crossings (bare or cusped circles)
  int max_tw = 8;
  bool reflect = false;
  int max_entries = 200000;
  int max_assemblies = 16;
};

struct SurfaceSummary {
  int chi = 0;
  bool orientable = true;
  int components = 0;
  bool operator==(const SurfaceSummary& o) const {
    return chi == o.chi && orientable == o.orientable && components == o.components;
  }
  bool operator<(const SurfaceSummary& o) const {
    return std::tie(chi, orientable, components) < std::tie(o.chi, o.orientable, o.components);
  }
};

struct CatalogEntry {
  CanonicalCode code;
  DiagramSpec spec;
  std::vector<int> widths;
  DiagramInvariants inv;
  std::vector<SurfaceSummary> surfaces;  // distinct realizable surfaces
  int assembly_count = 0;
  bool assemblies_complete = true;
};

struct Catalog {
  EnumBounds bounds;
  std::vector<CatalogEntry> entries;
};

namespace detail {

inline std::string component_map_code(const MapComponent& mc_in) {
  MapComponent mc = mc_in;
  if (!suppress_smooth(mc)) return "O";
  BuiltComponent bc = build_component(mc, 0);
  std::string best;
  for (int root = 0; root < static_cast<int>(bc.dart_ids.size()); ++root) {
    std::string code = walk_code(mc, bc, root).tokens;
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

// all connected planar 4-valent maps with the given number of crossings
inline std::vector<MapComponent> base_crossing_maps(int crossings) {
  std::vector<MapComponent> out;
  if (crossings == 0) return out;
  int nd = 4 * crossings;
  std::vector<int> partner(nd, -1);
  std::set<std::string> seen;
  std::function<void()> rec = [&]() {
    int first = -1;
    for (int d = 0; d < nd; ++d)
      if (partner[d] < 0) { first = d; break; }
    if (first < 0) {
      MapComponent mc;
      for (int v = 0; v < crossings; ++v)
        mc.vertices.push_back({VertexKind::crossing, {4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3}, -1});
      for (int d = 0; d < nd; ++d)
        if (partner[d] > d) mc.edges.push_back({d, partner[d]});
      try {
        build_component(mc, 0);  // validates connectivity and planarity
      } catch (const DiagramError&) {
        return;
      }
      std::string code = component_map_code(mc);
      if (seen.insert(code).second) out.push_back(std::move(mc));
      return;
    }
    for (int d = first + 1; d < nd; ++d) {
      if (partner[d] >= 0) continue;
      partner[first] = d;
      partner[d] = first;
      rec();
      partner[first] = partner[d] = -1;
    }
  };
  rec();
  return out;
}

// distribute up to max_cusps cusps over the edges of a base map, every cusp
// with either wedge side; includes the zero-cusp map itself
inline std::vector<std::pair<MapComponent, int>> cusp_decorations(const MapComponent& base,
                                                                 int max_cusps) {
  std::vector<std::pair<MapComponent, int>> out;
  std::set<std::string> seen;
  int ne = static_cast<int>(base.edges.size());
  // per edge: a sequence of wedge bits
  std::vector<std::vector<int>> plan(ne);
  std::function<void(int, int)> rec = [&](int edge, int used) {
    if (edge == ne) {
      MapComponent mc = base;
      int next_dart = 0;
      for (const auto& v : mc.vertices)
        for (int dd : v.darts) next_dart = std::max(next_dart, dd + 1);
      for (int e = 0; e < ne; ++e) {
        if (plan[e].empty()) continue;
        auto [a, b] = base.edges[e];
        // chain a - c1 - c2 - ... - b
        int prev = a;
        // remove the original edge (it is at the same position in mc)
        for (size_t i = 0; i < mc.edges.size(); ++i)
          if (mc.edges[i] == base.edges[e]) { mc.edges.erase(mc.edges.begin() + i); break; }
        for (int bit : plan[e]) {
          int x = next_dart++, y = next_dart++;
          mc.vertices.push_back({VertexKind::cusp, {x, y}, bit});
          mc.edges.push_back({prev, x});
          prev = y;
        }
        mc.edges.push_back({prev, b});
      }
      std::string code = component_map_code(mc);
      if (seen.insert(code).second) out.push_back({std::move(mc), used});
      return;
    }
    std::function<void(int)> grow = [&](int used_now) {
      rec(edge + 1, used_now);
      if (used_now < max_cusps) {
        for (int bit : {0, 1}) {
          plan[edge].push_back(bit);
          grow(used_now + 1);
          plan[edge].pop_back();
        }
      }
    };
    grow(used);
  };
  rec(0, 0);
  return out;
}

// one consistent strand orientation of a component: relative face widths
// (normalized to min 0) and the lift forced by its cusps
struct WidthProfile {
  std::vector<int> rel;
  int cusp_lift = 0;
};

struct CompType {
  MapComponent mc;
  int crossings = 0;
  int cusps = 0;
  bool loop = false;
  int num_faces = 0;
  std::vector<int> face_ids;          // local face ids (min dart per orbit)
  std::vector<WidthProfile> profiles;  // feasible orientations

  // minimal width sum over the faces other than the designated one, given
  // that the designated face's width is exactly 0 (root) or at least `base`
  int excl_floor(int f0, bool root, int base) const {
    int best = INT32_MAX;
    for (const WidthProfile& p : profiles) {
      int c;
      if (root) {
        if (p.rel[f0] != 0) continue;   // the outer region has width exactly 0
        c = 0;
        if (p.cusp_lift > 0) continue;
      } else {
        c = std::max({0, p.cusp_lift, base - p.rel[f0]});
      }
      int sum = 0;
      for (size_t f = 0; f < p.rel.size(); ++f)
        if (static_cast<int>(f) != f0) sum += p.rel[f] + c;
      best = std::min(best, sum);
    }
    return best;
  }

  // minimal possible width of `face` under the same conditioning
  int face_floor(int f0, bool root, int base, int face) const {
    int best = INT32_MAX;
    for (const WidthProfile& p : profiles) {
      int c;
      if (root) {
        if (p.rel[f0] != 0 || p.cusp_lift > 0) continue;
        c = 0;
      } else {
        c = std::max({0, p.cusp_lift, base - p.rel[f0]});
      }
      best = std::min(best, p.rel[face] + c);
    }
    return best == INT32_MAX ? 0 : best;
  }
};

// A component can sit inside an admissible diagram only if some orientation
// of its strands integrates to a consistent relative width cochain with every
// cusp's wedge on the higher side. Widths of the ambient diagram differ from
// the relative ones by a single constant on the component's faces, so this
// is a sound filter.
// All consistent relative width cochains of a component, one per strand
// orientation whose cusp wedges all sit on the higher side; empty when the
// component cannot appear in any admissible diagram.
inline std::vector<WidthProfile> type_profiles(const MapComponent& mc) {
  DiagramSpec solo;
  solo.components.push_back(mc);
  BuiltComponent bc = build_component(mc, 0);
  solo.placements.push_back({kOuter, -1, bc.faces.front().min_dart_id});
  FoldDiagram fd = build_diagram(solo);
  int s = static_cast<int>(fd.strands.size());
  int nf = static_cast<int>(fd.faces.size());
  std::vector<WidthProfile> profiles;
  for (uint32_t mask = 0; mask < (1u << s); ++mask) {
    std::vector<uint8_t> orient(s);
    for (int i = 0; i < s; ++i) orient[i] = (mask >> i) & 1;
    std::vector<int> rel(nf, INT32_MIN);
    rel[0] = 0;
    bool ok = true, changed = true;
    while (changed && ok) {
      changed = false;
      for (int d = 0; d < static_cast<int>(bc.dart_ids.size()); ++d) {
        if (d > bc.alpha[d]) continue;
        int dd = detail::directed_dart(fd, 0, d, orient);
        int lo = fd.right_face(0, dd), hi = fd.left_face(0, dd);
        if (rel[lo] != INT32_MIN) {
          if (rel[hi] == INT32_MIN) { rel[hi] = rel[lo] + 2; changed = true; }
          else if (rel[hi] != rel[lo] + 2) { ok = false; }
        } else if (rel[hi] != INT32_MIN) {
          rel[lo] = rel[hi] - 2;
          changed = true;
        }
      }
    }
    if (!ok) continue;
    int shift = INT32_MAX;
    for (int f = 0; f < nf; ++f) shift = std::min(shift, rel[f]);
    for (int& v : rel) v -= shift;  // normalize to min 0
    WidthProfile prof;
    prof.rel = rel;
    for (size_t vi = 0; vi < mc.vertices.size() && ok; ++vi) {
      if (mc.vertices[vi].kind != VertexKind::cusp) continue;
      auto [wf, of] = cusp_faces(fd, 0, static_cast<int>(vi));
      ok = rel[wf] == rel[of] + 2;
      prof.cusp_lift = std::max(prof.cusp_lift, 2 - rel[of]);
    }
    if (ok) profiles.push_back(std::move(prof));
  }
  // global faces of the solo build are indexed to match the component's
  // built faces up to the outer/bounded partition; re-map to local face order
  if (!profiles.empty()) {
    std::vector<int> order(nf);
    for (int lf = 0; lf < nf; ++lf) order[lf] = fd.global_face_of(0, lf);
    for (WidthProfile& prof : profiles) {
      std::vector<int> bylocal(nf);
      for (int lf = 0; lf < nf; ++lf) bylocal[lf] = prof.rel[order[lf]];
      prof.rel = std::move(bylocal);
    }
  }
  return profiles;
}

inline std::vector<CompType> component_types(const EnumBounds& b) {
  std::vector<CompType> out;
  auto add = [&](MapComponent mc, int crossings, int cusps) {
    auto profiles = type_profiles(mc);
    if (profiles.empty()) return;
    CompType t;
    t.crossings = crossings;
    t.cusps = cusps;
    t.loop = crossings == 0;
    BuiltComponent bc = build_component(mc, 0);
    t.num_faces = static_cast<int>(bc.faces.size());
    for (const auto& f : bc.faces) t.face_ids.push_back(f.min_dart_id);
    t.profiles = std::move(profiles);
    int best = INT32_MAX;
    for (int f = 0; f < t.num_faces; ++f) best = std::min(best, t.excl_floor(f, false, 0));
    if (best > b.max_tw) return;
    t.mc = std::move(mc);
    out.push_back(std::move(t));
  };
  // loops: a circle with k cusps (bare circle needs a smooth marker)
  if (b.max_loops > 0) {
    for (auto& [mc, k] : cusp_decorations(circle_component(), b.max_cusps)) add(mc, 0, k);
  }
  for (int c = 1; c <= b.max_crossings; ++c)
    for (const MapComponent& base : base_crossing_maps(c))
      for (auto& [mc, k] : cusp_decorations(base, b.max_cusps)) add(mc, c, k);
  return out;
}

}  // namespace detail

// Exhaustively enumerate admissible labeled diagrams within the bounds.
inline Catalog enumerate_diagrams(const EnumBounds& bounds) {
  Catalog cat;
  cat.bounds = bounds;
  std::vector<detail::CompType> types = detail::component_types(bounds);

  // enumerate placement forests: instances added one at a time, each placed
  // in the outer region or a non-designated face of an earlier instance;
  // siblings under the same slot arrive in non-decreasing (type, outer) order
  struct Instance {
    int type = 0;
    int outer_face = 0;     // local face id
    int ofi = 0;            // local face index of outer_face
    int parent = kOuter;    // instance index
    int parent_face = -1;   // local face id
    int base = 0;           // lower bound on the designated face's width
    bool root = true;
  };
  std::vector<Instance> stack;
  std::vector<DiagramSpec> specs;
  std::vector<CatalogEntry> collected;

  int nthreads = 1;
  if (const char* env = std::getenv("FOLDWIDTH_THREADS")) nthreads = std::max(1, std::atoi(env));
  else nthreads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));

  // evaluate a batch of specs in parallel; collected per spec, order kept
  auto flush = [&]() {
    std::vector<std::vector<CatalogEntry>> results(specs.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex error_mu;
    auto worker = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= specs.size() || failed.load()) return;
        try {
          FoldDiagram fd = build_diagram(specs[i]);
          for (const WidthLabeling& lab : enumerate_labelings(fd)) {
            WidthStats st = width_stats(fd, lab);
            if (st.tw > bounds.max_tw) continue;
            CatalogEntry entry;
            entry.code = canonical_code(fd, bounds.reflect);
            entry.spec = specs[i];
            entry.widths = lab.widths;
            entry.inv = compute_invariants(fd, lab);
            AssemblyResult ar = enumerate_assemblies(fd, lab, bounds.max_assemblies);
            entry.assembly_count = static_cast<int>(ar.assemblies.size());
            entry.assemblies_complete = ar.complete;
            std::set<SurfaceSummary> sums;
            for (const SurfaceAssembly& as : ar.assemblies) {
              CombinatorialSurface surf = build_surface(fd, lab, as);
              sums.insert({surf.chi, surf.orientable, surf.components});
            }
            entry.surfaces.assign(sums.begin(), sums.end());
            results[i].push_back(std::move(entry));
          }
        } catch (const std::exception& ex) {
          std::lock_guard<std::mutex> lk(error_mu);
          error = ex.what();
          failed.store(true);
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failed.load()) throw std::runtime_error("catalog worker failed: " + error);
    specs.clear();
    for (auto& batch : results)
      for (auto& entry : batch) collected.push_back(std::move(entry));
    if (collected.size() > static_cast<size_t>(bounds.max_entries))
      fail(ErrorKind::BoundExceeded, "catalog exceeded the entry cap");
  };

  std::function<void(int, int, int, int)> rec = [&](int crossings_left, int cusps_left,
                                                     int loops_left, int tw_left) {
    if (!stack.empty()) {
      DiagramSpec spec;
      for (const Instance& ins : stack) {
        spec.components.push_back(types[ins.type].mc);
        spec.placements.push_back({ins.parent, ins.parent_face, ins.outer_face});
      }
      specs.push_back(std::move(spec));
      if (specs.size() >= 4096) flush();
    }
    int n = static_cast<int>(stack.size());
    for (int t = 0; t < static_cast<int>(types.size()); ++t) {
      const detail::CompType& ty = types[t];
      if (ty.crossings > crossings_left || ty.cusps > cusps_left) continue;
      if (ty.loop && loops_left == 0) continue;
      for (int ofi = 0; ofi < ty.num_faces; ++ofi) {
        int of = ty.face_ids[ofi];
        // placements: outer region, or any non-designated face of an earlier instance
        for (int parent = kOuter; parent < n; ++parent) {
          std::vector<std::pair<int, int>> faces;  // (face index in parent, face id)
          if (parent == kOuter) {
            faces.push_back({-1, -1});
          } else {
            const detail::CompType& pt = types[stack[parent].type];
            for (int pfi = 0; pfi < pt.num_faces; ++pfi)
              if (pt.face_ids[pfi] != stack[parent].outer_face)
                faces.push_back({pfi, pt.face_ids[pfi]});
          }
          for (auto [pfi, pf] : faces) {
            bool root = parent == kOuter;
            int base = 0;
            if (!root) {
              const Instance& pi = stack[parent];
              base = types[pi.type].face_floor(pi.ofi, pi.root, pi.base, pfi);
            }
            int cost = ty.excl_floor(ofi, root, base);
            if (cost > tw_left) continue;
            // sibling ordering: the latest instance in the same slot must not
            // exceed this one
            bool ordered = true;
            for (int i = n - 1; i >= 0; --i) {
              if (stack[i].parent == parent && stack[i].parent_face == pf) {
                ordered = std::tie(stack[i].type, stack[i].outer_face) <= std::tie(t, of);
                break;
              }
            }
            if (!ordered) continue;
            stack.push_back({t, of, ofi, parent, pf, base, root});
            rec(crossings_left - ty.crossings, cusps_left - ty.cusps, loops_left - (ty.loop ? 1 : 0),
                tw_left - cost);
            stack.pop_back();
          }
        }
      }
    }
  };
  rec(bounds.max_crossings, bounds.max_cusps, bounds.max_loops, bounds.max_tw);
  flush();

  // dedup by (code, widths multiset): widths vectors of duplicate diagrams
  // may be indexed differently, so key on the sorted width profile as well
  std::map<std::pair<std::string, std::vector<int>>, CatalogEntry> dedup;
  for (auto& entry : collected) {
    std::vector<int> profile = entry.widths;
    std::sort(profile.begin(), profile.end());
    auto key = std::make_pair(entry.code.bytes, profile);
    auto it = dedup.find(key);
    if (it == dedup.end()) dedup.emplace(key, std::move(entry));
  }
  for (auto& [key, entry] : dedup) cat.entries.push_back(std::move(entry));
  std::sort(cat.entries.begin(), cat.entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    std::vector<int> pa = a.widths, pb = b.widths;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    return std::tie(a.inv.tw, a.inv.w, a.code.bytes, pa) < std::tie(b.inv.tw, b.inv.w, b.code.bytes, pb);
  });
  return cat;
}

inline std::vector<CatalogEntry> query(const Catalog& cat,
                                       const std::function<bool(const CatalogEntry&)>& pred) {
  std::vector<CatalogEntry> out;
  for (const CatalogEntry& e : cat.entries)
    if (pred(e)) out.push_back(e);
  return out;
}

inline bool connected_realizable(const CatalogEntry& e) {
  for (const SurfaceSummary& s : e.surfaces)
    if (s.components == 1) return true;
  return false;
}

enum class Verdict { strongly_trivial, trivial, unknown };

struct TrivialityVerdict {
  Verdict kind = Verdict::unknown;
  std::string justification;
};

// One-directional rules: small width or total width certifies unknottedness
// of the covered surface; everything else stays unknown.
inline TrivialityVerdict verdict(const CatalogEntry& e, bool assume_connected) {
  bool connected = assume_connected || connected_realizable(e);
  if (!connected) return {Verdict::unknown, "no connected realization"};
  if (e.inv.w == 2) return {Verdict::strongly_trivial, "width-2 characterization"};
  if (e.inv.chi == 2 && e.inv.tw <= 6)
    return {Verdict::strongly_trivial, "total-width-6 sphere characterization"};
  if (e.inv.chi == 1 && e.inv.tw <= 6)
    return {Verdict::trivial, "total-width-6 projective-plane characterization"};
  return {Verdict::unknown, "outside the characterized range"};
}

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::strongly_trivial: return "strongly_trivial";
    case Verdict::trivial: return "trivial";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

}  // namespace foldwidth
