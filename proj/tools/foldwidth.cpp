// foldwidth: fold diagrams of surface knot projections — validation, width
// labelings, invariants, surface assembly, generators, splitting, exhaustive
// catalogs, and SVG rendering. Data goes to stdout, diagnostics to stderr;
// exit 0 on success, 1 on validation failure, 2 on usage errors.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "foldwidth/io.hpp"
#include "foldwidth/surgery.hpp"
#include "foldwidth/svg.hpp"

using namespace foldwidth;
using nlohmann::ordered_json;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) fail(ErrorKind::SyntaxError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(ErrorKind::SyntaxError, "cannot open " + path + " for writing");
  out << data;
}

std::vector<WidthLabeling> labelings_of(const Document& doc, const FoldDiagram& fd) {
  std::vector<WidthLabeling> labs;
  for (const auto& widths : doc.labelings) {
    auto lab = labeling_from_widths(fd, widths);
    if (lab) labs.push_back(std::move(*lab));
  }
  if (labs.empty()) labs = enumerate_labelings(fd);
  return labs;
}

Document document_of(const FoldDiagram& fd, const WidthLabeling& lab, const std::string& name) {
  Document doc;
  doc.name = name;
  doc.spec = fd.spec;
  doc.labelings.push_back(lab.widths);
  return doc;
}

ordered_json face_table(const FoldDiagram& fd) {
  ordered_json faces = ordered_json::array();
  for (size_t f = 0; f < fd.faces.size(); ++f) {
    ordered_json jf;
    jf["id"] = static_cast<int>(f);
    jf["bounded"] = fd.faces[f].bounded;
    jf["circuits"] = fd.faces[f].circuits;
    ordered_json members = ordered_json::array();
    for (auto& [c, lf] : fd.faces[f].members)
      members.push_back({c, fd.comps[c].faces[lf].min_dart_id});
    jf["members"] = std::move(members);
    faces.push_back(std::move(jf));
  }
  return faces;
}

CatalogEntry entry_of(const FoldDiagram& fd, const WidthLabeling& lab) {
  CatalogEntry e;
  e.code = canonical_code(fd, false);
  e.spec = fd.spec;
  e.widths = lab.widths;
  e.inv = compute_invariants(fd, lab);
  AssemblyResult ar = enumerate_assemblies(fd, lab, 16);
  e.assembly_count = static_cast<int>(ar.assemblies.size());
  e.assemblies_complete = ar.complete;
  std::set<SurfaceSummary> sums;
  for (const auto& as : ar.assemblies) {
    CombinatorialSurface surf = build_surface(fd, lab, as);
    sums.insert({surf.chi, surf.orientable, surf.components});
  }
  e.surfaces.assign(sums.begin(), sums.end());
  return e;
}

RibbonTube parse_tube(const std::string& text) {
  RibbonTube tube;
  auto colon = text.find(':');
  std::string ends = text.substr(0, colon == std::string::npos ? text.size() : colon);
  auto dash = ends.find('-');
  if (dash == std::string::npos) fail(ErrorKind::SyntaxError, "tube must look like A-B[:o1,x2,...]");
  tube.from = std::stoi(ends.substr(0, dash));
  tube.to = std::stoi(ends.substr(dash + 1));
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::istringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      if (item[0] == 'o') tube.passes.push_back({std::stoi(item.substr(1)), true});
      else if (item[0] == 'x') tube.passes.push_back({std::stoi(item.substr(1)), false});
      else fail(ErrorKind::SyntaxError, "pass items are oN (over) or xN (beside)");
    }
  }
  return tube;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fold diagrams of surface knot projections"};
  app.require_subcommand(1);

  std::string file, out_path, csv_path, aux_file, aux_file_b;
  bool assume_connected = false;
  int labeling_index = -1;

  auto* validate = app.add_subcommand("validate", "check a diagram document");
  validate->add_option("file", file)->required();

  auto* labelings = app.add_subcommand("labelings", "enumerate width labelings");
  labelings->add_option("file", file)->required();

  auto* invariants = app.add_subcommand("invariants", "width, total width, Euler characteristic");
  invariants->add_option("file", file)->required();

  auto* assemble = app.add_subcommand("assemble", "reconstruct covered surfaces");
  assemble->add_option("file", file)->required();

  auto* verdict_cmd = app.add_subcommand("verdict", "triviality verdict from the characterizations");
  verdict_cmd->add_option("file", file)->required();
  verdict_cmd->add_flag("--assume-connected", assume_connected);

  auto* generate = app.add_subcommand("generate", "emit a worked diagram family");
  generate->require_subcommand(1);
  std::string forest = "()";
  int spun_m = 2, braid_b = 2, braid_r = 2, balls = 1;
  std::vector<std::string> tube_args;
  auto* g_trivial = generate->add_subcommand("trivial", "nested circles");
  g_trivial->add_option("--forest", forest, "parenthesis forest, e.g. (()())");
  auto* g_spun = generate->add_subcommand("spun", "spun m-bridge profile");
  g_spun->add_option("--m", spun_m)->required();
  auto* g_braid = generate->add_subcommand("braid", "braid closure with branch triangles");
  g_braid->add_option("--b", braid_b)->required();
  g_braid->add_option("--r", braid_r)->required();
  auto* g_ribbon = generate->add_subcommand("ribbon", "balls joined by tubes");
  g_ribbon->add_option("--balls", balls)->required();
  g_ribbon->add_option("--tube", tube_args, "A-B[:o1,x2,...], repeatable");
  auto* g_consum = generate->add_subcommand("consum", "connected sum of two documents");
  g_consum->add_option("--a", aux_file)->required();
  g_consum->add_option("--b", aux_file_b)->required();

  auto* split_cmd = app.add_subcommand("split", "decompose along corridors");
  split_cmd->add_option("file", file)->required();

  EnumBounds bounds;
  auto* enumerate = app.add_subcommand("enumerate", "exhaustive catalog within bounds");
  enumerate->add_option("--max-crossings", bounds.max_crossings);
  enumerate->add_option("--max-cusps", bounds.max_cusps);
  enumerate->add_option("--max-loops", bounds.max_loops);
  enumerate->add_option("--max-tw", bounds.max_tw);
  enumerate->add_flag("--reflect", bounds.reflect);
  enumerate->add_option("--out", out_path, "JSON-lines output file");
  enumerate->add_option("--csv", csv_path, "CSV output file");

  auto* render = app.add_subcommand("render", "schematic SVG");
  render->add_option("file", file)->required();
  render->add_option("--out", out_path)->required();
  render->add_option("--labeling", labeling_index, "labeling index to annotate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) {
      auto [doc, fd] = parse_document(read_input(file));
      ordered_json j;
      j["valid"] = true;
      if (!doc.name.empty()) j["name"] = doc.name;
      j["components"] = fd.num_components();
      j["crossings"] = fd.crossings;
      j["cusps"] = fd.cusps;
      j["strands"] = static_cast<int>(fd.strands.size());
      j["outer_face"] = fd.outer_face;
      j["faces"] = face_table(fd);
      j["labelings"] = static_cast<int>(doc.labelings.size());
      std::cout << j.dump(2) << "\n";
    } else if (*labelings) {
      auto [doc, fd] = parse_document(read_input(file));
      auto labs = enumerate_labelings(fd);
      ordered_json j;
      j["count"] = static_cast<int>(labs.size());
      j["labelings"] = ordered_json::array();
      for (const auto& lab : labs) {
        WidthStats st = width_stats(fd, lab);
        ordered_json jl;
        jl["widths"] = lab.widths;
        jl["w"] = st.w;
        jl["tw"] = st.tw;
        j["labelings"].push_back(std::move(jl));
      }
      std::cout << j.dump(2) << "\n";
    } else if (*invariants) {
      auto [doc, fd] = parse_document(read_input(file));
      for (const auto& lab : labelings_of(doc, fd)) {
        DiagramInvariants inv = compute_invariants(fd, lab);
        ordered_json j;
        j["w"] = inv.w;
        j["tw"] = inv.tw;
        j["chi"] = inv.chi;
        j["crossings"] = inv.crossings;
        j["cusps"] = inv.cusps;
        j["parity_ok"] = inv.parity_ok;
        j["widths"] = lab.widths;
        auto real = realize_crossing_free(fd, lab);
        if (real) j["rot_numeric"] = rotation_degree_numeric(fd, lab, *real);
        else j["rot_numeric"] = "REALIZATION-UNAVAILABLE";
        std::cout << j.dump() << "\n";
      }
    } else if (*assemble) {
      auto [doc, fd] = parse_document(read_input(file));
      for (const auto& lab : labelings_of(doc, fd)) {
        AssemblyResult ar = enumerate_assemblies(fd, lab, 16);
        ordered_json j;
        j["widths"] = lab.widths;
        j["assemblies"] = static_cast<int>(ar.assemblies.size());
        j["complete"] = ar.complete;
        j["surfaces"] = ordered_json::array();
        std::set<SurfaceSummary> sums;
        for (const auto& as : ar.assemblies) {
          CombinatorialSurface surf = build_surface(fd, lab, as);
          sums.insert({surf.chi, surf.orientable, surf.components});
        }
        for (const SurfaceSummary& s : sums) {
          ordered_json js;
          js["chi"] = s.chi;
          js["orientable"] = s.orientable;
          js["components"] = s.components;
          j["surfaces"].push_back(std::move(js));
        }
        std::cout << j.dump() << "\n";
      }
    } else if (*verdict_cmd) {
      auto [doc, fd] = parse_document(read_input(file));
      for (const auto& lab : labelings_of(doc, fd)) {
        CatalogEntry e = entry_of(fd, lab);
        TrivialityVerdict v = verdict(e, assume_connected);
        ordered_json j;
        j["widths"] = lab.widths;
        j["w"] = e.inv.w;
        j["tw"] = e.inv.tw;
        j["chi"] = e.inv.chi;
        j["verdict"] = verdict_name(v.kind);
        j["justification"] = v.justification;
        std::cout << j.dump() << "\n";
      }
    } else if (*generate) {
      GeneratedDiagram g;
      if (*g_trivial) {
        g = gen_trivial(parse_forest(forest));
      } else if (*g_spun) {
        g = gen_spun_bridge(spun_m);
      } else if (*g_braid) {
        g = gen_braid_closure({braid_b, braid_r});
        if (g.braid_w_within_twice_degree)
          std::cerr << "note: w <= 2*degree " << (*g.braid_w_within_twice_degree ? "held" : "did not hold")
                    << " for this diagram (recorded, never asserted)\n";
      } else if (*g_ribbon) {
        RibbonSpec rs;
        rs.balls = balls;
        for (const std::string& t : tube_args) rs.tubes.push_back(parse_tube(t));
        g = gen_ribbon(rs);
      } else if (*g_consum) {
        auto [da, fa] = parse_document(read_input(aux_file));
        auto [db, fb] = parse_document(read_input(aux_file_b));
        auto la = labelings_of(da, fa);
        auto lb = labelings_of(db, fb);
        if (la.empty() || lb.empty()) fail(ErrorKind::EmptyDiagram, "summand admits no labeling");
        LabeledDiagram sum = connected_sum(fa, la.front(), fb, lb.front());
        g.diagram = std::move(sum.diagram);
        g.labeling = std::move(sum.labeling);
        g.name = "consum";
      }
      std::cout << serialize_document(document_of(g.diagram, g.labeling, g.name));
    } else if (*split_cmd) {
      auto [doc, fd] = parse_document(read_input(file));
      auto labs = labelings_of(doc, fd);
      if (labs.empty()) fail(ErrorKind::EmptyDiagram, "diagram admits no labeling");
      // full decomposition: split repeatedly until nothing separates
      std::vector<LabeledDiagram> pieces;
      pieces.push_back({fd, labs.front()});
      bool progress = true;
      while (progress) {
        progress = false;
        std::vector<LabeledDiagram> next;
        for (auto& piece : pieces) {
          auto halves = split(piece.diagram, piece.labeling);
          if (halves) {
            next.push_back(std::move(halves->first));
            next.push_back(std::move(halves->second));
            progress = true;
          } else {
            next.push_back(std::move(piece));
          }
        }
        pieces = std::move(next);
      }
      ordered_json j = ordered_json::array();
      for (size_t i = 0; i < pieces.size(); ++i)
        j.push_back(document_json(document_of(pieces[i].diagram, pieces[i].labeling,
                                              "piece-" + std::to_string(i))));
      std::cout << j.dump(2) << "\n";
      std::cerr << "split into " << pieces.size() << " summand(s)\n";
    } else if (*enumerate) {
      Catalog cat = enumerate_diagrams(bounds);
      if (!csv_path.empty()) write_output(csv_path, catalog_csv(cat));
      if (!out_path.empty() || csv_path.empty()) write_output(out_path, catalog_jsonl(cat));
      std::cerr << "catalog entries: " << cat.entries.size() << "\n";
    } else if (*render) {
      auto [doc, fd] = parse_document(read_input(file));
      auto labs = labelings_of(doc, fd);
      std::string svg;
      if (labs.empty()) svg = render_svg(fd, nullptr);
      else if (labeling_index >= 0 && labeling_index < static_cast<int>(labs.size()))
        svg = render_svg(fd, &labs[labeling_index]);
      else svg = render_svg(fd, &labs.front());
      write_output(out_path, svg);
    }
  } catch (const DiagramError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
