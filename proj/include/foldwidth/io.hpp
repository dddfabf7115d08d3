#pragma once

// Interchange format for diagrams (JSON documents) and catalog export
// (JSON-lines and CSV). Parsing validates through build_diagram and
// re-verifies any shipped labelings; serialization is byte-deterministic.

#include <sstream>

#include "catalog.hpp"
#include "json.hpp"

namespace foldwidth {

struct Document {
  std::string name;
  DiagramSpec spec;
  std::vector<std::vector<int>> labelings;  // widths by global face id
};

namespace detail {

inline std::pair<int, int> line_column(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') { ++line; col = 1; }
    else ++col;
  }
  return {line, col};
}

}  // namespace detail

inline nlohmann::ordered_json document_json(const Document& doc) {
  nlohmann::ordered_json j;
  j["version"] = "1";
  if (!doc.name.empty()) j["name"] = doc.name;
  j["components"] = nlohmann::ordered_json::array();
  for (const MapComponent& mc : doc.spec.components) {
    nlohmann::ordered_json jc;
    jc["vertices"] = nlohmann::ordered_json::array();
    for (const Vertex& v : mc.vertices) {
      nlohmann::ordered_json jv;
      jv["kind"] = v.kind == VertexKind::crossing ? "crossing"
                   : v.kind == VertexKind::cusp   ? "cusp"
                                                  : "smooth";
      jv["darts"] = v.darts;
      if (v.kind == VertexKind::cusp) jv["wedge"] = v.wedge_corner;
      jc["vertices"].push_back(std::move(jv));
    }
    jc["edges"] = nlohmann::ordered_json::array();
    for (auto [a, b] : mc.edges) jc["edges"].push_back({a, b});
    j["components"].push_back(std::move(jc));
  }
  j["placements"] = nlohmann::ordered_json::array();
  for (const Placement& p : doc.spec.placements) {
    nlohmann::ordered_json jp;
    if (p.parent == kOuter) {
      jp["parent"] = "outer";
    } else {
      jp["parent"] = p.parent;
      jp["parent_face"] = p.parent_face;
    }
    jp["outer_face"] = p.outer_face;
    j["placements"].push_back(std::move(jp));
  }
  if (!doc.labelings.empty()) {
    j["labelings"] = nlohmann::ordered_json::array();
    for (const auto& widths : doc.labelings) {
      nlohmann::ordered_json jl;
      jl["widths"] = nlohmann::ordered_json::array();
      for (size_t f = 0; f < widths.size(); ++f)
        jl["widths"].push_back({static_cast<int>(f), widths[f]});
      j["labelings"].push_back(std::move(jl));
    }
  }
  return j;
}

inline std::string serialize_document(const Document& doc) { return document_json(doc).dump(2) + "\n"; }

// Parses and validates a document; the diagram is rebuilt (all structural
// errors surface with their build_diagram message) and every shipped
// labeling must pass the admissibility checks.
inline std::pair<Document, FoldDiagram> parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte);
    fail(ErrorKind::SyntaxError,
         "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
  Document doc;
  try {
    if (j.contains("name")) doc.name = j["name"].get<std::string>();
    for (const auto& jc : j.at("components")) {
      MapComponent mc;
      for (const auto& jv : jc.at("vertices")) {
        Vertex v;
        std::string kind = jv.at("kind").get<std::string>();
        if (kind == "crossing") v.kind = VertexKind::crossing;
        else if (kind == "cusp") v.kind = VertexKind::cusp;
        else if (kind == "smooth") v.kind = VertexKind::smooth;
        else fail(ErrorKind::SyntaxError, "unknown vertex kind '" + kind + "'");
        v.darts = jv.at("darts").get<std::vector<int>>();
        if (v.kind == VertexKind::cusp) v.wedge_corner = jv.at("wedge").get<int>();
        mc.vertices.push_back(std::move(v));
      }
      for (const auto& je : jc.at("edges")) {
        auto pair = je.get<std::vector<int>>();
        if (pair.size() != 2) fail(ErrorKind::SyntaxError, "edges must be dart pairs");
        mc.edges.push_back({pair[0], pair[1]});
      }
      doc.spec.components.push_back(std::move(mc));
    }
    for (const auto& jp : j.at("placements")) {
      Placement p;
      if (jp.at("parent").is_string()) {
        if (jp.at("parent").get<std::string>() != "outer")
          fail(ErrorKind::SyntaxError, "parent must be a component index or \"outer\"");
      } else {
        p.parent = jp.at("parent").get<int>();
        p.parent_face = jp.at("parent_face").get<int>();
      }
      p.outer_face = jp.at("outer_face").get<int>();
      doc.spec.placements.push_back(p);
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::SyntaxError, e.what());
  }
  FoldDiagram fd = build_diagram(doc.spec);
  if (j.contains("labelings")) {
    int index = 0;
    for (const auto& jl : j["labelings"]) {
      std::vector<int> widths(fd.faces.size(), -1);
      try {
        for (const auto& pair : jl.at("widths")) {
          int face = pair.at(0).get<int>();
          int w = pair.at(1).get<int>();
          if (face < 0 || face >= static_cast<int>(widths.size()))
            fail(ErrorKind::SyntaxError,
                 "labelings[" + std::to_string(index) + "]: unknown face " + std::to_string(face));
          widths[face] = w;
        }
      } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::SyntaxError, e.what());
      }
      for (size_t f = 0; f < widths.size(); ++f) {
        if (widths[f] < 0)
          fail(ErrorKind::SyntaxError,
               "labelings[" + std::to_string(index) + "]: face " + std::to_string(f) + " unlabeled");
        if (widths[f] % 2)
          fail(ErrorKind::LabelingMismatch,
               "labelings[" + std::to_string(index) + "]: odd width " + std::to_string(widths[f]));
      }
      if (!labeling_from_widths(fd, widths))
        fail(ErrorKind::LabelingMismatch,
             "labelings[" + std::to_string(index) + "] violates the width constraints");
      doc.labelings.push_back(std::move(widths));
      ++index;
    }
  }
  return {std::move(doc), std::move(fd)};
}

// --------------------------------------------------------- catalog export

inline nlohmann::ordered_json entry_json(const CatalogEntry& e) {
  nlohmann::ordered_json j;
  j["code"] = e.code.bytes;
  j["crossings"] = e.inv.crossings;
  j["cusps"] = e.inv.cusps;
  j["loops"] = e.inv.loops;
  j["strands"] = e.inv.strands;
  j["components"] = e.inv.map_components;
  j["w"] = e.inv.w;
  j["tw"] = e.inv.tw;
  j["chi"] = e.inv.chi;
  j["parity_ok"] = e.inv.parity_ok;
  j["widths"] = e.widths;
  j["assemblies"] = e.assembly_count;
  j["assemblies_complete"] = e.assemblies_complete;
  j["surfaces"] = nlohmann::ordered_json::array();
  for (const SurfaceSummary& s : e.surfaces) {
    nlohmann::ordered_json js;
    js["chi"] = s.chi;
    js["orientable"] = s.orientable;
    js["components"] = s.components;
    j["surfaces"].push_back(std::move(js));
  }
  return j;
}

inline std::string catalog_jsonl(const Catalog& cat) {
  std::string out;
  for (const CatalogEntry& e : cat.entries) out += entry_json(e).dump() + "\n";
  return out;
}

inline std::string catalog_csv(const Catalog& cat) {
  std::ostringstream out;
  out << "code,crossings,cusps,loops,strands,components,w,tw,chi,parity_ok,widths,assemblies,"
         "assemblies_complete,surfaces\n";
  for (const CatalogEntry& e : cat.entries) {
    out << '"' << e.code.bytes << '"' << ',' << e.inv.crossings << ',' << e.inv.cusps << ','
        << e.inv.loops << ',' << e.inv.strands << ',' << e.inv.map_components << ',' << e.inv.w
        << ',' << e.inv.tw << ',' << e.inv.chi << ',' << (e.inv.parity_ok ? 1 : 0) << ',';
    for (size_t f = 0; f < e.widths.size(); ++f) out << (f ? "|" : "") << e.widths[f];
    out << ',' << e.assembly_count << ',' << (e.assemblies_complete ? 1 : 0) << ',';
    for (size_t s = 0; s < e.surfaces.size(); ++s) {
      if (s) out << ';';
      out << e.surfaces[s].chi << (e.surfaces[s].orientable ? "o" : "n") << e.surfaces[s].components;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace foldwidth
