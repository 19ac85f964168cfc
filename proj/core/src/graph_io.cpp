#include "permutope/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace permutope {

std::string graph_to_json(const Multigraph& g) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.vertex_name(v));
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) {
    nlohmann::ordered_json item;
    item["st"] = e.st;
    item["ar"] = e.ar;
    item["label"] = e.label;
    edges.push_back(std::move(item));
  }
  j["vertices"] = std::move(vertices);
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

Multigraph graph_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") ||
      !j["vertices"].is_array() || !j["edges"].is_array()) {
    throw ParseError("graph JSON must be {\"vertices\": [...], \"edges\": [...]}");
  }
  Multigraph g;
  for (const auto& name : j["vertices"]) {
    if (!name.is_string()) throw ParseError("graph JSON: vertex names must be strings");
    if (g.find_vertex(name.get<std::string>())) {
      throw ParseError("graph JSON: duplicate vertex name " + name.dump());
    }
    g.add_vertex(name.get<std::string>());
  }
  for (const auto& e : j["edges"]) {
    if (!e.is_object() || !e.contains("st") || !e.contains("ar") || !e["st"].is_number_unsigned() ||
        !e["ar"].is_number_unsigned()) {
      throw ParseError("graph JSON: edges need unsigned \"st\" and \"ar\"");
    }
    std::string label;
    if (e.contains("label")) {
      if (!e["label"].is_string()) throw ParseError("graph JSON: edge labels must be strings");
      label = e["label"].get<std::string>();
    }
    const auto st = e["st"].get<std::size_t>(), ar = e["ar"].get<std::size_t>();
    if (st >= g.vertex_count() || ar >= g.vertex_count()) {
      throw ParseError("graph JSON: edge endpoint out of range in " + e.dump());
    }
    g.add_edge(st, ar, std::move(label));
  }
  return g;
}

namespace {
std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}
}  // namespace

std::string graph_to_dot(const Multigraph& g, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v << " [label=" << quoted(g.vertex_name(v)) << "];\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  v" << e.st << " -> v" << e.ar << " [label=" << quoted(e.label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

}  // namespace permutope
