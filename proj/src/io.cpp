#include "treecount/io.hpp"

#include <fstream>
#include <sstream>

#include "treecount/error.hpp"

namespace treecount {

using nlohmann::json;

MultiGraph parse_graph_text(const std::string& text) {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (words[0] == "v") {
      if (words.size() != 2) throw Error(ErrorKind::Parse, where + ": expected `v <name>`");
      vertices.push_back(words[1]);
    } else if (words[0] == "e") {
      if (words.size() != 3 && words.size() != 4) {
        throw Error(ErrorKind::Parse, where + ": expected `e <a> <b> [label]`");
      }
      edges.push_back({words[1], words[2], words.size() == 4 ? words[3] : std::string{}});
    } else {
      throw Error(ErrorKind::Parse, where + ": unknown record '" + words[0] + "'");
    }
  }
  return MultiGraph::build(vertices, edges);
}

MultiGraph parse_graph_json(const json& doc) {
  try {
    if (!doc.is_object()) throw Error(ErrorKind::Parse, "graph JSON must be an object");
    std::vector<std::string> vertices;
    for (const auto& v : doc.at("vertices")) vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    std::vector<EdgeSpec> edges;
    if (doc.contains("edges")) {
      for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3) {
          throw Error(ErrorKind::Parse, "edge must be [a, b] or [a, b, label]");
        }
        auto name = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
        edges.push_back({name(e[0]), name(e[1]), e.size() == 3 ? name(e[2]) : std::string{}});
      }
    }
    return MultiGraph::build(vertices, edges);
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::Parse, ex.what());
  }
}

MultiGraph parse_graph(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& ex) {
      throw Error(ErrorKind::Parse, ex.what());
    }
    return parse_graph_json(doc);
  }
  return parse_graph_text(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MultiGraph read_graph_file(const std::string& path) { return parse_graph(read_file(path)); }

std::string write_graph_text(const MultiGraph& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  for (const Vertex& v : g.vertices()) out << "v " << v.name << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << g.vertex(e.a).name << ' ' << g.vertex(e.b).name << ' ' << e.label << '\n';
  }
  return out.str();
}

json graph_to_json(const MultiGraph& g) {
  json vertices = json::array();
  for (const Vertex& v : g.vertices()) vertices.push_back(v.name);
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.vertex(e.a).name, g.vertex(e.b).name, e.label});
  return {{"vertices", vertices}, {"edges", edges}};
}

namespace {

std::vector<std::string> names(const json& j) {
  std::vector<std::string> out;
  if (!j.is_array()) throw Error(ErrorKind::Parse, "expected an array of names");
  for (const auto& x : j) out.push_back(x.is_string() ? x.get<std::string>() : x.dump());
  return out;
}

std::vector<std::vector<std::string>> name_lists(const json& j) {
  std::vector<std::vector<std::string>> out;
  if (!j.is_array()) throw Error(ErrorKind::Parse, "expected an array of arrays");
  for (const auto& x : j) out.push_back(names(x));
  return out;
}

}  // namespace

PartitionSpec parse_partition_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "partition JSON must be an object");
  PartitionSpec p;
  try {
    if (doc.contains("V0")) p.v0 = names(doc["V0"]);
    if (doc.contains("cliques")) p.cliques = name_lists(doc["cliques"]);
    if (doc.contains("M")) p.m = names(doc["M"]);
    if (doc.contains("N")) p.n = names(doc["N"]);
    if (doc.contains("R")) p.r = names(doc["R"]);
    if (doc.contains("W")) p.w_edges = names(doc["W"]);
    if (doc.contains("S")) p.edge_parts = name_lists(doc["S"]);
    if (doc.contains("U")) p.u = names(doc["U"]);
    if (doc.contains("S1")) p.s1 = names(doc["S1"]);
    if (doc.contains("S2")) p.s2 = names(doc["S2"]);
    if (doc.contains("w")) {
      const auto& w = doc["w"];
      p.w_vertex = w.is_string() ? w.get<std::string>() : w.dump();
    }
    if (doc.contains("n")) p.n_vertices = doc["n"].get<std::size_t>();
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::Parse, ex.what());
  }
  return p;
}

PartitionSpec parse_partition(const std::string& text) {
  try {
    return parse_partition_json(json::parse(text));
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::Parse, ex.what());
  }
}

PartitionSpec read_partition_file(const std::string& path) { return parse_partition(read_file(path)); }

}  // namespace treecount
