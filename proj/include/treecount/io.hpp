#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "treecount/graph.hpp"

namespace treecount {

/// Line format: `v <name>`, `e <a> <b> [label]`, `#` starts a comment.
MultiGraph parse_graph_text(const std::string& text);

/// {"vertices": [...], "edges": [["a", "b", "label?"], ...]}
MultiGraph parse_graph_json(const nlohmann::json& doc);

/// Picks JSON when the first non-blank character is '{'.
MultiGraph parse_graph(const std::string& text);
MultiGraph read_graph_file(const std::string& path);

/// Text serialization; each comment line is emitted as `# <line>` first.
std::string write_graph_text(const MultiGraph& g, const std::vector<std::string>& comments = {});
nlohmann::json graph_to_json(const MultiGraph& g);

/// Partition and constraint sets by vertex name / edge label. Absent keys stay
/// empty; `has_*` records which were present.
struct PartitionSpec {
  std::optional<std::vector<std::string>> v0;
  std::vector<std::vector<std::string>> cliques;
  std::optional<std::vector<std::string>> m;
  std::vector<std::string> n;
  std::optional<std::vector<std::string>> r;
  std::vector<std::string> w_edges;
  std::vector<std::vector<std::string>> edge_parts;
  std::optional<std::vector<std::string>> u;
  std::optional<std::vector<std::string>> s1;
  std::optional<std::vector<std::string>> s2;
  std::optional<std::string> w_vertex;
  std::optional<std::size_t> n_vertices;
};

PartitionSpec parse_partition_json(const nlohmann::json& doc);
PartitionSpec parse_partition(const std::string& text);
PartitionSpec read_partition_file(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace treecount
