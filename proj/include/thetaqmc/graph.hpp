#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thetaqmc {

/// Undirected edge, normalized so that u < v.
struct Edge {
  int u;
  int v;

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  /// Duplicate edges, in either orientation, are merged.
  Graph(int num_vertices, std::vector<std::pair<int, int>> edges);

  int num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_edge(int u, int v) const;
  std::vector<int> degrees() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_;
  std::vector<Edge> edges_;  // sorted
};

/// Whitespace-separated "u v" lines, '#' comments, optional "n <count>" header.
Graph parse_edge_list(std::string_view text);

/// DIMACS edge format: "c" comments, "p edge <n> <m>" header, 1-indexed "e u v" lines.
Graph parse_dimacs(std::string_view text);

/// Dispatches on content: any "p edge" header selects the DIMACS parser.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

/// Canonical edge-list serialization: header line then one sorted edge per line.
std::string to_edge_list(const Graph& g);

Graph complement(const Graph& g);

/// Families: complete [n], cycle [n>=3], path [n>=1], complete_bipartite [a, b],
/// petersen [], erdos_renyi [n, p_per_mille]. The seed only affects erdos_renyi.
Graph named_graph(std::string_view family, std::span<const int> params, std::uint64_t seed = 0);

/// Parses "name[:p1[:p2]]", e.g. "cycle:5" or "erdos_renyi:8:400".
Graph graph_from_spec(std::string_view spec, std::uint64_t seed = 0);

}  // namespace thetaqmc
