#include "thetaqmc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "thetaqmc/error.hpp"
#include "thetaqmc/numerics.hpp"

namespace thetaqmc {

Graph::Graph(int num_vertices, std::vector<std::pair<int, int>> edges) : n_(num_vertices) {
  if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range for n = " + std::to_string(n_));
    }
    edges_.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::has_edge(int u, int v) const {
  const Edge e{std::min(u, v), std::max(u, v)};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_, 0);
  for (const auto& e : edges_) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long parse_int(std::string_view token, std::size_t line_no) {
  long value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line_no, "expected an integer, got '" + std::string(token) + "'");
  }
  if (value < 0) throw ParseError(line_no, "negative vertex label " + std::string(token));
  if (value > (1L << 30)) throw ParseError(line_no, "vertex label too large: " + std::string(token));
  return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    fn(line, line_no);
  }
}

struct RawEdge {
  long u, v;
  std::size_t line;
};

Graph finish(long n, const std::vector<RawEdge>& raw) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    if (e.u >= n || e.v >= n) {
      throw ParseError(e.line, "vertex " + std::to_string(std::max(e.u, e.v)) + " >= declared n = " +
                                   std::to_string(n));
    }
    edges.emplace_back(static_cast<int>(e.u), static_cast<int>(e.v));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  long declared_n = -1;
  long max_label = -1;
  std::vector<RawEdge> raw;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0].front() == '#') return;
    if (tokens[0] == "n") {
      if (tokens.size() != 2) throw ParseError(line_no, "header must be 'n <count>'");
      if (declared_n >= 0 || !raw.empty()) throw ParseError(line_no, "header must precede all edges");
      declared_n = parse_int(tokens[1], line_no);
      if (declared_n < 1) throw ParseError(line_no, "vertex count must be positive");
      return;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected 'u v'");
    const long u = parse_int(tokens[0], line_no);
    const long v = parse_int(tokens[1], line_no);
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    max_label = std::max({max_label, u, v});
    raw.push_back({u, v, line_no});
  });
  if (declared_n < 0 && max_label < 0) throw ParseError(0, "empty graph: no header and no edges");
  return finish(declared_n >= 0 ? declared_n : max_label + 1, raw);
}

Graph parse_dimacs(std::string_view text) {
  long declared_n = -1;
  std::vector<RawEdge> raw;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") return;
    if (tokens[0] == "p") {
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      }
      if (declared_n >= 0) throw ParseError(line_no, "duplicate problem line");
      declared_n = parse_int(tokens[2], line_no);
      if (declared_n < 1) throw ParseError(line_no, "vertex count must be positive");
      return;
    }
    if (tokens[0] == "e") {
      if (declared_n < 0) throw ParseError(line_no, "edge before 'p edge' header");
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'e u v'");
      const long u = parse_int(tokens[1], line_no);
      const long v = parse_int(tokens[2], line_no);
      if (u == 0 || v == 0) throw ParseError(line_no, "DIMACS vertices are 1-indexed");
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      raw.push_back({u - 1, v - 1, line_no});
      return;
    }
    throw ParseError(line_no, "unrecognized DIMACS line '" + std::string(tokens[0]) + "'");
  });
  if (declared_n < 0) throw ParseError(0, "missing 'p edge' header");
  return finish(declared_n, raw);
}

Graph parse_graph(std::string_view text) {
  bool dimacs = false;
  for_each_line(text, [&](std::string_view line, std::size_t) {
    const auto tokens = split_tokens(line);
    if (tokens.size() >= 2 && tokens[0] == "p" && (tokens[1] == "edge" || tokens[1] == "col")) dimacs = true;
  });
  return dimacs ? parse_dimacs(text) : parse_edge_list(text);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.num_vertices() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  const int n = g.num_vertices();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

namespace {

void require_params(std::string_view family, std::span<const int> params, std::size_t count) {
  if (params.size() != count) {
    throw std::invalid_argument(std::string(family) + " takes " + std::to_string(count) + " parameter(s), got " +
                                std::to_string(params.size()));
  }
}

}  // namespace

Graph named_graph(std::string_view family, std::span<const int> params, std::uint64_t seed) {
  std::vector<std::pair<int, int>> edges;
  if (family == "complete") {
    require_params(family, params, 1);
    const int n = params[0];
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
  }
  if (family == "cycle") {
    require_params(family, params, 1);
    const int n = params[0];
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph(n, std::move(edges));
  }
  if (family == "path") {
    require_params(family, params, 1);
    const int n = params[0];
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return Graph(n, std::move(edges));
  }
  if (family == "complete_bipartite") {
    require_params(family, params, 2);
    const int a = params[0], b = params[1];
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite needs a, b >= 1");
    for (int u = 0; u < a; ++u)
      for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, std::move(edges));
  }
  if (family == "petersen") {
    require_params(family, params, 0);
    // Kneser graph K(5, 2): 2-subsets of {0..4}, adjacent when disjoint.
    std::vector<std::pair<int, int>> subsets;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) subsets.emplace_back(i, j);
    for (int u = 0; u < 10; ++u) {
      for (int v = u + 1; v < 10; ++v) {
        const auto [a, b] = subsets[u];
        const auto [c, d] = subsets[v];
        if (a != c && a != d && b != c && b != d) edges.emplace_back(u, v);
      }
    }
    return Graph(10, std::move(edges));
  }
  if (family == "erdos_renyi") {
    require_params(family, params, 2);
    const int n = params[0], per_mille = params[1];
    if (n < 1) throw std::invalid_argument("erdos_renyi needs n >= 1");
    if (per_mille < 0 || per_mille > 1000) throw std::invalid_argument("edge probability must be in [0, 1000] per mille");
    NormalStream stream(seed);
    const double p = per_mille / 1000.0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (stream.uniform() < p) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
  }
  throw std::invalid_argument("unknown graph family '" + std::string(family) + "'");
}

Graph graph_from_spec(std::string_view spec, std::uint64_t seed) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto colon = spec.find(':');
    parts.push_back(spec.substr(0, colon));
    if (colon == std::string_view::npos) break;
    spec = spec.substr(colon + 1);
  }
  std::vector<int> params;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    int value = 0;
    const auto* end = parts[i].data() + parts[i].size();
    auto [ptr, ec] = std::from_chars(parts[i].data(), end, value);
    if (ec != std::errc() || ptr != end) {
      throw std::invalid_argument("bad family parameter '" + std::string(parts[i]) + "'");
    }
    params.push_back(value);
  }
  return named_graph(parts[0], params, seed);
}

}  // namespace thetaqmc
