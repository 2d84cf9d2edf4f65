#include "minvc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "minvc/rng.hpp"

namespace minvc {

Graph::Graph(int n_vertices, std::vector<Edge> edges)
    : n_vertices_(n_vertices), edges_(std::move(edges)) {
  if (n_vertices_ < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("self loop");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_vertices_) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_vertices_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n_vertices_);
  for (const auto& [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

Graph Graph::induced_subgraph(const std::vector<int>& vertices) const {
  std::vector<int> index(n_vertices_, -1);
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    int v = vertices[k];
    if (v < 0 || v >= n_vertices_) throw std::invalid_argument("vertex out of range");
    if (index[v] != -1) throw std::invalid_argument("duplicate vertex in induced set");
    index[v] = static_cast<int>(k);
  }
  if (!std::is_sorted(vertices.begin(), vertices.end()))
    throw std::invalid_argument("induced vertex list must be sorted");
  std::vector<Edge> sub;
  for (const auto& [u, v] : edges_) {
    if (index[u] != -1 && index[v] != -1) sub.emplace_back(index[u], index[v]);
  }
  return Graph(static_cast<int>(vertices.size()), std::move(sub));
}

Graph generate_er(const ErConfig& config) {
  const int n = config.n_vertices;
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (config.c < 0) throw std::invalid_argument("c must be nonnegative");
  if (config.c > n) throw std::invalid_argument("c > N gives edge probability above 1");
  const double p = n > 0 ? config.c / n : 0.0;
  std::mt19937_64 rng(config.seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (canonical_unit(rng) < p) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& what, long line) {
  throw ParseError(what + ", line " + std::to_string(line));
}

}  // namespace

Graph load_graph(std::istream& in) {
  std::string raw;
  long lineno = 0;
  long n = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string extra;
      if (!(ls >> n) || n < 0 || (ls >> extra)) fail("invalid vertex count", lineno);
      continue;
    }
    long i = 0, j = 0;
    std::string extra;
    if (!(ls >> i >> j) || (ls >> extra)) fail("malformed edge line", lineno);
    if (i < 0 || i >= n || j < 0 || j >= n) fail("vertex index out of range", lineno);
    if (i == j) fail("self loop", lineno);
    Edge e{static_cast<int>(std::min(i, j)), static_cast<int>(std::max(i, j))};
    if (!seen.insert(e).second) fail("duplicate edge", lineno);
    edges.push_back(e);
  }
  if (n < 0) throw ParseError("missing vertex count header");
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return load_graph(in);
}

void save_graph(const Graph& g, std::ostream& out, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << g.num_vertices() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void save_graph(const Graph& g, const std::filesystem::path& path,
                const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  save_graph(g, out, comment);
}

}  // namespace minvc
