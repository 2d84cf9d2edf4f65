#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minvc {

// Unordered edge stored in canonical form (first < second).
using Edge = std::pair<int, int>;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph: no self loops, no parallel edges, 0-indexed.
/// Immutable after construction and safe to share across threads.
class Graph {
 public:
  Graph() = default;
  Graph(int n_vertices, std::vector<Edge> edges);

  int num_vertices() const { return n_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::vector<int> degrees() const;
  std::vector<std::vector<int>> adjacency() const;

  // Subgraph induced by a sorted, duplicate-free vertex list. Vertex k of
  // the result corresponds to vertices[k].
  Graph induced_subgraph(const std::vector<int>& vertices) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_vertices_ = 0;
  std::vector<Edge> edges_;  // sorted, canonical
};

/// Erdos-Renyi G(N, p) instance parameters with p = c / N.
struct ErConfig {
  int n_vertices = 0;
  double c = 0.0;  // mean degree parameter
  std::uint64_t seed = 0;
};

// Samples every vertex pair independently with probability c/N. Bit
// reproducible for a given config.
Graph generate_er(const ErConfig& config);

// Edge-list file format: first content line is the vertex count, then one
// "i j" pair per line. '#' starts a comment, blank lines are ignored.
// Either endpoint order is accepted on load; saving writes i < j.
Graph load_graph(std::istream& in);
Graph load_graph(const std::filesystem::path& path);
void save_graph(const Graph& g, std::ostream& out, const std::string& comment = "");
void save_graph(const Graph& g, const std::filesystem::path& path,
                const std::string& comment = "");

}  // namespace minvc
