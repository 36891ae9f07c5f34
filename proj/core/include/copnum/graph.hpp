#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace copnum {

using Vertex = std::uint32_t;
using Distance = std::int32_t;

/// Distance sentinel for vertices not reached by a search.
inline constexpr Distance kUnreachable = -1;
/// Depth limit meaning "search the whole component".
inline constexpr Distance kNoDepthLimit = std::numeric_limits<Distance>::max();

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1 in CSR form.
/// Neighbor lists are sorted ascending, which fixes every traversal order
/// downstream.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Endpoints may come in either order.
  /// Throws InputError on self-loops, repeated edges or out-of-range ids.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return adj_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v < n_; }

  /// Average degree 2m/n (0 for the empty graph).
  double average_degree() const;

  /// Canonical edge list: u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
};

/// Throws InputError unless v is a vertex of g.
void require_vertex(const Graph& g, Vertex v);

/// Reusable breadth-first search. Sources are processed in ascending id
/// order and neighbors in adjacency order, so layers, discovery order and
/// BFS-tree parents are deterministic. Repeated runs reuse the buffers
/// (stamp-based reset) which matters for the many truncated searches the
/// expansion verifiers and strategies do.
class Bfs {
 public:
  explicit Bfs(const Graph& g);

  /// Multi-source search from `sources` up to `max_depth` layers.
  void run(std::span<const Vertex> sources, Distance max_depth = kNoDepthLimit);
  void run_from(Vertex source, Distance max_depth = kNoDepthLimit) {
    run(std::span<const Vertex>(&source, 1), max_depth);
  }

  Distance distance(Vertex v) const {
    return stamp_[v] == epoch_ ? dist_[v] : kUnreachable;
  }
  /// Vertex that discovered v (v itself for sources); only valid if reached.
  Vertex parent(Vertex v) const { return parent_[v]; }
  bool reached(Vertex v) const { return stamp_[v] == epoch_; }

  /// Deepest layer reached in the last run.
  Distance depth() const { return static_cast<Distance>(layer_start_.size()) - 2; }
  /// Layer r in discovery order (empty if r is beyond the last layer).
  std::span<const Vertex> layer(Distance r) const;
  /// All reached vertices in discovery order.
  std::span<const Vertex> visited() const { return order_; }

  const Graph& graph() const { return *g_; }

 private:
  const Graph* g_;
  std::vector<std::uint32_t> stamp_;
  std::vector<Distance> dist_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> layer_start_;
  std::uint32_t epoch_ = 0;
};

/// Distances from a set of sources; kUnreachable where not reached.
std::vector<Distance> bfs_distances(const Graph& g, std::span<const Vertex> sources,
                                    Distance max_depth = kNoDepthLimit);

/// Vertices at distance exactly r from v.
VertexSet sphere(const Graph& g, Vertex v, Distance r);
/// Vertices at distance at most r from v.
VertexSet ball(const Graph& g, Vertex v, Distance r);
/// Vertices whose distance to the set s is exactly r. s must be nonempty.
VertexSet set_sphere(const Graph& g, std::span<const Vertex> s, Distance r);
/// Vertices at distance at most r from the set s. s must be nonempty.
VertexSet set_ball(const Graph& g, std::span<const Vertex> s, Distance r);
/// s together with every neighbor of s.
VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> s);
/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// Sorts and removes duplicates in place.
void normalize(VertexSet& s);

// Canonical edge-list text format: "n m" then m lines "u v" (u < v, sorted).
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// Small named graphs.
Graph path_graph(std::size_t k);
Graph cycle_graph(std::size_t k);
Graph complete_graph(std::size_t k);
/// K_{1,k}: center 0 and leaves 1..k.
Graph star_graph(std::size_t k);
Graph grid_graph(std::size_t rows, std::size_t cols);
Graph petersen_graph();

/// Parses "path-k", "cycle-k", "complete-k", "star-k", "grid-RxC", "petersen".
/// Throws InputError for anything else.
Graph named_graph(std::string_view name);
bool is_named_graph(std::string_view name);

}  // namespace copnum
