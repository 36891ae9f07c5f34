#include "copnum/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "copnum/errors.hpp"

namespace copnum {

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  if (n > std::numeric_limits<Vertex>::max()) throw InputError("graph too large");
  for (auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") out of range for n=" + std::to_string(n));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end()) {
    throw InputError("repeated edge (" + std::to_string(it->u) + "," + std::to_string(it->v) + ")");
  }

  Graph g;
  g.n_ = n;
  g.offsets_.assign(n + 1, 0);
  for (const auto& e : edges) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adj_.resize(2 * edges.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : edges) {
    g.adj_[fill[e.u]++] = e.v;
    g.adj_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

double Graph::average_degree() const {
  return n_ == 0 ? 0.0 : static_cast<double>(adj_.size()) / static_cast<double>(n_);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

void require_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) {
    throw InputError("vertex " + std::to_string(v) + " out of range for n=" +
                     std::to_string(g.vertex_count()));
  }
}

Bfs::Bfs(const Graph& g)
    : g_(&g),
      stamp_(g.vertex_count(), 0),
      dist_(g.vertex_count(), kUnreachable),
      parent_(g.vertex_count(), 0) {
  order_.reserve(g.vertex_count());
}

void Bfs::run(std::span<const Vertex> sources, Distance max_depth) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  order_.clear();
  layer_start_.assign(1, 0);

  VertexSet src(sources.begin(), sources.end());
  normalize(src);
  for (Vertex s : src) {
    require_vertex(*g_, s);
    stamp_[s] = epoch_;
    dist_[s] = 0;
    parent_[s] = s;
    order_.push_back(s);
  }
  if (order_.empty()) return;
  layer_start_.push_back(order_.size());

  Distance depth = 0;
  std::size_t head = 0;
  while (depth < max_depth) {
    const std::size_t end = order_.size();
    if (head == end) break;
    for (; head < end; ++head) {
      const Vertex u = order_[head];
      for (Vertex w : g_->neighbors(u)) {
        if (stamp_[w] != epoch_) {
          stamp_[w] = epoch_;
          dist_[w] = depth + 1;
          parent_[w] = u;
          order_.push_back(w);
        }
      }
    }
    if (order_.size() == end) break;
    ++depth;
    layer_start_.push_back(order_.size());
  }
}

std::span<const Vertex> Bfs::layer(Distance r) const {
  if (r < 0 || static_cast<std::size_t>(r) + 1 >= layer_start_.size()) return {};
  const auto lo = layer_start_[static_cast<std::size_t>(r)];
  const auto hi = layer_start_[static_cast<std::size_t>(r) + 1];
  return {order_.data() + lo, order_.data() + hi};
}

std::vector<Distance> bfs_distances(const Graph& g, std::span<const Vertex> sources,
                                    Distance max_depth) {
  Bfs bfs(g);
  bfs.run(sources, max_depth);
  std::vector<Distance> out(g.vertex_count(), kUnreachable);
  for (Vertex v : bfs.visited()) out[v] = bfs.distance(v);
  return out;
}

void normalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

namespace {

VertexSet sorted_copy(std::span<const Vertex> xs) {
  VertexSet out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  return out;
}

void require_nonneg(Distance r) {
  if (r < 0) throw InputError("radius must be nonnegative");
}

void require_nonempty(std::span<const Vertex> s) {
  if (s.empty()) throw InputError("source set must be nonempty");
}

}  // namespace

VertexSet sphere(const Graph& g, Vertex v, Distance r) {
  require_vertex(g, v);
  require_nonneg(r);
  Bfs bfs(g);
  bfs.run_from(v, r);
  return sorted_copy(bfs.layer(r));
}

VertexSet ball(const Graph& g, Vertex v, Distance r) {
  require_vertex(g, v);
  require_nonneg(r);
  Bfs bfs(g);
  bfs.run_from(v, r);
  return sorted_copy(bfs.visited());
}

VertexSet set_sphere(const Graph& g, std::span<const Vertex> s, Distance r) {
  require_nonempty(s);
  require_nonneg(r);
  Bfs bfs(g);
  bfs.run(s, r);
  return sorted_copy(bfs.layer(r));
}

VertexSet set_ball(const Graph& g, std::span<const Vertex> s, Distance r) {
  require_nonempty(s);
  require_nonneg(r);
  Bfs bfs(g);
  bfs.run(s, r);
  return sorted_copy(bfs.visited());
}

VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> s) {
  VertexSet out(s.begin(), s.end());
  for (Vertex v : s) {
    require_vertex(g, v);
    auto nb = g.neighbors(v);
    out.insert(out.end(), nb.begin(), nb.end());
  }
  normalize(out);
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.vertex_count(), false);
  Bfs bfs(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (seen[v]) continue;
    bfs.run_from(v);
    VertexSet comp = sorted_copy(bfs.visited());
    for (Vertex w : comp) seen[w] = true;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  Bfs bfs(g);
  bfs.run_from(0);
  return bfs.visited().size() == g.vertex_count();
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& dst) {
    while (std::getline(in, dst)) {
      auto first = dst.find_first_not_of(" \t\r");
      if (first == std::string::npos || dst[first] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line(line)) throw InputError("edge list: missing header line");
  std::uint64_t n = 0, m = 0;
  {
    std::istringstream hs(line);
    if (!(hs >> n >> m)) throw InputError("edge list: header must be 'n m'");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!next_line(line)) {
      throw InputError("edge list: expected " + std::to_string(m) + " edges, got " +
                       std::to_string(i));
    }
    std::istringstream es(line);
    std::int64_t u = -1, v = -1;
    if (!(es >> u >> v) || u < 0 || v < 0) {
      throw InputError("edge list: malformed edge line '" + line + "'");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (next_line(line)) throw InputError("edge list: more edge lines than declared");
  return Graph::from_edges(n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  return read_edge_list(in);
}

Graph path_graph(std::size_t k) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < k; ++i) e.push_back({Vertex(i), Vertex(i + 1)});
  return Graph::from_edges(k, std::move(e));
}

Graph cycle_graph(std::size_t k) {
  if (k < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < k; ++i) e.push_back({Vertex(i), Vertex((i + 1) % k)});
  return Graph::from_edges(k, std::move(e));
}

Graph complete_graph(std::size_t k) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) e.push_back({Vertex(i), Vertex(j)});
  return Graph::from_edges(k, std::move(e));
}

Graph star_graph(std::size_t k) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= k; ++i) e.push_back({0, Vertex(i)});
  return Graph::from_edges(k + 1, std::move(e));
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> e;
  auto id = [cols](std::size_t r, std::size_t c) { return Vertex(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) e.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return Graph::from_edges(rows * cols, std::move(e));
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, Vertex((i + 1) % 5)});      // outer 5-cycle
    e.push_back({i, Vertex(i + 5)});            // spokes
    e.push_back({Vertex(i + 5), Vertex((i + 2) % 5 + 5)});  // inner pentagram
  }
  return Graph::from_edges(10, std::move(e));
}

namespace {

bool parse_size(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

bool is_named_graph(std::string_view name) {
  try {
    (void)named_graph(name);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

Graph named_graph(std::string_view name) {
  if (name == "petersen") return petersen_graph();
  const auto dash = name.find('-');
  if (dash == std::string_view::npos) throw InputError("unknown graph name '" + std::string(name) + "'");
  const auto kind = name.substr(0, dash);
  const auto arg = name.substr(dash + 1);
  std::size_t k = 0;
  if (kind == "grid") {
    const auto x = arg.find('x');
    std::size_t r = 0, c = 0;
    if (x == std::string_view::npos || !parse_size(arg.substr(0, x), r) ||
        !parse_size(arg.substr(x + 1), c)) {
      throw InputError("grid graph name must look like grid-RxC");
    }
    return grid_graph(r, c);
  }
  if (!parse_size(arg, k)) throw InputError("bad size in graph name '" + std::string(name) + "'");
  if (kind == "path") return path_graph(k);
  if (kind == "cycle") return cycle_graph(k);
  if (kind == "complete") return complete_graph(k);
  if (kind == "star") return star_graph(k);
  throw InputError("unknown graph name '" + std::string(name) + "'");
}

}  // namespace copnum
