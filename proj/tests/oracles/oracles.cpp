#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace copnum::oracle {

std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Vertex v : g.neighbors(static_cast<Vertex>(u))) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kInf) continue;
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

Graph from_masks(const std::vector<std::uint32_t>& masks) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < masks.size(); ++u) {
    for (Vertex v = u + 1; v < masks.size(); ++v) {
      if (masks[u] >> v & 1u) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(masks.size(), edges);
}

namespace {

std::vector<char> reachable_masks(const std::vector<std::vector<int>>& dist,
                                  const std::vector<Vertex>& left, const std::vector<Vertex>& right,
                                  int radius) {
  if (left.size() > 20) throw std::invalid_argument("oracle limited to 20 left vertices");
  const std::size_t full = std::size_t{1} << left.size();
  std::vector<char> seen(full, 0);
  seen[0] = 1;
  for (Vertex cop : right) {
    std::vector<char> next = seen;
    for (std::size_t mask = 0; mask < full; ++mask) {
      if (!seen[mask]) continue;
      for (std::size_t i = 0; i < left.size(); ++i) {
        if (!(mask >> i & 1u) && dist[cop][left[i]] <= radius) next[mask | (std::size_t{1} << i)] = 1;
      }
    }
    seen = std::move(next);
  }
  return seen;
}

}  // namespace

bool assignment_feasible(const std::vector<std::vector<int>>& dist, const std::vector<Vertex>& left,
                         const std::vector<Vertex>& right, int radius) {
  return reachable_masks(dist, left, right, radius).back() != 0;
}

std::size_t assignment_size(const std::vector<std::vector<int>>& dist, const std::vector<Vertex>& left,
                            const std::vector<Vertex>& right, int radius) {
  const auto seen = reachable_masks(dist, left, right, radius);
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < seen.size(); ++mask) {
    if (seen[mask]) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

long FlowNetwork::max_flow(std::size_t source, std::size_t sink) {
  const std::size_t n = cap_.size();
  long total = 0;
  for (;;) {
    std::vector<std::size_t> prev(n, n);
    prev[source] = source;
    std::deque<std::size_t> q{source};
    while (!q.empty() && prev[sink] == n) {
      const std::size_t u = q.front();
      q.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (prev[v] == n && cap_[u][v] > 0) {
          prev[v] = u;
          q.push_back(v);
        }
      }
    }
    if (prev[sink] == n) return total;
    long push = -1;
    for (std::size_t v = sink; v != source; v = prev[v]) {
      const long c = cap_[prev[v]][v];
      push = push < 0 ? c : std::min(push, c);
    }
    for (std::size_t v = sink; v != source; v = prev[v]) {
      cap_[prev[v]][v] -= push;
      cap_[v][prev[v]] += push;
    }
    total += push;
  }
}

bool disjoint_family_exists(const std::vector<std::vector<Vertex>>& candidates,
                            const std::vector<std::size_t>& need, std::size_t n) {
  const std::size_t m = candidates.size();
  const std::size_t source = m + n;
  const std::size_t sink = source + 1;
  FlowNetwork net(sink + 1);
  long required = 0;
  for (std::size_t i = 0; i < m; ++i) {
    net.add(source, i, static_cast<long>(need[i]));
    required += static_cast<long>(need[i]);
    for (Vertex x : candidates[i]) net.add(i, m + x, 1);
  }
  for (std::size_t x = 0; x < n; ++x) net.add(m + x, sink, 1);
  return net.max_flow(source, sink) == required;
}

std::size_t best_min_family(const std::vector<std::vector<Vertex>>& candidates, std::size_t n) {
  std::size_t k = 0;
  for (;;) {
    const std::vector<std::size_t> need(candidates.size(), k + 1);
    if (!disjoint_family_exists(candidates, need, n)) return k;
    ++k;
  }
}

Minimax::Minimax(const Graph& g, std::size_t k) : g_(&g), k_(k), closed_(g.vertex_count()) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    closed_[v].push_back(v);
    for (Vertex w : g.neighbors(v)) closed_[v].push_back(w);
  }
}

std::uint64_t Minimax::key(const std::vector<Vertex>& cops, Vertex robber, bool cops_to_move) const {
  std::vector<Vertex> sorted = cops;
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t key = 0;
  for (Vertex c : sorted) key = key * g_->vertex_count() + c;
  return (key * g_->vertex_count() + robber) * 2 + (cops_to_move ? 1 : 0);
}

bool Minimax::win(const std::vector<Vertex>& cops, Vertex robber, bool cops_to_move, int depth) {
  if (std::find(cops.begin(), cops.end(), robber) != cops.end()) return true;
  if (depth == 0) return false;
  if (memo_.size() <= static_cast<std::size_t>(depth)) memo_.resize(depth + 1);
  auto& table = memo_[depth];
  std::uint64_t states = 2;
  for (std::size_t i = 0; i <= k_; ++i) states *= g_->vertex_count();
  if (table.empty()) table.assign(states, 0);
  const std::uint64_t id = key(cops, robber, cops_to_move);
  if (table[id]) return table[id] == 2;

  bool result = false;
  if (cops_to_move) {
    // Odometer over one closed-neighbourhood choice per cop.
    std::vector<std::size_t> choice(k_, 0);
    std::vector<Vertex> next(k_);
    for (;;) {
      for (std::size_t i = 0; i < k_; ++i) next[i] = closed_[cops[i]][choice[i]];
      if (win(next, robber, false, depth - 1)) {
        result = true;
        break;
      }
      std::size_t i = 0;
      while (i < k_ && ++choice[i] == closed_[cops[i]].size()) choice[i++] = 0;
      if (i == k_) break;
    }
  } else {
    result = true;
    for (Vertex r : closed_[robber]) {
      if (!win(cops, r, true, depth - 1)) {
        result = false;
        break;
      }
    }
  }
  table[id] = result ? 2 : 1;
  return result;
}

std::optional<int> Minimax::capture_within(std::vector<Vertex> cops, Vertex robber, bool cops_to_move,
                                           int depth) {
  for (int h = 0; h <= depth; ++h) {
    if (win(cops, robber, cops_to_move, h)) return h;
  }
  return std::nullopt;
}

bool dismantlable_masks(std::vector<std::uint32_t> masks) {
  const std::size_t n = masks.size();
  std::uint32_t alive = n == 32 ? ~0u : (1u << n) - 1u;
  if (n == 0) return false;
  for (std::size_t v = 0; v < n; ++v) masks[v] |= 1u << v;
  bool removed = true;
  while (std::popcount(alive) > 1 && removed) {
    removed = false;
    for (std::size_t u = 0; u < n && !removed; ++u) {
      if (!(alive >> u & 1u)) continue;
      const std::uint32_t nu = masks[u] & alive;
      for (std::size_t w = 0; w < n; ++w) {
        if (w == u || !(alive >> w & 1u)) continue;
        if ((nu & ~(masks[w] & alive)) == 0) {
          alive &= ~(1u << u);
          removed = true;
          break;
        }
      }
    }
  }
  return std::popcount(alive) == 1;
}

namespace {

double cross(std::pair<double, double> o, std::pair<double, double> a, std::pair<double, double> b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Proper crossing of segments ab and cd; shared endpoints do not count.
bool crosses(std::pair<double, double> a, std::pair<double, double> b, std::pair<double, double> c,
             std::pair<double, double> d) {
  const double d1 = cross(a, b, c);
  const double d2 = cross(a, b, d);
  const double d3 = cross(c, d, a);
  const double d4 = cross(c, d, b);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
}

}  // namespace

bool embedding_is_plane(const std::vector<std::pair<double, double>>& pts,
                        const std::vector<std::pair<Vertex, Vertex>>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (crosses(pts[a], pts[b], pts[c], pts[d])) return false;
    }
  }
  return true;
}

Graph random_planar(std::size_t n, double keep, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::bernoulli_distribution take(keep);
  for (;;) {
    std::vector<std::pair<double, double>> pts(n);
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::vector<std::pair<Vertex, Vertex>> kept;
    for (const auto& [u, v] : pairs) {
      bool ok = true;
      for (const auto& [a, b] : kept) {
        if (u == a || u == b || v == a || v == b) continue;
        if (crosses(pts[u], pts[v], pts[a], pts[b])) {
          ok = false;
          break;
        }
      }
      if (ok && take(rng)) kept.emplace_back(u, v);
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : kept) edges.push_back({u, v});
    Graph g = Graph::from_edges(n, edges);
    // Connectivity by union-find so the oracle does not rely on library BFS.
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t parts = n;
    for (const auto& [u, v] : kept) {
      const auto a = find(u), b = find(v);
      if (a != b) {
        parent[a] = b;
        --parts;
      }
    }
    if (parts == 1 && embedding_is_plane(pts, kept)) return g;
  }
}

}  // namespace copnum::oracle
