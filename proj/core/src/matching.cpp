#include "copnum/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "copnum/errors.hpp"

namespace copnum {

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(const Bipartite& b, Matching& m) : b_(b), m_(m), level_(b.adjacency.size()),
                                                  next_edge_(b.adjacency.size()) {}

  void run() {
    while (layer()) {
      std::fill(next_edge_.begin(), next_edge_.end(), 0);
      for (std::uint32_t u = 0; u < b_.adjacency.size(); ++u) {
        if (m_.left_to_right[u] == kUnmatched && augment(u)) ++m_.size;
      }
    }
  }

 private:
  // Levels left vertices by alternating distance from the free ones; true
  // if some free right vertex is reachable.
  bool layer() {
    std::deque<std::uint32_t> queue;
    for (std::uint32_t u = 0; u < b_.adjacency.size(); ++u) {
      if (m_.left_to_right[u] == kUnmatched) {
        level_[u] = 0;
        queue.push_back(u);
      } else {
        level_[u] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const std::uint32_t u = queue.front();
      queue.pop_front();
      for (std::uint32_t w : b_.adjacency[u]) {
        const std::uint32_t mate = m_.right_to_left[w];
        if (mate == kUnmatched) {
          found = true;
        } else if (level_[mate] == kInf) {
          level_[mate] = level_[u] + 1;
          queue.push_back(mate);
        }
      }
    }
    return found;
  }

  // Iterative DFS along the level graph from free left vertex `root`.
  bool augment(std::uint32_t root) {
    std::vector<std::uint32_t> stack{root};
    while (!stack.empty()) {
      const std::uint32_t u = stack.back();
      const auto& adj = b_.adjacency[u];
      bool pushed = false;
      while (next_edge_[u] < adj.size()) {
        const std::uint32_t w = adj[next_edge_[u]];
        const std::uint32_t mate = m_.right_to_left[w];
        if (mate == kUnmatched) {
          // Flip the path: each stack entry takes the right vertex it is
          // currently scanning.
          for (std::uint32_t x : stack) {
            const std::uint32_t y = b_.adjacency[x][next_edge_[x]];
            m_.left_to_right[x] = y;
            m_.right_to_left[y] = x;
          }
          return true;
        }
        if (level_[mate] == level_[u] + 1) {
          stack.push_back(mate);
          pushed = true;
          break;
        }
        ++next_edge_[u];
      }
      if (!pushed) {
        level_[u] = kInf;
        stack.pop_back();
        if (!stack.empty()) ++next_edge_[stack.back()];
      }
    }
    return false;
  }

  const Bipartite& b_;
  Matching& m_;
  std::vector<std::uint32_t> level_;
  std::vector<std::size_t> next_edge_;
};

}  // namespace

Matching max_matching(const Bipartite& b) {
  Matching m;
  m.left_to_right.assign(b.adjacency.size(), kUnmatched);
  m.right_to_left.assign(b.right_count, kUnmatched);
  for (const auto& adj : b.adjacency) {
    for (std::uint32_t w : adj) {
      if (w >= b.right_count) throw InputError("bipartite incidence refers to a missing right vertex");
    }
  }
  HopcroftKarp(b, m).run();
  return m;
}

std::vector<std::uint32_t> hall_witness(const Bipartite& b, const Matching& m) {
  std::vector<char> seen(b.adjacency.size(), 0);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t u = 0; u < b.adjacency.size(); ++u) {
    if (m.left_to_right[u] == kUnmatched) {
      seen[u] = 1;
      queue.push_back(u);
    }
  }
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop_front();
    for (std::uint32_t w : b.adjacency[u]) {
      const std::uint32_t mate = m.right_to_left[w];
      if (mate != kUnmatched && !seen[mate]) {
        seen[mate] = 1;
        queue.push_back(mate);
      }
    }
  }
  std::vector<std::uint32_t> k;
  for (std::uint32_t u = 0; u < seen.size(); ++u) {
    if (seen[u]) k.push_back(u);
  }
  return k;
}

Bipartite radius_incidence(const AssignmentProblem& p) {
  if (p.graph == nullptr) throw InputError("assignment problem has no graph");
  if (p.radius < 0) throw InputError("assignment radius must be nonnegative");
  const Graph& g = *p.graph;
  for (Vertex v : p.left) require_vertex(g, v);
  for (Vertex v : p.right) require_vertex(g, v);
  if (!std::is_sorted(p.left.begin(), p.left.end()) ||
      std::adjacent_find(p.left.begin(), p.left.end()) != p.left.end()) {
    throw InputError("assignment destinations must be sorted and distinct");
  }

  // Cops grouped by location so each ball is scanned once.
  std::vector<std::pair<Vertex, std::uint32_t>> by_location;
  by_location.reserve(p.right.size());
  for (std::uint32_t j = 0; j < p.right.size(); ++j) by_location.emplace_back(p.right[j], j);
  std::sort(by_location.begin(), by_location.end());

  Bipartite b;
  b.right_count = p.right.size();
  b.adjacency.resize(p.left.size());
  Bfs bfs(g);
  for (std::size_t i = 0; i < p.left.size(); ++i) {
    bfs.run_from(p.left[i], p.radius);
    auto& adj = b.adjacency[i];
    if (bfs.visited().size() < by_location.size()) {
      for (Vertex x : bfs.visited()) {
        auto it = std::lower_bound(by_location.begin(), by_location.end(),
                                   std::make_pair(x, std::uint32_t{0}));
        for (; it != by_location.end() && it->first == x; ++it) adj.push_back(it->second);
      }
    } else {
      for (const auto& [loc, j] : by_location) {
        if (bfs.reached(loc)) adj.push_back(j);
      }
    }
    std::sort(adj.begin(), adj.end());
  }
  return b;
}

AssignmentResult assign_within_radius(const AssignmentProblem& p) {
  const Bipartite b = radius_incidence(p);
  const Matching m = max_matching(b);
  AssignmentResult result;
  result.assignment = m.left_to_right;
  result.matched = m.size;
  result.feasible = m.size == p.left.size();
  if (!result.feasible) {
    for (std::uint32_t i : hall_witness(b, m)) result.violation.push_back(p.left[i]);
  }
  return result;
}

std::size_t hall_deficiency(const AssignmentProblem& p) {
  return p.left.size() - max_matching(radius_incidence(p)).size;
}

std::size_t cops_near(const Graph& g, const VertexSet& k, const std::vector<Vertex>& right,
                      Distance radius) {
  if (k.empty()) return 0;
  const std::vector<Distance> dist = bfs_distances(g, k, radius);
  std::size_t count = 0;
  for (Vertex c : right) {
    require_vertex(g, c);
    if (dist[c] != kUnreachable) ++count;
  }
  return count;
}

}  // namespace copnum
