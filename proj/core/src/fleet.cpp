#include "fleet.hpp"

#include <algorithm>

namespace copnum::detail {

std::vector<Vertex> sample_team(std::size_t n, double p, CounterRng& rng) {
  std::vector<Vertex> team;
  for (std::size_t v = 0; v < n; ++v) {
    if (rng.bernoulli(p)) team.push_back(static_cast<Vertex>(v));
  }
  return team;
}

void Fleet::init(std::vector<Vertex> positions) {
  pos_ = std::move(positions);
  path_.assign(pos_.size(), {});
}

bool Fleet::all_idle() const {
  return std::all_of(path_.begin(), path_.end(), [](const auto& p) { return p.empty(); });
}

bool Fleet::send(std::uint32_t cop, Vertex target, Distance limit, std::uint64_t issued,
                 const std::string& team, StrategyAudit& audit) {
  const Vertex from = pos_[cop];
  bfs_.run_from(target, limit < 0 ? kNoDepthLimit : limit);
  if (!bfs_.reached(from)) return false;
  std::vector<Vertex> path;
  for (Vertex x = from; x != target;) {
    x = bfs_.parent(x);
    path.push_back(x);
  }
  std::reverse(path.begin(), path.end());
  const auto length = static_cast<std::uint32_t>(path.size());
  path_[cop] = std::move(path);
  audit.assignments.push_back(
      {cop, from, target, issued, limit < 0 ? length : static_cast<std::uint32_t>(limit), team});
  return true;
}

std::vector<Vertex> Fleet::advance(const GameState& state, const std::vector<char>& can_capture,
                                   bool& moved, bool& capturing) {
  pos_ = state.cops;
  moved = false;
  capturing = false;
  const Vertex robber = *state.robber;
  std::vector<Vertex> next = pos_;
  for (std::uint32_t c = 0; c < pos_.size(); ++c) {
    if (can_capture[c] && g_->has_edge(pos_[c], robber)) {
      next[c] = robber;
      capturing = true;
    } else if (!path_[c].empty()) {
      next[c] = path_[c].back();
      path_[c].pop_back();
    }
    moved = moved || next[c] != pos_[c];
  }
  pos_ = next;
  return next;
}

AssignmentResult dispatch(Fleet& fleet, const Graph& g, const VertexSet& destinations,
                          const std::vector<std::uint32_t>& team, Distance radius, bool partial,
                          std::uint64_t issued, const std::string& name, StrategyAudit& audit) {
  AssignmentProblem problem;
  problem.graph = &g;
  problem.left = destinations;
  problem.radius = radius < 0 ? kNoDepthLimit : radius;
  problem.right.reserve(team.size());
  for (std::uint32_t c : team) problem.right.push_back(fleet.position(c));
  AssignmentResult res = assign_within_radius(problem);
  if (!res.feasible && !partial) return res;
  for (std::size_t i = 0; i < destinations.size(); ++i) {
    if (res.assignment[i] == kUnmatched) continue;
    fleet.send(team[res.assignment[i]], destinations[i], radius, issued, name, audit);
  }
  return res;
}

}  // namespace copnum::detail
