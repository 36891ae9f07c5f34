#pragma once

// Shared plumbing for the executable cop strategies: team sampling, path
// following and matching-based dispatch.

#include <string>
#include <vector>

#include "copnum/game.hpp"
#include "copnum/graph.hpp"
#include "copnum/matching.hpp"
#include "copnum/rng.hpp"

namespace copnum::detail {

/// Every vertex independently with probability p (ascending).
std::vector<Vertex> sample_team(std::size_t n, double p, CounterRng& rng);

class Fleet {
 public:
  explicit Fleet(const Graph& g) : g_(&g), bfs_(g) {}

  void init(std::vector<Vertex> positions);
  std::size_t size() const { return pos_.size(); }
  Vertex position(std::uint32_t cop) const { return pos_[cop]; }
  bool idle(std::uint32_t cop) const { return path_[cop].empty(); }
  bool all_idle() const;

  /// Routes a cop along a shortest path to target and logs the assignment.
  /// limit < 0 means no limit; the allotted moves are then the path length.
  /// Returns false (and changes nothing) if the target is out of reach.
  bool send(std::uint32_t cop, Vertex target, Distance limit, std::uint64_t issued,
            const std::string& team, StrategyAudit& audit);

  /// Next labeled positions. A cop with capture rights adjacent to the robber
  /// steps onto the robber; everyone else follows their path or stays.
  std::vector<Vertex> advance(const GameState& state, const std::vector<char>& can_capture,
                              bool& moved, bool& capturing);

 private:
  const Graph* g_;
  Bfs bfs_;
  std::vector<Vertex> pos_;
  std::vector<std::vector<Vertex>> path_;  // reversed: back() is the next vertex
};

/// Matches the cops `team` onto `destinations` within `radius` (negative for
/// unlimited) and routes them. With `partial` the matched cops are routed
/// even when not every destination is served; otherwise nobody moves.
AssignmentResult dispatch(Fleet& fleet, const Graph& g, const VertexSet& destinations,
                          const std::vector<std::uint32_t>& team, Distance radius, bool partial,
                          std::uint64_t issued, const std::string& name, StrategyAudit& audit);

}  // namespace copnum::detail
