#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "copnum/graph.hpp"

namespace copnum {

inline constexpr std::uint32_t kUnmatched = std::numeric_limits<std::uint32_t>::max();

/// Bipartite incidence: adjacency[i] lists right indices adjacent to left i.
struct Bipartite {
  std::size_t right_count = 0;
  std::vector<std::vector<std::uint32_t>> adjacency;
};

struct Matching {
  std::vector<std::uint32_t> left_to_right;  // kUnmatched where free
  std::vector<std::uint32_t> right_to_left;
  std::size_t size = 0;
};

/// Hopcroft-Karp maximum matching. Free left vertices and adjacency lists
/// are scanned in index order, so the result is a function of the input.
Matching max_matching(const Bipartite& b);

/// Left vertices reachable from free left vertices along alternating paths
/// (indices into the left side, ascending). Its neighborhood is matched
/// entirely inside itself, so |N(K)| = |K| - (number of free left vertices).
std::vector<std::uint32_t> hall_witness(const Bipartite& b, const Matching& m);

/// Destinations `left` (distinct vertices) and cops standing at `right`
/// (repeats allowed: each entry is a separate cop). A cop may serve a
/// destination within graph distance `radius`.
struct AssignmentProblem {
  const Graph* graph = nullptr;
  VertexSet left;
  std::vector<Vertex> right;
  Distance radius = 0;
};

struct AssignmentResult {
  /// True iff every destination received a cop.
  bool feasible = false;
  /// assignment[i] = index into right serving left[i], or kUnmatched.
  std::vector<std::uint32_t> assignment;
  std::size_t matched = 0;
  /// When infeasible: destinations K with fewer than |K| cops within radius.
  VertexSet violation;
};

/// Distance-r incidence between destinations and cops, built from one
/// truncated BFS per destination.
Bipartite radius_incidence(const AssignmentProblem& p);

/// Maximum assignment of cops to destinations; reports a Hall violation when
/// not every destination can be served.
AssignmentResult assign_within_radius(const AssignmentProblem& p);

/// max over K subset of left of |K| - |cops within radius of K|.
std::size_t hall_deficiency(const AssignmentProblem& p);

/// Number of cops in `right` within `radius` of some vertex of k.
std::size_t cops_near(const Graph& g, const VertexSet& k, const std::vector<Vertex>& right,
                      Distance radius);

}  // namespace copnum
