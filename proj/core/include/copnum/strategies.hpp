#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "copnum/exact_solver.hpp"
#include "copnum/game.hpp"
#include "copnum/graph.hpp"

namespace copnum {

// ---------------------------------------------------------------------------
// Robbers

/// Distance from every vertex to the nearest and second-nearest cop (cops
/// counted individually, so two cops on one vertex give equal values).
/// Unreachable distances are reported as kNoDepthLimit.
struct TwoNearest {
  std::vector<Distance> first;
  std::vector<Distance> second;
};
TwoNearest two_nearest_cops(const Graph& g, std::span<const Vertex> cops);

/// Moves (or stays) to maximize the distance to the nearest cop, then to
/// the second-nearest, then prefers the smaller vertex id. Placement uses
/// the same rule over all vertices. With no cops it stays where it is.
class GreedyRobber final : public RobberStrategy {
 public:
  std::string name() const override { return "greedy-robber"; }
  Vertex place(const Graph& g, std::span<const Vertex> cops) override;
  Vertex act(const Graph& g, const GameState& state) override;
};

/// Never moves. Starts at a fixed vertex, or greedily if none is given.
class StationaryRobber final : public RobberStrategy {
 public:
  explicit StationaryRobber(std::optional<Vertex> start = std::nullopt) : start_(start) {}
  std::string name() const override { return "stationary-robber"; }
  Vertex place(const Graph& g, std::span<const Vertex> cops) override;
  Vertex act(const Graph& g, const GameState& state) override;

 private:
  std::optional<Vertex> start_;
};

/// Value-optimal robber read from a solved position table: survives forever
/// from robber-winning positions and otherwise delays capture maximally.
class TableRobber final : public RobberStrategy {
 public:
  explicit TableRobber(const PositionTable& table) : table_(&table) {}
  std::string name() const override { return "optimal-robber"; }
  Vertex place(const Graph& g, std::span<const Vertex> cops) override;
  Vertex act(const Graph& g, const GameState& state) override;

 private:
  const PositionTable* table_;
};

// ---------------------------------------------------------------------------
// Baseline cops

/// Each cop steps along a shortest path toward the robber. Never resigns.
class GreedyCop final : public CopStrategy {
 public:
  explicit GreedyCop(std::vector<Vertex> placement) : placement_(std::move(placement)) {}
  std::string name() const override { return "greedy-cop"; }
  std::vector<Vertex> place(const Graph& g, CounterRng& rng) override;
  CopDecision act(const Graph& g, const GameState& state) override;
  StrategyAudit audit() const override;

 private:
  std::vector<Vertex> placement_;
};

/// Value-optimal cops from a solved table. From robber-winning positions it
/// falls back to shortest-path pursuit.
class TableCop final : public CopStrategy {
 public:
  explicit TableCop(const PositionTable& table) : table_(&table) {}
  std::string name() const override { return "optimal-cop"; }
  std::vector<Vertex> place(const Graph& g, CounterRng& rng) override;
  CopDecision act(const Graph& g, const GameState& state) override;
  StrategyAudit audit() const override;

 private:
  const PositionTable* table_;
  std::size_t cops_ = 0;
};

// ---------------------------------------------------------------------------
// Dense regime

/// Smallest r >= 0 with d^{r+1} >= sqrt(n). Throws InputError unless d > 1.
Distance dense_radius(double d, std::size_t n);

enum class DenseCase { Direct, Spheres, Adjacent };
std::string to_string(DenseCase c);

struct DenseStrategyConfig {
  /// Each team puts a cop on every vertex independently with probability C / sqrt(n).
  double C = 2.0;
  /// Density; 0 means the average degree of the graph.
  double d = 0.0;
  /// Relative slack on the d^{r+1} >= sqrt(n) log n test that selects the direct case.
  double tol = 0.0;
};

/// Executable version of the random-team strategy for dense graphs.
///
/// Direct case (d^{r+1} >= sqrt(n) log n): one team is matched onto the
/// ball N(v, r) around the robber's start within r + 1 moves.
///
/// Sphere case (r >= 1): team 1 sends one cop from each disjoint reservoir
/// W(u) to u on S(v, r); an auxiliary team is matched onto N(v, r) within
/// r + 2 moves; team 2 is released once the robber is at distance floor(r/2)
/// from v and covers the spheres S(s, floor(r/2) + 1) around the uncovered
/// sphere vertices the robber can still reach; a clean-up team fills the
/// ball around the robber's vertex after r moves.
///
/// Adjacent case (r = 0): team 1 holds still for one move while team 2 is
/// matched within two moves onto v and the neighbours of v not dominated by
/// team 1.
///
/// Any cop adjacent to the robber captures it. The strategy resigns when
/// a required matching does not exist or when all cops are idle and none
/// can capture.
class DenseStrategy final : public CopStrategy {
 public:
  DenseStrategy(const Graph& g, DenseStrategyConfig cfg);
  ~DenseStrategy() override;
  std::string name() const override { return "dense"; }
  std::vector<Vertex> place(const Graph& g, CounterRng& rng) override;
  CopDecision act(const Graph& g, const GameState& state) override;
  StrategyAudit audit() const override;

  DenseCase regime() const { return case_; }
  Distance radius() const { return r_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  DenseCase case_;
  Distance r_;
};

// ---------------------------------------------------------------------------
// Sparse regime

struct RadiusSchedule {
  double d = 0.0;
  std::size_t n = 0;
  double eps0 = 1.0;
  double F = 1.0;
  double C = 1.0;
  /// Number of teams, ceil(F log log n) (at least 1).
  std::size_t teams = 0;
  /// radii[i - 1] = r_i for i = 1..teams+1.
  std::vector<Distance> radii;
  /// Expected team sizes c_i = C e^{-i} sqrt(n), the last one sqrt(n).
  std::vector<double> team_sizes;

  Distance r(std::size_t i) const { return radii.at(i - 1); }
  /// Per-vertex sampling probability of team i, min(1, c_i / n).
  double probability(std::size_t i) const;
};

/// r_1 = floor(log_d(eps0 n) / 4); for i >= 2, r_i is the unique integer with
/// sqrt(eps0 n) / d < d^{r_{i-1} + r_i} / e^{2(i-1)} <= sqrt(eps0 n).
/// Throws InputError for d < 2, eps0 outside (0, 1], F <= 0, C <= 0, or when
/// some r_i would be negative.
RadiusSchedule radius_schedule(double d, std::size_t n, double eps0, double F, double C);

/// Integer form of the vulnerability test: |S_{i-1}| <= floor(e^{-5(i-1)} |S(v_i, r_i)|).
bool is_vulnerable(std::size_t uncovered, std::size_t sphere, std::size_t round);

struct SparseStrategyConfig {
  RadiusSchedule schedule;
  /// Vertices that get a permanently stationed cop (the robber never enters them).
  VertexSet x_set;
  /// Density; 0 means the schedule's d.
  double d = 0.0;
  double c1 = 1.0 / 50.0;
  double c2 = 1.0 / 9.0;
  /// Clean-up team size; 0 means ceil(n^{1/3}).
  std::size_t cleanup = 0;
};

/// Executable version of the multi-team strategy for sparse graphs.
///
/// One cop sits on each vertex of x_set for the whole game. Round i starts
/// at the robber's vertex v_i and ends when the robber first reaches distance r_i
/// from it. At the start of round i team i is released: it targets every
/// vertex of U = union of S(u, r_{i+1}) over the still-unprotected part
/// S_{i-1} of S(v_i, r_i), through an accessibility family (the lowest-id
/// team cop inside W(w) is sent to w) or, for the last team, a maximum
/// matching within r_i + r_{i+1} + 1 moves. A clean-up team is matched onto
/// N(v_i, r_i) minus x_set every round, nearest layers first when it is too
/// small. Any free cop adjacent to the robber captures it.
class SparseStrategy final : public CopStrategy {
 public:
  SparseStrategy(const Graph& g, SparseStrategyConfig cfg);
  ~SparseStrategy() override;
  std::string name() const override { return "sparse"; }
  std::vector<Vertex> place(const Graph& g, CounterRng& rng) override;
  CopDecision act(const Graph& g, const GameState& state) override;
  StrategyAudit audit() const override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace copnum
