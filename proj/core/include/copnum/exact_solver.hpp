#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "copnum/game.hpp"
#include "copnum/graph.hpp"

namespace copnum {

inline constexpr std::uint64_t kDefaultSolverBudget = 50'000'000;

/// Ranks sorted k-multisets over {0..n-1} with the combinatorial number
/// system: b_i = c_i + i is strictly increasing and rank = sum_i C(b_i, i+1).
class MultisetIndexer {
 public:
  MultisetIndexer(std::size_t n, std::size_t k);

  std::uint64_t count() const { return count_; }
  std::uint64_t rank(std::span<const Vertex> sorted) const;
  void unrank(std::uint64_t rank, std::vector<Vertex>& out) const;

 private:
  std::uint64_t binom(std::size_t a, std::size_t b) const;

  std::size_t n_;
  std::size_t k_;
  std::uint64_t count_ = 0;
  std::vector<std::vector<std::uint64_t>> pascal_;
};

/// Number of (multiset, robber, turn) positions for k cops on n vertices, or
/// nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> position_count(std::size_t n, std::size_t k);

/// Retrograde solution of the k-cop game on one graph. For every position it
/// stores whether the cops can force a capture and, if so, the number of
/// half-moves to capture under optimal play (cops minimizing, robber
/// maximizing).
class PositionTable {
 public:
  static constexpr std::uint16_t kRobberWins = 0xFFFF;

  std::size_t vertex_count() const { return n_; }
  std::size_t cops() const { return k_; }
  std::uint64_t size() const { return values_.size(); }
  const MultisetIndexer& indexer() const { return indexer_; }

  std::uint64_t index(std::span<const Vertex> sorted_cops, Vertex robber, Turn turn) const;

  /// Half-moves to capture, or kRobberWins.
  std::uint16_t value(std::uint64_t index) const { return values_[index]; }
  std::uint16_t value(std::span<const Vertex> sorted_cops, Vertex robber, Turn turn) const {
    return values_[index(sorted_cops, robber, turn)];
  }
  bool cop_win(std::span<const Vertex> sorted_cops, Vertex robber, Turn turn) const {
    return value(sorted_cops, robber, turn) != kRobberWins;
  }

  /// Cops win from this placement whatever vertex the robber picks.
  bool placement_wins(std::span<const Vertex> sorted_cops) const;
  /// Worst case cop moves to capture from a placement (robber choosing the
  /// start), or nullopt if some start survives.
  std::optional<std::uint64_t> placement_capture_time(std::span<const Vertex> sorted_cops) const;

  /// Writes "cops;robber;turn;win;half_moves" rows for every position.
  void dump(std::ostream& out) const;

 private:
  friend PositionTable solve_k(const Graph& g, std::size_t k, std::uint64_t budget);
  PositionTable(std::size_t n, std::size_t k) : n_(n), k_(k), indexer_(n, k) {}

  std::size_t n_;
  std::size_t k_;
  MultisetIndexer indexer_;
  std::vector<std::uint16_t> values_;
};

/// Least-fixpoint labeling by reverse breadth-first search from capture
/// positions. Throws BudgetExceeded if the table would exceed `budget`
/// positions and InputError for k = 0 or the empty graph.
PositionTable solve_k(const Graph& g, std::size_t k, std::uint64_t budget = kDefaultSolverBudget);

/// Half-moves converted to cop moves (the robber's half-move does not count).
inline std::uint64_t cop_moves_from_half(std::uint16_t half) { return (half + 1u) / 2u; }

/// Smallest k <= k_max for which some placement beats every robber start,
/// or nullopt if none does. On a disconnected graph this is the true game
/// value (cops are needed in every component).
std::optional<std::size_t> cop_number(const Graph& g, std::size_t k_max,
                                      std::uint64_t budget = kDefaultSolverBudget);

/// min over placements of max over robber starts of the cop moves to capture.
/// Throws InputError if k cops cannot win.
std::uint64_t optimal_capture_time(const Graph& g, std::size_t k,
                                   std::uint64_t budget = kDefaultSolverBudget);
std::uint64_t optimal_capture_time(const PositionTable& table);
/// First placement in rank order attaining optimal_capture_time.
std::vector<Vertex> optimal_placement(const PositionTable& table);

/// Corner-removal test: repeatedly delete a vertex u whose closed
/// neighbourhood lies inside that of another vertex; true iff one vertex remains.
bool is_copwin_dismantlable(const Graph& g);

/// Every multiset reachable from `sorted_cops` in one compound cop move
/// (sorted, duplicates removed).
std::vector<std::vector<Vertex>> cop_successors(const Graph& g, std::span<const Vertex> sorted_cops);

}  // namespace copnum
