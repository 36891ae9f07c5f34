#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "copnum/graph.hpp"
#include "copnum/rng.hpp"

namespace copnum {

enum class Turn { Cops, Robber };

/// Position of a game in progress. Cops are labeled (index = cop id) so that
/// strategies can track individual cops; cop_multiset() gives the canonical
/// unlabeled view used for state identity.
struct GameState {
  std::vector<Vertex> cops;
  std::optional<Vertex> robber;
  Turn turn = Turn::Cops;
  /// Half-moves played since placement: cops move at even steps, the robber at odd ones.
  std::uint64_t step = 0;

  std::vector<Vertex> cop_multiset() const;
  /// Completed cop moves.
  std::uint64_t cop_moves() const { return (step + 1) / 2; }
};

/// Placement: cops first, then the robber (who has seen the cops). The cops
/// move next. Throws InputError on an empty graph or an invalid vertex.
GameState new_game(const Graph& g, std::vector<Vertex> cops, Vertex robber);

/// True iff some cop shares the robber's vertex. Throws InputError if the
/// robber has not been placed.
bool is_capture(const GameState& state);

/// True iff `to` equals `from` or is adjacent to it.
bool is_step(const Graph& g, Vertex from, Vertex to);

/// Distinct successor states of a position (sorted cop multisets for a cop
/// turn). The cop team moves as one compound move.
std::vector<GameState> legal_moves(const Graph& g, const GameState& state);

/// Applies a labeled cop move; throws IllegalMove naming the first offending cop.
void apply_cop_move(const Graph& g, GameState& state, std::span<const Vertex> next);
/// Applies a robber move; throws IllegalMove if it is not a step.
void apply_robber_move(const Graph& g, GameState& state, Vertex next);

// ---------------------------------------------------------------------------
// Strategy bookkeeping checked by the audit validator.

/// A cop sent toward `target`, expected there within `allotted` cop moves
/// counted from `issued` (the number of cop moves completed when sent).
struct CopAssignment {
  std::uint32_t cop = 0;
  Vertex from = 0;
  Vertex target = 0;
  std::uint64_t issued = 0;
  std::uint32_t allotted = 0;
  std::string team;
};

struct TeamRecord {
  std::string name;
  std::size_t size = 0;
};

struct RoundRecord {
  std::uint32_t index = 0;
  Vertex anchor = 0;
  Distance radius = 0;
  std::size_t uncovered = 0;  // |S_{i-1}|
  std::size_t sphere = 0;     // |S(v_i, r_i)|
  bool vulnerable = false;
  std::uint64_t started = 0;  // cop moves completed when the round began
};

struct StrategyAudit {
  std::size_t total_cops = 0;
  std::vector<TeamRecord> teams;
  std::vector<CopAssignment> assignments;
  std::vector<RoundRecord> rounds;
  std::vector<std::string> notes;
};

struct CopDecision {
  std::vector<Vertex> positions;
  bool resign = false;
  std::string reason;

  static CopDecision move(std::vector<Vertex> p) { return {std::move(p), false, {}}; }
  static CopDecision give_up(std::string why) { return {{}, true, std::move(why)}; }
};

class CopStrategy {
 public:
  virtual ~CopStrategy() = default;
  virtual std::string name() const = 0;
  /// Initial labeled cop positions.
  virtual std::vector<Vertex> place(const Graph& g, CounterRng& rng) = 0;
  /// Next labeled positions (same length as state.cops), or a resignation.
  virtual CopDecision act(const Graph& g, const GameState& state) = 0;
  virtual StrategyAudit audit() const { return {}; }
};

class RobberStrategy {
 public:
  virtual ~RobberStrategy() = default;
  virtual std::string name() const = 0;
  virtual Vertex place(const Graph& g, std::span<const Vertex> cops) = 0;
  virtual Vertex act(const Graph& g, const GameState& state) = 0;
};

// ---------------------------------------------------------------------------

enum class Actor { Cop, Robber };

struct MoveEvent {
  Actor actor = Actor::Cop;
  std::uint32_t id = 0;  // cop id; 0 for the robber
  Vertex from = 0;
  Vertex to = 0;
  std::uint64_t step = 0;
};

struct Trace {
  std::vector<Vertex> initial_cops;
  Vertex robber_start = 0;
  std::vector<MoveEvent> events;
};

enum class Winner { Cops, Robber };

struct GameResult {
  Winner winner = Winner::Robber;
  /// Cop moves until capture (0 if the robber started on a cop).
  std::uint64_t capture_time = 0;
  std::uint64_t horizon = 0;
  std::uint64_t cop_moves = 0;
  bool resigned = false;
  std::string resign_reason;
  std::size_t cop_count = 0;
  GameState final_state;
  std::optional<Trace> trace;
  StrategyAudit audit;

  bool captured() const { return winner == Winner::Cops; }
};

struct PlayOptions {
  /// Maximum number of cop moves; 0 means n^2.
  std::uint64_t horizon = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  bool record_trace = false;
};

/// Runs one game. Throws IllegalMove if a strategy breaks the rules.
GameResult play(const Graph& g, CopStrategy& cops, RobberStrategy& robber,
                const PlayOptions& options = {});

}  // namespace copnum
