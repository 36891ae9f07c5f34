#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "copnum/game.hpp"

namespace copnum {

/// JSON-lines game log: a "placement" line, one line per individual move
/// (actor, id, from, to, step; cops only when they actually move, the robber
/// at every odd step), then an "audit" line and a "result" line.
void write_trace_jsonl(std::ostream& out, const GameResult& result);
std::string trace_to_jsonl(const GameResult& result);

struct ParsedTrace {
  Trace trace;
  StrategyAudit audit;
  Winner winner = Winner::Robber;
  std::uint64_t capture_time = 0;
  std::uint64_t cop_moves = 0;
  std::size_t cop_count = 0;
  /// Raw text of a {"type":"meta",...} line, if the file has one.
  std::string meta;
};

/// Inverse of write_trace_jsonl. Throws InputError on malformed input.
ParsedTrace read_trace_jsonl(std::istream& in);

struct ValidationReport {
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
};

/// Replays the moves: every move is a step of the graph, cops move at even
/// steps and the robber at every odd step, and the first capture happens
/// exactly when (and only if) the outcome says so.
ValidationReport validate_replay(const Graph& g, const Trace& trace, Winner winner,
                                 std::uint64_t capture_time, std::uint64_t cop_moves);
ValidationReport validate_replay(const Graph& g, const GameResult& result);

/// Checks the strategy's own bookkeeping against the moves: team sizes add up
/// to the cops placed, every assignment is reachable in its allotted moves,
/// and each assigned cop reaches its target on time unless the assignment was
/// replaced first or the game ended before the deadline.
ValidationReport validate_audit(const Graph& g, const Trace& trace, const StrategyAudit& audit,
                                std::uint64_t cop_moves);
ValidationReport validate_audit(const Graph& g, const GameResult& result);

}  // namespace copnum
