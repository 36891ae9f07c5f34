#include "copnum/game.hpp"

#include <algorithm>
#include <set>

#include "copnum/errors.hpp"

namespace copnum {

std::vector<Vertex> GameState::cop_multiset() const {
  std::vector<Vertex> m = cops;
  std::sort(m.begin(), m.end());
  return m;
}

GameState new_game(const Graph& g, std::vector<Vertex> cops, Vertex robber) {
  if (g.vertex_count() == 0) throw InputError("cannot play on the empty graph");
  for (Vertex c : cops) require_vertex(g, c);
  require_vertex(g, robber);
  GameState s;
  s.cops = std::move(cops);
  s.robber = robber;
  return s;
}

bool is_capture(const GameState& state) {
  if (!state.robber) throw InputError("robber has not been placed");
  return std::find(state.cops.begin(), state.cops.end(), *state.robber) != state.cops.end();
}

bool is_step(const Graph& g, Vertex from, Vertex to) {
  return from == to || g.has_edge(from, to);
}

std::vector<GameState> legal_moves(const Graph& g, const GameState& state) {
  std::vector<GameState> out;
  if (state.turn == Turn::Robber) {
    if (!state.robber) throw InputError("robber has not been placed");
    const Vertex r = *state.robber;
    std::vector<Vertex> options{r};
    for (Vertex y : g.neighbors(r)) options.push_back(y);
    std::sort(options.begin(), options.end());
    for (Vertex y : options) {
      GameState next = state;
      next.robber = y;
      next.turn = Turn::Cops;
      ++next.step;
      out.push_back(std::move(next));
    }
    return out;
  }
  std::set<std::vector<Vertex>> seen;
  std::vector<Vertex> current = state.cop_multiset();
  std::vector<Vertex> pick(current.size());
  // Odometer over each cop's stay-or-step choices.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == current.size()) {
      std::vector<Vertex> m = pick;
      std::sort(m.begin(), m.end());
      seen.insert(std::move(m));
      return;
    }
    pick[i] = current[i];
    self(self, i + 1);
    for (Vertex y : g.neighbors(current[i])) {
      pick[i] = y;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  for (const auto& m : seen) {
    GameState next = state;
    next.cops = m;
    next.turn = Turn::Robber;
    ++next.step;
    out.push_back(std::move(next));
  }
  return out;
}

void apply_cop_move(const Graph& g, GameState& state, std::span<const Vertex> next) {
  if (state.turn != Turn::Cops) throw IllegalMove("cops moved out of turn");
  if (next.size() != state.cops.size()) {
    throw IllegalMove("cop move lists " + std::to_string(next.size()) + " positions for " +
                      std::to_string(state.cops.size()) + " cops");
  }
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (!g.contains(next[i]) || !is_step(g, state.cops[i], next[i])) {
      throw IllegalMove("cop " + std::to_string(i) + " cannot move from " +
                        std::to_string(state.cops[i]) + " to " + std::to_string(next[i]));
    }
  }
  state.cops.assign(next.begin(), next.end());
  state.turn = Turn::Robber;
  ++state.step;
}

void apply_robber_move(const Graph& g, GameState& state, Vertex next) {
  if (state.turn != Turn::Robber) throw IllegalMove("robber moved out of turn");
  if (!state.robber) throw InputError("robber has not been placed");
  if (!g.contains(next) || !is_step(g, *state.robber, next)) {
    throw IllegalMove("robber cannot move from " + std::to_string(*state.robber) + " to " +
                      std::to_string(next));
  }
  state.robber = next;
  state.turn = Turn::Cops;
  ++state.step;
}

GameResult play(const Graph& g, CopStrategy& cops, RobberStrategy& robber,
                const PlayOptions& options) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InputError("cannot play on the empty graph");
  CounterRng rng(options.seed, options.stream);
  std::vector<Vertex> placement = cops.place(g, rng);
  for (Vertex c : placement) {
    if (!g.contains(c)) throw IllegalMove(cops.name() + " placed a cop outside the graph");
  }
  const Vertex start = robber.place(g, placement);
  if (!g.contains(start)) throw IllegalMove(robber.name() + " chose a vertex outside the graph");

  GameResult result;
  result.horizon = options.horizon ? options.horizon : static_cast<std::uint64_t>(n) * n;
  result.cop_count = placement.size();
  GameState state = new_game(g, placement, start);
  if (options.record_trace) {
    result.trace.emplace();
    result.trace->initial_cops = placement;
    result.trace->robber_start = start;
  }

  auto finish = [&](Winner w) {
    result.winner = w;
    result.cop_moves = state.cop_moves();
    if (w == Winner::Cops) result.capture_time = state.cop_moves();
    result.final_state = state;
    result.audit = cops.audit();
    return result;
  };

  if (!placement.empty() && is_capture(state)) return finish(Winner::Cops);

  while (state.cop_moves() < result.horizon) {
    CopDecision decision = cops.act(g, state);
    if (decision.resign) {
      result.resigned = true;
      result.resign_reason = decision.reason;
      return finish(Winner::Robber);
    }
    const std::vector<Vertex> before = state.cops;
    try {
      apply_cop_move(g, state, decision.positions);
    } catch (const IllegalMove& e) {
      throw IllegalMove(cops.name() + ": " + e.what());
    }
    if (result.trace) {
      for (std::uint32_t i = 0; i < before.size(); ++i) {
        if (before[i] != state.cops[i]) {
          result.trace->events.push_back({Actor::Cop, i, before[i], state.cops[i], state.step - 1});
        }
      }
    }
    if (is_capture(state)) return finish(Winner::Cops);

    const Vertex from = *state.robber;
    const Vertex to = robber.act(g, state);
    try {
      apply_robber_move(g, state, to);
    } catch (const IllegalMove& e) {
      throw IllegalMove(robber.name() + ": " + e.what());
    }
    if (result.trace) result.trace->events.push_back({Actor::Robber, 0, from, to, state.step - 1});
    if (is_capture(state)) return finish(Winner::Cops);
  }
  return finish(Winner::Robber);
}

}  // namespace copnum
