#include "copnum/trace.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "copnum/errors.hpp"

namespace copnum {

using nlohmann::json;

namespace {

json audit_to_json(const StrategyAudit& a) {
  json teams = json::array();
  for (const auto& t : a.teams) teams.push_back({{"name", t.name}, {"size", t.size}});
  json assignments = json::array();
  for (const auto& x : a.assignments) {
    assignments.push_back({{"cop", x.cop}, {"from", x.from}, {"target", x.target},
                           {"issued", x.issued}, {"allotted", x.allotted}, {"team", x.team}});
  }
  json rounds = json::array();
  for (const auto& r : a.rounds) {
    rounds.push_back({{"index", r.index}, {"anchor", r.anchor}, {"radius", r.radius},
                      {"uncovered", r.uncovered}, {"sphere", r.sphere},
                      {"vulnerable", r.vulnerable}, {"started", r.started}});
  }
  return {{"type", "audit"}, {"total_cops", a.total_cops}, {"teams", teams},
          {"assignments", assignments}, {"rounds", rounds}, {"notes", a.notes}};
}

StrategyAudit audit_from_json(const json& j) {
  StrategyAudit a;
  a.total_cops = j.at("total_cops").get<std::size_t>();
  for (const auto& t : j.at("teams")) a.teams.push_back({t.at("name"), t.at("size")});
  for (const auto& x : j.at("assignments")) {
    a.assignments.push_back({x.at("cop"), x.at("from"), x.at("target"), x.at("issued"),
                             x.at("allotted"), x.at("team")});
  }
  for (const auto& r : j.at("rounds")) {
    a.rounds.push_back({r.at("index"), r.at("anchor"), r.at("radius"), r.at("uncovered"),
                        r.at("sphere"), r.at("vulnerable"), r.at("started")});
  }
  a.notes = j.at("notes").get<std::vector<std::string>>();
  return a;
}

}  // namespace

void write_trace_jsonl(std::ostream& out, const GameResult& result) {
  if (!result.trace) throw InputError("game was played without trace recording");
  const Trace& t = *result.trace;
  out << json{{"type", "placement"}, {"cops", t.initial_cops}, {"robber", t.robber_start}}.dump()
      << '\n';
  for (const MoveEvent& e : t.events) {
    json line{{"actor", e.actor == Actor::Cop ? "cop" : "robber"},
              {"from", e.from},
              {"to", e.to},
              {"step", e.step}};
    if (e.actor == Actor::Cop) line["id"] = e.id;
    out << line.dump() << '\n';
  }
  out << audit_to_json(result.audit).dump() << '\n';
  out << json{{"type", "result"},
              {"winner", result.captured() ? "cops" : "robber"},
              {"capture_time", result.capture_time},
              {"cop_moves", result.cop_moves},
              {"horizon", result.horizon},
              {"cop_count", result.cop_count},
              {"resigned", result.resigned},
              {"resign_reason", result.resign_reason}}
             .dump()
      << '\n';
}

std::string trace_to_jsonl(const GameResult& result) {
  std::ostringstream os;
  write_trace_jsonl(os, result);
  return os.str();
}

ParsedTrace read_trace_jsonl(std::istream& in) {
  ParsedTrace p;
  std::string line;
  bool placed = false;
  bool finished = false;
  std::size_t lineno = 0;
  try {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      const json j = json::parse(line);
      if (j.contains("actor")) {
        MoveEvent e;
        e.actor = j.at("actor") == "cop" ? Actor::Cop : Actor::Robber;
        e.id = e.actor == Actor::Cop ? j.at("id").get<std::uint32_t>() : 0;
        e.from = j.at("from");
        e.to = j.at("to");
        e.step = j.at("step");
        p.trace.events.push_back(e);
      } else if (j.at("type") == "placement") {
        p.trace.initial_cops = j.at("cops").get<std::vector<Vertex>>();
        p.trace.robber_start = j.at("robber");
        placed = true;
      } else if (j.at("type") == "audit") {
        p.audit = audit_from_json(j);
      } else if (j.at("type") == "meta") {
        p.meta = line;
      } else if (j.at("type") == "result") {
        p.winner = j.at("winner") == "cops" ? Winner::Cops : Winner::Robber;
        p.capture_time = j.at("capture_time");
        p.cop_moves = j.at("cop_moves");
        p.cop_count = j.at("cop_count");
        finished = true;
      } else {
        throw InputError("unknown trace record on line " + std::to_string(lineno));
      }
    }
  } catch (const json::exception& e) {
    throw InputError("malformed trace line " + std::to_string(lineno) + ": " + e.what());
  }
  if (!placed || !finished) throw InputError("trace lacks a placement or result record");
  return p;
}

ValidationReport validate_replay(const Graph& g, const Trace& trace, Winner winner,
                                 std::uint64_t capture_time, std::uint64_t cop_moves) {
  ValidationReport rep;
  auto err = [&](const std::string& s) {
    if (rep.errors.size() < 50) rep.errors.push_back(s);
  };
  std::vector<Vertex> cops = trace.initial_cops;
  Vertex robber = trace.robber_start;
  for (Vertex c : cops) {
    if (!g.contains(c)) err("cop placed outside the graph");
  }
  if (!g.contains(robber)) err("robber placed outside the graph");
  if (!rep.ok()) return rep;

  auto caught = [&] { return std::find(cops.begin(), cops.end(), robber) != cops.end(); };
  std::optional<std::uint64_t> captured_at;  // cop moves completed at first capture
  if (caught()) captured_at = 0;

  std::uint64_t robber_moves = 0;
  std::size_t i = 0;
  const auto& ev = trace.events;
  std::uint64_t last_step = 0;
  bool any = false;
  while (i < ev.size()) {
    const std::uint64_t step = ev[i].step;
    if (any && step <= last_step) {
      err("event steps are not increasing at step " + std::to_string(step));
      return rep;
    }
    if (captured_at) {
      err("moves recorded after the capture");
      return rep;
    }
    any = true;
    last_step = step;
    if (step % 2 == 0) {
      // Compound cop move: cops whose id is not listed stay put.
      std::vector<char> moved(cops.size(), 0);
      for (; i < ev.size() && ev[i].step == step; ++i) {
        const MoveEvent& e = ev[i];
        if (e.actor != Actor::Cop) {
          err("robber moved at even step " + std::to_string(step));
          continue;
        }
        if (e.id >= cops.size() || moved[e.id]) {
          err("bad or repeated cop id at step " + std::to_string(step));
          continue;
        }
        moved[e.id] = 1;
        if (cops[e.id] != e.from) err("cop " + std::to_string(e.id) + " is not at its recorded origin");
        if (!g.contains(e.to) || !is_step(g, e.from, e.to)) {
          err("cop " + std::to_string(e.id) + " jumps at step " + std::to_string(step));
        }
        if (g.contains(e.to)) cops[e.id] = e.to;
      }
      // Cop move number step/2 + 1 must come right after robber move step/2.
      if (step / 2 != robber_moves) err("cop move at step " + std::to_string(step) + " is out of sequence");
      if (caught()) captured_at = step / 2 + 1;
    } else {
      const MoveEvent& e = ev[i++];
      if (e.actor != Actor::Robber) {
        err("cop moved at odd step " + std::to_string(step));
        continue;
      }
      if (i < ev.size() && ev[i].step == step) err("two robber moves at step " + std::to_string(step));
      if (step != 2 * robber_moves + 1) err("robber skipped a turn before step " + std::to_string(step));
      ++robber_moves;
      if (e.from != robber) err("robber is not at its recorded origin at step " + std::to_string(step));
      if (!g.contains(e.to) || !is_step(g, e.from, e.to)) {
        err("robber jumps at step " + std::to_string(step));
      }
      if (g.contains(e.to)) robber = e.to;
      if (caught()) captured_at = (step + 1) / 2;
    }
  }

  if (winner == Winner::Cops) {
    // A capture by a cop move that moved nobody is impossible, so a capture
    // without trailing events can only be the initial placement or the last batch.
    if (!captured_at) {
      err("outcome claims a capture that the moves do not produce");
    } else if (*captured_at != capture_time) {
      err("capture happens after " + std::to_string(*captured_at) + " cop moves, outcome says " +
          std::to_string(capture_time));
    }
  } else {
    if (captured_at) err("robber is caught but the outcome says it survived");
    if (robber_moves != cop_moves) {
      err("robber moved " + std::to_string(robber_moves) + " times in " + std::to_string(cop_moves) +
          " rounds");
    }
  }
  return rep;
}

ValidationReport validate_replay(const Graph& g, const GameResult& result) {
  if (!result.trace) return {{"no trace recorded"}};
  return validate_replay(g, *result.trace, result.winner, result.capture_time, result.cop_moves);
}

ValidationReport validate_audit(const Graph& g, const Trace& trace, const StrategyAudit& audit,
                                std::uint64_t cop_moves) {
  ValidationReport rep;
  auto err = [&](const std::string& s) {
    if (rep.errors.size() < 50) rep.errors.push_back(s);
  };
  std::size_t team_total = 0;
  for (const auto& t : audit.teams) team_total += t.size;
  if (team_total != audit.total_cops) {
    err("team sizes add up to " + std::to_string(team_total) + ", audit reports " +
        std::to_string(audit.total_cops));
  }
  if (audit.total_cops != trace.initial_cops.size()) {
    err("audit reports " + std::to_string(audit.total_cops) + " cops, " +
        std::to_string(trace.initial_cops.size()) + " were placed");
  }

  // Per-cop history: (cop moves completed, position) after each change.
  const std::size_t k = trace.initial_cops.size();
  std::vector<std::vector<std::pair<std::uint64_t, Vertex>>> history(k);
  for (std::size_t c = 0; c < k; ++c) history[c].push_back({0, trace.initial_cops[c]});
  for (const MoveEvent& e : trace.events) {
    if (e.actor == Actor::Cop && e.id < k) history[e.id].push_back({e.step / 2 + 1, e.to});
  }
  auto position_at = [&](std::uint32_t cop, std::uint64_t t) {
    const auto& h = history[cop];
    auto it = std::upper_bound(h.begin(), h.end(), std::make_pair(t, std::numeric_limits<Vertex>::max()));
    return std::prev(it)->second;
  };

  // Next assignment index for the same cop, to detect superseded orders.
  std::map<std::uint32_t, std::vector<std::size_t>> by_cop;
  for (std::size_t a = 0; a < audit.assignments.size(); ++a) by_cop[audit.assignments[a].cop].push_back(a);

  // A cop that leaves its route to step onto the robber ends the game, so
  // its assignment is excused on that final move.
  Vertex robber_end = trace.robber_start;
  for (const MoveEvent& e : trace.events) {
    if (e.actor == Actor::Robber) robber_end = e.to;
  }
  auto captured_by = [&](std::uint32_t cop) {
    return cop_moves > 0 && position_at(cop, cop_moves) == robber_end;
  };

  Bfs bfs(g);
  for (std::size_t a = 0; a < audit.assignments.size(); ++a) {
    const CopAssignment& x = audit.assignments[a];
    const std::string tag = "assignment " + std::to_string(a) + " (cop " + std::to_string(x.cop) +
                            ", team " + x.team + ")";
    if (x.cop >= k || !g.contains(x.target) || !g.contains(x.from)) {
      err(tag + " refers to a missing cop or vertex");
      continue;
    }
    if (position_at(x.cop, x.issued) != x.from) err(tag + " starts away from the cop's position");
    bfs.run_from(x.from, static_cast<Distance>(x.allotted));
    if (!bfs.reached(x.target)) err(tag + " targets a vertex farther than its allotted moves");

    const std::uint64_t deadline = x.issued + x.allotted;
    bool superseded = false;
    for (std::size_t b : by_cop[x.cop]) {
      const auto& y = audit.assignments[b];
      if (b != a && y.issued >= x.issued && y.issued < deadline && (y.issued > x.issued || b > a)) {
        superseded = true;
      }
    }
    bool arrived = position_at(x.cop, x.issued) == x.target;
    for (const auto& [t, pos] : history[x.cop]) {
      if (t > x.issued && t <= deadline && pos == x.target) arrived = true;
    }
    const bool excused = deadline == cop_moves && captured_by(x.cop);
    if (!arrived && !superseded && !excused && cop_moves >= deadline) {
      err(tag + " misses its deadline of " + std::to_string(deadline) + " cop moves");
    }
  }
  return rep;
}

ValidationReport validate_audit(const Graph& g, const GameResult& result) {
  if (!result.trace) return {{"no trace recorded"}};
  return validate_audit(g, *result.trace, result.audit, result.cop_moves);
}

}  // namespace copnum
