#include "copnum/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <tuple>

#include "copnum/errors.hpp"
#include "copnum/expansion.hpp"
#include "copnum/matching.hpp"
#include "fleet.hpp"

namespace copnum {

// ---------------------------------------------------------------------------
// Robbers

TwoNearest two_nearest_cops(const Graph& g, std::span<const Vertex> cops) {
  const std::size_t n = g.vertex_count();
  TwoNearest out;
  out.first.assign(n, kNoDepthLimit);
  out.second.assign(n, kNoDepthLimit);
  // Each vertex accepts the first two distinct cops that reach it.
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> first_src(n, kNone);
  struct Item {
    Vertex v;
    std::uint32_t src;
  };
  std::deque<Item> queue;
  auto offer = [&](Vertex v, std::uint32_t src, Distance dist) {
    if (first_src[v] == kNone) {
      first_src[v] = src;
      out.first[v] = dist;
      queue.push_back({v, src});
    } else if (first_src[v] != src && out.second[v] == kNoDepthLimit) {
      out.second[v] = dist;
      queue.push_back({v, src});
    }
  };
  for (std::uint32_t c = 0; c < cops.size(); ++c) offer(cops[c], c, 0);
  while (!queue.empty()) {
    const Item it = queue.front();
    queue.pop_front();
    const Distance dist = (first_src[it.v] == it.src ? out.first[it.v] : out.second[it.v]) + 1;
    for (Vertex y : g.neighbors(it.v)) offer(y, it.src, dist);
  }
  return out;
}

namespace {

// Best vertex among candidates by (nearest cop, second nearest cop, -id).
Vertex pick_far(const TwoNearest& tn, std::span<const Vertex> candidates) {
  Vertex best = candidates.front();
  for (Vertex x : candidates) {
    const auto key = std::make_tuple(tn.first[x], tn.second[x]);
    const auto cur = std::make_tuple(tn.first[best], tn.second[best]);
    if (key > cur || (key == cur && x < best)) best = x;
  }
  return best;
}

}  // namespace

Vertex GreedyRobber::place(const Graph& g, std::span<const Vertex> cops) {
  if (g.vertex_count() == 0) throw InputError("cannot place a robber on the empty graph");
  if (cops.empty()) return 0;
  const TwoNearest tn = two_nearest_cops(g, cops);
  std::vector<Vertex> all(g.vertex_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i);
  return pick_far(tn, all);
}

Vertex GreedyRobber::act(const Graph& g, const GameState& state) {
  const Vertex here = *state.robber;
  if (state.cops.empty()) return here;
  const TwoNearest tn = two_nearest_cops(g, state.cops);
  std::vector<Vertex> options{here};
  for (Vertex y : g.neighbors(here)) options.push_back(y);
  return pick_far(tn, options);
}

Vertex StationaryRobber::place(const Graph& g, std::span<const Vertex> cops) {
  if (start_) {
    require_vertex(g, *start_);
    return *start_;
  }
  return GreedyRobber().place(g, cops);
}

Vertex StationaryRobber::act(const Graph&, const GameState& state) { return *state.robber; }

Vertex TableRobber::place(const Graph& g, std::span<const Vertex> cops) {
  std::vector<Vertex> sorted(cops.begin(), cops.end());
  std::sort(sorted.begin(), sorted.end());
  // Larger value is better for the robber; kRobberWins is the maximum.
  Vertex best = 0;
  std::uint16_t best_value = 0;
  for (Vertex r = 0; r < g.vertex_count(); ++r) {
    const std::uint16_t v = table_->value(sorted, r, Turn::Cops);
    if (r == 0 || v > best_value) {
      best = r;
      best_value = v;
    }
  }
  return best;
}

Vertex TableRobber::act(const Graph& g, const GameState& state) {
  const std::vector<Vertex> sorted = state.cop_multiset();
  const Vertex here = *state.robber;
  std::vector<Vertex> options{here};
  for (Vertex y : g.neighbors(here)) options.push_back(y);
  std::sort(options.begin(), options.end());
  Vertex best = options.front();
  std::uint16_t best_value = 0;
  bool first = true;
  for (Vertex y : options) {
    const std::uint16_t v = table_->value(sorted, y, Turn::Cops);
    if (first || v > best_value) {
      best = y;
      best_value = v;
      first = false;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Baseline cops

namespace {

std::vector<Vertex> pursue(const Graph& g, const GameState& state) {
  Bfs bfs(g);
  bfs.run_from(*state.robber);
  std::vector<Vertex> next = state.cops;
  for (auto& c : next) {
    if (bfs.reached(c) && c != *state.robber) c = bfs.parent(c);
  }
  return next;
}

StrategyAudit single_team_audit(const std::string& name, std::size_t k) {
  StrategyAudit a;
  a.total_cops = k;
  a.teams.push_back({name, k});
  return a;
}

}  // namespace

std::vector<Vertex> GreedyCop::place(const Graph& g, CounterRng&) {
  for (Vertex c : placement_) require_vertex(g, c);
  return placement_;
}

CopDecision GreedyCop::act(const Graph& g, const GameState& state) {
  return CopDecision::move(pursue(g, state));
}

StrategyAudit GreedyCop::audit() const { return single_team_audit("pursuit", placement_.size()); }

std::vector<Vertex> TableCop::place(const Graph& g, CounterRng&) {
  if (g.vertex_count() != table_->vertex_count()) throw InputError("table solved for another graph");
  cops_ = table_->cops();
  std::vector<Vertex> best;
  try {
    best = optimal_placement(*table_);
  } catch (const InputError&) {
    best.assign(table_->cops(), 0);
  }
  return best;
}

CopDecision TableCop::act(const Graph& g, const GameState& state) {
  const std::vector<Vertex> sorted = state.cop_multiset();
  const Vertex r = *state.robber;
  if (table_->value(sorted, r, Turn::Cops) == PositionTable::kRobberWins) {
    return CopDecision::move(pursue(g, state));
  }
  std::vector<Vertex> target;
  std::uint16_t best = PositionTable::kRobberWins;
  for (const auto& m : cop_successors(g, sorted)) {
    const std::uint16_t v = table_->value(m, r, Turn::Robber);
    if (v < best) {
      best = v;
      target = m;
    }
  }
  // Label the chosen multiset: match cops to target entries one step away.
  Bipartite b;
  b.right_count = state.cops.size();
  b.adjacency.resize(target.size());
  for (std::uint32_t i = 0; i < target.size(); ++i) {
    for (std::uint32_t c = 0; c < state.cops.size(); ++c) {
      if (is_step(g, state.cops[c], target[i])) b.adjacency[i].push_back(c);
    }
  }
  const Matching m = max_matching(b);
  std::vector<Vertex> next = state.cops;
  for (std::uint32_t i = 0; i < target.size(); ++i) next[m.left_to_right[i]] = target[i];
  return CopDecision::move(std::move(next));
}

StrategyAudit TableCop::audit() const { return single_team_audit("optimal", cops_); }

// ---------------------------------------------------------------------------
// Dense regime

Distance dense_radius(double d, std::size_t n) {
  if (!(d > 1.0)) throw InputError("dense radius needs d > 1");
  const double root = std::sqrt(static_cast<double>(n));
  Distance r = 0;
  while (std::pow(d, r + 1) < root) ++r;
  return r;
}

std::string to_string(DenseCase c) {
  switch (c) {
    case DenseCase::Direct: return "direct";
    case DenseCase::Spheres: return "spheres";
    case DenseCase::Adjacent: return "adjacent";
  }
  return "unknown";
}

struct DenseStrategy::Impl {
  Impl(const Graph& graph, DenseStrategyConfig c) : g(graph), cfg(c), fleet(graph) {}

  const Graph& g;
  DenseStrategyConfig cfg;
  double d = 0.0;
  detail::Fleet fleet;
  StrategyAudit audit;
  std::vector<std::uint32_t> team1, team2, aux, cleanup;
  std::vector<char> can_capture;

  bool started = false;
  Vertex v = 0;
  std::vector<Distance> dist_v;
  VertexSet uncovered;  // sphere case: S(v, r) without a team-1 cop
  VertexSet team2_targets;
  bool team2_released = false;
  bool cleanup_launched = false;
};

DenseStrategy::DenseStrategy(const Graph& g, DenseStrategyConfig cfg)
    : impl_(std::make_unique<Impl>(g, cfg)) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw InputError("dense strategy needs at least two vertices");
  if (!(cfg.C > 0.0)) throw InputError("dense strategy constant C must be positive");
  impl_->d = cfg.d > 0.0 ? cfg.d : g.average_degree();
  r_ = dense_radius(impl_->d, n);
  const double root = std::sqrt(static_cast<double>(n));
  const double reach = std::pow(impl_->d, r_ + 1);
  if (reach >= (1.0 - cfg.tol) * root * std::log(static_cast<double>(n))) {
    case_ = DenseCase::Direct;
  } else if (r_ == 0) {
    case_ = DenseCase::Adjacent;
  } else {
    case_ = DenseCase::Spheres;
  }
}

DenseStrategy::~DenseStrategy() = default;

std::vector<Vertex> DenseStrategy::place(const Graph& g, CounterRng& rng) {
  Impl& s = *impl_;
  const std::size_t n = g.vertex_count();
  const double p = std::min(1.0, s.cfg.C / std::sqrt(static_cast<double>(n)));
  std::vector<Vertex> positions;
  s.audit = {};
  auto add_team = [&](const std::string& name, std::uint64_t stream, std::vector<std::uint32_t>& ids) {
    CounterRng team_rng = rng.split(stream);
    const std::vector<Vertex> members = detail::sample_team(n, p, team_rng);
    ids.clear();
    for (Vertex x : members) {
      ids.push_back(static_cast<std::uint32_t>(positions.size()));
      positions.push_back(x);
    }
    s.audit.teams.push_back({name, members.size()});
  };
  add_team("team1", 1, s.team1);
  if (case_ != DenseCase::Direct) add_team("team2", 2, s.team2);
  if (case_ == DenseCase::Spheres) {
    add_team("auxiliary", 3, s.aux);
    add_team("cleanup", 4, s.cleanup);
  }
  s.audit.total_cops = positions.size();
  s.fleet.init(positions);
  s.can_capture.assign(positions.size(), 1);
  s.started = false;
  s.team2_released = false;
  s.cleanup_launched = false;
  return positions;
}

CopDecision DenseStrategy::act(const Graph& g, const GameState& state) {
  Impl& s = *impl_;
  const Vertex robber = *state.robber;
  const std::uint64_t now = state.cop_moves();
  const Distance half = r_ / 2;

  if (!s.started) {
    s.started = true;
    s.v = robber;
    s.dist_v = bfs_distances(g, std::span<const Vertex>(&s.v, 1));
    if (case_ == DenseCase::Direct) {
      const VertexSet dest = ball(g, s.v, r_);
      const auto res = detail::dispatch(s.fleet, g, dest, s.team1, r_ + 1, false, now, "team1", s.audit);
      if (!res.feasible) {
        s.audit.notes.push_back("team1 has no matching onto N(v,r)");
        return CopDecision::give_up("team 1 cannot be matched onto the ball around the robber");
      }
    } else if (case_ == DenseCase::Adjacent) {
      std::vector<char> dominated(g.vertex_count(), 0);
      for (std::uint32_t c : s.team1) {
        const Vertex x = s.fleet.position(c);
        dominated[x] = 1;
        for (Vertex y : g.neighbors(x)) dominated[y] = 1;
      }
      VertexSet dest{s.v};
      for (Vertex y : g.neighbors(s.v)) {
        if (!dominated[y]) dest.push_back(y);
      }
      normalize(dest);
      s.audit.notes.push_back("undominated neighbours: " + std::to_string(dest.size() - 1));
      const auto res = detail::dispatch(s.fleet, g, dest, s.team2, 2, false, now, "team2", s.audit);
      if (!res.feasible) {
        s.audit.notes.push_back("team2 has no matching onto the undominated neighbourhood");
        return CopDecision::give_up("team 2 cannot be matched onto the undominated neighbourhood");
      }
    } else {
      const SphereFamily fam = build_disjoint_sphere_family(g, s.v, r_, s.d);
      std::vector<std::uint32_t> owner(g.vertex_count(), kUnmatched);
      for (std::size_t i = 0; i < fam.members.size(); ++i) {
        for (Vertex x : fam.family[i]) owner[x] = static_cast<std::uint32_t>(i);
      }
      std::vector<std::uint32_t> chosen(fam.members.size(), kUnmatched);
      for (std::uint32_t c : s.team1) {  // ascending cop id
        const std::uint32_t i = owner[s.fleet.position(c)];
        if (i != kUnmatched && chosen[i] == kUnmatched) chosen[i] = c;
      }
      for (std::size_t i = 0; i < fam.members.size(); ++i) {
        if (chosen[i] == kUnmatched ||
            !s.fleet.send(chosen[i], fam.members[i], r_ + 1, now, "team1", s.audit)) {
          s.uncovered.push_back(fam.members[i]);
        }
      }
      s.audit.notes.push_back("sphere vertices without a team1 cop: " + std::to_string(s.uncovered.size()) +
                              " of " + std::to_string(fam.members.size()));
      const VertexSet dest = ball(g, s.v, r_);
      const auto res = detail::dispatch(s.fleet, g, dest, s.aux, r_ + 2, false, now, "auxiliary", s.audit);
      if (!res.feasible) {
        s.audit.notes.push_back("auxiliary team has no matching onto N(v,r)");
        return CopDecision::give_up("auxiliary team cannot be matched onto the ball around the robber");
      }
    }
  }

  if (case_ == DenseCase::Spheres) {
    if (!s.team2_released && s.dist_v[robber] == half) {
      s.team2_released = true;
      const std::vector<Distance> dz = bfs_distances(g, std::span<const Vertex>(&robber, 1));
      VertexSet reachable;
      for (Vertex x : s.uncovered) {
        if (dz[x] == r_ - half) reachable.push_back(x);
      }
      VertexSet targets;
      if (!reachable.empty()) {
        Bfs bfs(g);
        for (Vertex x : reachable) {
          bfs.run_from(x, half + 1);
          targets.insert(targets.end(), bfs.layer(half + 1).begin(), bfs.layer(half + 1).end());
        }
        normalize(targets);
      }
      s.audit.notes.push_back("team2 released with " + std::to_string(targets.size()) + " targets");
      if (!targets.empty()) {
        const auto res = detail::dispatch(s.fleet, g, targets, s.team2, r_ + 2, false, now, "team2", s.audit);
        if (!res.feasible) {
          s.audit.notes.push_back("team2 has no matching onto its spheres");
          return CopDecision::give_up("team 2 cannot be matched onto the spheres around the uncovered vertices");
        }
      }
      s.team2_targets = targets;
    }
    if (!s.cleanup_launched && now == static_cast<std::uint64_t>(r_)) {
      s.cleanup_launched = true;
      Bfs bfs(g);
      bfs.run_from(robber, half + 1);
      VertexSet dest;
      for (Vertex x : bfs.visited()) {  // nearest layers first
        if (!std::binary_search(s.team2_targets.begin(), s.team2_targets.end(), x)) dest.push_back(x);
      }
      if (dest.size() > s.cleanup.size()) dest.resize(s.cleanup.size());
      normalize(dest);
      if (!dest.empty()) detail::dispatch(s.fleet, g, dest, s.cleanup, -1, true, now, "cleanup", s.audit);
    }
  }

  bool moved = false;
  bool capturing = false;
  std::vector<Vertex> next = s.fleet.advance(state, s.can_capture, moved, capturing);
  if (!moved && !capturing) {
    const bool pending = case_ == DenseCase::Spheres &&
                         (!s.cleanup_launched || (!s.team2_released && s.dist_v[robber] < half));
    if (!pending) return CopDecision::give_up("all cops idle and none can capture");
  }
  if (now > 2 * g.vertex_count() + 8) return CopDecision::give_up("plan overran its time bound");
  return CopDecision::move(std::move(next));
}

StrategyAudit DenseStrategy::audit() const { return impl_->audit; }

}  // namespace copnum
