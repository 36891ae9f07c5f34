#include <algorithm>
#include <cmath>

#include "copnum/errors.hpp"
#include "copnum/expansion.hpp"
#include "copnum/strategies.hpp"
#include "fleet.hpp"

namespace copnum {

double RadiusSchedule::probability(std::size_t i) const {
  if (i == 0 || i > team_sizes.size()) throw InputError("team index out of range");
  return std::min(1.0, team_sizes[i - 1] / static_cast<double>(n));
}

RadiusSchedule radius_schedule(double d, std::size_t n, double eps0, double F, double C) {
  if (!(d >= 2.0)) throw InputError("radius schedule needs d >= 2");
  if (n < 2) throw InputError("radius schedule needs n >= 2");
  if (!(eps0 > 0.0 && eps0 <= 1.0)) throw InputError("eps0 must lie in (0, 1]");
  if (!(F > 0.0)) throw InputError("F must be positive");
  if (!(C > 0.0)) throw InputError("C must be positive");
  RadiusSchedule s;
  s.d = d;
  s.n = n;
  s.eps0 = eps0;
  s.F = F;
  s.C = C;
  const double nn = static_cast<double>(n);
  const double loglog = std::log(std::log(nn));
  s.teams = loglog > 0.0 ? static_cast<std::size_t>(std::ceil(F * loglog)) : 1;
  s.teams = std::max<std::size_t>(s.teams, 1);

  // Largest integer x with d^x <= bound.
  auto floor_log = [&](double bound) {
    Distance x = 0;
    if (bound < 1.0) {
      while (std::pow(d, x) > bound) --x;
      return x;
    }
    while (std::pow(d, x + 1) <= bound) ++x;
    return x;
  };
  const Distance r1 = floor_log(std::pow(eps0 * nn, 0.25));
  s.radii.push_back(r1);
  const double root = std::sqrt(eps0 * nn);
  for (std::size_t i = 2; i <= s.teams + 1; ++i) {
    const Distance total = floor_log(root * std::exp(2.0 * static_cast<double>(i - 1)));
    const Distance ri = total - s.radii.back();
    if (ri < 0) {
      throw InputError("no nonnegative r_" + std::to_string(i) + " fits the schedule band");
    }
    s.radii.push_back(ri);
  }
  for (std::size_t i = 1; i <= s.teams; ++i) {
    s.team_sizes.push_back(i == s.teams ? std::sqrt(nn)
                                        : C * std::exp(-static_cast<double>(i)) * std::sqrt(nn));
  }
  return s;
}

bool is_vulnerable(std::size_t uncovered, std::size_t sphere, std::size_t round) {
  if (round == 0) throw InputError("rounds are numbered from 1");
  const double allowed = std::floor(std::exp(-5.0 * static_cast<double>(round - 1)) *
                                    static_cast<double>(sphere));
  return static_cast<double>(uncovered) <= allowed;
}

struct SparseStrategy::Impl {
  Impl(const Graph& graph, SparseStrategyConfig c) : g(graph), cfg(std::move(c)), fleet(graph) {}

  void start_round(Vertex anchor, std::uint64_t now);

  const Graph& g;
  SparseStrategyConfig cfg;
  double d = 0.0;
  std::size_t cleanup_size = 0;
  detail::Fleet fleet;
  StrategyAudit audit;
  std::vector<std::vector<std::uint32_t>> teams;
  std::vector<std::uint32_t> stationed;
  std::vector<std::uint32_t> cleanup;
  std::vector<char> can_capture;
  std::vector<char> in_x;

  std::size_t round = 0;
  Distance radius = 0;
  std::uint64_t round_start = 0;
  std::vector<Distance> round_dist;
  VertexSet protected_prev;
  std::optional<Vertex> last_robber;
};

void SparseStrategy::Impl::start_round(Vertex anchor, std::uint64_t now) {
  ++round;
  const std::size_t i = round;
  const RadiusSchedule& sch = cfg.schedule;
  radius = sch.r(i);
  round_start = now;
  Bfs bfs(g);
  bfs.run_from(anchor, radius);
  round_dist = bfs_distances(g, std::span<const Vertex>(&anchor, 1), radius);

  VertexSet sphere(bfs.layer(radius).begin(), bfs.layer(radius).end());
  std::sort(sphere.begin(), sphere.end());
  VertexSet open;
  for (Vertex x : sphere) {
    if (!in_x[x] && !std::binary_search(protected_prev.begin(), protected_prev.end(), x)) open.push_back(x);
  }
  audit.rounds.push_back({static_cast<std::uint32_t>(i), anchor, radius, open.size(), sphere.size(),
                          is_vulnerable(open.size(), sphere.size(), i), now});

  VertexSet protected_now;
  if (i <= sch.teams) {
    const Distance next_r = sch.r(i + 1);
    const Distance t = radius + next_r + 1;
    VertexSet targets;
    Bfs around(g);
    for (Vertex u : open) {
      around.run_from(u, next_r);
      for (Vertex x : around.layer(next_r)) {
        if (!in_x[x]) targets.push_back(x);
      }
    }
    normalize(targets);
    const std::string name = "team" + std::to_string(i);
    const auto& team = teams[i - 1];
    if (!targets.empty() && i < sch.teams) {
      const AccessibilityResult acc = accessibility_check(g, targets, t, cfg.c1, cfg.c2, d);
      if (!acc.accessible) {
        audit.notes.push_back("round " + std::to_string(i) + ": " + std::to_string(acc.shortfalls) +
                              " of " + std::to_string(targets.size()) + " reservoirs below target size");
      }
      std::vector<std::uint32_t> owner(g.vertex_count(), kUnmatched);
      for (std::uint32_t k = 0; k < acc.witness.u_set.size(); ++k) {
        for (Vertex x : acc.witness.family[k]) owner[x] = k;
      }
      std::vector<std::uint32_t> chosen(acc.witness.u_set.size(), kUnmatched);
      for (std::uint32_t c : team) {
        const std::uint32_t k = owner[fleet.position(c)];
        if (k != kUnmatched && chosen[k] == kUnmatched) chosen[k] = c;
      }
      for (std::uint32_t k = 0; k < chosen.size(); ++k) {
        const Vertex w = acc.witness.u_set[k];
        if (chosen[k] != kUnmatched && fleet.send(chosen[k], w, t, now, name, audit)) {
          protected_now.push_back(w);
        }
      }
    } else if (!targets.empty()) {
      const AssignmentResult res = detail::dispatch(fleet, g, targets, team, t, true, now, name, audit);
      if (!res.feasible) {
        audit.notes.push_back("round " + std::to_string(i) + ": final team matched " +
                              std::to_string(res.matched) + " of " + std::to_string(targets.size()) +
                              " targets");
      }
      for (std::size_t k = 0; k < targets.size(); ++k) {
        if (res.assignment[k] != kUnmatched) protected_now.push_back(targets[k]);
      }
    }
    normalize(protected_now);
    audit.notes.push_back("round " + std::to_string(i) + ": team covers " +
                          std::to_string(protected_now.size()) + " of " + std::to_string(targets.size()) +
                          " targets");
  }
  protected_prev = std::move(protected_now);

  VertexSet dest;
  for (Vertex x : bfs.visited()) {  // nearest layers first
    if (!in_x[x]) dest.push_back(x);
  }
  if (dest.size() > cleanup.size()) dest.resize(cleanup.size());
  normalize(dest);
  if (!dest.empty()) detail::dispatch(fleet, g, dest, cleanup, -1, true, now, "cleanup", audit);
}

SparseStrategy::SparseStrategy(const Graph& g, SparseStrategyConfig cfg)
    : impl_(std::make_unique<Impl>(g, std::move(cfg))) {
  Impl& s = *impl_;
  if (s.cfg.schedule.n != g.vertex_count()) throw InputError("schedule was built for another graph order");
  if (s.cfg.schedule.radii.size() != s.cfg.schedule.teams + 1) throw InputError("schedule is incomplete");
  for (Vertex x : s.cfg.x_set) require_vertex(g, x);
  normalize(s.cfg.x_set);
  s.d = s.cfg.d > 0.0 ? s.cfg.d : s.cfg.schedule.d;
  s.cleanup_size = s.cfg.cleanup ? s.cfg.cleanup
                                 : static_cast<std::size_t>(std::ceil(std::cbrt(static_cast<double>(g.vertex_count()))));
}

SparseStrategy::~SparseStrategy() = default;

std::vector<Vertex> SparseStrategy::place(const Graph& g, CounterRng& rng) {
  Impl& s = *impl_;
  const std::size_t n = g.vertex_count();
  s.audit = {};
  s.round = 0;
  s.protected_prev.clear();
  s.last_robber.reset();
  std::vector<Vertex> positions;
  auto enlist = [&](const std::string& name, const std::vector<Vertex>& members,
                    std::vector<std::uint32_t>& ids) {
    ids.clear();
    for (Vertex x : members) {
      ids.push_back(static_cast<std::uint32_t>(positions.size()));
      positions.push_back(x);
    }
    s.audit.teams.push_back({name, members.size()});
  };
  enlist("stationed", s.cfg.x_set, s.stationed);
  s.teams.assign(s.cfg.schedule.teams, {});
  for (std::size_t i = 1; i <= s.cfg.schedule.teams; ++i) {
    CounterRng team_rng = rng.split(i);
    enlist("team" + std::to_string(i), detail::sample_team(n, s.cfg.schedule.probability(i), team_rng),
           s.teams[i - 1]);
  }
  CounterRng cleanup_rng = rng.split(0);
  std::vector<Vertex> spots(s.cleanup_size);
  for (auto& x : spots) x = static_cast<Vertex>(cleanup_rng.uniform_below(n));
  enlist("cleanup", spots, s.cleanup);
  s.audit.total_cops = positions.size();
  s.fleet.init(positions);
  s.can_capture.assign(positions.size(), 1);
  for (std::uint32_t c : s.stationed) s.can_capture[c] = 0;
  s.in_x.assign(n, 0);
  for (Vertex x : s.cfg.x_set) s.in_x[x] = 1;
  return positions;
}

CopDecision SparseStrategy::act(const Graph& g, const GameState& state) {
  Impl& s = *impl_;
  const Vertex robber = *state.robber;
  const std::uint64_t now = state.cop_moves();
  const std::size_t last_round = s.cfg.schedule.teams + 1;
  auto outside = [&] { return s.round_dist[robber] == kUnreachable || s.round_dist[robber] >= s.radius; };

  if (s.round == 0) s.start_round(robber, now);
  while (outside()) {
    if (s.round >= last_round) return CopDecision::give_up("robber escaped the last round");
    s.start_round(robber, now);
  }
  if (now - s.round_start >= g.vertex_count()) {
    return CopDecision::give_up("round " + std::to_string(s.round) + " lasted n cop moves");
  }

  bool moved = false;
  bool capturing = false;
  std::vector<Vertex> next = s.fleet.advance(state, s.can_capture, moved, capturing);
  const bool robber_still = s.last_robber && *s.last_robber == robber;
  s.last_robber = robber;
  if (!moved && !capturing && robber_still) return CopDecision::give_up("stalled: cops idle, robber still");
  return CopDecision::move(std::move(next));
}

StrategyAudit SparseStrategy::audit() const { return impl_->audit; }

}  // namespace copnum
