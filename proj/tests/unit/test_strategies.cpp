#include <gtest/gtest.h>

#include <cmath>

#include "copnum/errors.hpp"
#include "copnum/expansion.hpp"
#include "copnum/random_models.hpp"
#include "copnum/strategies.hpp"
#include "copnum/trace.hpp"

using namespace copnum;

TEST(TwoNearest, CountsCopsIndividually) {
  const Graph p = path_graph(6);
  const std::vector<Vertex> cops{1, 1};
  const TwoNearest tn = two_nearest_cops(p, cops);
  EXPECT_EQ(tn.first[4], 3);
  EXPECT_EQ(tn.second[4], 3);
  const std::vector<Vertex> apart{0, 5};
  const TwoNearest t2 = two_nearest_cops(p, apart);
  EXPECT_EQ(t2.first[1], 1);
  EXPECT_EQ(t2.second[1], 4);
  const Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
  const std::vector<Vertex> lone{0};
  EXPECT_EQ(two_nearest_cops(split, lone).first[3], kNoDepthLimit);
}

TEST(GreedyRobber, PlacementAndFlight) {
  const Graph p = path_graph(7);
  GreedyRobber robber;
  const std::vector<Vertex> cops{2};
  EXPECT_EQ(robber.place(p, cops), 6u);
  const std::vector<Vertex> two{0, 6};
  // Ties on the nearest cop are broken by the second-nearest, then by id.
  EXPECT_EQ(robber.place(p, two), 3u);
  GameState s = new_game(p, {4}, 5);
  s.turn = Turn::Robber;
  EXPECT_EQ(robber.act(p, s), 6u);
  s.cops.clear();
  EXPECT_EQ(robber.act(p, s), 5u);
}

TEST(TableStrategies, CycleOfFour) {
  const Graph c4 = cycle_graph(4);
  const PositionTable one = solve_k(c4, 1);
  TableCop lone(one);
  TableRobber dodger(one);
  PlayOptions opt;
  opt.record_trace = true;
  opt.horizon = 50;
  const GameResult r1 = play(c4, lone, dodger, opt);
  EXPECT_FALSE(r1.captured());
  EXPECT_TRUE(validate_replay(c4, r1).ok());

  const PositionTable two = solve_k(c4, 2);
  TableCop pair(two);
  TableRobber runner(two);
  const GameResult r2 = play(c4, pair, runner, opt);
  EXPECT_TRUE(r2.captured());
  EXPECT_EQ(r2.capture_time, optimal_capture_time(two));
  EXPECT_TRUE(validate_replay(c4, r2).ok());
  EXPECT_TRUE(validate_audit(c4, r2).ok());
}

TEST(TableStrategies, OptimalPlayRealizesTableValue) {
  for (const Graph& g : {petersen_graph(), grid_graph(3, 4)}) {
    const PositionTable t = solve_k(g, 2);
    TableCop cop(t);
    TableRobber robber(t);
    PlayOptions opt;
    opt.record_trace = true;
    const GameResult r = play(g, cop, robber, opt);
    if (cop_number(g, 2)) {
      EXPECT_TRUE(r.captured());
      EXPECT_EQ(r.capture_time, optimal_capture_time(t));
    } else {
      EXPECT_FALSE(r.captured());
    }
    EXPECT_TRUE(validate_replay(g, r).ok());
  }
}

TEST(DenseRadius, Examples) {
  EXPECT_EQ(dense_radius(10.0, 10000), 1);
  EXPECT_EQ(dense_radius(4.0, 1000000), 4);
  EXPECT_EQ(dense_radius(200.0, 10000), 0);
  EXPECT_THROW(dense_radius(1.0, 100), InputError);
}

TEST(RadiusSchedule, WorkedExample) {
  const RadiusSchedule s = radius_schedule(10.0, 1000000, 1.0, 1.0, 1.0);
  EXPECT_EQ(s.teams, static_cast<std::size_t>(std::ceil(std::log(std::log(1e6)))));
  ASSERT_EQ(s.radii.size(), s.teams + 1);
  EXPECT_EQ(s.r(1), 1);
  EXPECT_EQ(s.r(2), 2);
  for (std::size_t i = 2; i <= s.teams + 1; ++i) {
    // sqrt(n)/d < d^{r_{i-1}+r_i} / e^{2(i-1)} <= sqrt(n)
    const double x = std::pow(10.0, s.r(i - 1) + s.r(i)) / std::exp(2.0 * (i - 1));
    EXPECT_LE(x, 1000.0 * (1 + 1e-12)) << i;
    EXPECT_GT(x, 100.0) << i;
  }
  ASSERT_EQ(s.team_sizes.size(), s.teams);
  EXPECT_NEAR(s.team_sizes[0], std::exp(-1.0) * 1000.0, 1e-9);
  EXPECT_NEAR(s.team_sizes.back(), 1000.0, 1e-9);
  EXPECT_NEAR(s.probability(1), s.team_sizes[0] / 1e6, 1e-15);
  EXPECT_THROW(radius_schedule(1.5, 1000, 1.0, 1.0, 1.0), InputError);
  EXPECT_THROW(radius_schedule(10.0, 1000, 1.5, 1.0, 1.0), InputError);
  EXPECT_THROW(radius_schedule(10.0, 1000, 1.0, 0.0, 1.0), InputError);
  EXPECT_THROW(radius_schedule(10.0, 1000, 1.0, 1.0, -1.0), InputError);
}

TEST(Vulnerability, IntegerThreshold) {
  EXPECT_TRUE(is_vulnerable(10, 10, 1));
  EXPECT_FALSE(is_vulnerable(11, 10, 1));
  // floor(e^{-5} * 1000) = 6
  EXPECT_TRUE(is_vulnerable(6, 1000, 2));
  EXPECT_FALSE(is_vulnerable(7, 1000, 2));
  EXPECT_TRUE(is_vulnerable(0, 0, 3));
  EXPECT_THROW(is_vulnerable(0, 1, 0), InputError);
}

TEST(DenseStrategy, CompleteGraphDirectCase) {
  const Graph k = complete_graph(60);
  DenseStrategy cops(k, {2.0, 0.0, 0.0});
  EXPECT_EQ(cops.regime(), DenseCase::Direct);
  EXPECT_EQ(cops.radius(), 0);
  GreedyRobber robber;
  PlayOptions opt;
  opt.record_trace = true;
  opt.seed = 4;
  const GameResult r = play(k, cops, robber, opt);
  EXPECT_TRUE(validate_replay(k, r).ok());
  const auto audit = validate_audit(k, r);
  EXPECT_TRUE(audit.ok()) << (audit.ok() ? "" : audit.errors.front());
  if (r.cop_count > 0) {
    EXPECT_TRUE(r.captured());
    EXPECT_LE(r.capture_time, 1u);
  }
  EXPECT_THROW(DenseStrategy(k, {0.0, 0.0, 0.0}), InputError);
}

TEST(DenseStrategy, RandomGraphTracesValidate) {
  ModelParams mp;
  mp.n = 600;
  mp.p = 60.0 / 599;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    mp.seed = seed;
    const Graph g = gnp(mp);
    DenseStrategy cops(g, {4.0, 60.0, 0.0});
    GreedyRobber robber;
    PlayOptions opt;
    opt.record_trace = true;
    opt.seed = seed;
    const GameResult r = play(g, cops, robber, opt);
    EXPECT_TRUE(validate_replay(g, r).ok()) << seed;
    const auto audit = validate_audit(g, r);
    EXPECT_TRUE(audit.ok()) << seed << ": " << (audit.ok() ? "" : audit.errors.front());
    EXPECT_EQ(r.audit.total_cops, r.cop_count);
  }
}

TEST(SparseStrategy, RandomGraphTracesValidate) {
  const std::size_t n = 1500;
  const double d = 1.1 * std::log(static_cast<double>(n));
  int captures = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    ModelParams mp;
    mp.n = n;
    mp.p = d / (n - 1);
    mp.seed = seed;
    const Graph g = gnp(mp);
    SparseStrategyConfig cfg;
    cfg.schedule = radius_schedule(d, n, 1.0, 1.0, 4.0);
    cfg.x_set = low_degree_set(g, 0.6, d);
    SparseStrategy cops(g, cfg);
    GreedyRobber robber;
    PlayOptions opt;
    opt.record_trace = true;
    opt.seed = seed;
    const GameResult r = play(g, cops, robber, opt);
    EXPECT_TRUE(validate_replay(g, r).ok()) << seed;
    const auto audit = validate_audit(g, r);
    EXPECT_TRUE(audit.ok()) << seed << ": " << (audit.ok() ? "" : audit.errors.front());
    ASSERT_FALSE(r.audit.rounds.empty());
    EXPECT_EQ(r.audit.rounds.front().index, 1u);
    // Stationed cops sit on exactly the low-degree set.
    ASSERT_FALSE(r.audit.teams.empty());
    EXPECT_EQ(r.audit.teams.front().name, "stationed");
    EXPECT_EQ(r.audit.teams.front().size, cfg.x_set.size());
    captures += r.captured();
  }
  EXPECT_GE(captures, 3);

  SparseStrategyConfig bad;
  bad.schedule = radius_schedule(8.0, 1000, 1.0, 1.0, 1.0);
  EXPECT_THROW(SparseStrategy(complete_graph(10), bad), InputError);
}
