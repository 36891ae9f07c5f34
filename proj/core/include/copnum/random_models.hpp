#pragma once

#include <cstddef>
#include <cstdint>

#include "copnum/graph.hpp"
#include "copnum/rng.hpp"

namespace copnum {

struct ModelParams {
  std::size_t n = 0;
  double p = 0.0;          // G(n,p) edge probability
  std::uint64_t m = 0;     // G(n,m) edge count
  std::size_t d = 0;       // exact degree for the regular model
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// Pairs in K_n.
std::uint64_t pair_count(std::size_t n);

/// Binomial random graph; geometric skipping over pair indices so the work
/// is proportional to n + edges. Throws InputError unless 0 <= p <= 1.
Graph gnp(const ModelParams& params);
Graph gnp(std::size_t n, double p, CounterRng& rng);

/// Uniform graph with exactly m edges (partial Fisher-Yates over pair
/// indices). Throws InputError if m > C(n,2).
Graph gnm(const ModelParams& params);
Graph gnm(std::size_t n, std::uint64_t m, CounterRng& rng);

/// Uniform simple d-regular graph via the pairing model with rejection.
inline constexpr int kPairingAttempts = 1000;
Graph random_regular(const ModelParams& params);
Graph random_regular(std::size_t n, std::size_t d, CounterRng& rng);

/// Edge probability that gives expected degree d: d / (n - 1), clamped to [0,1].
double probability_for_degree(std::size_t n, double d);

}  // namespace copnum
