#pragma once

#include <cstdint>
#include <limits>

namespace copnum {

/// SplitMix64 finalizer; a bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t x);

/// Per-trial seed: hash of (experiment seed, trial index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Counter-based generator. The i-th output of stream `s` under seed `k` is
/// mix64(key(k, s) + (i + 1) * golden), a pure function of (k, s, i). Distinct
/// stream ids give independent sequences, so trial t of an experiment uses
/// stream t and its draws do not depend on how trials are scheduled.
///
/// Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);
  bool bernoulli(double p);

  /// Independent child stream (e.g. one per team inside a trial).
  CounterRng split(std::uint64_t substream) const;

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace copnum
