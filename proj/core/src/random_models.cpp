#include "copnum/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "copnum/errors.hpp"

namespace copnum {

std::uint64_t pair_count(std::size_t n) {
  const auto nn = static_cast<std::uint64_t>(n);
  return nn < 2 ? 0 : nn * (nn - 1) / 2;
}

namespace {

// Pair index k enumerates (u, v), u < v, column by column: k = v(v-1)/2 + u.
Edge decode_pair(std::uint64_t k) {
  auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0);
  while (v * (v - 1) / 2 > k) --v;
  while ((v + 1) * v / 2 <= k) ++v;
  const std::uint64_t u = k - v * (v - 1) / 2;
  return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

void check_order(std::size_t n) {
  if (n > static_cast<std::size_t>(std::numeric_limits<Vertex>::max())) {
    throw InputError("graph order too large: " + std::to_string(n));
  }
}

}  // namespace

Graph gnp(std::size_t n, double p, CounterRng& rng) {
  check_order(n);
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("p must lie in [0,1]");
  std::vector<Edge> edges;
  if (n < 2 || p == 0.0) return Graph::from_edges(n, edges);
  if (p == 1.0) return complete_graph(n);

  edges.reserve(static_cast<std::size_t>(static_cast<double>(pair_count(n)) * p * 1.05) + 16);
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = rng.uniform01();
    const double skip = std::floor(std::log1p(-r) / log_q);
    if (skip > 4.0e18) break;
    w += 1 + static_cast<std::int64_t>(skip);
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
  }
  return Graph::from_edges(n, edges);
}

Graph gnp(const ModelParams& params) {
  CounterRng rng(params.seed, params.stream);
  return gnp(params.n, params.p, rng);
}

Graph gnm(std::size_t n, std::uint64_t m, CounterRng& rng) {
  check_order(n);
  const std::uint64_t total = pair_count(n);
  if (m > total) throw InputError("m exceeds the number of vertex pairs");
  // Sparse partial Fisher-Yates: slot i holds swapped[i] if present, else i.
  std::unordered_map<std::uint64_t, std::uint64_t> swapped;
  swapped.reserve(static_cast<std::size_t>(2 * m));
  auto slot = [&](std::uint64_t i) {
    auto it = swapped.find(i);
    return it == swapped.end() ? i : it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::uint64_t i = 0; i < m; ++i) {
    const std::uint64_t j = i + rng.uniform_below(total - i);
    const std::uint64_t pick = slot(j);
    swapped[j] = slot(i);
    edges.push_back(decode_pair(pick));
  }
  return Graph::from_edges(n, edges);
}

Graph gnm(const ModelParams& params) {
  CounterRng rng(params.seed, params.stream);
  return gnm(params.n, params.m, rng);
}

Graph random_regular(std::size_t n, std::size_t d, CounterRng& rng) {
  check_order(n);
  if (d < 2 || d + 1 > n) throw InputError("regular degree must satisfy 2 <= d <= n-1");
  if ((n * d) % 2 != 0) throw InputError("n*d must be even for a d-regular graph");
  const std::size_t points = n * d;
  std::vector<Vertex> cells(points);
  std::vector<Edge> edges;
  edges.reserve(points / 2);
  for (int attempt = 0; attempt < kPairingAttempts; ++attempt) {
    for (std::size_t i = 0; i < points; ++i) cells[i] = static_cast<Vertex>(i / d);
    for (std::size_t i = points - 1; i > 0; --i) {
      std::swap(cells[i], cells[rng.uniform_below(i + 1)]);
    }
    edges.clear();
    bool simple = true;
    for (std::size_t i = 0; i < points && simple; i += 2) {
      Vertex a = cells[i];
      Vertex b = cells[i + 1];
      if (a == b) simple = false;
      if (a > b) std::swap(a, b);
      edges.push_back({a, b});
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph::from_edges(n, edges);
  }
  throw GenerationError("pairing model produced no simple graph in " +
                        std::to_string(kPairingAttempts) + " attempts");
}

Graph random_regular(const ModelParams& params) {
  CounterRng rng(params.seed, params.stream);
  return random_regular(params.n, params.d, rng);
}

double probability_for_degree(std::size_t n, double d) {
  if (n < 2) return 0.0;
  const double p = d / static_cast<double>(n - 1);
  return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
}

}  // namespace copnum
