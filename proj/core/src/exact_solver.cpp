#include "copnum/exact_solver.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "copnum/errors.hpp"

namespace copnum {

MultisetIndexer::MultisetIndexer(std::size_t n, std::size_t k) : n_(n), k_(k) {
  const std::size_t top = n + k;
  pascal_.assign(top + 1, std::vector<std::uint64_t>(k + 2, 0));
  constexpr std::uint64_t kCap = std::numeric_limits<std::uint64_t>::max() / 2;
  for (std::size_t a = 0; a <= top; ++a) {
    pascal_[a][0] = 1;
    for (std::size_t b = 1; b <= std::min(a, k + 1); ++b) {
      pascal_[a][b] = std::min(kCap, pascal_[a - 1][b - 1] + (b <= a - 1 ? pascal_[a - 1][b] : 0));
    }
  }
  count_ = n == 0 ? (k == 0 ? 1 : 0) : binom(n + k - 1, k);
}

std::uint64_t MultisetIndexer::binom(std::size_t a, std::size_t b) const {
  return b > a ? 0 : pascal_[a][b];
}

std::uint64_t MultisetIndexer::rank(std::span<const Vertex> sorted) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) r += binom(sorted[i] + i, i + 1);
  return r;
}

void MultisetIndexer::unrank(std::uint64_t rank, std::vector<Vertex>& out) const {
  out.resize(k_);
  std::size_t hi = n_ + k_ - 1;
  for (std::size_t i = k_; i-- > 0;) {
    // Largest b <= hi with C(b, i+1) <= rank.
    std::size_t b = hi;
    while (binom(b, i + 1) > rank) --b;
    rank -= binom(b, i + 1);
    out[i] = static_cast<Vertex>(b - i);
    hi = b - 1;
  }
}

__extension__ typedef unsigned __int128 u128;

std::optional<std::uint64_t> position_count(std::size_t n, std::size_t k) {
  // C(n+k-1, k) by the multiplicative formula with overflow checks.
  if (n == 0) return 0;
  u128 c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * (n - 1 + i) / i;
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  c *= static_cast<u128>(n) * 2;
  if (c > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<std::uint64_t>(c);
}

std::uint64_t PositionTable::index(std::span<const Vertex> sorted_cops, Vertex robber,
                                   Turn turn) const {
  return (indexer_.rank(sorted_cops) * n_ + robber) * 2 + (turn == Turn::Robber ? 1 : 0);
}

bool PositionTable::placement_wins(std::span<const Vertex> sorted_cops) const {
  return placement_capture_time(sorted_cops).has_value();
}

std::optional<std::uint64_t> PositionTable::placement_capture_time(
    std::span<const Vertex> sorted_cops) const {
  const std::uint64_t base = indexer_.rank(sorted_cops) * n_ * 2;
  std::uint16_t worst = 0;
  for (std::size_t r = 0; r < n_; ++r) {
    const std::uint16_t v = values_[base + 2 * r];
    if (v == kRobberWins) return std::nullopt;
    worst = std::max(worst, v);
  }
  return cop_moves_from_half(worst);
}

void PositionTable::dump(std::ostream& out) const {
  out << "cops;robber;turn;win;half_moves\n";
  std::vector<Vertex> cops;
  for (std::uint64_t rank = 0; rank < indexer_.count(); ++rank) {
    indexer_.unrank(rank, cops);
    std::string label;
    for (std::size_t i = 0; i < cops.size(); ++i) label += (i ? " " : "") + std::to_string(cops[i]);
    for (std::size_t r = 0; r < n_; ++r) {
      for (int t = 0; t < 2; ++t) {
        const std::uint16_t v = values_[(rank * n_ + r) * 2 + t];
        out << label << ';' << r << ';' << (t == 0 ? "cops" : "robber") << ';'
            << (v != kRobberWins ? 1 : 0) << ';';
        if (v != kRobberWins) out << v;
        out << '\n';
      }
    }
  }
}

namespace {

/// Visits the sorted multiset of every labeled compound move (with repeats).
template <class Fn>
void for_each_cop_move(const Graph& g, std::span<const Vertex> cops, std::vector<Vertex>& pick,
                       std::vector<Vertex>& scratch, Fn&& fn) {
  const std::size_t k = cops.size();
  pick.resize(k);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      scratch.assign(pick.begin(), pick.end());
      std::sort(scratch.begin(), scratch.end());
      fn(scratch);
      return;
    }
    pick[i] = cops[i];
    self(self, i + 1);
    for (Vertex y : g.neighbors(cops[i])) {
      pick[i] = y;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<std::vector<Vertex>> cop_successors(const Graph& g, std::span<const Vertex> sorted_cops) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> pick;
  std::vector<Vertex> scratch;
  for_each_cop_move(g, sorted_cops, pick, scratch, [&](const std::vector<Vertex>& m) { out.push_back(m); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PositionTable solve_k(const Graph& g, std::size_t k, std::uint64_t budget) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InputError("cannot solve the game on the empty graph");
  if (k == 0) throw InputError("at least one cop is required");
  const auto total = position_count(n, k);
  if (!total || *total > budget) {
    throw BudgetExceeded("k=" + std::to_string(k) + " on n=" + std::to_string(n) +
                         " needs more than the budget of " + std::to_string(budget) + " positions");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) + 1 >= std::numeric_limits<std::uint16_t>::max()) {
      throw InputError("vertex degree too large for the solver");
    }
  }
  PositionTable table(n, k);
  constexpr std::uint16_t kUnknown = PositionTable::kRobberWins;
  table.values_.assign(*total, kUnknown);
  auto& values = table.values_;
  const MultisetIndexer& ix = table.indexer_;
  const std::uint64_t placements = ix.count();

  std::vector<std::uint16_t> counter(placements * n, 0);
  std::vector<std::uint64_t> queue;
  queue.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(*total, 1u << 20)));
  std::vector<Vertex> cops;
  for (std::uint64_t rank = 0; rank < placements; ++rank) {
    ix.unrank(rank, cops);
    for (Vertex r = 0; r < n; ++r) {
      const std::uint64_t base = (rank * n + r) * 2;
      if (std::binary_search(cops.begin(), cops.end(), r)) {
        values[base] = 0;
        values[base + 1] = 0;
        queue.push_back(base);
        queue.push_back(base + 1);
      } else {
        counter[rank * n + r] = static_cast<std::uint16_t>(g.degree(r) + 1);
      }
    }
  }

  std::vector<Vertex> pick;
  std::vector<Vertex> scratch;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t pos = queue[head];
    const std::uint16_t h = values[pos];
    if (h + 1 >= kUnknown) throw BudgetExceeded("capture time exceeds the table's value range");
    const auto next = static_cast<std::uint16_t>(h + 1);
    const std::uint64_t cell = pos / 2;
    const std::uint64_t rank = cell / n;
    const auto r = static_cast<Vertex>(cell % n);
    if (pos % 2 == 0) {
      // Cop-turn position reached by a robber move from some r' in N[r].
      auto relax = [&](Vertex from) {
        const std::uint64_t q = (rank * n + from) * 2 + 1;
        if (values[q] != kUnknown) return;
        if (--counter[rank * n + from] == 0) {
          values[q] = next;
          queue.push_back(q);
        }
      };
      relax(r);
      for (Vertex y : g.neighbors(r)) relax(y);
    } else {
      // Robber-turn position reached by a cop move; the move relation is
      // symmetric, so predecessors are the successors.
      ix.unrank(rank, cops);
      for_each_cop_move(g, cops, pick, scratch, [&](const std::vector<Vertex>& m) {
        const std::uint64_t p = (ix.rank(m) * n + r) * 2;
        if (values[p] == kUnknown) {
          values[p] = next;
          queue.push_back(p);
        }
      });
    }
  }
  return table;
}

std::optional<std::size_t> cop_number(const Graph& g, std::size_t k_max, std::uint64_t budget) {
  if (g.vertex_count() == 0) throw InputError("cop number of the empty graph is undefined");
  std::vector<Vertex> cops;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const PositionTable table = solve_k(g, k, budget);
    for (std::uint64_t rank = 0; rank < table.indexer().count(); ++rank) {
      table.indexer().unrank(rank, cops);
      if (table.placement_wins(cops)) return k;
    }
  }
  return std::nullopt;
}

std::uint64_t optimal_capture_time(const PositionTable& table) {
  std::vector<Vertex> cops;
  std::optional<std::uint64_t> best;
  for (std::uint64_t rank = 0; rank < table.indexer().count(); ++rank) {
    table.indexer().unrank(rank, cops);
    const auto t = table.placement_capture_time(cops);
    if (t && (!best || *t < *best)) best = t;
  }
  if (!best) {
    throw InputError(std::to_string(table.cops()) + " cops cannot force a capture on this graph");
  }
  return *best;
}

std::uint64_t optimal_capture_time(const Graph& g, std::size_t k, std::uint64_t budget) {
  return optimal_capture_time(solve_k(g, k, budget));
}

std::vector<Vertex> optimal_placement(const PositionTable& table) {
  const std::uint64_t best = optimal_capture_time(table);
  std::vector<Vertex> cops;
  for (std::uint64_t rank = 0; rank < table.indexer().count(); ++rank) {
    table.indexer().unrank(rank, cops);
    const auto t = table.placement_capture_time(cops);
    if (t && *t == best) return cops;
  }
  return {};
}

bool is_copwin_dismantlable(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  // Closed neighbourhoods as sorted lists restricted to live vertices.
  std::vector<char> alive(n, 1);
  std::size_t remaining = n;
  auto dominated = [&](Vertex u, Vertex w) {
    // N[u] within live vertices is a subset of N[w]; requires u ~ w.
    if (!g.has_edge(u, w)) return false;
    for (Vertex x : g.neighbors(u)) {
      if (alive[x] && x != w && !g.has_edge(w, x)) return false;
    }
    return true;
  };
  bool progress = true;
  while (remaining > 1 && progress) {
    progress = false;
    for (Vertex u = 0; u < n && !progress; ++u) {
      if (!alive[u]) continue;
      for (Vertex w : g.neighbors(u)) {
        if (alive[w] && dominated(u, w)) {
          alive[u] = 0;
          --remaining;
          progress = true;
          break;
        }
      }
    }
  }
  return remaining == 1;
}

}  // namespace copnum
