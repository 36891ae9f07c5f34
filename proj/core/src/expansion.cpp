#include "copnum/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <iterator>
#include <limits>
#include <sstream>

#include "copnum/errors.hpp"
#include "copnum/prob_bounds.hpp"
#include "copnum/rng.hpp"

namespace copnum {

namespace {

double power(double d, Distance r) { return std::pow(d, static_cast<double>(r)); }

double log_n(std::size_t n) { return std::log(static_cast<double>(std::max<std::size_t>(n, 2))); }

/// Uniform random k-subset of pool (sorted result).
VertexSet sample_subset(std::vector<Vertex> pool, std::size_t k, CounterRng& rng) {
  k = std::min(k, pool.size());
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.uniform_below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<Vertex> all_vertices(std::size_t n) {
  std::vector<Vertex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Vertex>(i);
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------

bool DenseExpansionReport::all_passed() const {
  return lower_pass == probes.size() && ratio_pass == ratio_checked;
}

std::vector<DenseProbe> dense_probes(const Graph& g, const DenseExpansionParams& params) {
  const std::size_t n = g.vertex_count();
  std::vector<DenseProbe> probes;
  if (n == 0 || params.sample_budget == 0) return probes;
  std::vector<std::size_t> sizes;
  const double root = std::sqrt(static_cast<double>(n));
  for (std::size_t s = 1; static_cast<double>(s) <= std::max(1.0, root); s *= 2) sizes.push_back(s);
  Distance max_r = 1;
  if (params.d > 1.0) {
    while (power(params.d, max_r) < static_cast<double>(n) && max_r < 64) ++max_r;
  }
  CounterRng rng(params.seed, 0);
  const std::vector<Vertex> everyone = all_vertices(n);
  std::size_t combo = 0;
  const std::size_t combos = sizes.size() * static_cast<std::size_t>(max_r + 1);
  while (probes.size() < params.sample_budget) {
    const std::size_t s = sizes[combo % sizes.size()];
    const auto r = static_cast<Distance>((combo / sizes.size()) % static_cast<std::size_t>(max_r + 1));
    probes.push_back({sample_subset(everyone, s, rng), r});
    combo = (combo + 1) % combos;
  }
  return probes;
}

DenseProbeResult evaluate_dense_probe(const Graph& g, const DenseExpansionParams& params,
                                      const DenseProbe& probe) {
  if (probe.s.empty()) throw InputError("dense probe needs a nonempty set");
  DenseProbeResult out;
  out.probe = probe;
  const double n = static_cast<double>(g.vertex_count());
  const double s = static_cast<double>(probe.s.size());
  const double nominal = s * power(params.d, probe.r);
  out.union_size = set_ball(g, probe.s, probe.r).size();
  out.lower_target = params.c * std::min(nominal, n);
  out.lower_ok = static_cast<double>(out.union_size) >= out.lower_target;
  out.ratio = static_cast<double>(out.union_size) / nominal;
  out.ratio_checked = nominal < n / log_n(g.vertex_count());
  out.ratio_ok = !out.ratio_checked || std::fabs(out.ratio - 1.0) <= params.tol;
  return out;
}

DenseExpansionReport verify_dense_lower(const Graph& g, const DenseExpansionParams& params,
                                        const std::vector<DenseProbe>& probes) {
  if (!(params.c > 0.0)) throw InputError("dense expansion constant c must be positive");
  if (!(params.d >= 1.0)) throw InputError("dense expansion needs d >= 1");
  DenseExpansionReport report;
  report.params = params;
  report.worst_lower_margin = std::numeric_limits<double>::infinity();
  for (const DenseProbe& probe : probes) {
    DenseProbeResult res = evaluate_dense_probe(g, params, probe);
    const std::size_t idx = report.probes.size();
    if (res.lower_ok) ++report.lower_pass;
    const double margin = static_cast<double>(res.union_size) / res.lower_target;
    if (margin < report.worst_lower_margin) {
      report.worst_lower_margin = margin;
      report.worst_lower_index = idx;
    }
    if (res.ratio_checked) {
      ++report.ratio_checked;
      if (res.ratio_ok) ++report.ratio_pass;
      const double dev = std::fabs(res.ratio - 1.0);
      if (dev > report.worst_ratio_deviation || report.ratio_checked == 1) {
        report.worst_ratio_deviation = dev;
        report.worst_ratio_index = idx;
      }
    }
    report.probes.push_back(std::move(res));
  }
  return report;
}

// ---------------------------------------------------------------------------

SphereFamily build_disjoint_sphere_family(const Graph& g, Vertex v, Distance r, double d) {
  require_vertex(g, v);
  if (r < 0) throw InputError("sphere family radius must be nonnegative");
  SphereFamily fam;
  fam.v = v;
  fam.r = r;
  fam.scale = power(d, r + 1);
  Bfs around_v(g);
  around_v.run_from(v, r);
  fam.members.assign(around_v.layer(r).begin(), around_v.layer(r).end());
  std::sort(fam.members.begin(), fam.members.end());

  std::vector<char> claimed(g.vertex_count(), 0);
  for (Vertex x : around_v.visited()) claimed[x] = 1;  // ball(v, r) is off limits
  Bfs around_u(g);
  fam.family.reserve(fam.members.size());
  for (Vertex u : fam.members) {
    around_u.run_from(u, r + 1);
    VertexSet w;
    for (Vertex x : around_u.layer(r + 1)) {
      if (!claimed[x]) {
        claimed[x] = 1;
        w.push_back(x);
      }
    }
    std::sort(w.begin(), w.end());
    fam.family.push_back(std::move(w));
  }
  if (!fam.family.empty()) {
    fam.min_size = fam.family.front().size();
    for (const auto& w : fam.family) {
      fam.min_size = std::min(fam.min_size, w.size());
      fam.max_size = std::max(fam.max_size, w.size());
    }
  }
  return fam;
}

// ---------------------------------------------------------------------------

double AccessibilityWitness::size_target() const {
  if (u_set.empty()) return 0.0;
  return c1 * std::min(power(d, t), c2 * static_cast<double>(n) / static_cast<double>(u_set.size()));
}

AccessibilityResult accessibility_check(const Graph& g, const VertexSet& u_set, Distance t,
                                        double c1, double c2, double d) {
  if (u_set.empty()) throw InputError("accessibility check needs a nonempty set");
  if (t < 0) throw InputError("accessibility radius must be nonnegative");
  for (Vertex w : u_set) require_vertex(g, w);
  AccessibilityResult res;
  AccessibilityWitness& wit = res.witness;
  wit.t = t;
  wit.c1 = c1;
  wit.c2 = c2;
  wit.d = d;
  wit.n = g.vertex_count();
  wit.u_set = u_set;
  normalize(wit.u_set);
  const std::size_t m = wit.u_set.size();

  constexpr std::uint32_t kFree = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> owner(g.vertex_count(), kFree);
  std::vector<std::vector<Vertex>> tree(m);
  std::vector<std::vector<Vertex>> frontier(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    owner[wit.u_set[i]] = i;
    tree[i].push_back(wit.u_set[i]);
    frontier[i].push_back(wit.u_set[i]);
  }
  std::vector<Vertex> next;
  for (Distance layer = 1; layer <= t; ++layer) {
    bool grew = false;
    for (std::uint32_t i = 0; i < m; ++i) {
      next.clear();
      for (Vertex x : frontier[i]) {
        for (Vertex y : g.neighbors(x)) {
          if (owner[y] == kFree) {
            owner[y] = i;
            next.push_back(y);
          }
        }
      }
      tree[i].insert(tree[i].end(), next.begin(), next.end());
      frontier[i].swap(next);
      grew = grew || !frontier[i].empty();
    }
    if (!grew) break;
  }

  const double target = wit.size_target();
  res.min_ratio = std::numeric_limits<double>::infinity();
  wit.family.resize(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    std::sort(tree[i].begin(), tree[i].end());
    const double size = static_cast<double>(tree[i].size());
    res.min_ratio = std::min(res.min_ratio, target > 0.0 ? size / target : std::numeric_limits<double>::infinity());
    if (size < target) {
      ++res.shortfalls;
      if (!res.first_failure) res.first_failure = wit.u_set[i];
    }
    wit.family[i] = std::move(tree[i]);
  }
  res.accessible = res.shortfalls == 0;
  return res;
}

WitnessVerdict verify_witness(const Graph& g, const AccessibilityWitness& witness) {
  WitnessVerdict verdict;
  const std::size_t n = g.vertex_count();
  auto fail = [&](bool& flag, const std::string& why) {
    flag = false;
    if (verdict.problem.empty()) verdict.problem = why;
  };
  if (witness.family.size() != witness.u_set.size()) {
    fail(verdict.disjoint, "family and member list differ in length");
    return verdict;
  }
  std::vector<char> used(n, 0);
  std::vector<int> dist(n, -1);
  std::vector<Vertex> touched;
  const double target = witness.c1 *
      std::min(std::pow(witness.d, witness.t),
               witness.c2 * static_cast<double>(witness.n) / static_cast<double>(witness.u_set.size()));
  for (std::size_t i = 0; i < witness.u_set.size(); ++i) {
    const Vertex w = witness.u_set[i];
    const VertexSet& set = witness.family[i];
    // Plain queue BFS from w, limited to depth t.
    for (Vertex x : touched) dist[x] = -1;
    touched.clear();
    std::deque<Vertex> queue{w};
    dist[w] = 0;
    touched.push_back(w);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      if (dist[x] == witness.t) continue;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          touched.push_back(y);
          queue.push_back(y);
        }
      }
    }
    for (Vertex x : set) {
      if (x >= n) {
        fail(verdict.within_radius, "vertex out of range in W(" + std::to_string(w) + ")");
        continue;
      }
      if (used[x]) fail(verdict.disjoint, "vertex " + std::to_string(x) + " appears in two sets");
      used[x] = 1;
      if (dist[x] < 0) {
        fail(verdict.within_radius,
             "vertex " + std::to_string(x) + " is farther than t from " + std::to_string(w));
      }
    }
    if (static_cast<double>(set.size()) < target) {
      fail(verdict.large_enough, "W(" + std::to_string(w) + ") has " + std::to_string(set.size()) +
                                     " vertices, below the target");
    }
  }
  return verdict;
}

// ---------------------------------------------------------------------------

QSetReport q_set_construction(const Graph& g, Vertex v, Distance r, Distance r_prime, double d,
                              double delta) {
  require_vertex(g, v);
  if (r < 0 || r_prime < 0) throw InputError("Q-set radii must be nonnegative");
  QSetReport rep;
  rep.v = v;
  rep.r = r;
  rep.r_prime = r_prime;
  rep.d = d;
  const std::size_t n = g.vertex_count();
  const double nn = static_cast<double>(n);
  auto in_range = [&](Distance x) {
    const double val = (d + 1.0) * power(d, x);
    return std::pow(nn, 0.25 - delta) < val && val < std::pow(nn, 0.25 + delta);
  };
  rep.radii_in_range = in_range(r) && in_range(r_prime);

  const Distance reach = r + r_prime;
  Bfs bfs(g);
  bfs.run_from(v, reach + 1);
  std::vector<std::uint32_t> children(n, 0);
  for (Vertex x : bfs.visited()) {
    if (x != v) ++children[bfs.parent(x)];
  }
  const double threshold = 2.0 * d / 3.0;
  for (Vertex x : bfs.visited()) {
    if (bfs.distance(x) <= reach && static_cast<double>(1 + children[x]) < threshold) {
      rep.q.push_back(x);
    }
  }
  std::sort(rep.q.begin(), rep.q.end());

  std::vector<char> in_q(n, 0);
  for (Vertex x : rep.q) in_q[x] = 1;
  VertexSet sources(bfs.layer(r).begin(), bfs.layer(r).end());
  std::sort(sources.begin(), sources.end());
  Bfs inner(g);
  for (Vertex a : sources) {
    inner.run_from(a, r_prime);
    std::size_t count = 0;
    for (Vertex x : inner.layer(r_prime)) count += in_q[x];
    rep.overlaps.push_back(count);
    rep.max_overlap = std::max(rep.max_overlap, count);
  }
  const double scale = power(d, r_prime) * std::pow(nn, -1.0 / 54.0);
  rep.bound = 18.0 * scale;
  rep.measured_constant = scale > 0.0 ? static_cast<double>(rep.max_overlap) / scale : 0.0;
  rep.within_bound = static_cast<double>(rep.max_overlap) <= rep.bound;
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::string witness_text(Vertex v, Distance r, std::size_t size, double ratio) {
  std::ostringstream os;
  os << "v=" << v << " r=" << r << " size=" << size << " ratio=" << ratio;
  return os.str();
}

}  // namespace

VertexSet low_degree_set(const Graph& g, double eps, double d) {
  const double threshold = eps * g_eps(eps) * d;
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (static_cast<double>(g.degree(v)) <= threshold) out.push_back(v);
  }
  return out;
}

SparseExpansionReport sparse_report(const Graph& g, const SparseReportParams& params) {
  if (!(params.eps > 0.0 && params.eps < 1.0)) throw InputError("eps must lie in (0,1)");
  if (!(params.delta > 0.0 && params.delta < params.eps / 6.0)) {
    throw InputError("delta must satisfy 0 < delta < eps/6");
  }
  const std::size_t n = g.vertex_count();
  if (n < 2) throw InputError("sparse report needs at least two vertices");
  SparseExpansionReport rep;
  rep.n = n;
  rep.eps = params.eps;
  rep.delta = params.delta;
  rep.g = g_eps(params.eps);
  rep.d = params.d > 0.0 ? params.d : g.average_degree();
  rep.constants = params.constants;
  if (rep.constants.a1 <= 0.0) rep.constants.a1 = params.eps * rep.g / 4.0;
  const double d = rep.d;
  const double nn = static_cast<double>(n);
  const double ln = log_n(n);
  if (d < (0.5 + params.eps) * ln || d > ln * ln * ln) {
    rep.warnings.push_back("d lies outside [(1/2+eps) log n, log^3 n]");
  }
  if (!(d > 1.0)) {
    rep.warnings.push_back("d <= 1: no radius satisfies the sphere-size conditions");
  }

  rep.low_degree = low_degree_set(g, params.eps, d);
  std::vector<char> in_d(n, 0);
  for (Vertex v : rep.low_degree) in_d[v] = 1;
  rep.low_degree_small = static_cast<double>(rep.low_degree.size()) <= std::sqrt(nn);
  std::vector<Vertex> outside_d;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_d[v]) outside_d.push_back(v);
  }

  if (d > 1.0) {
    for (Distance r = 1; power(d, r) < nn / ln; ++r) rep.radii_i.push_back(r);
    for (Distance r = 1; power(d, r) < std::pow(nn, 0.5 + params.delta); ++r) rep.radii_iv.push_back(r);
  }

  // (i) over every vertex and every admissible radius.
  const double a2 = rep.constants.a2;
  rep.upper_i.extreme = 0.0;
  Bfs bfs(g);
  if (!rep.radii_i.empty()) {
    const Distance rmax = rep.radii_i.back();
    for (Vertex v = 0; v < n; ++v) {
      bfs.run_from(v, rmax);
      bool bad = false;
      for (Distance r : rep.radii_i) {
        const double size = static_cast<double>(bfs.layer(r).size());
        const double ratio = size / power(d, r);
        ++rep.upper_i.checked;
        if (size <= a2 * power(d, r)) {
          ++rep.upper_i.passed;
        } else {
          bad = true;
        }
        if (ratio > rep.upper_i.extreme) {
          rep.upper_i.extreme = ratio;
          rep.upper_i.extreme_witness = witness_text(v, r, bfs.layer(r).size(), ratio);
        }
      }
      if (bad) rep.erratic.push_back(v);
    }
  }

  CounterRng rng(params.seed, 0);
  const double lower_ii = (params.eps / std::exp(1.0)) * (params.eps / std::exp(1.0));

  // (ii) on probed vertices outside D.
  rep.lower_ii.extreme = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < params.probes; ++p) {
    if (outside_d.empty() || rep.radii_i.empty()) {
      ++rep.lower_ii.skipped;
      continue;
    }
    const Vertex v = outside_d[rng.uniform_below(outside_d.size())];
    const Distance r = rep.radii_i[rng.uniform_below(rep.radii_i.size())];
    bfs.run_from(v, r);
    const double size = static_cast<double>(bfs.layer(r).size());
    const double ratio = size / power(d, r);
    ++rep.lower_ii.checked;
    if (size >= lower_ii * power(d, r)) ++rep.lower_ii.passed;
    if (ratio < rep.lower_ii.extreme) {
      rep.lower_ii.extreme = ratio;
      rep.lower_ii.extreme_witness = witness_text(v, r, bfs.layer(r).size(), ratio);
    }
  }

  // (iv) on probed (v, r, r', V').
  rep.lower_iv.extreme = std::numeric_limits<double>::infinity();
  rep.upper_iv.extreme = 0.0;
  for (std::size_t p = 0; p < params.probes; ++p) {
    if (outside_d.empty() || rep.radii_iv.empty()) {
      ++rep.lower_iv.skipped;
      ++rep.upper_iv.skipped;
      continue;
    }
    const Vertex v = outside_d[rng.uniform_below(outside_d.size())];
    const Distance r = rep.radii_iv[rng.uniform_below(rep.radii_iv.size())];
    const Distance rp = rep.radii_iv[rng.uniform_below(rep.radii_iv.size())];
    bfs.run_from(v, r);
    std::vector<Vertex> pool;
    for (Vertex x : bfs.visited()) {
      if (!in_d[x]) pool.push_back(x);
    }
    const double per = power(d, rp);
    const auto k_cap = static_cast<std::size_t>(std::floor(nn / ln / per));
    const std::size_t k_max = std::min(pool.size(), k_cap);
    if (k_max == 0) {
      ++rep.lower_iv.skipped;
      ++rep.upper_iv.skipped;
      continue;
    }
    const std::size_t k = 1 + rng.uniform_below(k_max);
    std::sort(pool.begin(), pool.end());
    const VertexSet vprime = sample_subset(pool, k, rng);
    const double size = static_cast<double>(set_sphere(g, vprime, rp).size());
    const double scale = static_cast<double>(k) * per;
    const double ratio = size / scale;
    ++rep.lower_iv.checked;
    ++rep.upper_iv.checked;
    if (size >= rep.constants.a1 * scale) ++rep.lower_iv.passed;
    if (size <= a2 * scale) ++rep.upper_iv.passed;
    std::ostringstream os;
    os << "v=" << v << " r=" << r << " r'=" << rp << " k=" << k << " size=" << size
       << " ratio=" << ratio;
    if (ratio < rep.lower_iv.extreme) {
      rep.lower_iv.extreme = ratio;
      rep.lower_iv.extreme_witness = os.str();
    }
    if (ratio > rep.upper_iv.extreme) {
      rep.upper_iv.extreme = ratio;
      rep.upper_iv.extreme_witness = os.str();
    }
  }

  // Accessibility probes around vertices outside D.
  std::vector<Distance> access_radii;
  if (d > 1.0) {
    for (Distance r = 1; power(d, r) < nn; ++r) {
      const double val = (d + 1.0) * power(d, r);
      if (std::pow(nn, 0.25 - params.delta) < val && val < std::pow(nn, 0.25 + params.delta)) {
        access_radii.push_back(r);
      }
    }
  }
  const bool fallback = access_radii.empty();
  if (fallback) {
    access_radii.push_back(1);
    rep.warnings.push_back("no radius r >= 1 has (d+1)d^r in (n^(1/4-delta), n^(1/4+delta)); "
                           "accessibility probes use r = r' = 1 and are flagged out of range");
  }
  rep.accessibility.extreme = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < params.access_probes; ++p) {
    if (outside_d.empty()) {
      ++rep.accessibility.skipped;
      continue;
    }
    AccessibilityProbe probe;
    probe.v = outside_d[rng.uniform_below(outside_d.size())];
    probe.r = access_radii[rng.uniform_below(access_radii.size())];
    probe.r_prime = access_radii[rng.uniform_below(access_radii.size())];
    bfs.run_from(probe.v, probe.r);
    VertexSet a;
    for (Vertex x : bfs.layer(probe.r)) {
      if (!in_d[x]) a.push_back(x);
    }
    std::sort(a.begin(), a.end());
    probe.a_size = a.size();
    if (a.empty()) {
      ++rep.accessibility.skipped;
      continue;
    }
    VertexSet u;
    for (Vertex x : a) {
      const VertexSet s = sphere(g, x, probe.r_prime);
      u.insert(u.end(), s.begin(), s.end());
    }
    normalize(u);
    probe.u_size = u.size();
    probe.q = q_set_construction(g, probe.v, probe.r, probe.r_prime, d, params.delta);
    VertexSet members;
    std::set_difference(u.begin(), u.end(), probe.q.q.begin(), probe.q.q.end(),
                        std::back_inserter(members));
    probe.q_removed = u.size() - members.size();
    probe.in_range = !fallback && probe.q.radii_in_range &&
                     static_cast<double>(a.size()) > std::pow(nn, 0.25 - params.delta) &&
                     power(d, probe.r + probe.r_prime) <
                         rep.constants.a3 * nn / static_cast<double>(u.size());
    if (members.empty()) {
      ++rep.accessibility.skipped;
      rep.access.push_back(std::move(probe));
      continue;
    }
    probe.result = accessibility_check(g, members, probe.r + probe.r_prime + 1, rep.constants.a4,
                                       rep.constants.a5, d);
    ++rep.accessibility.checked;
    if (probe.result.accessible) ++rep.accessibility.passed;
    if (probe.result.min_ratio < rep.accessibility.extreme) {
      rep.accessibility.extreme = probe.result.min_ratio;
      std::ostringstream os;
      os << "v=" << probe.v << " r=" << probe.r << " r'=" << probe.r_prime << " |U|=" << members.size()
         << " min_ratio=" << probe.result.min_ratio;
      rep.accessibility.extreme_witness = os.str();
    }
    rep.access.push_back(std::move(probe));
  }
  return rep;
}

}  // namespace copnum
