#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "copnum/graph.hpp"

namespace copnum {

// ---------------------------------------------------------------------------
// Dense lower expansion: |N(S, r)| >= c min(s d^r, n), and |N(S, r)| close to
// s d^r while s d^r < n / log n.

struct DenseExpansionParams {
  double c = 0.5;
  double d = 0.0;
  /// Relative slack for the "close to s d^r" check.
  double tol = 0.25;
  std::size_t sample_budget = 100;
  std::uint64_t seed = 0;
};

struct DenseProbe {
  VertexSet s;
  Distance r = 0;
};

struct DenseProbeResult {
  DenseProbe probe;
  std::size_t union_size = 0;
  /// c min(s d^r, n).
  double lower_target = 0.0;
  /// union_size / (s d^r).
  double ratio = 0.0;
  bool lower_ok = false;
  /// Whether s d^r < n / log n, so the ratio check applies.
  bool ratio_checked = false;
  bool ratio_ok = true;

  bool passed() const { return lower_ok && ratio_ok; }
};

struct DenseExpansionReport {
  DenseExpansionParams params;
  std::vector<DenseProbeResult> probes;
  std::size_t lower_pass = 0;
  std::size_t ratio_checked = 0;
  std::size_t ratio_pass = 0;
  /// Smallest union_size / lower_target seen, and its probe index.
  double worst_lower_margin = 0.0;
  std::size_t worst_lower_index = 0;
  /// Largest |ratio - 1| among ratio-checked probes, and its probe index.
  double worst_ratio_deviation = 0.0;
  std::size_t worst_ratio_index = 0;

  bool all_passed() const;
};

/// Seeded probes: set sizes s in {1, 2, 4, ...} up to sqrt(n) and radii
/// 0..R where d^R first reaches n, cycled until the budget is used. Sets
/// are uniform random s-subsets.
std::vector<DenseProbe> dense_probes(const Graph& g, const DenseExpansionParams& params);

/// Evaluates one probe. Pure function of its inputs, so stored probes replay exactly.
DenseProbeResult evaluate_dense_probe(const Graph& g, const DenseExpansionParams& params,
                                      const DenseProbe& probe);

DenseExpansionReport verify_dense_lower(const Graph& g, const DenseExpansionParams& params,
                                        const std::vector<DenseProbe>& probes);

// ---------------------------------------------------------------------------
// Disjoint families W(u) subset S(u, r+1) over the sphere S(v, r).

struct SphereFamily {
  Vertex v = 0;
  Distance r = 0;
  /// S(v, r), ascending; family[i] belongs to members[i].
  VertexSet members;
  std::vector<VertexSet> family;
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  /// d^{r+1}, the scale the sizes are compared with.
  double scale = 0.0;
};

/// Greedy in ascending u: W(u) = S(u, r+1) minus ball(v, r) minus vertices
/// already claimed by a smaller member.
SphereFamily build_disjoint_sphere_family(const Graph& g, Vertex v, Distance r, double d);

// ---------------------------------------------------------------------------
// (t, c1, c2)-accessibility.

struct AccessibilityWitness {
  Distance t = 0;
  double c1 = 0.0;
  double c2 = 0.0;
  double d = 0.0;
  std::size_t n = 0;
  /// U, ascending; family[i] is W(u_set[i]).
  VertexSet u_set;
  std::vector<VertexSet> family;

  /// c1 min(d^t, c2 n / |U|).
  double size_target() const;
};

struct AccessibilityResult {
  AccessibilityWitness witness;
  bool accessible = false;
  /// Smallest member whose W falls short of the target.
  std::optional<Vertex> first_failure;
  std::size_t shortfalls = 0;
  /// min |W(w)| / target.
  double min_ratio = 0.0;
};

/// Grows disjoint BFS trees rooted at the members of u_set, one layer per
/// round across all members in ascending order, up to depth t. Members claim
/// themselves before any growth. u_set must be nonempty.
AccessibilityResult accessibility_check(const Graph& g, const VertexSet& u_set, Distance t,
                                        double c1, double c2, double d);

struct WitnessVerdict {
  bool disjoint = true;
  bool within_radius = true;
  bool large_enough = true;
  std::string problem;

  bool valid() const { return disjoint && within_radius && large_enough; }
};

/// Re-checks a witness from scratch with its own traversal.
WitnessVerdict verify_witness(const Graph& g, const AccessibilityWitness& witness);

// ---------------------------------------------------------------------------
// The exceptional set Q around a vertex.

struct QSetReport {
  Vertex v = 0;
  Distance r = 0;
  Distance r_prime = 0;
  double d = 0.0;
  /// Vertices within r + r' of v whose BFS-tree star (itself plus children) has fewer than 2d/3 vertices.
  VertexSet q;
  /// |S(a, r') intersect Q| for each a in S(v, r) (ascending a).
  std::vector<std::size_t> overlaps;
  std::size_t max_overlap = 0;
  /// 2 * 9 * d^{r'} * n^{-1/54}.
  double bound = 0.0;
  /// max_overlap / (d^{r'} n^{-1/54}).
  double measured_constant = 0.0;
  bool within_bound = true;
  /// Both radii satisfy n^{1/4-delta} < (d+1) d^r < n^{1/4+delta} for the delta given.
  bool radii_in_range = false;
};

QSetReport q_set_construction(const Graph& g, Vertex v, Distance r, Distance r_prime, double d,
                              double delta = 0.05);

// ---------------------------------------------------------------------------
// Sparse-regime expansion report.

/// Constants for the accessibility step and the neighbourhood bounds. The
/// defaults are the values used with the sparse strategy; a1 is derived
/// from eps when left at zero.
struct SparseConstants {
  double a1 = 0.0;         // lower expansion factor, eps g(eps) / 4
  double a2 = 9.0;         // upper expansion factor
  double a3 = 1.0 / 9.0;   // |U| cap factor
  double a4 = 1.0 / 50.0;  // accessibility c1
  double a5 = 1.0 / 9.0;   // accessibility c2
};

struct SparseReportParams {
  double eps = 0.6;    // density_eps
  double delta = 0.05;
  /// Density parameter; 0 means p (n-1) estimated as the average degree.
  double d = 0.0;
  std::size_t probes = 200;
  std::size_t access_probes = 10;
  std::uint64_t seed = 0;
  SparseConstants constants;
};

struct ConditionTally {
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t skipped = 0;
  /// Extreme measured value of |set| / d^r (max for upper bounds, min for lower).
  double extreme = 0.0;
  std::string extreme_witness;

  double pass_rate() const { return checked == 0 ? 1.0 : static_cast<double>(passed) / checked; }
};

struct AccessibilityProbe {
  Vertex v = 0;
  Distance r = 0;
  Distance r_prime = 0;
  bool in_range = false;
  std::size_t a_size = 0;
  std::size_t u_size = 0;
  std::size_t q_removed = 0;
  QSetReport q;
  AccessibilityResult result;
};

struct SparseExpansionReport {
  std::size_t n = 0;
  double eps = 0.0;
  double delta = 0.0;
  double g = 0.0;
  double d = 0.0;
  SparseConstants constants;
  /// Vertices of degree at most eps g(eps) d.
  VertexSet low_degree;
  bool low_degree_small = false;  // |D| <= sqrt(n)
  /// Vertices v with |S(v, r)| > a2 d^r for some checked r.
  VertexSet erratic;
  ConditionTally upper_i;
  ConditionTally lower_ii;
  ConditionTally lower_iv;
  ConditionTally upper_iv;
  ConditionTally accessibility;
  std::vector<AccessibilityProbe> access;
  /// Radii used for the sphere-size conditions.
  std::vector<Distance> radii_i;
  std::vector<Distance> radii_iv;
  std::vector<std::string> warnings;
};

/// Vertices of degree at most eps * g(eps) * d, ascending.
VertexSet low_degree_set(const Graph& g, double eps, double d);

/// Sparse expansion report. Throws InputError unless
/// 0 < delta < eps / 6 and 0 < eps < 1.
SparseExpansionReport sparse_report(const Graph& g, const SparseReportParams& params);

}  // namespace copnum
