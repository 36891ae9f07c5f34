#include "copnum/prob_bounds.hpp"

#include <cmath>

#include "copnum/errors.hpp"

namespace copnum {

std::string_view to_string(BoundForm form) {
  switch (form) {
    case BoundForm::RelativeChernoff: return "relative-chernoff";
    case BoundForm::AdditiveChernoff: return "additive-chernoff";
    case BoundForm::LowerChernoff: return "lower-chernoff";
    case BoundForm::Bernstein: return "bernstein";
  }
  return "unknown";
}

TailBound chernoff_relative(double mean, double dev_eps) {
  if (!(mean > 0.0)) throw InputError("chernoff_relative: mean must be positive");
  if (!(dev_eps > 0.0 && dev_eps < 1.5)) {
    throw InputError("chernoff_relative: deviation must lie in (0, 3/2)");
  }
  return {2.0 * std::exp(-dev_eps * dev_eps * mean / 3.0), BoundForm::RelativeChernoff};
}

TailBound chernoff_additive(std::uint64_t n, double p, double a) {
  if (n == 0) throw InputError("chernoff_additive: n must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("chernoff_additive: p must lie in [0,1]");
  if (!(a > 0.0)) throw InputError("chernoff_additive: a must be positive");
  return {2.0 * std::exp(-2.0 * a * a / static_cast<double>(n)), BoundForm::AdditiveChernoff};
}

TailBound chernoff_lower(double mean, double t) {
  if (!(mean > 0.0)) throw InputError("chernoff_lower: mean must be positive");
  if (!(t > 0.0 && t <= mean)) throw InputError("chernoff_lower: t must lie in (0, mean]");
  return {std::exp(-mean * psi(-t / mean)), BoundForm::LowerChernoff};
}

TailBound bernstein_upper(double mean, double t) {
  if (!(mean > 0.0)) throw InputError("bernstein_upper: mean must be positive");
  if (!(t > 0.0)) throw InputError("bernstein_upper: t must be positive");
  return {std::exp(-t * t / (2.0 * (mean + t / 3.0))), BoundForm::Bernstein};
}

double psi(double x) {
  if (!(x >= -1.0)) throw InputError("psi: argument must exceed -1");
  if (x == -1.0) return 1.0;
  return (1.0 + x) * std::log1p(x) - x;
}

double f_eps(double density_eps, double x) {
  if (!(density_eps > 0.0 && density_eps <= 1.0)) throw InputError("f_eps: eps must lie in (0,1]");
  if (!(x > 0.0)) throw InputError("f_eps: x must be positive");
  return x * (std::log(density_eps * x) - 1.0);
}

double g_eps(double density_eps, double tol) {
  if (!(density_eps > 0.0 && density_eps <= 1.0)) throw InputError("g_eps: eps must lie in (0,1]");
  if (!(tol > 0.0)) throw InputError("g_eps: tolerance must be positive");
  // f is decreasing on (0, 1/eps]: it tends to 0 at 0+ and equals -1/eps at 1/eps.
  double lo = 0.0;
  double hi = 1.0 / density_eps;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f_eps(density_eps, mid) > -0.5) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  if (std::fabs(f_eps(density_eps, root) + 0.5) > tol) {
    const double flo = lo > 0.0 ? std::fabs(f_eps(density_eps, lo) + 0.5) : 1.0;
    const double fhi = std::fabs(f_eps(density_eps, hi) + 0.5);
    return flo < fhi ? lo : hi;
  }
  return root;
}

double zigzag(double x) {
  if (!(x > 0.0 && x <= 1.0)) throw InputError("zigzag: x must lie in (0, 1]");
  // k = floor(1/x), corrected so that k x <= 1 < (k + 1) x holds in floating point.
  auto k = static_cast<long long>(std::floor(1.0 / x));
  while (k > 1 && static_cast<double>(k) * x > 1.0) --k;
  while (static_cast<double>(k + 1) * x <= 1.0) ++k;
  if (k % 2 == 0) {
    return static_cast<double>(k / 2) * x;
  }
  return 1.0 - static_cast<double>((k + 1) / 2) * x;
}

}  // namespace copnum
