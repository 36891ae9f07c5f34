#pragma once

#include <cstdint>
#include <string_view>

namespace copnum {

enum class BoundForm { RelativeChernoff, AdditiveChernoff, LowerChernoff, Bernstein };

std::string_view to_string(BoundForm form);

/// Upper bound on a tail probability together with the inequality that
/// produced it.
struct TailBound {
  double value = 0.0;
  BoundForm form = BoundForm::RelativeChernoff;
};

/// P(|X - EX| >= dev_eps * EX) <= 2 exp(-dev_eps^2 EX / 3) for a binomial X.
/// Requires mean > 0 and 0 < dev_eps < 3/2.
TailBound chernoff_relative(double mean, double dev_eps);

/// P(|X - np| >= a) <= 2 exp(-2 a^2 / n) for X ~ Bin(n, p). Requires a > 0.
TailBound chernoff_additive(std::uint64_t n, double p, double a);

/// P(X <= EX - t) <= exp(-EX * psi(-t / EX)), 0 < t <= EX.
TailBound chernoff_lower(double mean, double t);

/// P(X >= EX + t) <= exp(-t^2 / (2 (lambda + t / 3))), lambda = EX.
TailBound bernstein_upper(double mean, double t);

/// (1 + x) log(1 + x) - x for x > -1; the x -> -1 limit 1 is returned at x = -1.
double psi(double x);

/// x (log(density_eps * x) - 1) for x > 0 and density_eps in (0, 1].
double f_eps(double density_eps, double x);

/// Root of f_eps(density_eps, x) = -1/2 on (0, 1/density_eps] by bisection.
/// Also accepts density_eps = 1 as a limiting case.
double g_eps(double density_eps, double tol = 1e-12);

/// Piecewise-linear exponent function on (0, 1]. With j >= 1 it equals
/// j x on [1/(2j+1), 1/(2j)] and 1 - j x on [1/(2j), 1/(2j-1)].
double zigzag(double x);

}  // namespace copnum
