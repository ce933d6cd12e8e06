#include "dftatoms/appendix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "dftatoms/constants.hpp"
#include "dftatoms/radial_grid.hpp"

namespace dfta::appendix {

namespace {

double unit_ball_volume(int d) {
  switch (d) {
    case 1: return 2.0;
    case 2: return pi;
    case 3: return 4.0 * pi / 3.0;
    default: throw std::invalid_argument("dimension must be 1, 2, or 3");
  }
}

// int_{B_R(x)} |y|^(-alpha) dy for |x| = s, by shells around the origin.
// The fully contained ball |y| < R - s is integrated in closed form; the
// partially covered shells with Gauss-Legendre.
double ball_integral(double alpha, int d, double s, double radius) {
  double inner = 0.0;
  double lo = std::abs(s - radius);
  const double hi = s + radius;
  if (radius > s) {
    const double rin = radius - s;
    // Full shells: surface(y) y^(-alpha) integrated to rin.
    switch (d) {
      case 1: inner = 2.0 * std::pow(rin, 1.0 - alpha) / (1.0 - alpha); break;
      case 2: inner = 2.0 * pi * std::pow(rin, 2.0 - alpha) / (2.0 - alpha); break;
      case 3: inner = 4.0 * pi * std::pow(rin, 3.0 - alpha) / (3.0 - alpha); break;
    }
    lo = rin;
  }
  if (d == 1) {
    // Closed form for the partial part: y in (lo, hi) covers one side.
    const double one_sided =
        (std::pow(hi, 1.0 - alpha) - std::pow(lo, 1.0 - alpha)) /
        (1.0 - alpha);
    return inner + one_sided;
  }
  // Fraction of the sphere of radius y inside B_R(x):
  //   mu* = (y^2 + s^2 - R^2) / (2 y s), fraction = (1 - mu*)/2 (d = 3)
  //   or acos(mu*)/pi (d = 2).
  static const int n_gl = 256;
  static std::vector<double> gl_x, gl_w;
  if (gl_x.empty()) {
    // Gauss-Legendre nodes via Newton on Legendre polynomials.
    gl_x.resize(n_gl);
    gl_w.resize(n_gl);
    for (int i = 0; i < n_gl; ++i) {
      double x = std::cos(pi * (i + 0.75) / (n_gl + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n_gl; ++k) {
          const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        const double dp = n_gl * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n_gl; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n_gl * (x * p1 - p0) / (x * x - 1.0);
      gl_x[i] = x;
      gl_w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
  double partial = 0.0;
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  for (int i = 0; i < n_gl; ++i) {
    const double y = mid + half * gl_x[i];
    if (y <= 0.0) continue;
    const double mu = std::clamp((y * y + s * s - radius * radius) /
                                     (2.0 * y * s), -1.0, 1.0);
    double shell;
    if (d == 3)
      shell = 4.0 * pi * y * y * 0.5 * (1.0 - mu);
    else
      shell = 2.0 * pi * y * (std::acos(mu) / pi);
    partial += half * gl_w[i] * shell * std::pow(y, -alpha);
  }
  return inner + partial;
}

}  // namespace

double maximal_function_power(const MaximalFunctionQuery& query,
                              double x_norm) {
  const double alpha = query.alpha;
  const int d = query.dimension;
  if (alpha < 0.0 || alpha >= d)
    throw std::domain_error("maximal_function_power: need 0 <= alpha < d");
  if (x_norm <= 0.0)
    throw std::invalid_argument("maximal_function_power: need |x| > 0");
  const double omega = unit_ball_volume(d);
  auto average = [&](double radius) {
    return ball_integral(alpha, d, x_norm, radius) /
           (omega * std::pow(radius, d));
  };
  // The integrand's scale invariance confines the maximizer near |x|;
  // scan log-spaced radii, then refine by golden section.
  const int scan = 240;
  double best_r = x_norm, best = 0.0;
  for (int i = 0; i < scan; ++i) {
    const double radius =
        x_norm * std::pow(10.0, -3.0 + 6.0 * i / (scan - 1.0));
    const double val = average(radius);
    if (val > best) {
      best = val;
      best_r = radius;
    }
  }
  double lo = best_r / std::pow(10.0, 6.0 / (scan - 1.0));
  double hi = best_r * std::pow(10.0, 6.0 / (scan - 1.0));
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = average(x1), f2 = average(x2);
  for (int it = 0; it < 120 && hi - lo > 1e-12 * x_norm; ++it) {
    if (f1 > f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = average(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = average(x2);
    }
  }
  return std::max(best, average(0.5 * (lo + hi)));
}

namespace {

// Mass and value of the pointwise minimizer for a given mu > 0.
struct InfimumEval {
  double mass;
  double value;
};

InfimumEval evaluate_mu(double gamma, double z, double coupling, double mu) {
  // Support where C sqrt(Z/r) > mu: r < r_edge.
  const double r_edge = coupling * coupling * z / (mu * mu);
  auto grid = RadialGrid::logarithmic(4000, r_edge * 1e-10, r_edge);
  const auto& r = grid.nodes();
  std::vector<double> mass_density(r.size()), value_density(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double w = coupling * std::sqrt(z / r[i]);
    const double eff = w - mu;
    const double rho = eff > 0.0 ? std::pow(eff / gamma, 1.5) : 0.0;
    const double vol = 4.0 * pi * r[i] * r[i];
    mass_density[i] = vol * rho;
    value_density[i] =
        vol * (0.6 * gamma * std::pow(rho, 5.0 / 3.0) - w * rho);
  }
  return {integrate_radial(grid, mass_density),
          integrate_radial(grid, value_density)};
}

}  // namespace

double scaled_infimum(double gamma, double z, double coupling) {
  if (gamma <= 0.0 || z <= 0.0)
    throw std::invalid_argument("scaled_infimum: need gamma > 0, Z > 0");
  if (coupling < 0.0)
    throw std::invalid_argument("scaled_infimum: need C >= 0");
  if (coupling == 0.0) return 0.0;  // rho = 0 is optimal
  // The unconstrained stationary density has infinite mass, so the mass
  // budget always binds; bisect mu on mass = Z.
  double mu_lo = coupling * std::sqrt(z) * 1e-3;
  double mu_hi = coupling * std::sqrt(z) * 1e3;
  while (evaluate_mu(gamma, z, coupling, mu_lo).mass < z) mu_lo *= 0.5;
  while (evaluate_mu(gamma, z, coupling, mu_hi).mass > z) mu_hi *= 2.0;
  for (int it = 0; it < 100; ++it) {
    const double mid = std::sqrt(mu_lo * mu_hi);
    if (evaluate_mu(gamma, z, coupling, mid).mass > z)
      mu_lo = mid;
    else
      mu_hi = mid;
    if (mu_hi / mu_lo < 1.0 + 1e-13) break;
  }
  return evaluate_mu(gamma, z, coupling, std::sqrt(mu_lo * mu_hi)).value;
}

}  // namespace dfta::appendix
