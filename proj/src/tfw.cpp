#include "dftatoms/tfw.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dftatoms/hartree.hpp"

namespace dfta::tfw {

namespace {

// Radial Laplacian via t = ln r:  (Delta psi)(r) = (psi_tt + psi_t)/r^2.
// Neumann at the inner edge, Dirichlet at the outer edge.
std::vector<double> radial_laplacian(const std::vector<double>& r,
                                     const std::vector<double>& psi,
                                     double dt) {
  const std::size_t n = r.size();
  std::vector<double> lap(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double pm = (i == 0) ? psi[0] : psi[i - 1];
    const double pp = (i + 1 == n) ? 0.0 : psi[i + 1];
    const double tt = (pp - 2.0 * psi[i] + pm) / (dt * dt);
    const double t1 = (pp - pm) / (2.0 * dt);
    lap[i] = (tt + t1) / (r[i] * r[i]);
  }
  return lap;
}

struct Workspace {
  const RadialGrid& grid;
  const std::vector<double>& r;
  std::vector<double> w4pir2;  // quadrature weight * 4 pi r^2
  double dt_log;

  explicit Workspace(const RadialGrid& g)
      : grid(g), r(g.nodes()), w4pir2(g.size()) {
    for (std::size_t i = 0; i < g.size(); ++i)
      w4pir2[i] = g.weights()[i] * 4.0 * pi * r[i] * r[i];
    dt_log = std::log(r[1] / r[0]);
  }

  double mass(const std::vector<double>& psi) const {
    double m = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i)
      m += w4pir2[i] * psi[i] * psi[i];
    return m;
  }
};

double flow_energy(const Workspace& ws, const std::vector<double>& psi,
                   double z, double lambda, const tf::TfConstants& c) {
  std::vector<double> rho(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) rho[i] = psi[i] * psi[i];
  RadialDensity density(ws.grid, rho);
  return tfw_energy(density, z, lambda, c);
}

// Effective one-particle potential gamma rho^(2/3) - phi_rho.
std::vector<double> effective_potential(const Workspace& ws,
                                        const std::vector<double>& rho,
                                        double z, const tf::TfConstants& c) {
  auto vh = hartree_potential(ws.grid, rho);
  std::vector<double> v(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i)
    v[i] = c.gamma * std::pow(rho[i], 2.0 / 3.0) - (z / ws.r[i] - vh[i]);
  return v;
}

// Solve (1 + dt H) psi_new = psi with H = -(lambda/2) Delta + V by the
// Thomas algorithm on the log-uniform stencil.
std::vector<double> implicit_step(const Workspace& ws,
                                  const std::vector<double>& psi,
                                  const std::vector<double>& v, double lambda,
                                  double dt) {
  const std::size_t n = psi.size();
  const double h = ws.dt_log;
  std::vector<double> a(n), b(n), cc(n), d(psi);
  for (std::size_t i = 0; i < n; ++i) {
    const double inv_r2 = 1.0 / (ws.r[i] * ws.r[i]);
    const double diff = 0.5 * lambda * inv_r2;  // coefficient of -(psi_tt+psi_t)
    const double off = diff / (h * h);
    const double drift = diff / (2.0 * h);
    a[i] = dt * (-off + drift);        // sub-diagonal
    cc[i] = dt * (-off - drift);       // super-diagonal
    b[i] = 1.0 + dt * (2.0 * off + v[i]);
  }
  // Neumann at the inner edge (psi_{-1} = psi_0), Dirichlet outside.
  b[0] += a[0];
  // Guard against a non-positive pivot from very negative potentials.
  for (std::size_t i = 0; i < n; ++i)
    if (b[i] < 0.1) return {};
  std::vector<double> cp(n), dp(n);
  cp[0] = cc[0] / b[0];
  dp[0] = d[0] / b[0];
  for (std::size_t i = 1; i < n; ++i) {
    const double m = b[i] - a[i] * cp[i - 1];
    cp[i] = cc[i] / m;
    dp[i] = (d[i] - a[i] * dp[i - 1]) / m;
  }
  std::vector<double> out(n);
  out[n - 1] = dp[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) out[i] = dp[i] - cp[i] * out[i + 1];
  return out;
}

}  // namespace

double weizsaecker_term(const RadialDensity& rho, double lambda) {
  std::vector<double> psi(rho.values().size());
  for (std::size_t i = 0; i < psi.size(); ++i)
    psi[i] = std::sqrt(rho.values()[i]);
  auto dpsi = radial_derivative(rho.grid(), psi);
  const auto& r = rho.grid().nodes();
  std::vector<double> integrand(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i)
    integrand[i] = 4.0 * pi * r[i] * r[i] * dpsi[i] * dpsi[i];
  return 0.5 * lambda * integrate_radial(rho.grid(), integrand);
}

double tfw_energy(const RadialDensity& rho, double z, double lambda,
                  const tf::TfConstants& c) {
  if (lambda <= 0.0) throw std::invalid_argument("tfw_energy: lambda > 0");
  return weizsaecker_term(rho, lambda) + tf::tf_energy(rho, z, c);
}

TfwSolution minimize_tfw(double z, double n_electrons, double lambda,
                         const RadialGrid& grid, const TfwOptions& opt,
                         const tf::TfConstants& c) {
  if (lambda <= 0.0 || z <= 0.0 || n_electrons <= 0.0)
    throw std::invalid_argument("minimize_tfw: need Z, N, lambda > 0");
  Workspace ws(grid);
  const std::size_t n = grid.size();
  const auto& r = ws.r;

  // Hydrogenic start.
  std::vector<double> psi(n);
  for (std::size_t i = 0; i < n; ++i) psi[i] = std::exp(-0.8 * z * r[i]);
  {
    const double m = ws.mass(psi);
    const double s = std::sqrt(n_electrons / m);
    for (auto& p : psi) p *= s;
  }

  double dt = opt.dt0;
  double energy = flow_energy(ws, psi, z, lambda, c);
  std::vector<double> rho(n);
  double mu = 0.0, residual = 0.0;
  double max_increase = 0.0;
  int iter = 0;
  int stalled = 0;
  double best_residual = 1e300;
  for (; iter < opt.max_iterations; ++iter) {
    for (std::size_t i = 0; i < n; ++i) rho[i] = psi[i] * psi[i];
    auto v = effective_potential(ws, rho, z, c);

    // Chemical potential and Euler residual of the current iterate.
    auto lap = radial_laplacian(r, psi, ws.dt_log);
    double num = 0.0;
    std::vector<double> hpsi(n);
    for (std::size_t i = 0; i < n; ++i) {
      hpsi[i] = -0.5 * lambda * lap[i] + v[i] * psi[i];
      num += ws.w4pir2[i] * psi[i] * hpsi[i];
    }
    mu = -num / n_electrons;
    double res2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double g = hpsi[i] + mu * psi[i];
      res2 += ws.w4pir2[i] * g * g;
    }
    residual = std::sqrt(res2 / n_electrons);
    if (residual < opt.tol) break;
    if (residual < best_residual * (1.0 - 1e-9)) {
      best_residual = residual;
      stalled = 0;
    } else if (++stalled > 2000) {
      break;  // plateau; classified below
    }

    auto trial = implicit_step(ws, psi, v, lambda, dt);
    if (trial.empty()) {
      dt *= 0.5;
      continue;
    }
    const double m = ws.mass(trial);
    if (!(m > 0.0)) {
      dt *= 0.5;
      continue;
    }
    const double s = std::sqrt(n_electrons / m);
    for (auto& p : trial) p *= s;
    const double trial_energy = flow_energy(ws, trial, z, lambda, c);
    if (trial_energy <= energy + 1e-12 * (1.0 + std::abs(energy))) {
      max_increase = std::max(max_increase, trial_energy - energy);
      psi = std::move(trial);
      energy = trial_energy;
      dt = std::min(dt * 1.1, 1e3);
    } else {
      dt *= 0.5;
      if (dt < 1e-14) break;
    }
  }

  for (std::size_t i = 0; i < n; ++i) rho[i] = std::abs(psi[i]) * std::abs(psi[i]);
  RadialDensity density(grid, rho);

  // Mass piling up at the outer boundary signals a supercritical N.
  double outer = 0.0;
  const std::size_t tail_start = n - n / 20;
  for (std::size_t i = tail_start; i < n; ++i)
    outer += ws.w4pir2[i] * rho[i];
  const bool leaked = outer > 0.01 * n_electrons;
  const bool converged = residual < opt.tol;
  const bool bound = converged && mu > -1e-8 && !leaked;

  TfwSolution sol{std::move(density), std::move(psi), mu,    lambda,
                  energy,  residual,  bound,          iter,  max_increase};
  if (!bound && opt.throw_on_failure) {
    if (!converged && !leaked)
      throw std::runtime_error("minimize_tfw: flow did not converge");
  }
  return sol;
}

TfwSolution minimize_tfw(double z, double n_electrons, double lambda,
                         const TfwOptions& opt, const tf::TfConstants& c) {
  return minimize_tfw(z, n_electrons, lambda, RadialGrid::make_default(), opt,
                      c);
}

double excess_charge_cap(double z, double lambda, const tf::TfConstants& c) {
  return z + 270.74 * std::pow(lambda / (2.0 * c.gamma), 1.5);
}

CriticalCharge critical_charge(double z, double lambda, const RadialGrid& grid,
                               double tol, const tf::TfConstants& c) {
  TfwOptions opt;
  opt.throw_on_failure = false;
  auto is_bound = [&](double n_electrons) {
    return minimize_tfw(z, n_electrons, lambda, grid, opt, c).bound;
  };
  double lo = z;
  if (!is_bound(lo))
    throw std::runtime_error("critical_charge: neutral atom not bound");
  double hi = std::min(excess_charge_cap(z, lambda, c), 2.0 * z * (1.0 - 1e-9));
  if (is_bound(hi)) return {hi, hi};  // cap itself bound: degenerate bracket
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (is_bound(mid))
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

CriticalCharge critical_charge(double z, double lambda, double tol,
                               const tf::TfConstants& c) {
  return critical_charge(z, lambda, RadialGrid::make_default(), tol, c);
}

}  // namespace dfta::tfw
