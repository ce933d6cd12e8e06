#include "dftatoms/engel_dreizler.hpp"

#include <cmath>
#include <stdexcept>

#include "dftatoms/hartree.hpp"

namespace dfta::ed {

namespace {

double arsinh(double t) {
  if (t < 1e-4) {
    const double t2 = t * t;
    return t * (1.0 + t2 * (-1.0 / 6.0 + t2 * (3.0 / 40.0 - t2 * 15.0 / 336.0)));
  }
  return std::log(t + std::sqrt(t * t + 1.0));
}

}  // namespace

EdKernels ed_kernels(double t) {
  if (t < 0.0) throw std::domain_error("ed_kernels: t must be >= 0");
  EdKernels k;
  const double t2 = t * t;
  if (t < 0.08) {
    // ttf = (4/5)t^5 - (1/7)t^7 + (1/18)t^9 - (5/176)t^11 + ...
    k.ttf = std::pow(t, 5) *
            (0.8 + t2 * (-1.0 / 7.0 + t2 * (1.0 / 18.0 - t2 * 5.0 / 176.0)));
    // x = 2t^4 - (4/3)t^6 + (4/5)t^8 - (96/175)t^10 + (128/315)t^12 - ...
    k.x = std::pow(t, 4) *
          (2.0 + t2 * (-4.0 / 3.0 +
                       t2 * (0.8 + t2 * (-96.0 / 175.0 + t2 * 128.0 / 315.0))));
    // f2 = t + (3/2)t^3 - (47/24)t^5 + (521/240)t^7 - ...
    k.f2 = t * (1.0 + t2 * (1.5 + t2 * (-47.0 / 24.0 + t2 * 521.0 / 240.0)));
    return k;
  }
  const double root = std::sqrt(t2 + 1.0);
  const double ash = arsinh(t);
  k.f2 = t / root + 2.0 * t2 / (t2 + 1.0) * ash;
  k.ttf = t * root * root * root + t * t2 * root - ash - (8.0 / 3.0) * t * t2;
  const double bracket = t * root - ash;
  k.x = 2.0 * t2 * t2 - 3.0 * bracket * bracket;
  return k;
}

EdTerms ed_energy_terms(const RadialDensity& rho, const EdParams& params) {
  if (params.c <= 0.0 || params.lambda <= 0.0 || params.z < 0.0)
    throw std::invalid_argument("ed_energy: need c > 0, lambda > 0, Z >= 0");
  const auto& grid = rho.grid();
  const auto& r = grid.nodes();
  const std::size_t n = grid.size();
  const double c = params.c;

  // Fermi momentum p(r) = (3 pi^2 rho)^(1/3) and its radial gradient.
  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i)
    p[i] = std::cbrt(3.0 * pi * pi * rho.values()[i]);
  auto dp = radial_derivative(grid, p);

  std::vector<double> w_term(n), tf_term(n), x_term(n), ext(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double vol = 4.0 * pi * r[i] * r[i];
    const auto kern = ed_kernels(p[i] / c);
    w_term[i] = vol * (3.0 * params.lambda / (8.0 * pi * pi)) * dp[i] * dp[i] *
                c * kern.f2;
    tf_term[i] = vol * std::pow(c, 5) / (8.0 * pi * pi) * kern.ttf;
    x_term[i] = vol * std::pow(c, 4) / (8.0 * pi * pi * pi) * kern.x;
    ext[i] = -params.z * vol * rho.values()[i] / r[i];
  }
  EdTerms terms;
  terms.weizsaecker = integrate_radial(grid, w_term);
  terms.kinetic = integrate_radial(grid, tf_term);
  terms.exchange = integrate_radial(grid, x_term);
  terms.potential = integrate_radial(grid, ext) + coulomb_self(rho);
  return terms;
}

double ed_energy(const RadialDensity& rho, const EdParams& params) {
  return ed_energy_terms(rho, params).total();
}

}  // namespace dfta::ed
