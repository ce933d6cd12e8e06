#include "dftatoms/bathtub.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dfta {

BathtubResult bathtub_fill(const std::vector<double>& levels,
                           const std::vector<double>& measures, double cap,
                           double total) {
  if (levels.empty() || levels.size() != measures.size())
    throw std::invalid_argument("bathtub_fill: bad input lengths");
  if (cap <= 0.0) throw std::invalid_argument("bathtub_fill: cap must be > 0");
  double capacity = 0.0;
  for (double m : measures) {
    if (!(m > 0.0))
      throw std::invalid_argument("bathtub_fill: measures must be > 0");
    capacity += m;
  }
  capacity *= cap;
  const double slack = 1e-12 * std::max(1.0, capacity);
  if (total < -slack || total > capacity + slack)
    throw std::domain_error("bathtub_fill: total outside [0, cap*sum(m)]");
  total = std::min(std::max(total, 0.0), capacity);

  std::vector<std::size_t> order(levels.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return levels[a] < levels[b];
  });

  std::vector<double> occ(levels.size(), 0.0);
  double remaining = total;
  double fermi = levels[order.front()];
  for (std::size_t k : order) {
    if (remaining <= 0.0) break;
    const double take = std::min(cap * measures[k], remaining);
    occ[k] = take / measures[k];
    remaining -= take;
    fermi = levels[k];
  }
  return {std::move(occ), fermi};
}

std::vector<double> project_capped_simplex(const std::vector<double>& x,
                                           double cap, double total) {
  if (x.empty()) throw std::invalid_argument("project_capped_simplex: empty");
  if (total < -1e-12 || total > cap * x.size() + 1e-12)
    throw std::domain_error("project_capped_simplex: infeasible total");
  auto mass = [&](double theta) {
    double s = 0.0;
    for (double xi : x) s += std::clamp(xi - theta, 0.0, cap);
    return s;
  };
  // mass(theta) is piecewise linear, nonincreasing; breakpoints are
  // x_i and x_i - cap.
  std::vector<double> bp;
  bp.reserve(2 * x.size());
  for (double xi : x) {
    bp.push_back(xi);
    bp.push_back(xi - cap);
  }
  std::sort(bp.begin(), bp.end());
  double lo = bp.front(), hi = bp.back();
  if (mass(lo) <= total) hi = lo;
  // Locate the segment containing the solution.
  std::size_t a = 0, b = bp.size() - 1;
  while (b - a > 1) {
    std::size_t mid = (a + b) / 2;
    if (mass(bp[mid]) >= total)
      a = mid;
    else
      b = mid;
  }
  lo = bp[a];
  hi = bp[b];
  // Linear interpolation on the segment (exact for piecewise linear).
  const double mlo = mass(lo), mhi = mass(hi);
  double theta;
  if (std::abs(mlo - mhi) < 1e-300)
    theta = lo;
  else
    theta = lo + (mlo - total) * (hi - lo) / (mlo - mhi);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    y[i] = std::clamp(x[i] - theta, 0.0, cap);
  // One Newton-style correction pass for roundoff.
  double s = 0.0;
  for (double yi : y) s += yi;
  double free_count = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] > 0.0 && y[i] < cap) free_count += 1.0;
  if (free_count > 0.0) {
    const double corr = (total - s) / free_count;
    for (auto& yi : y)
      if (yi > 0.0 && yi < cap) yi = std::clamp(yi + corr, 0.0, cap);
  }
  return y;
}

}  // namespace dfta
