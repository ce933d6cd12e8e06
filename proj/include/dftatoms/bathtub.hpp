#ifndef DFTATOMS_BATHTUB_HPP
#define DFTATOMS_BATHTUB_HPP

#include <vector>

namespace dfta {

struct BathtubResult {
  std::vector<double> occupations;  // in [0, cap]
  double fermi_level;
};

/// Bathtub principle: minimize sum_i levels_i occ_i m_i over
/// {0 <= occ <= cap, sum_i occ_i m_i = total} by filling the lowest
/// levels to the cap first. Throws std::domain_error when total is
/// outside [0, cap * sum m].
BathtubResult bathtub_fill(const std::vector<double>& levels,
                           const std::vector<double>& measures, double cap,
                           double total);

/// Euclidean projection of x onto {y : 0 <= y_i <= cap, sum y_i = total},
/// i.e. y_i = clamp(x_i - theta, 0, cap) with theta from an exact
/// breakpoint search.
std::vector<double> project_capped_simplex(const std::vector<double>& x,
                                           double cap, double total);

}  // namespace dfta

#endif
