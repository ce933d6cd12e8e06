#ifndef DFTATOMS_APPENDIX_HPP
#define DFTATOMS_APPENDIX_HPP

namespace dfta::appendix {

struct MaximalFunctionQuery {
  double alpha = 1.0;  // in [0, d)
  int dimension = 3;   // 1, 2, or 3
};

/// Hardy-Littlewood maximal function of |.|^(-alpha) at |x| = x_norm:
/// sup_R (int_{B_R(x)} |y|^(-alpha) dy) / (omega_d R^d), by a log scan
/// over R with golden-section refinement. Throws for alpha >= d.
double maximal_function_power(const MaximalFunctionQuery& query,
                              double x_norm);

/// Infimum of int [ (3/5) gamma rho^(5/3) - C sqrt(Z/|x|) rho ] over
/// {rho >= 0, int rho <= Z}: pointwise stationarity
/// gamma rho^(2/3) = (C sqrt(Z/r) - mu)_+ with mu from the mass budget.
double scaled_infimum(double gamma, double z, double coupling);

}  // namespace dfta::appendix

#endif
