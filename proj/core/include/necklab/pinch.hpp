#pragma once

#include <Eigen/Dense>

namespace necklab {

// Weighted pinch quantity: lambda = inf{ l > 0 : -l(Ric - rho g) <= h <= l(Ric - rho g) },
// which in closed form is the spectral radius of M^{-1/2} h M^{-1/2} with
// M = Ric - rho I. Requires M positive definite.
double weighted_pinch_lambda(const Eigen::MatrixXd& h, const Eigen::MatrixXd& ric,
                             double rho);

// psi = e^{2 rho t} * lambda.
inline double weighted_pinch_norm(const Eigen::MatrixXd& h, const Eigen::MatrixXd& ric,
                                  double rho, double t) {
  return std::exp(2.0 * rho * t) * weighted_pinch_lambda(h, ric, rho);
}

}  // namespace necklab
