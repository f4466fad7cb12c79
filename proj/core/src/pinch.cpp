#include "necklab/pinch.hpp"

#include <stdexcept>

namespace necklab {

double weighted_pinch_lambda(const Eigen::MatrixXd& h, const Eigen::MatrixXd& ric,
                             double rho) {
  Eigen::MatrixXd m = ric - rho * Eigen::MatrixXd::Identity(ric.rows(), ric.cols());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument("weighted_pinch_lambda: Ric - rho g not positive definite");
  Eigen::MatrixXd inv_sqrt = es.operatorInverseSqrt();
  Eigen::MatrixXd w = inv_sqrt * 0.5 * (h + h.transpose()) * inv_sqrt;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ew(w);
  return ew.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace necklab
