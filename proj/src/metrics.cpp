#include "radcal/metrics.hpp"

namespace radcal {

double r_squared(const Eigen::VectorXd& predicted, const Eigen::VectorXd& actual) {
  if (predicted.size() != actual.size())
    raise(ErrorCode::InvalidArgument, "metric vectors must have equal length");
  if (actual.size() < 2)
    raise(ErrorCode::InvalidArgument, "r_squared needs at least two points");
  const double mean = actual.mean();
  const double ss_total = (actual.array() - mean).square().sum();
  if (ss_total == 0.0)
    raise(ErrorCode::ZeroVariance, "actual values are constant");
  const double ss_residual = (predicted - actual).array().square().sum();
  return 1.0 - ss_residual / ss_total;
}

double mape(const Eigen::VectorXd& predicted, const Eigen::VectorXd& actual) {
  if (predicted.size() != actual.size())
    raise(ErrorCode::InvalidArgument, "metric vectors must have equal length");
  if (actual.size() < 1)
    raise(ErrorCode::InvalidArgument, "mape needs at least one point");
  if ((actual.array() == 0.0).any())
    raise(ErrorCode::ZeroActual, "actual values must be nonzero for MAPE");
  return ((predicted - actual).array() / actual.array()).abs().mean() * 100.0;
}

}  // namespace radcal
