// Regression goodness metrics: coefficient of determination and mean
// absolute percentage error.
#pragma once

#include <Eigen/Core>

#include "radcal/error.hpp"

namespace radcal {

// R^2 = 1 - sum((pred - actual)^2) / sum((actual - mean)^2). May be negative.
// Throws ZeroVariance when the actual values are all equal.
double r_squared(const Eigen::VectorXd& predicted, const Eigen::VectorXd& actual);

// MAPE = mean(|pred - actual| / |actual|) * 100. Throws ZeroActual when any
// actual value is zero.
double mape(const Eigen::VectorXd& predicted, const Eigen::VectorXd& actual);

}  // namespace radcal
