// Simple-linear-regression machinery: ordinary least squares for y on x and
// the two-sided slope t-test. The Student-t tail is computed from the
// regularized incomplete beta function so no external math library is needed.
#pragma once

#include <Eigen/Core>

#include "radcal/error.hpp"

namespace radcal {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  long n = 0;

  double predict(double x) const { return slope * x + intercept; }
};

// OLS of y on x. Throws DegenerateFit when x is constant; needs n >= 2.
LinearFit fit_line(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1].
double regularized_incomplete_beta(double a, double b, double x);

// Two-sided p-value of t with the given degrees of freedom.
double students_t_two_sided_p(double t, long degrees_of_freedom);

// Two-sided critical t value (inverse of the above at probability alpha).
double students_t_critical(double alpha, long degrees_of_freedom);

// p-value for H0: slope = 0, using df = n - 2. Needs n >= 3.
double slope_p_value(const LinearFit& fit);

}  // namespace radcal
