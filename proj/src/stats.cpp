#include "radcal/stats.hpp"

#include <cmath>
#include <limits>

namespace radcal {

LinearFit fit_line(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  if (x.size() != y.size())
    raise(ErrorCode::InvalidArgument, "fit vectors must have equal length");
  const long n = static_cast<long>(x.size());
  if (n < 2)
    raise(ErrorCode::InvalidArgument, "linear fit needs at least two points");

  const double x_mean = x.mean();
  const double y_mean = y.mean();
  const Eigen::ArrayXd dx = x.array() - x_mean;
  const double sxx = dx.square().sum();
  if (sxx == 0.0)
    raise(ErrorCode::DegenerateFit, "x values are all equal");
  const double sxy = (dx * (y.array() - y_mean)).sum();

  LinearFit fit;
  fit.n = n;
  fit.slope = sxy / sxx;
  fit.intercept = y_mean - fit.slope * x_mean;
  if (n > 2) {
    const Eigen::ArrayXd residual =
        y.array() - (fit.slope * x.array() + fit.intercept);
    const double sse = residual.square().sum();
    fit.slope_stderr = std::sqrt(sse / static_cast<double>(n - 2) / sxx);
  }
  return fit;
}

namespace {

// Continued-fraction evaluation (modified Lentz) for the incomplete beta.
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 300;
  constexpr double kEpsilon = 1e-15;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEpsilon) break;
  }
  return h;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (a <= 0.0 || b <= 0.0)
    raise(ErrorCode::InvalidArgument, "incomplete beta needs positive parameters");
  if (x < 0.0 || x > 1.0)
    raise(ErrorCode::InvalidArgument, "incomplete beta argument outside [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  // Use the symmetry relation to keep the continued fraction convergent.
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double students_t_two_sided_p(double t, long degrees_of_freedom) {
  if (degrees_of_freedom < 1)
    raise(ErrorCode::InvalidArgument, "t-test needs at least one degree of freedom");
  const double df = static_cast<double>(degrees_of_freedom);
  const double x = df / (df + t * t);
  return regularized_incomplete_beta(df / 2.0, 0.5, x);
}

double students_t_critical(double alpha, long degrees_of_freedom) {
  if (alpha <= 0.0 || alpha >= 1.0)
    raise(ErrorCode::InvalidArgument, "alpha must lie in (0, 1)");
  // Bisection on the monotone two-sided tail.
  double lo = 0.0;
  double hi = 1.0;
  while (students_t_two_sided_p(hi, degrees_of_freedom) > alpha) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (students_t_two_sided_p(mid, degrees_of_freedom) > alpha)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double slope_p_value(const LinearFit& fit) {
  if (fit.n < 3)
    raise(ErrorCode::InvalidArgument, "slope test needs at least three points");
  if (fit.slope_stderr == 0.0) return fit.slope == 0.0 ? 1.0 : 0.0;
  return students_t_two_sided_p(fit.slope / fit.slope_stderr, fit.n - 2);
}

}  // namespace radcal
