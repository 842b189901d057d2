#pragma once

#include <span>

namespace distlearn {

double mean(std::span<const double> xs);
// n - 1 denominator; 0 for a single value.
double sample_std(std::span<const double> xs);

struct StatTestResult {
  double t_statistic = 0.0;  // may be +-infinity when the pooled variance is 0
  double degrees_of_freedom = 0.0;
  double p_value = 1.0;      // two-sided
  double cohens_d = 0.0;
  bool paired = false;

  bool operator==(const StatTestResult&) const = default;
};

// Pooled-variance Student t with df = n1 + n2 - 2. Positive when mean(a) > mean(b).
StatTestResult two_sample_t(std::span<const double> a, std::span<const double> b);
// Paired t over a[i] - b[i], df = n - 1. Cohen's d stays the pooled form.
StatTestResult paired_t(std::span<const double> a, std::span<const double> b);

// |mean(a) - mean(b)| / pooled std with n - 1 weights.
double cohens_d(std::span<const double> a, std::span<const double> b);

// I_x(a, b) by the Lentz continued fraction.
double regularized_incomplete_beta(double a, double b, double x);
double student_t_cdf(double t, double df);
double student_t_two_sided_p(double t, double df);

}  // namespace distlearn
