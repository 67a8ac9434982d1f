#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace gmtrj {

// Log-space zero sentinel. All densities in this library live in log space;
// states outside the support carry log_zero() instead of NaN so callers can
// branch on is_log_zero() before doing arithmetic.
inline constexpr double log_zero() { return -std::numeric_limits<double>::infinity(); }

inline bool is_log_zero(double x) { return std::isinf(x) && x < 0.0; }

inline constexpr double pi() { return 3.141592653589793238462643383279502884; }

// logsumexp with max subtraction; log_zero() entries contribute nothing.
inline double log_sum_exp(std::span<const double> xs) {
  double m = log_zero();
  for (double x : xs) m = std::max(m, x);
  if (is_log_zero(m)) return log_zero();
  double s = 0.0;
  for (double x : xs) {
    if (!is_log_zero(x)) s += std::exp(x - m);
  }
  return m + std::log(s);
}

inline double log_sum_exp(const std::vector<double>& xs) {
  return log_sum_exp(std::span<const double>(xs));
}

inline double log_sum_exp(double a, double b) {
  if (is_log_zero(a)) return b;
  if (is_log_zero(b)) return a;
  double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

// Normalized probabilities from log weights (max-subtracted). All-log_zero
// input yields an empty vector; callers treat that as a degenerate trial set.
inline std::vector<double> normalized_weights(std::span<const double> log_w) {
  double lse = log_sum_exp(log_w);
  if (is_log_zero(lse)) return {};
  std::vector<double> p(log_w.size());
  for (std::size_t i = 0; i < log_w.size(); ++i)
    p[i] = is_log_zero(log_w[i]) ? 0.0 : std::exp(log_w[i] - lse);
  return p;
}

inline double log_sigmoid(double x) {
  if (x >= 0.0) return -std::log1p(std::exp(-x));
  return x - std::log1p(std::exp(x));
}

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

inline double log_normal_pdf(double x, double mean, double variance) {
  double d = x - mean;
  return -0.5 * (std::log(2.0 * pi() * variance) + d * d / variance);
}

inline double lbeta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Beta(a,b) log density on (0,1); log_zero() outside.
inline double log_beta_pdf(double x, double a, double b) {
  if (!(x > 0.0 && x < 1.0)) return log_zero();
  return (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - lbeta(a, b);
}

inline double log_binomial_pmf_unnorm(double y, double n, double log_p, double log_1mp) {
  // binomial coefficient dropped; it cancels in every ratio we form
  return y * log_p + (n - y) * log_1mp;
}

}  // namespace gmtrj
