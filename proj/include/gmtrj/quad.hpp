#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "gmtrj/core.hpp"

namespace gmtrj {

// Second-order expansion of the log target at an anchor point: score s and
// curvature D (Hessian of log pi). The quadratic selection weights replace
// per-trial target evaluations with one expansion per trial set.
struct LocalExpansion {
  Eigen::VectorXd anchor;
  Eigen::VectorXd score;
  Eigen::MatrixXd curvature;
};

// Models that expose analytic derivatives of their log posterior.
class CurvatureSource {
 public:
  virtual ~CurvatureSource() = default;
  virtual LocalExpansion expansion_at(int model, const Params& anchor) const = 0;
};

// log A(candidate, anchor) = s' delta + 1/2 delta' D delta, the log of the
// quadratic correction factor; A(anchor, anchor) = 1 exactly.
inline double log_quad_correction(const LocalExpansion& e, const Params& candidate) {
  const auto d = static_cast<Eigen::Index>(candidate.size());
  if (d != e.anchor.size()) throw std::invalid_argument("log_quad_correction: dimension mismatch");
  Eigen::Map<const Eigen::VectorXd> c(candidate.data(), d);
  Eigen::VectorXd delta = c - e.anchor;
  return e.score.dot(delta) + 0.5 * delta.dot(e.curvature * delta);
}

// log of the quadratic selection weight, w* = pi*(candidate) / T(anchor, candidate).
// The common factor pi(anchor) is dropped; it cancels in the normalization.
inline double quad_log_weight(const LocalExpansion& e, const Params& candidate, double log_t_fwd) {
  return log_quad_correction(e, candidate) - log_t_fwd;
}

}  // namespace gmtrj
