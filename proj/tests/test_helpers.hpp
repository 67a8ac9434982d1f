#pragma once

#include <cmath>
#include <vector>

#include "gmtrj/core.hpp"
#include "gmtrj/quad.hpp"

namespace gmtrj::testing {

// Single-model Gaussian target with diagonal covariance, optional additive
// offset so constant-invariance can be exercised.
class GaussianTarget final : public TargetDensity, public CurvatureSource {
 public:
  GaussianTarget(std::vector<double> mean, std::vector<double> variance, double offset = 0.0)
      : mean_(std::move(mean)), var_(std::move(variance)), offset_(offset) {}

  double log_target(const ChainState& s) const override {
    double lp = offset_;
    for (std::size_t i = 0; i < mean_.size(); ++i) {
      double d = s.params[i] - mean_[i];
      lp += -0.5 * d * d / var_[i];
    }
    return lp;
  }

  LocalExpansion expansion_at(int, const Params& anchor) const override {
    const auto d = static_cast<Eigen::Index>(anchor.size());
    LocalExpansion e;
    e.anchor = Eigen::Map<const Eigen::VectorXd>(anchor.data(), d);
    e.score.resize(d);
    e.curvature = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      e.score(i) = -(anchor[static_cast<std::size_t>(i)] - mean_[static_cast<std::size_t>(i)]) /
                   var_[static_cast<std::size_t>(i)];
      e.curvature(i, i) = -1.0 / var_[static_cast<std::size_t>(i)];
    }
    return e;
  }

 private:
  std::vector<double> mean_;
  std::vector<double> var_;
  double offset_;
};

// Symmetric Gaussian random walk within the current model.
class RandomWalkProposal final : public ProposalKernel {
 public:
  explicit RandomWalkProposal(double sigma) : sigma_(sigma) {}

  Draw propose(RngStream& rng, const ChainState& from, int to_model) const override {
    ChainState out{to_model, from.params};
    double ld = 0.0;
    for (double& v : out.params) {
      double next = rng.normal(v, sigma_);
      ld += log_normal_pdf(next, v, sigma_ * sigma_);
      v = next;
    }
    return {out, ld};
  }

  double log_density(const ChainState& from, const ChainState& to) const override {
    double ld = 0.0;
    for (std::size_t i = 0; i < from.params.size(); ++i)
      ld += log_normal_pdf(to.params[i], from.params[i], sigma_ * sigma_);
    return ld;
  }

 private:
  double sigma_;
};

}  // namespace gmtrj::testing
