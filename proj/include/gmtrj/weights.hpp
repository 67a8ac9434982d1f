#pragma once

#include <functional>
#include <memory>
#include <string>

#include "gmtrj/core.hpp"
#include "gmtrj/quad.hpp"

namespace gmtrj {

// One proposed candidate together with the proposal log densities in both
// directions (anchor -> candidate and candidate -> anchor), model-choice
// factors included.
struct Trial {
  ChainState state;
  double log_t_fwd = 0.0;
  double log_t_rev = 0.0;
};

// Selection-weight rule w*(candidate, anchor) > 0. prepare() is called once
// per trial set with the set's anchor; schemes that precompute (the quadratic
// expansion) hook it, the rest ignore it.
class WeightScheme {
 public:
  virtual ~WeightScheme() = default;
  virtual std::string name() const = 0;
  virtual void prepare(const ChainState& anchor, int dest_model) { (void)anchor; (void)dest_model; }
  virtual double log_weight(const Trial& t) const = 0;
};

// w* = pi(y) T(y, x)
class MtmIWeights final : public WeightScheme {
 public:
  explicit MtmIWeights(const TargetDensity& target) : target_(&target) {}
  std::string name() const override { return "mtm_i"; }
  double log_weight(const Trial& t) const override {
    double lp = target_->log_target(t.state);
    if (is_log_zero(lp)) return log_zero();
    return lp + t.log_t_rev;
  }

 private:
  const TargetDensity* target_;
};

// w* = pi(y) / T(x, y)
class MtmInvWeights final : public WeightScheme {
 public:
  explicit MtmInvWeights(const TargetDensity& target) : target_(&target) {}
  std::string name() const override { return "mtm_inv"; }
  double log_weight(const Trial& t) const override {
    double lp = target_->log_target(t.state);
    if (is_log_zero(lp)) return log_zero();
    return lp - t.log_t_fwd;
  }

 private:
  const TargetDensity* target_;
};

// w* = 1: selection uniform among trials.
class UniformWeights final : public WeightScheme {
 public:
  std::string name() const override { return "uniform"; }
  double log_weight(const Trial&) const override { return 0.0; }
};

// w* = pi*(y) / T(x, y), pi* the quadratic approximation of the target
// expanded at the anchor embedded into the destination model.
class QuadWeights final : public WeightScheme {
 public:
  QuadWeights(const CurvatureSource& curvature, const ModelSpace& space)
      : curvature_(&curvature), space_(&space) {}

  std::string name() const override { return "quad"; }

  void prepare(const ChainState& anchor, int dest_model) override {
    Params embedded = space_->embed(anchor.params, anchor.model, dest_model);
    expansion_ = curvature_->expansion_at(dest_model, embedded);
  }

  double log_weight(const Trial& t) const override {
    return quad_log_weight(expansion_, t.state.params, t.log_t_fwd);
  }

 private:
  const CurvatureSource* curvature_;
  const ModelSpace* space_;
  LocalExpansion expansion_;
};

// Arbitrary positive weight supplied as a function of the candidate state;
// stands in for likelihood-surrogate rules on toy spaces and in tests.
class SurrogateWeights final : public WeightScheme {
 public:
  SurrogateWeights(std::string name, std::function<double(const ChainState&)> log_w)
      : name_(std::move(name)), log_w_(std::move(log_w)) {}
  std::string name() const override { return name_; }
  double log_weight(const Trial& t) const override { return log_w_(t.state); }

 private:
  std::string name_;
  std::function<double(const ChainState&)> log_w_;
};

}  // namespace gmtrj
