#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmtrj/math.hpp"
#include "gmtrj/rng.hpp"

namespace gmtrj {

using Params = std::vector<double>;

// Current state of a transdimensional chain: model index (1-based) plus that
// model's parameter vector.
struct ChainState {
  int model = 1;
  Params params;

  bool operator==(const ChainState& o) const = default;
};

// log f(y|m,theta) p(theta|m) p(m), up to one additive constant shared by all
// (m, theta) pairs of a run. Out-of-support states return log_zero(), never NaN.
class TargetDensity {
 public:
  virtual ~TargetDensity() = default;
  virtual double log_target(const ChainState& state) const = 0;
};

// The model graph: per-model dimension, reachable neighbors and the move
// distribution j(m, m'). Jump probabilities over neighbors sum to 1.
class ModelSpace {
 public:
  virtual ~ModelSpace() = default;
  virtual int model_count() const = 0;
  virtual int dim(int model) const = 0;
  virtual std::vector<int> neighbors(int model) const = 0;
  virtual double jump_prob(int from, int to) const = 0;

  // Carry shared coordinates of `params` from one model into another, new
  // coordinates at their pad value (0). Default handles equal dimensions only.
  virtual Params embed(const Params& params, int from_model, int to_model) const {
    if (dim(from_model) != dim(to_model))
      throw std::logic_error("ModelSpace::embed: dimension change requires an override");
    (void)from_model;
    (void)to_model;
    return params;
  }

  int sample_jump(RngStream& rng, int from) const {
    auto nbrs = neighbors(from);
    if (nbrs.empty()) throw std::logic_error("ModelSpace: model has no neighbors");
    double u = rng.uniform();
    double acc = 0.0;
    for (int m : nbrs) {
      acc += jump_prob(from, m);
      if (u < acc) return m;
    }
    return nbrs.back();
  }

  double log_jump_prob(int from, int to) const {
    double p = jump_prob(from, to);
    return p > 0.0 ? std::log(p) : log_zero();
  }
};

// Draws a candidate in `to_model` given the current state, returning the exact
// log density of the random numbers consumed. Deterministic moves (e.g. the
// coordinate-dropping half of a nested jump) have log density 0.
class ProposalKernel {
 public:
  virtual ~ProposalKernel() = default;

  struct Draw {
    ChainState state;
    double log_density = 0.0;
  };

  virtual Draw propose(RngStream& rng, const ChainState& from, int to_model) const = 0;
  virtual double log_density(const ChainState& from, const ChainState& to) const = 0;
};

// Jacobian bookkeeping for the realized transition; identity maps return 0.
class JumpMap {
 public:
  virtual ~JumpMap() = default;
  virtual double log_abs_jacobian(const ChainState& from, const ChainState& to) const = 0;
};

class IdentityJumpMap final : public JumpMap {
 public:
  double log_abs_jacobian(const ChainState&, const ChainState&) const override { return 0.0; }
};

// ---------------------------------------------------------------------------
// Nested pad/drop transform: going up inserts the auxiliary scalar at
// `insert_pos`, going down extracts it. d(theta)+d(u) is conserved and
// |J| = 1 in both directions.

struct JumpTransformResult {
  Params params;
  Params aux;
  double log_abs_jacobian = 0.0;
};

inline JumpTransformResult nested_insert(const Params& theta, const Params& u, std::size_t insert_pos) {
  if (u.size() != 1) throw std::invalid_argument("nested_insert: expected a single auxiliary coordinate");
  if (insert_pos > theta.size()) throw std::invalid_argument("nested_insert: position out of range");
  JumpTransformResult r;
  r.params = theta;
  r.params.insert(r.params.begin() + static_cast<std::ptrdiff_t>(insert_pos), u[0]);
  r.log_abs_jacobian = 0.0;
  return r;
}

inline JumpTransformResult nested_drop(const Params& theta, std::size_t drop_pos) {
  if (drop_pos >= theta.size()) throw std::invalid_argument("nested_drop: position out of range");
  JumpTransformResult r;
  r.params = theta;
  r.aux = {theta[drop_pos]};
  r.params.erase(r.params.begin() + static_cast<std::ptrdiff_t>(drop_pos));
  r.log_abs_jacobian = 0.0;
  return r;
}

}  // namespace gmtrj
