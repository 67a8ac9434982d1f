#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "gmtrj/core.hpp"
#include "gmtrj/weights.hpp"

namespace gmtrj {

// How the k trials of a transdimensional step pick their destinations:
// one destination drawn once and shared (the within-parameter multiple-try
// flavor), or one independent destination per trial.
enum class DestinationPolicy { kSameDestination, kVariedDestination };

struct MoveSpec {
  int trial_count = 1;
  DestinationPolicy policy = DestinationPolicy::kSameDestination;
};

struct StepResult {
  ChainState state;
  bool accepted = false;
  // no trial had positive selection weight: distinct from an ordinary
  // rejection in the move accounting
  bool degenerate = false;
};

// Index drawn with probability exp(lw_j - logsumexp(lw)). Cumulative-sum
// inversion on the normalized weights with a single uniform draw.
inline std::size_t select_trial(RngStream& rng, std::span<const double> log_weights) {
  std::vector<double> p = normalized_weights(log_weights);
  if (p.empty()) throw std::domain_error("select_trial: no trial has positive weight");
  double u = rng.uniform();
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    if (u < acc) return i;
  }
  return p.size() - 1;
}

namespace detail {

inline bool accept(RngStream& rng, double log_alpha) {
  if (is_log_zero(log_alpha)) return false;
  if (log_alpha >= 0.0) return true;
  return std::log(rng.uniform_pos()) < log_alpha;
}

}  // namespace detail

// Classic Metropolis-Hastings within a fixed model.
inline StepResult mh_step(RngStream& rng, const ChainState& state, const ProposalKernel& proposal,
                          const TargetDensity& target) {
  auto draw = proposal.propose(rng, state, state.model);
  double log_pi_x = target.log_target(state);
  double log_pi_y = target.log_target(draw.state);
  if (is_log_zero(log_pi_y)) return {state, false, false};
  double log_alpha = log_pi_y + proposal.log_density(draw.state, state)
                   - log_pi_x - draw.log_density;
  if (detail::accept(rng, log_alpha)) return {draw.state, true, false};
  return {state, false, false};
}

// Generalized multiple-try Metropolis within a fixed model: k trials from
// T(x,.), one selected by weight, k-1 reverse trials from T(y,.) with the
// current state as the k-th reverse point.
inline StepResult gmtm_step(RngStream& rng, const ChainState& state, int k,
                            const ProposalKernel& proposal, WeightScheme& weights,
                            const TargetDensity& target) {
  if (k < 1) throw std::invalid_argument("gmtm_step: k must be >= 1");

  std::vector<Trial> fwd(static_cast<std::size_t>(k));
  std::vector<double> lw_fwd(static_cast<std::size_t>(k));
  weights.prepare(state, state.model);
  for (int h = 0; h < k; ++h) {
    auto draw = proposal.propose(rng, state, state.model);
    Trial& t = fwd[static_cast<std::size_t>(h)];
    t.state = std::move(draw.state);
    t.log_t_fwd = draw.log_density;
    t.log_t_rev = proposal.log_density(t.state, state);
    lw_fwd[static_cast<std::size_t>(h)] = weights.log_weight(t);
  }
  double lse_fwd = log_sum_exp(lw_fwd);
  if (is_log_zero(lse_fwd)) return {state, false, true};

  std::size_t sel = select_trial(rng, lw_fwd);
  const Trial& chosen = fwd[sel];
  double log_p_y = lw_fwd[sel] - lse_fwd;

  std::vector<double> lw_rev(static_cast<std::size_t>(k));
  weights.prepare(chosen.state, state.model);
  for (int h = 0; h < k - 1; ++h) {
    auto draw = proposal.propose(rng, chosen.state, state.model);
    Trial t;
    t.state = std::move(draw.state);
    t.log_t_fwd = draw.log_density;
    t.log_t_rev = proposal.log_density(t.state, chosen.state);
    lw_rev[static_cast<std::size_t>(h)] = weights.log_weight(t);
  }
  Trial back{state, proposal.log_density(chosen.state, state), chosen.log_t_fwd};
  lw_rev[static_cast<std::size_t>(k - 1)] = weights.log_weight(back);

  double lse_rev = log_sum_exp(lw_rev);
  if (is_log_zero(lse_rev)) return {state, false, true};
  double log_p_x = lw_rev[static_cast<std::size_t>(k - 1)] - lse_rev;

  double log_pi_x = target.log_target(state);
  double log_pi_y = target.log_target(chosen.state);
  if (is_log_zero(log_pi_y)) return {state, false, false};

  double log_alpha = log_pi_y + back.log_t_fwd + log_p_x
                   - log_pi_x - chosen.log_t_fwd - log_p_y;
  if (detail::accept(rng, log_alpha)) return {chosen.state, true, false};
  return {state, false, false};
}

// Reversible jump step: candidate model from j(m,.), one proposal draw,
// accept with the dimension-matching ratio including the Jacobian.
inline StepResult rj_step(RngStream& rng, const ChainState& state, const ModelSpace& space,
                          const ProposalKernel& proposal, const JumpMap& jump,
                          const TargetDensity& target) {
  int dest = space.sample_jump(rng, state.model);
  auto draw = proposal.propose(rng, state, dest);
  double log_pi_y = target.log_target(draw.state);
  if (is_log_zero(log_pi_y)) return {state, false, false};
  double log_pi_x = target.log_target(state);
  double log_alpha = log_pi_y + space.log_jump_prob(dest, state.model)
                   + proposal.log_density(draw.state, state)
                   - log_pi_x - space.log_jump_prob(state.model, dest) - draw.log_density
                   + jump.log_abs_jacobian(state, draw.state);
  if (detail::accept(rng, log_alpha)) return {draw.state, true, false};
  return {state, false, false};
}

// Generalized multiple-try reversible jump. Destinations follow the MoveSpec
// policy; the reverse trial set is mirrored from the selected candidate and
// always contains the current state as its k-th element.
inline StepResult gmtrj_step(RngStream& rng, const ChainState& state, const MoveSpec& move,
                             const ModelSpace& space, const ProposalKernel& proposal,
                             const JumpMap& jump, WeightScheme& weights,
                             const TargetDensity& target) {
  const int k = move.trial_count;
  if (k < 1) throw std::invalid_argument("gmtrj_step: trial_count must be >= 1");

  const bool same_dest = move.policy == DestinationPolicy::kSameDestination;
  int shared_dest = same_dest ? space.sample_jump(rng, state.model) : 0;

  std::vector<Trial> fwd(static_cast<std::size_t>(k));
  std::vector<double> lw_fwd(static_cast<std::size_t>(k));
  if (same_dest) weights.prepare(state, shared_dest);
  for (int h = 0; h < k; ++h) {
    int dest = same_dest ? shared_dest : space.sample_jump(rng, state.model);
    auto draw = proposal.propose(rng, state, dest);
    Trial& t = fwd[static_cast<std::size_t>(h)];
    t.state = std::move(draw.state);
    t.log_t_fwd = space.log_jump_prob(state.model, dest) + draw.log_density;
    t.log_t_rev = space.log_jump_prob(dest, state.model) + proposal.log_density(t.state, state);
    if (!same_dest) weights.prepare(state, dest);
    lw_fwd[static_cast<std::size_t>(h)] = weights.log_weight(t);
  }
  double lse_fwd = log_sum_exp(lw_fwd);
  if (is_log_zero(lse_fwd)) return {state, false, true};

  std::size_t sel = select_trial(rng, lw_fwd);
  const Trial& chosen = fwd[sel];
  double log_p_y = lw_fwd[sel] - lse_fwd;

  std::vector<double> lw_rev(static_cast<std::size_t>(k));
  if (same_dest) weights.prepare(chosen.state, state.model);
  for (int h = 0; h < k - 1; ++h) {
    int dest = same_dest ? state.model : space.sample_jump(rng, chosen.state.model);
    auto draw = proposal.propose(rng, chosen.state, dest);
    Trial t;
    t.state = std::move(draw.state);
    t.log_t_fwd = space.log_jump_prob(chosen.state.model, dest) + draw.log_density;
    t.log_t_rev = space.log_jump_prob(dest, chosen.state.model) + proposal.log_density(t.state, chosen.state);
    if (!same_dest) weights.prepare(chosen.state, dest);
    lw_rev[static_cast<std::size_t>(h)] = weights.log_weight(t);
  }
  Trial back{state,
             space.log_jump_prob(chosen.state.model, state.model) + proposal.log_density(chosen.state, state),
             chosen.log_t_fwd};
  if (!same_dest) weights.prepare(chosen.state, state.model);
  lw_rev[static_cast<std::size_t>(k - 1)] = weights.log_weight(back);

  double lse_rev = log_sum_exp(lw_rev);
  if (is_log_zero(lse_rev)) return {state, false, true};
  double log_p_x = lw_rev[static_cast<std::size_t>(k - 1)] - lse_rev;

  double log_pi_x = target.log_target(state);
  double log_pi_y = target.log_target(chosen.state);
  if (is_log_zero(log_pi_y)) return {state, false, false};

  double log_alpha = log_pi_y + back.log_t_fwd + log_p_x
                   - log_pi_x - chosen.log_t_fwd - log_p_y
                   + jump.log_abs_jacobian(state, chosen.state);
  if (detail::accept(rng, log_alpha)) return {chosen.state, true, false};
  return {state, false, false};
}

}  // namespace gmtrj
