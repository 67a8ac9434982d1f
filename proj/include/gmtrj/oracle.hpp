#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <cstddef>
#include <istream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmtrj/core.hpp"
#include "gmtrj/quad.hpp"
#include "gmtrj/samplers.hpp"
#include "gmtrj/weights.hpp"

namespace gmtrj {

// ---------------------------------------------------------------------------
// Finite toy spaces for exact kernel verification. Every state is a
// (model, point) pair with a real coordinate, an unnormalized target mass and
// a positive surrogate weight; proposals are explicit mass tables. Jump maps
// are identity with |J| = 1, so the balance condition needs no Jacobian terms.

struct ToyStateDef {
  int model = 1;
  int point = 0;
  double coord = 0.0;
  double mass = 1.0;
  double log_surrogate = 0.0;
};

class ToySpace {
 public:
  std::string name;
  int n_models = 0;
  std::vector<ToyStateDef> states;
  Eigen::MatrixXd jprob;                          // model x model
  Eigen::MatrixXd cond;                           // state x state, normalized per (from, dest model)
  std::vector<std::array<double, 3>> quad_coef;   // per model: log pi~ = a x^2 + b x + c

  int size() const { return static_cast<int>(states.size()); }

  int state_index(int model, int point) const {
    for (int i = 0; i < size(); ++i)
      if (states[static_cast<std::size_t>(i)].model == model && states[static_cast<std::size_t>(i)].point == point)
        return i;
    throw std::out_of_range("ToySpace: unknown (model, point)");
  }

  int index_of(const ChainState& s) const {
    for (int i = 0; i < size(); ++i) {
      const auto& st = states[static_cast<std::size_t>(i)];
      if (st.model == s.model && s.params.size() == 1 && st.coord == s.params[0]) return i;
    }
    throw std::out_of_range("ToySpace: state not found");
  }

  ChainState chain_state(int i) const {
    const auto& st = states[static_cast<std::size_t>(i)];
    return ChainState{st.model, {st.coord}};
  }

  std::vector<double> target_probs() const {
    std::vector<double> p(static_cast<std::size_t>(size()));
    double total = 0.0;
    for (int i = 0; i < size(); ++i) total += states[static_cast<std::size_t>(i)].mass;
    for (int i = 0; i < size(); ++i) p[static_cast<std::size_t>(i)] = states[static_cast<std::size_t>(i)].mass / total;
    return p;
  }

  double log_t_full(int x, int y) const {
    int mx = states[static_cast<std::size_t>(x)].model;
    int my = states[static_cast<std::size_t>(y)].model;
    double j = jprob(mx - 1, my - 1);
    double c = cond(x, y);
    if (j <= 0.0 || c <= 0.0) return log_zero();
    return std::log(j) + std::log(c);
  }
};

// --- adapters exposing a toy space through the production interfaces --------

class ToyTarget final : public TargetDensity {
 public:
  explicit ToyTarget(const ToySpace& s) : space_(&s) {}
  double log_target(const ChainState& state) const override {
    return std::log(space_->states[static_cast<std::size_t>(space_->index_of(state))].mass);
  }

 private:
  const ToySpace* space_;
};

class ToyModelSpace final : public ModelSpace {
 public:
  explicit ToyModelSpace(const ToySpace& s) : space_(&s) {}
  int model_count() const override { return space_->n_models; }
  int dim(int) const override { return 1; }
  std::vector<int> neighbors(int model) const override {
    std::vector<int> out;
    for (int m = 1; m <= space_->n_models; ++m)
      if (space_->jprob(model - 1, m - 1) > 0.0) out.push_back(m);
    return out;
  }
  double jump_prob(int from, int to) const override { return space_->jprob(from - 1, to - 1); }

 private:
  const ToySpace* space_;
};

class ToyProposal final : public ProposalKernel {
 public:
  explicit ToyProposal(const ToySpace& s) : space_(&s) {}

  Draw propose(RngStream& rng, const ChainState& from, int to_model) const override {
    int x = space_->index_of(from);
    double u = rng.uniform();
    double acc = 0.0;
    int last = -1;
    for (int y = 0; y < space_->size(); ++y) {
      if (space_->states[static_cast<std::size_t>(y)].model != to_model) continue;
      double p = space_->cond(x, y);
      if (p <= 0.0) continue;
      last = y;
      acc += p;
      if (u < acc) return {space_->chain_state(y), std::log(p)};
    }
    if (last < 0) throw std::logic_error("ToyProposal: no support for destination model");
    return {space_->chain_state(last), std::log(space_->cond(x, last))};
  }

  double log_density(const ChainState& from, const ChainState& to) const override {
    double p = space_->cond(space_->index_of(from), space_->index_of(to));
    return p > 0.0 ? std::log(p) : log_zero();
  }

 private:
  const ToySpace* space_;
};

class ToyCurvature final : public CurvatureSource {
 public:
  explicit ToyCurvature(const ToySpace& s) : space_(&s) {}
  LocalExpansion expansion_at(int model, const Params& anchor) const override {
    const auto& c = space_->quad_coef[static_cast<std::size_t>(model - 1)];
    LocalExpansion e;
    e.anchor = Eigen::VectorXd::Constant(1, anchor.at(0));
    e.score = Eigen::VectorXd::Constant(1, 2.0 * c[0] * anchor.at(0) + c[1]);
    e.curvature = Eigen::MatrixXd::Constant(1, 1, 2.0 * c[0]);
    return e;
  }

 private:
  const ToySpace* space_;
};

// Bundle of adapters plus every weight scheme defined on the space.
struct ToyInstruments {
  std::unique_ptr<ToyTarget> target;
  std::unique_ptr<ToyModelSpace> model_space;
  std::unique_ptr<ToyProposal> proposal;
  std::unique_ptr<ToyCurvature> curvature;
  IdentityJumpMap jacobian;
  std::vector<std::unique_ptr<WeightScheme>> schemes;

  explicit ToyInstruments(const ToySpace& space) {
    target = std::make_unique<ToyTarget>(space);
    model_space = std::make_unique<ToyModelSpace>(space);
    proposal = std::make_unique<ToyProposal>(space);
    curvature = std::make_unique<ToyCurvature>(space);
    schemes.push_back(std::make_unique<MtmIWeights>(*target));
    schemes.push_back(std::make_unique<MtmInvWeights>(*target));
    schemes.push_back(std::make_unique<UniformWeights>());
    schemes.push_back(std::make_unique<QuadWeights>(*curvature, *model_space));
    const ToySpace* sp = &space;
    schemes.push_back(std::make_unique<SurrogateWeights>(
        "man_surrogate", [sp](const ChainState& s) {
          return sp->states[static_cast<std::size_t>(sp->index_of(s))].log_surrogate;
        }));
  }
};

// ---------------------------------------------------------------------------
// Exact kernel enumeration.

enum class SamplerKind { kMh, kGmtm, kRj, kGmtrj };

struct EnumSpec {
  SamplerKind sampler = SamplerKind::kGmtrj;
  int trial_count = 1;
  DestinationPolicy policy = DestinationPolicy::kVariedDestination;
  // negative control: reverse set drawn fresh without the current state as
  // its k-th element
  bool corrupt_reverse_set = false;
};

namespace detail {

// Deterministic compensated (Neumaier) accumulator; enumeration order is
// fixed, so results are reproducible regardless of build flags.
class KahanSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline std::vector<int> support_in_model(const ToySpace& s, int x, int model) {
  std::vector<int> out;
  for (int y = 0; y < s.size(); ++y)
    if (s.states[static_cast<std::size_t>(y)].model == model && s.cond(x, y) > 0.0) out.push_back(y);
  return out;
}

inline std::vector<int> support_flat(const ToySpace& s, int x) {
  std::vector<int> out;
  for (int y = 0; y < s.size(); ++y)
    if (s.log_t_full(x, y) > log_zero()) out.push_back(y);
  return out;
}

// odometer over tuples with repetition
inline bool next_tuple(std::vector<std::size_t>& idx, std::size_t base) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (++idx[i] < base) return true;
    idx[i] = 0;
  }
  return false;
}

}  // namespace detail

// Exact transition matrix of the configured sampler on a finite toy space.
// Cost is O(|support|^(2k-1)) per row, so the state budget is enforced first.
inline Eigen::MatrixXd enumerate_kernel(const ToySpace& space, const EnumSpec& spec,
                                        WeightScheme& scheme) {
  const int S = space.size();
  const int k = spec.trial_count;
  if (S > 24) throw std::invalid_argument("enumerate_kernel: state budget exceeded (max 24 states)");
  if (k > 4) throw std::invalid_argument("enumerate_kernel: trial budget exceeded (max k=4)");
  double cost = std::pow(static_cast<double>(S), 2 * k - 1) * static_cast<double>(S) * k;
  if (cost > 5e9) throw std::invalid_argument("enumerate_kernel: enumeration budget exceeded");

  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(S, S);

  auto log_pi = [&](int i) { return std::log(space.states[static_cast<std::size_t>(i)].mass); };

  for (int x = 0; x < S; ++x) {
    const ChainState sx = space.chain_state(x);
    std::vector<detail::KahanSum> row(static_cast<std::size_t>(S));

    if (spec.sampler == SamplerKind::kMh || spec.sampler == SamplerKind::kRj) {
      const bool rj = spec.sampler == SamplerKind::kRj;
      for (int y = 0; y < S; ++y) {
        if (y == x) continue;
        const ChainState sy = space.chain_state(y);
        double lt_xy = rj ? space.log_t_full(x, y) : (sx.model == sy.model ? space.log_t_full(x, y) : log_zero());
        if (is_log_zero(lt_xy)) continue;
        double lt_yx = space.log_t_full(y, x);
        double la = log_pi(y) + lt_yx - log_pi(x) - lt_xy;
        double alpha = std::exp(std::min(0.0, la));
        row[static_cast<std::size_t>(y)].add(std::exp(lt_xy) * alpha);
      }
    } else {
      const bool gmtm = spec.sampler == SamplerKind::kGmtm;
      const bool same_dest = !gmtm && spec.policy == DestinationPolicy::kSameDestination;

      // set of (destination-model, trial-support) blocks to enumerate
      struct Block {
        int dest_model;      // 0 = flat (destination baked into support)
        double log_j;        // model-choice factor outside the tuple product
        std::vector<int> support;
      };
      std::vector<Block> blocks;
      if (gmtm) {
        blocks.push_back({sx.model, 0.0, detail::support_in_model(space, x, sx.model)});
      } else if (same_dest) {
        for (int m = 1; m <= space.n_models; ++m) {
          double j = space.jprob(sx.model - 1, m - 1);
          if (j <= 0.0) continue;
          blocks.push_back({m, std::log(j), detail::support_in_model(space, x, m)});
        }
      } else {
        blocks.push_back({0, 0.0, detail::support_flat(space, x)});
      }

      for (const auto& blk : blocks) {
        if (blk.support.empty()) continue;
        const std::size_t base = blk.support.size();
        const double block_p = same_dest ? std::exp(blk.log_j) : 1.0;

        // per-candidate log T in both directions and selection weight
        std::vector<double> lt_fwd(base), lt_rev(base), lw(base);
        if (gmtm) {
          scheme.prepare(sx, sx.model);
        } else if (same_dest) {
          scheme.prepare(sx, blk.dest_model);
        }
        for (std::size_t i = 0; i < base; ++i) {
          int y = blk.support[i];
          if (gmtm) {
            lt_fwd[i] = std::log(space.cond(x, y));
            lt_rev[i] = space.states[static_cast<std::size_t>(y)].model == sx.model && space.cond(y, x) > 0.0
                            ? std::log(space.cond(y, x))
                            : log_zero();
          } else {
            lt_fwd[i] = space.log_t_full(x, y);
            lt_rev[i] = space.log_t_full(y, x);
          }
          if (!gmtm && !same_dest)
            scheme.prepare(sx, space.states[static_cast<std::size_t>(y)].model);
          Trial t{space.chain_state(y), lt_fwd[i], lt_rev[i]};
          lw[i] = scheme.log_weight(t);
        }

        // tuple probability factors: draws are iid from the block's proposal
        std::vector<double> draw_p(base);
        for (std::size_t i = 0; i < base; ++i)
          draw_p[i] = gmtm ? space.cond(x, blk.support[i])
                           : (same_dest ? space.cond(x, blk.support[i]) : std::exp(space.log_t_full(x, blk.support[i])));

        std::vector<std::size_t> tup(static_cast<std::size_t>(k), 0);
        do {
          double p_tuple = 1.0;
          for (std::size_t i = 0; i < tup.size(); ++i) p_tuple *= draw_p[tup[i]];

          std::vector<double> tup_lw(tup.size());
          for (std::size_t i = 0; i < tup.size(); ++i) tup_lw[i] = lw[tup[i]];
          double lse_fwd = log_sum_exp(tup_lw);
          if (is_log_zero(lse_fwd)) continue;  // degenerate: chain stays put

          for (std::size_t sel = 0; sel < tup.size(); ++sel) {
            double log_p_y = tup_lw[sel] - lse_fwd;
            if (is_log_zero(log_p_y)) continue;
            const std::size_t yi = tup[sel];
            const int y = blk.support[yi];
            const ChainState sy = space.chain_state(y);

            double lt_y_to_x = gmtm ? (space.cond(y, x) > 0.0 ? std::log(space.cond(y, x)) : log_zero())
                                    : space.log_t_full(y, x);
            if (is_log_zero(lt_y_to_x)) continue;  // alpha = 0: no return path
            double lt_x_to_y = gmtm ? lt_fwd[yi] : space.log_t_full(x, y);
            double alpha_num_base = log_pi(y) + lt_y_to_x;
            double alpha_den = log_pi(x) + lt_x_to_y + log_p_y;

            // reverse block: trials from the selected candidate back toward
            // the current model (or flat, matching the forward policy)
            std::vector<int> rsup;
            if (gmtm || same_dest) {
              rsup = detail::support_in_model(space, y, sx.model);
            } else {
              rsup = detail::support_flat(space, y);
            }

            std::vector<double> r_lw(rsup.size()), r_p(rsup.size());
            if (gmtm || same_dest) scheme.prepare(sy, sx.model);
            for (std::size_t i = 0; i < rsup.size(); ++i) {
              int r = rsup[i];
              double ltf, ltr;
              if (gmtm) {
                ltf = std::log(space.cond(y, r));
                ltr = space.cond(r, y) > 0.0 ? std::log(space.cond(r, y)) : log_zero();
                r_p[i] = space.cond(y, r);
              } else {
                ltf = space.log_t_full(y, r);
                ltr = space.log_t_full(r, y);
                // same-destination mirrors the move: destination model fixed,
                // only the conditional draw is random
                r_p[i] = same_dest ? space.cond(y, r) : std::exp(ltf);
              }
              if (!gmtm && !same_dest) scheme.prepare(sy, space.states[static_cast<std::size_t>(r)].model);
              Trial t{space.chain_state(r), ltf, ltr};
              r_lw[i] = scheme.log_weight(t);
            }

            // the mandatory k-th reverse element is the current state
            if (!gmtm && !same_dest) scheme.prepare(sy, sx.model);
            Trial back{sx, lt_y_to_x, lt_x_to_y};
            double lw_back = scheme.log_weight(back);

            const std::size_t rev_len = spec.corrupt_reverse_set ? static_cast<std::size_t>(k)
                                                                 : static_cast<std::size_t>(k - 1);
            if (rev_len == 0) {
              // k = 1, honest reverse set = {x}: p_x = 1
              double la = alpha_num_base - alpha_den;
              row[static_cast<std::size_t>(y)].add(block_p * p_tuple * std::exp(log_p_y) *
                                                   std::exp(std::min(0.0, la)));
              continue;
            }
            if (rsup.empty()) continue;

            std::vector<std::size_t> rtup(rev_len, 0);
            do {
              double p_rtuple = 1.0;
              for (std::size_t i = 0; i < rtup.size(); ++i) p_rtuple *= r_p[rtup[i]];

              std::vector<double> rev_lw;
              rev_lw.reserve(rev_len + 1);
              for (std::size_t i = 0; i < rtup.size(); ++i) rev_lw.push_back(r_lw[rtup[i]]);
              if (!spec.corrupt_reverse_set) rev_lw.push_back(lw_back);
              double lse_rev = log_sum_exp(std::span<const double>(rev_lw));
              if (is_log_zero(lse_rev)) continue;
              double log_p_x = lw_back - lse_rev;
              double la = alpha_num_base + log_p_x - alpha_den;
              row[static_cast<std::size_t>(y)].add(block_p * p_tuple * std::exp(log_p_y) * p_rtuple *
                                                   std::exp(std::min(0.0, la)));
            } while (detail::next_tuple(rtup, rsup.size()));
          }
        } while (detail::next_tuple(tup, base));
      }
    }

    double off = 0.0;
    for (int y = 0; y < S; ++y) {
      P(x, y) = row[static_cast<std::size_t>(y)].value();
      if (y != x) off += P(x, y);
    }
    // rejections, degenerate sets and accepted self-proposals all land here
    P(x, x) = 1.0 - off;
  }
  return P;
}

// max over ordered pairs of |pi(x) P(x,y) - pi(y) P(y,x)|; |J| = 1 on toys.
inline double check_detailed_balance(const ToySpace& space, const Eigen::MatrixXd& P) {
  std::vector<double> pi = space.target_probs();
  double worst = 0.0;
  for (int x = 0; x < space.size(); ++x)
    for (int y = 0; y < space.size(); ++y)
      worst = std::max(worst, std::abs(pi[static_cast<std::size_t>(x)] * P(x, y) -
                                       pi[static_cast<std::size_t>(y)] * P(y, x)));
  return worst;
}

// stationary distribution by power iteration on P'.
inline Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& P, int iters = 20000) {
  Eigen::VectorXd v = Eigen::VectorXd::Constant(P.rows(), 1.0 / static_cast<double>(P.rows()));
  for (int i = 0; i < iters; ++i) {
    Eigen::VectorXd w = P.transpose() * v;
    w /= w.sum();
    if ((w - v).lpNorm<Eigen::Infinity>() < 1e-16) return w;
    v = w;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Closed-form two-model oracle: M1 fixes the success probability at p0, M2
// puts a Beta(a, b) prior on it. Returns exact posterior model probabilities
// under equal model priors for y successes out of n.
struct BetaBinomialCase {
  int n = 10;
  int y = 7;
  double p0 = 0.5;
  double a = 1.0;
  double b = 1.0;
};

inline std::array<double, 2> exact_model_posterior(const BetaBinomialCase& c) {
  double log_m1 = c.y * std::log(c.p0) + (c.n - c.y) * std::log1p(-c.p0);
  double log_m2 = lbeta(c.a + c.y, c.b + c.n - c.y) - lbeta(c.a, c.b);
  double m = std::max(log_m1, log_m2);
  double w1 = std::exp(log_m1 - m), w2 = std::exp(log_m2 - m);
  return {w1 / (w1 + w2), w2 / (w1 + w2)};
}

// ---------------------------------------------------------------------------
// Declarative text format:
//   name <id>
//   models <M>
//   jump <from_model> <to_model> <prob>
//   state <model> <point> <coord> <mass> <log_surrogate>
//   quad <model> <a> <b> <c>
//   prop <from_model> <from_point> <to_model> <to_point> <weight>
// prop weights are normalized per (from_state, to_model); '#' starts a comment.
inline ToySpace parse_toy_space(std::istream& in) {
  ToySpace s;
  struct PropEntry {
    int fm, fp, tm, tp;
    double w;
  };
  std::vector<PropEntry> props;
  std::vector<std::array<double, 3>> jumps_raw;  // from, to, prob
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("toy space line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "name") {
      ls >> s.name;
    } else if (tok == "models") {
      if (!(ls >> s.n_models) || s.n_models < 1) fail("bad model count");
      s.quad_coef.assign(static_cast<std::size_t>(s.n_models), {0.0, 0.0, 0.0});
    } else if (tok == "jump") {
      double f, t, p;
      if (!(ls >> f >> t >> p)) fail("bad jump row");
      jumps_raw.push_back({f, t, p});
    } else if (tok == "state") {
      ToyStateDef st;
      if (!(ls >> st.model >> st.point >> st.coord >> st.mass >> st.log_surrogate)) fail("bad state row");
      if (st.mass <= 0.0) fail("state mass must be positive");
      s.states.push_back(st);
    } else if (tok == "quad") {
      int m;
      double a, b, c;
      if (!(ls >> m >> a >> b >> c)) fail("bad quad row");
      if (m < 1 || m > s.n_models) fail("quad model out of range");
      s.quad_coef[static_cast<std::size_t>(m - 1)] = {a, b, c};
    } else if (tok == "prop") {
      PropEntry e{};
      if (!(ls >> e.fm >> e.fp >> e.tm >> e.tp >> e.w)) fail("bad prop row");
      if (e.w < 0.0) fail("prop weight must be nonnegative");
      props.push_back(e);
    } else {
      fail("unknown directive '" + tok + "'");
    }
  }
  if (s.n_models == 0) throw std::runtime_error("toy space: missing 'models' directive");
  if (s.states.empty()) throw std::runtime_error("toy space: no states");
  if (s.size() > 24) throw std::runtime_error("toy space: state budget exceeded (max 24)");

  const int S = s.size();
  s.jprob = Eigen::MatrixXd::Zero(s.n_models, s.n_models);
  for (const auto& j : jumps_raw) {
    int f = static_cast<int>(j[0]), t = static_cast<int>(j[1]);
    if (f < 1 || f > s.n_models || t < 1 || t > s.n_models)
      throw std::runtime_error("toy space: jump model out of range");
    s.jprob(f - 1, t - 1) = j[2];
  }
  for (int m = 0; m < s.n_models; ++m) {
    double rs = s.jprob.row(m).sum();
    if (std::abs(rs - 1.0) > 1e-12)
      throw std::runtime_error("toy space: jump probabilities from model " + std::to_string(m + 1) +
                               " sum to " + std::to_string(rs));
  }

  s.cond = Eigen::MatrixXd::Zero(S, S);
  for (const auto& e : props) {
    int x = s.state_index(e.fm, e.fp);
    int y = s.state_index(e.tm, e.tp);
    s.cond(x, y) = e.w;
  }
  // normalize per (from, dest model)
  for (int x = 0; x < S; ++x) {
    for (int m = 1; m <= s.n_models; ++m) {
      double total = 0.0;
      for (int y = 0; y < S; ++y)
        if (s.states[static_cast<std::size_t>(y)].model == m) total += s.cond(x, y);
      if (total <= 0.0) continue;
      for (int y = 0; y < S; ++y)
        if (s.states[static_cast<std::size_t>(y)].model == m) s.cond(x, y) /= total;
    }
  }
  // coords must be unique within a model: the sampler adapters key on them
  for (int i = 0; i < S; ++i)
    for (int j2 = i + 1; j2 < S; ++j2)
      if (s.states[static_cast<std::size_t>(i)].model == s.states[static_cast<std::size_t>(j2)].model &&
          s.states[static_cast<std::size_t>(i)].coord == s.states[static_cast<std::size_t>(j2)].coord)
        throw std::runtime_error("toy space: duplicate coord within a model");
  return s;
}

inline ToySpace parse_toy_space(const std::string& text) {
  std::istringstream in(text);
  return parse_toy_space(in);
}

// ---------------------------------------------------------------------------
// Bundled verification spaces.

inline const std::vector<std::string>& builtin_toy_space_texts() {
  static const std::vector<std::string> texts = {
      // single model, ragged masses, asymmetric proposal
      R"(name chain5
models 1
jump 1 1 1.0
state 1 0 -2.0 0.8 0.10
state 1 1 -1.0 2.5 -0.40
state 1 2  0.0 0.4 0.75
state 1 3  1.0 1.9 0.00
state 1 4  2.5 0.6 0.30
quad 1 -0.35 0.2 0.0
prop 1 0 1 0 0.1
prop 1 0 1 1 0.5
prop 1 0 1 2 0.3
prop 1 0 1 4 0.6
prop 1 1 1 0 0.4
prop 1 1 1 1 0.2
prop 1 1 1 2 0.9
prop 1 1 1 3 0.2
prop 1 2 1 0 0.3
prop 1 2 1 1 0.8
prop 1 2 1 2 0.1
prop 1 2 1 3 0.5
prop 1 2 1 4 0.2
prop 1 3 1 1 0.3
prop 1 3 1 2 0.6
prop 1 3 1 3 0.1
prop 1 3 1 4 0.7
prop 1 4 1 0 0.5
prop 1 4 1 2 0.25
prop 1 4 1 3 0.9
prop 1 4 1 4 0.15
)",
      // two models of unequal size, boundary-asymmetric jumps
      R"(name two_model
models 2
jump 1 1 0.25
jump 1 2 0.75
jump 2 1 0.5
jump 2 2 0.5
state 1 0 -1.0 1.2 0.2
state 1 1  0.0 3.0 -0.1
state 1 2  1.0 0.7 0.4
state 2 0 -0.5 2.2 0.0
state 2 1  0.5 1.1 0.6
quad 1 -0.5 0.1 0.0
quad 2 -0.2 -0.3 0.0
prop 1 0 1 0 0.2
prop 1 0 1 1 0.5
prop 1 0 1 2 0.3
prop 1 1 1 0 0.35
prop 1 1 1 1 0.15
prop 1 1 1 2 0.5
prop 1 2 1 0 0.6
prop 1 2 1 1 0.3
prop 1 2 1 2 0.1
prop 1 0 2 0 0.7
prop 1 0 2 1 0.3
prop 1 1 2 0 0.4
prop 1 1 2 1 0.6
prop 1 2 2 0 0.25
prop 1 2 2 1 0.75
prop 2 0 1 0 0.5
prop 2 0 1 1 0.2
prop 2 0 1 2 0.3
prop 2 1 1 0 0.1
prop 2 1 1 1 0.45
prop 2 1 1 2 0.45
prop 2 0 2 0 0.3
prop 2 0 2 1 0.7
prop 2 1 2 0 0.8
prop 2 1 2 1 0.2
)",
      // three models on a line; end models must jump inward (j = 1), so the
      // acceptance ratio carries strongly asymmetric model-choice factors
      R"(name three_model_line
models 3
jump 1 2 1.0
jump 2 1 0.5
jump 2 3 0.5
jump 3 2 1.0
state 1 0 0.0 1.0 0.0
state 1 1 1.0 0.5 0.3
state 2 0 0.2 2.0 -0.2
state 2 1 0.8 1.5 0.1
state 3 0 -0.3 0.9 0.5
state 3 1 0.6 2.4 0.0
quad 1 -0.4 0.0 0.0
quad 2 -0.3 0.5 0.0
quad 3 -0.6 -0.2 0.0
prop 1 0 2 0 0.6
prop 1 0 2 1 0.4
prop 1 1 2 0 0.3
prop 1 1 2 1 0.7
prop 2 0 1 0 0.55
prop 2 0 1 1 0.45
prop 2 1 1 0 0.2
prop 2 1 1 1 0.8
prop 2 0 3 0 0.5
prop 2 0 3 1 0.5
prop 2 1 3 0 0.65
prop 2 1 3 1 0.35
prop 3 0 2 0 0.4
prop 3 0 2 1 0.6
prop 3 1 2 0 0.75
prop 3 1 2 1 0.25
)",
      // discretized Gaussian: masses equal exp(quadratic), so the quadratic
      // scheme must coincide with mtm_inv on this space
      R"(name gauss_grid
models 1
jump 1 1 1.0
state 1 0 -2.0 0.1353352832366127 0.0
state 1 1 -1.0 0.6065306597126334 0.0
state 1 2  0.0 1.0 0.0
state 1 3  1.0 0.6065306597126334 0.0
state 1 4  2.0 0.1353352832366127 0.0
quad 1 -0.5 0.0 0.0
prop 1 0 1 1 0.5
prop 1 0 1 2 0.3
prop 1 0 1 3 0.2
prop 1 1 1 0 0.3
prop 1 1 1 2 0.4
prop 1 1 1 3 0.3
prop 1 2 1 0 0.15
prop 1 2 1 1 0.35
prop 1 2 1 3 0.35
prop 1 2 1 4 0.15
prop 1 3 1 1 0.3
prop 1 3 1 2 0.4
prop 1 3 1 4 0.3
prop 1 4 1 1 0.2
prop 1 4 1 2 0.3
prop 1 4 1 3 0.5
)"};
  return texts;
}

inline std::vector<ToySpace> builtin_toy_spaces() {
  std::vector<ToySpace> out;
  for (const auto& t : builtin_toy_space_texts()) out.push_back(parse_toy_space(t));
  return out;
}

}  // namespace gmtrj
