#pragma once

// Meta-gradient machinery: weighted training loss, one-step SGD lookahead,
// differentiable validation reward (mean cloze log-likelihood), the chained
// meta-gradient over the weighting model, and its finite-difference oracle.
//
// Per-sample LM gradients are evaluated at the current parameters and are
// constants with respect to the weighting model, so only first-order passes
// are needed anywhere.

#include <cstdint>
#include <vector>

#include "dwm/corpus.hpp"
#include "dwm/lm.hpp"
#include "dwm/weighting.hpp"

namespace dwm {

// sum_i omega_i * per_sample_loss(theta, X_i)
double weighted_train_loss(const ModelParams& params, const MicroBatch& batch,
                           const WeightVector& weights);

struct LookaheadParams {
    ModelParams theta_star;
    // provenance of the update that produced theta_star
    uint64_t source_hash = 0;
    uint64_t batch_id = 0;
    std::vector<double> omega;
    double alpha = 0.0;
};

// theta_star = theta - alpha * sum_i omega_i * grad_i (plain SGD form)
ModelParams lookahead_from_gradients(const ModelParams& params,
                                     const std::vector<FlatVector>& grads,
                                     const WeightVector& weights, double alpha);

LookaheadParams lookahead_step(const ModelParams& params, const MicroBatch& batch,
                               const WeightVector& weights, double alpha, int workers = 0);

// R = (1/M) sum_i log p(target_i | context_i); larger is better
double validation_reward(const ModelParams& params, const ValidationSet& val, int workers = 0);

// dR/d(params); also reports R itself
FlatVector validation_reward_gradient(const ModelParams& params, const ValidationSet& val,
                                      double* reward_out, int workers = 0);

// c_j = -alpha * <g_val, grad_j>
std::vector<double> lookahead_coefficients(const FlatVector& g_val,
                                           const std::vector<FlatVector>& grads, double alpha);

struct MetaGradient {
    FlatVector g_w;                  // d(reward)/d(weighting params), ascent direction
    std::vector<double> coeffs;      // c_j per batch sample
    std::vector<double> omega;       // weights used for the lookahead
    double reward_before = 0.0;      // R at theta
    double reward_after = 0.0;       // R at theta_star
};

MetaGradient meta_gradient(const ModelParams& params, const WeightingParams& wp,
                           const MicroBatch& batch, const ValidationSet& val, double alpha,
                           int workers = 0);

// gradient ascent on the reward with sgd or adam state (state advances)
WeightingParams update_weighting(const WeightingParams& wp, const MetaGradient& mg, double eta,
                                 OptimState& state);

// central finite differences of theta_w -> R(lookahead(theta, batch, omega(theta_w), alpha))
// over the sampled coordinates; runs the same double-precision pipeline
struct FdGradient {
    std::vector<int64_t> coords;
    std::vector<double> values;
};

FdGradient fd_meta_gradient(const ModelParams& params, const WeightingParams& wp,
                            const MicroBatch& batch, const ValidationSet& val, double alpha,
                            const std::vector<int64_t>& coords, double h_rel = 1e-4,
                            int workers = 0);

// max over coords of |analytic - fd| / max(|analytic|, |fd|, floor)
double max_relative_error(const MetaGradient& mg, const FdGradient& fd, double floor);

// a reasonable floor: 1e-6 * max(1, ||g||_inf)
double relative_error_floor(const FlatVector& g);

}  // namespace dwm
