#pragma once

// Decoder-only transformer (RMSNorm, rotary positions, gated FFN, untied
// output head) with explicit forward and backward passes. The backward pass
// is hand-written and verified against finite differences in the tests.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dwm/common.hpp"
#include "dwm/corpus.hpp"
#include "dwm/params.hpp"

namespace dwm {

struct LmConfig {
    int vocab_size = 0;
    int hidden_size = 0;
    int ffn_hidden = 0;
    int n_layers = 0;
    int n_heads = 0;
    int n_kv_heads = 0;
    int seq_len = 0;
    double rms_norm_eps = 1e-5;
    double rope_base = 10000.0;

    int head_dim() const { return hidden_size / n_heads; }
    int kv_dim() const { return head_dim() * n_kv_heads; }
    void validate() const;
    bool operator==(const LmConfig&) const = default;
};

// closed-form total (embeddings + per-layer blocks + final norm + head)
int64_t lm_param_count(const LmConfig& config);

struct ModelParams {
    LmConfig config;
    ParamStore store;

    uint64_t content_hash() const { return store.content_hash(); }
    int64_t param_count() const { return store.param_count(); }
};

// registers the canonical tensor list for a transformer; `include_head`
// false gives the headless backbone used by the weighting model
void register_lm_tensors(ParamStore& store, const LmConfig& config, const std::string& prefix,
                         bool include_head);

// deterministic init: norm gains 1, all other weights Gaussian(0, 0.02)
ModelParams init_model(const LmConfig& config, uint64_t seed);

// fills already-registered tensors under `prefix` the same way init_model does
void init_lm_tensors(ParamStore& store, const LmConfig& config, const std::string& prefix,
                     bool include_head, uint64_t seed);

// ----------------------------- forward/backward -----------------------------

// Per-sample activation cache; sized on first use and reusable across calls.
struct ForwardCache {
    int n = 0;  // effective (unpadded) length
    std::vector<std::vector<double>> x_in, att_norm, q, k, v, att_ctx, x_mid, ffn_norm;
    std::vector<std::vector<double>> att_probs;   // [layer][head*n*n]
    std::vector<std::vector<double>> gate_pre, up_pre;
    std::vector<std::vector<double>> att_rms_inv, ffn_rms_inv;
    std::vector<double> hidden;        // final-normed hidden states [n * H]
    std::vector<double> final_rms_inv; // [n]
    std::vector<double> x_last;        // pre-final-norm stream [n * H]
};

// Runs the headless transformer over tokens[0..n); writes final-normed
// hidden states into cache.hidden. Weight tensors are read from `store`
// under `prefix` ("" for a plain LM).
void transformer_forward(const ParamStore& store, const std::string& prefix,
                         const LmConfig& config, std::span<const TokenId> tokens, int n,
                         ForwardCache& cache);

// Backward from d(hidden) (gradient w.r.t. cache.hidden, layout [n * H]).
// Accumulates parameter gradients into grad (flat layout of `store`).
void transformer_backward(const ParamStore& store, const std::string& prefix,
                          const LmConfig& config, std::span<const TokenId> tokens,
                          const ForwardCache& cache, std::span<const double> d_hidden,
                          std::span<real> grad);

// ----------------------------- losses -----------------------------

// mean next-token cross-entropy over the sample's non-pad positions
double per_sample_loss(const ModelParams& params, const Sample& sample);

struct BatchGrads {
    std::vector<double> losses;       // per sample
    std::vector<FlatVector> grads;    // per sample, flat layout of the model
};

// independent loss gradients for every sample of a micro-batch; entry i is
// exactly the gradient of per_sample_loss on sample i alone
BatchGrads per_sample_gradients(const ModelParams& params, const MicroBatch& batch,
                                int workers = 0);

// log p(target | context) for one cloze item; context is left-truncated to
// the model window. When grad is non-null, accumulates scale * d(log p)/d(params).
double cloze_logprob(const ModelParams& params, std::span<const TokenId> context, TokenId target,
                     double grad_scale = 0.0, std::span<real> grad = {});

// ----------------------------- optimizers -----------------------------

struct OptimState {
    enum class Kind { sgd, adam };
    Kind kind = Kind::sgd;
    int64_t step = 0;
    double alpha = 0.0;
    double beta1 = 0.9, beta2 = 0.95, eps = 1e-8;
    std::vector<real> m, v;  // adam moments, flat layout

    static OptimState make_sgd(double alpha);
    static OptimState make_adam(double alpha, int64_t param_count, double beta1 = 0.9,
                                double beta2 = 0.95, double eps = 1e-8);
};

// theta' = theta - alpha * g
ModelParams sgd_step(const ModelParams& params, const FlatVector& grad, double alpha);

// bias-corrected Adam; returns updated params and state (step incremented)
std::pair<ModelParams, OptimState> adam_step(const ModelParams& params, const FlatVector& grad,
                                             const OptimState& state);

// in-place variants used by the training loop (same arithmetic)
void sgd_step_inplace(ModelParams& params, std::span<const real> grad, double alpha);
void adam_step_inplace(std::span<real> flat, std::span<const real> grad, OptimState& state);

}  // namespace dwm
