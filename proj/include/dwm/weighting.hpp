#pragma once

// The data weighting model: a headless transformer backbone embeds each
// sample (masked mean pool of final hidden states), one attention block
// mixes the embeddings across the micro-batch, and a two-layer head emits
// one logit per sample. Weights are the softmax of those logits, so they
// are nonnegative, sum to one, and are permutation-equivariant (the mixer
// uses no positional encoding).

#include <cstdint>
#include <vector>

#include "dwm/corpus.hpp"
#include "dwm/lm.hpp"
#include "dwm/params.hpp"

namespace dwm {

struct WeightVector {
    std::vector<double> omega;

    int size() const { return static_cast<int>(omega.size()); }
    void validate() const;  // sum 1 within 1e-6, all nonnegative
};

struct WeightingParams {
    LmConfig backbone_config;
    ParamStore store;
    uint64_t source_lm_hash = 0;  // provenance of the partial initialization

    uint64_t content_hash() const { return store.content_hash(); }
    int64_t param_count() const { return store.param_count(); }
};

int64_t weighting_param_count(const LmConfig& backbone_config);

// fresh weighting model, fully random except the zero final head layer
WeightingParams make_weighting(const LmConfig& backbone_config, uint64_t seed);

// backbone copied from the trained model, mixer and first head layer
// Gaussian, final head layer zero (so weights start exactly uniform)
WeightingParams init_weighting_from_lm(const ModelParams& lm, uint64_t seed);

// one pooled embedding per sample, [bs][hidden]
std::vector<std::vector<double>> embed_samples(const WeightingParams& wp, const MicroBatch& batch);

WeightVector compute_weights(const WeightingParams& wp, const MicroBatch& batch);

// gradient of sum_j coeffs[j] * omega_j with respect to all weighting params
FlatVector weight_backward(const WeightingParams& wp, const MicroBatch& batch,
                           const std::vector<double>& coeffs);

// gradient of sum_j d_logits[j] * logit_j (pre-softmax); used by tests to
// check the softmax Jacobian identity independently
FlatVector logit_backward(const WeightingParams& wp, const MicroBatch& batch,
                          const std::vector<double>& d_logits);

}  // namespace dwm
