#pragma once

// Checkpoints: a JSON manifest (tensor names, shapes, dtype, byte offsets,
// config, seed, stage, optimizer-state presence) next to a blob file of
// little-endian IEEE-754 values. f32 blobs are the interchange default;
// the double-precision build writes f64 and either dtype can be read back.

#include <optional>
#include <string>

#include "dwm/lm.hpp"
#include "dwm/weighting.hpp"

namespace dwm {

struct CheckpointMeta {
    std::string component;  // "lm" | "weighting"
    uint64_t seed = 0;
    int stage_index = 0;
    uint64_t blob_hash = 0;
    std::string source_lm_hash;  // weighting only, hex
};

// writes <path>.json and <path>.bin; returns the blob content hash
uint64_t save_lm_checkpoint(const std::string& path_prefix, const ModelParams& params,
                            uint64_t seed, int stage_index,
                            const OptimState* optim = nullptr);

uint64_t save_weighting_checkpoint(const std::string& path_prefix, const WeightingParams& wp,
                                   uint64_t seed, int stage_index,
                                   const OptimState* optim = nullptr);

struct LoadedLm {
    ModelParams params;
    CheckpointMeta meta;
    std::optional<OptimState> optim;
};

struct LoadedWeighting {
    WeightingParams params;
    CheckpointMeta meta;
    std::optional<OptimState> optim;
};

LoadedLm load_lm_checkpoint(const std::string& path_prefix);
LoadedWeighting load_weighting_checkpoint(const std::string& path_prefix);

// component field of a manifest without loading tensors
std::string checkpoint_component(const std::string& path_prefix);

}  // namespace dwm
