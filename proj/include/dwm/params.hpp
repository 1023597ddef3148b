#pragma once

// Flat-addressable named tensor storage. Tensors are registered in a fixed
// canonical order; the flat view is the single contiguous buffer backing all
// of them, so gradient arithmetic can treat a model as one vector.

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dwm/common.hpp"

namespace dwm {

struct TensorSpec {
    std::string name;
    std::vector<int64_t> shape;
    int64_t offset = 0;
    int64_t size = 0;
};

class ParamStore {
  public:
    // registration order defines the canonical flat layout
    void add(std::string name, std::vector<int64_t> shape);
    void allocate();  // zero-fills; call once after the last add

    int64_t param_count() const { return total_; }
    bool allocated() const { return !data_.empty() || total_ == 0; }

    const std::vector<TensorSpec>& specs() const { return specs_; }
    const TensorSpec& spec(const std::string& name) const;
    bool has(const std::string& name) const { return index_.count(name) > 0; }

    std::span<real> view(const std::string& name);
    std::span<const real> view(const std::string& name) const;

    std::span<real> flat() { return {data_.data(), data_.size()}; }
    std::span<const real> flat() const { return {data_.data(), data_.size()}; }

    uint64_t content_hash() const { return hash_span(data_.data(), data_.size()); }

    void check_finite(const std::string& what) const;

  private:
    std::vector<TensorSpec> specs_;
    std::unordered_map<std::string, size_t> index_;
    std::vector<real> data_;
    int64_t total_ = 0;
};

// A gradient (or any vector) laid out in a store's canonical flat order.
using FlatVector = std::vector<real>;

}  // namespace dwm
