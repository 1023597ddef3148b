#pragma once

// Text ingestion: vocabulary construction, tokenization, micro-batch
// assembly, cloze validation sets, noise injection and token shards.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dwm/common.hpp"

namespace dwm {

using TokenId = int32_t;

inline constexpr TokenId kPadId = 0;

// ----------------------------- vocab -----------------------------

// Byte-level vocabulary with optional greedy pair merges. Token id 0 is the
// padding token; ids are dense and the token list order defines them.
class Vocab {
  public:
    Vocab() = default;

    // tokens[0] must be the padding token (empty byte string by convention).
    explicit Vocab(std::vector<std::string> tokens);

    int size() const { return static_cast<int>(tokens_.size()); }
    const std::string& token(TokenId id) const { return tokens_[static_cast<size_t>(id)]; }
    const std::vector<std::string>& tokens() const { return tokens_; }

    // id of an exact byte sequence, or nullopt
    std::optional<TokenId> find(const std::string& bytes) const;

    void save(const std::string& path) const;
    static Vocab load(const std::string& path);

  private:
    std::vector<std::string> tokens_;
    // index over token byte strings for greedy longest-match scans
    std::vector<std::vector<TokenId>> by_first_byte_;  // 256 buckets, longest first
    friend std::vector<TokenId> tokenize(const std::string&, const Vocab&);
    void build_index();
};

// Builds a vocabulary from UTF-8 text files (one document per line):
// padding + every distinct byte in the corpus + greedy pair merges until
// target_size is reached or no adjacent pair occurs twice. Merges never
// cross document boundaries. Deterministic in the input bytes.
Vocab build_vocab(const std::vector<std::string>& corpus_paths, int target_size);

// Same construction from in-memory documents (used by tests and tools).
Vocab build_vocab_from_docs(const std::vector<std::string>& docs, int target_size);

// Greedy longest-match tokenization. Requires every byte of `text` to be
// covered by the vocab (guaranteed when the vocab was built from a corpus
// containing those bytes); an uncovered byte is a precondition violation
// and throws domain_error.
std::vector<TokenId> tokenize(const std::string& text, const Vocab& vocab);

std::string detokenize(const std::vector<TokenId>& ids, const Vocab& vocab);

// ----------------------------- samples -----------------------------

struct Sample {
    std::vector<TokenId> tokens;  // no padding; length >= 2
    std::string source_tag;
    uint64_t id = 0;
};

// Exactly bs samples padded to a common length. Padding positions carry
// kPadId and are excluded from every downstream loss.
struct MicroBatch {
    std::vector<Sample> samples;       // padded copies
    std::vector<int> lengths;          // unpadded lengths
    int bs = 0;
    int padded_len = 0;
    uint64_t batch_id = 0;

    void validate() const;  // throws domain_error on violated invariants
};

// Deterministic shuffled stream over a fixed sample set. Reshuffles with
// (seed, epoch) when exhausted; next_batch returns nullopt only if fewer
// than bs samples exist at all.
class BatchSampler {
  public:
    BatchSampler(std::vector<Sample> samples, int bs, int seq_len, uint64_t seed);

    std::optional<MicroBatch> next_batch();
    // advances the stream as if k batches had been drawn (used on resume)
    void skip_batches(uint64_t k);
    // true when the sample pool holds fewer than bs samples
    bool exhausted() const { return samples_.size() < static_cast<size_t>(bs_); }
    uint64_t batches_served() const { return served_; }

  private:
    std::vector<Sample> samples_;
    std::vector<size_t> order_;
    size_t cursor_ = 0;
    int bs_;
    int seq_len_;
    uint64_t seed_;
    uint64_t epoch_ = 0;
    uint64_t served_ = 0;
    void reshuffle();
};

// Assembles one micro-batch from the front of `stream` (order determined by
// the sampler's seed). Truncates each sample to seq_len and right-pads with
// kPadId.
MicroBatch assemble_microbatch(BatchSampler& stream);

// Pads/truncates an explicit sample list into a batch (bs = samples.size()).
MicroBatch make_microbatch(const std::vector<Sample>& samples, int seq_len, uint64_t batch_id = 0);

// ----------------------------- validation -----------------------------

struct ClozeItem {
    std::vector<TokenId> context;  // all tokens preceding the target, no padding
    TokenId target = kPadId;
    uint64_t id = 0;
};

struct ValidationSet {
    std::vector<ClozeItem> items;
    int size() const { return static_cast<int>(items.size()); }
};

// Builds M last-token cloze items from held-out documents. Eligible docs
// have at least min_context + 1 tokens; throws domain_error naming the
// shortfall when fewer than M qualify. Item ids come from a range disjoint
// from training sample ids.
ValidationSet make_cloze_validation(const std::vector<std::vector<TokenId>>& heldout_docs,
                                    int M, int min_context);

inline constexpr uint64_t kValidationIdBase = 1ull << 48;

// ----------------------------- noise -----------------------------

// Shuffles the token order of floor(fraction * N) samples (tag "noise");
// the rest keep their tokens and are tagged "clean". Deterministic in seed.
std::vector<Sample> inject_noise(const std::vector<Sample>& samples, double fraction,
                                 uint64_t seed);

// ----------------------------- shards -----------------------------

// Binary shard: magic "DWMC", u32 version, then length-prefixed u32 token
// arrays, little-endian.
void write_shard(const std::string& path, const std::vector<std::vector<TokenId>>& docs);
std::vector<std::vector<TokenId>> read_shard(const std::string& path);

// Reads a UTF-8 text file, one document per line (empty lines skipped).
std::vector<std::string> read_text_docs(const std::string& path);

}  // namespace dwm
