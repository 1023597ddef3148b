#pragma once

// Shared scalar type, RNG, hashing and error types used across the library.
//
// Parameters and activations use dwm::real (float by default, double when the
// library is built with DWM_REAL64). Reductions always accumulate in double.

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dwm {

#ifdef DWM_REAL64
using real = double;
#else
using real = float;
#endif

inline constexpr bool real_is_double = sizeof(real) == sizeof(double);

// ----------------------------- errors -----------------------------

// Invalid configuration, shape mismatch, violated precondition.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Unreadable/corrupt input files.
struct ingestion_error : std::runtime_error {
    explicit ingestion_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite values in a numeric pass; message names the location.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

// ----------------------------- rng -----------------------------

// SplitMix64 + Box-Muller. Self-contained so that seeded runs are
// bit-reproducible independent of the C++ standard library in use.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [0, n); n > 0
    uint64_t next_below(uint64_t n) {
        // modulo with rejection to avoid bias
        uint64_t threshold = (~n + 1) % n;
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    double gaussian(double mean, double stddev) {
        if (have_spare_) {
            have_spare_ = false;
            return mean + spare_ * stddev;
        }
        double u1 = 1.0 - next_double();  // (0, 1]
        double u2 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 6.283185307179586477 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return mean + r * std::cos(theta) * stddev;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        if (v.size() < 2) return;
        for (size_t i = v.size() - 1; i > 0; --i) {
            size_t j = static_cast<size_t>(next_below(i + 1));
            std::swap(v[i], v[j]);
        }
    }

    // independent stream for a named purpose
    static uint64_t derive(uint64_t seed, uint64_t salt) {
        Rng r(seed ^ (salt * 0x9e3779b97f4a7c15ull + 0x7f4a7c15ull));
        return r.next_u64();
    }

  private:
    uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// ----------------------------- hashing -----------------------------

// FNV-1a 64-bit, used for parameter/byte provenance hashes.
inline uint64_t fnv1a64(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ull) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hash_hex(uint64_t h);

template <class T>
uint64_t hash_span(const T* data, size_t n) {
    return fnv1a64(data, n * sizeof(T));
}

// ----------------------------- threading -----------------------------

// Runs fn(i) for i in [0, n). Each index is handled by exactly one worker and
// writes only its own outputs, so results do not depend on worker count.
void parallel_for(size_t n, int workers, const std::function<void(size_t)>& fn);

int default_workers();
void set_default_workers(int workers);

}  // namespace dwm
