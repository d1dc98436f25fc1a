#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace causalsearch {

/// Seedable, portable random stream. std::mt19937_64 output is fully
/// pinned by the standard; the bounded draws below avoid std distributions,
/// whose mapping is implementation-defined. Stream splitting contract:
/// the stream for trial t (1-based) is Rng(seed ^ t).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, n) via rejection sampling.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    /// Uniform double in [0, 1) with 53 bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool coin() { return (engine_() & 1u) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    static Rng for_trial(std::uint64_t seed, std::uint64_t trial_index_1based) {
        return Rng(seed ^ trial_index_1based);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace causalsearch
