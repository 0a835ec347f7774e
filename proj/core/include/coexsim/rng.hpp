#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

#include "coexsim/util.hpp"

namespace coexsim {

// Deterministic cross-platform RNG. std::mt19937 would be portable too, but
// the std distributions are not; we generate uniforms and normals ourselves
// so identical seeds give identical results on every toolchain.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// One independent stream per (seed, label). Labels are fixed strings per
// subsystem (optionally keyed by integer ids), so adding a new consumer of
// randomness never perturbs existing streams.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::string_view label,
              std::uint64_t k0 = 0, std::uint64_t k1 = 0) {
        std::uint64_t s = master_seed;
        std::uint64_t mix = fnv1a64(label) ^ (k0 * 0x9e3779b97f4a7c15ull) ^
                            (k1 * 0xc2b2ae3d27d4eb4full);
        s ^= splitmix64(mix);
        // a few warmup rounds decorrelate nearby seeds/labels
        state_ = splitmix64(s);
        state_ = splitmix64(state_);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // integer in [0, n)
    std::uint64_t uniform_int(std::uint64_t n) {
        return next_u64() % n;  // modulo bias immaterial at our draw counts
    }

    // standard normal, Box-Muller with cached spare
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * kPi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    double normal(double mean, double sigma) { return mean + sigma * normal(); }

private:
    std::uint64_t state_ = 0;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace coexsim
