#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ldpc {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Independent draw stream derived from (seed, index). Transmitting symbol i
// always consumes stream (seed, i), so results do not depend on evaluation
// order and symbol-level parallelism stays deterministic.
class symbol_rng {
  public:
    symbol_rng(std::uint64_t seed, std::uint64_t index)
        : state_(seed ^ (0x632be59bd9b4e019ULL * (index + 1))) {
        splitmix64(state_);  // decorrelate nearby (seed, index) pairs
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        constexpr double two_pi = 6.283185307179586476925286766559;
        spare_ = r * std::sin(two_pi * u2);
        have_spare_ = true;
        return r * std::cos(two_pi * u2);
    }

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Engine for structural sampling (matchings, trees, permutations).
using graph_rng = std::mt19937_64;

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t s = master ^ (0x9e3779b97f4a7c15ULL * (stream + 0x51ed2701));
    splitmix64(s);
    return s;
}

}  // namespace ldpc
