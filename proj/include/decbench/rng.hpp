#pragma once

#include <cmath>
#include <cstdint>

namespace decbench {

// Counter-free splittable RNG. Every stream is a pure function of the
// 64-bit state it was constructed from, so parallel workers can derive
// the stream for frame i as FrameRng(seed, i) without sharing state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class FrameRng {
public:
    explicit FrameRng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& w : state_) w = splitmix64(s);
    }

    // Substream for one Monte-Carlo frame: hash of (seed, frame index).
    FrameRng(std::uint64_t seed, std::uint64_t frame)
        : FrameRng([&] {
              std::uint64_t s = seed;
              std::uint64_t a = splitmix64(s);
              s = a ^ (frame * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
              return splitmix64(s);
          }()) {}

    // xoshiro256++
    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    int next_bit() { return static_cast<int>(next_u64() >> 63); }

    // Uniform in (0, 1]; never returns 0 so log() below is safe.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Box-Muller; second value of each pair is cached.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = next_unit();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace decbench
