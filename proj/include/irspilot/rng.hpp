#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <string_view>

namespace irspilot {

/// xoshiro256++ stream seeded through splitmix64.
///
/// Every random quantity in the simulator comes from an explicit Rng value, so
/// a trial is a pure function of its seed. Independent sub-streams (per trial,
/// per purpose) are derived with mix()/tag() instead of sharing one stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        // splitmix64 expansion of the seed into the 256-bit state
        std::uint64_t z = seed;
        for (auto& s : state_) {
            z += 0x9e3779b97f4a7c15ULL;
            std::uint64_t x = z;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            s = x ^ (x >> 31);
        }
    }

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

    /// Uniform on [0,1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0,1], safe as a log() argument.
    double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    /// One draw of CN(0, variance): real/imag parts N(0, variance/2) each,
    /// generated as a Box-Muller pair from two uniforms.
    std::complex<double> complex_gaussian(double variance) {
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double radius = std::sqrt(-variance * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

    /// Deterministic combiner for deriving sub-stream seeds from
    /// (base seed, trial index, purpose tag, ...) words.
    static std::uint64_t mix(std::initializer_list<std::uint64_t> words) {
        std::uint64_t h = 0x6a09e667f3bcc909ULL;
        for (std::uint64_t w : words) {
            std::uint64_t z = h + 0x9e3779b97f4a7c15ULL + w;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            h = z ^ (z >> 31);
        }
        return h;
    }

    /// FNV-1a hash of a purpose tag ("channels", "noise", ...).
    static std::uint64_t tag(std::string_view name) {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (char c : name) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        return h;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

} // namespace irspilot
