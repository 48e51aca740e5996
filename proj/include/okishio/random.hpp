#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace okishio {

/// SplitMix64 finalizer; used to derive independent per-scenario seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seeded generator with a fixed bit-level mapping to doubles.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard; the conversion to [0, 1) is done here rather than through
/// std::uniform_real_distribution so results do not depend on the
/// standard library implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on the open interval (0, 1), 53-bit resolution.
    double open01() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

    /// Uniform on the open interval (lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * open01(); }

    /// Uniform integer in [lo, hi].
    std::size_t integer(std::size_t lo, std::size_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::size_t>(engine_() % span);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace okishio
