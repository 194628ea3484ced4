#pragma once

#include <cstdint>
#include <random>

namespace hhv {

// Deterministic draws on top of mt19937_64. The raw engine sequence is fixed
// by the standard; the mappings below avoid std distributions, whose output
// is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // uniform in [0, 1) with 53 random bits
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // uniform integer in [lo, hi]
    int pick(int lo, int hi) {
        return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace hhv
