#pragma once

#include <cmath>
#include <cstdint>
#include <span>

namespace sideinfo {

/// splitmix64 stream. Self-contained so that every seeded value in the
/// project is reproducible across platforms and worker counts (std::
/// distributions are implementation-defined, so we avoid them).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0,1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Exp(1) variate.
    double next_exp() {
        double u;
        do {
            u = next_double();
        } while (u <= 0.0);
        return -std::log(u);
    }

    /// Uniform integer in [0, n).
    int next_below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    /// Inverse-CDF draw from a probability mass vector.
    int next_symbol(std::span<const double> mass) {
        double u = next_double();
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < mass.size(); ++i) {
            acc += mass[i];
            if (u < acc) return static_cast<int>(i);
        }
        return static_cast<int>(mass.size()) - 1;
    }

private:
    std::uint64_t state_;
};

/// Order-free combination of a master seed with a stream/trial index.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    SplitMix64 g(a ^ (b * 0xff51afd7ed558ccdULL + 0x9e3779b97f4a7c15ULL));
    g.next();
    return g.next();
}

}  // namespace sideinfo
