#pragma once

// Multi-start point patterns shared by the solvers: uniform rows, constant
// vertex rows, a staggered-identity pattern, then seeded random rows.
// Internal to src/.

#include <cstdint>
#include <vector>

#include "sideinfo/rng.hpp"

namespace sideinfo::detail {

inline std::vector<double> make_start(int kind, int rows, int cols, std::uint64_t seed) {
    std::vector<double> q(static_cast<std::size_t>(rows) * cols, 0.0);
    if (kind == 0) {
        for (auto& v : q) v = 1.0 / cols;
        return q;
    }
    if (kind <= cols) {
        int vertex = kind - 1;
        for (int r = 0; r < rows; ++r) q[static_cast<std::size_t>(r) * cols + vertex] = 1.0;
        return q;
    }
    if (kind == cols + 1) {
        for (int r = 0; r < rows; ++r) q[static_cast<std::size_t>(r) * cols + (r % cols)] = 1.0;
        return q;
    }
    SplitMix64 g(mix_seed(seed, 0x5374617274ULL + static_cast<std::uint64_t>(kind)));
    for (int r = 0; r < rows; ++r) {
        double total = 0.0;
        for (int c = 0; c < cols; ++c) {
            double e = g.next_exp();
            q[static_cast<std::size_t>(r) * cols + c] = e;
            total += e;
        }
        for (int c = 0; c < cols; ++c) q[static_cast<std::size_t>(r) * cols + c] /= total;
    }
    return q;
}

}  // namespace sideinfo::detail
