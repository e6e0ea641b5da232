#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sideinfo/parallel.hpp"

namespace sideinfo {

/// Options shared by the capacity and rate-distortion solvers.
struct SolverOptions {
    /// Inner multi-start count: uniform, vertex-biased row patterns, a
    /// staggered-identity pattern, then seeded random points.
    int restarts = 16;
    int max_iters = 5000;
    /// Ascent/descent stops once the per-iteration improvement drops below
    /// this many bits.
    double tol_bits = 1e-7;
    std::uint64_t seed = 0x5eed5eedULL;
    /// Deterministic maps are enumerated exhaustively up to this count.
    std::uint64_t enum_cap = 4096;
    /// Number of randomly sampled maps once enumeration exceeds enum_cap.
    int map_samples = 512;
    /// When false, exceeding enum_cap raises BudgetError instead of sampling.
    bool allow_map_sampling = true;
    par::Exec exec = par::Exec::parallel;
};

struct SolverDiagnostics {
    long long iterations = 0;          ///< total inner iterations across all starts
    int restarts = 0;                  ///< starts per map
    int perturbation_restarts = 0;     ///< non-finite-gradient recoveries
    std::vector<double> restart_values;///< best value per start, winning map only
    std::uint64_t maps_considered = 0;
    bool maps_sampled = false;
    std::uint64_t winning_map_index = 0;  ///< enumeration index (tie witness)
    int winning_restart = 0;
};

}  // namespace sideinfo
