#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sideinfo/prob.hpp"
#include "sideinfo/solver_options.hpp"

namespace sideinfo {

/// Memoryless channel p(y|x,s1,s2) with i.i.d. state pairs (S1,S2) ~ p(s1,s2),
/// S1 known to the sender and S2 to the receiver.
struct ChannelProblem {
    Alphabet x_alpha, y_alpha, s1_alpha, s2_alpha;
    JointDist state_joint;      ///< over (S1,S2)
    ConditionalKernel channel;  ///< (X,S1,S2) -> Y

    ChannelProblem(Alphabet x, Alphabet y, Alphabet s1, Alphabet s2, JointDist state,
                   ConditionalKernel chan);
};

struct CapacityResult {
    double value = 0.0;  ///< bits; certified by re-evaluating the objective
    int u_size = 0;
    ConditionalKernel u_given_s1;  ///< S1 -> U
    DeterministicMap x_map;        ///< (U,S1) -> X
    SolverDiagnostics diagnostics;
};

/// Default auxiliary cardinality |X|*|S1|+1. Generous: no general bound is
/// known, and the u_size-monotonicity check is the guard.
int default_u_size(const ChannelProblem& prob);

/// I(U;S2,Y) - I(U;S1) of the joint p(s1,s2) p(u|s1) 1{x=f(u,s1)} p(y|x,s1,s2).
/// May be negative for poor configurations.
double objective(const ChannelProblem& prob, const ConditionalKernel& u_given_s1,
                 const DeterministicMap& x_map);

/// Number of deterministic maps (U,S1)->X, or nullopt on overflow.
std::optional<std::uint64_t> map_count(const Alphabet& u_alpha, const Alphabet& s1_alpha,
                                       const Alphabet& x_alpha);

/// All |X|^(|U|*|S1|) maps, each exactly once, in a fixed order.
std::vector<DeterministicMap> enumerate_maps(const Alphabet& u_alpha, const Alphabet& s1_alpha,
                                             const Alphabet& x_alpha);

/// The index-th map of the enumerate_maps order.
DeterministicMap map_by_index(const Alphabet& u_alpha, const Alphabet& s1_alpha,
                              const Alphabet& x_alpha, std::uint64_t index);

struct AscentResult {
    ConditionalKernel u_given_s1;
    double value = 0.0;
    long long iterations = 0;
    int perturbations = 0;
};

/// Monotone projected gradient ascent on p(u|s1) for a fixed map. The
/// returned value is never below objective(prob, start, x_map) - 1e-12.
AscentResult inner_ascent(const ChannelProblem& prob, const DeterministicMap& x_map,
                          const ConditionalKernel& start, const SolverOptions& opts);

/// Best feasible configuration over deterministic maps (exhaustive up to
/// opts.enum_cap, sampled beyond) and multi-start inner ascent. The value is
/// a certified lower bound on the capacity for this u_size.
CapacityResult solve_capacity(const ChannelProblem& prob, int u_size,
                              const SolverOptions& opts = {});

}  // namespace sideinfo
