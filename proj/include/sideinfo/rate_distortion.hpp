#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sideinfo/prob.hpp"
#include "sideinfo/solver_options.hpp"

namespace sideinfo {

/// Per-symbol distortion d(x, xhat): nonnegative finite entries, x-major.
struct DistortionMatrix {
    Alphabet x_alpha, xhat_alpha;
    std::vector<double> d;

    DistortionMatrix(Alphabet x, Alphabet xhat, std::vector<double> entries);
    double at(int x, int xhat) const {
        return d[static_cast<std::size_t>(x) * xhat_alpha.size + static_cast<std::size_t>(xhat)];
    }
};

/// Source (X,S1,S2) i.i.d. ~ p(x,s1,s2) with S1 at the encoder, S2 at the
/// decoder, and a bounded distortion measure.
struct SourceProblem {
    Alphabet x_alpha, xhat_alpha, s1_alpha, s2_alpha;
    JointDist source_joint;      ///< over (X,S1,S2)
    DistortionMatrix distortion;

    SourceProblem(Alphabet x, Alphabet xhat, Alphabet s1, Alphabet s2, JointDist joint,
                  DistortionMatrix dist);
};

struct RdPoint {
    double target_d = 0.0;
    double rate = 0.0;        ///< bits; certified by re-evaluating rd_objective
    double achieved_d = 0.0;  ///< <= target_d + 1e-9
    ConditionalKernel u_given_xs1;  ///< (X,S1) -> U
    DeterministicMap xhat_map;      ///< (U,S2) -> Xhat
    std::optional<double> lambda;
    SolverDiagnostics diagnostics;
};

struct RdCurve {
    std::vector<RdPoint> points;  ///< nondominated, sorted by achieved_d
    double d_min = 0.0, d_max = 0.0;
};

/// Default auxiliary cardinality |X|*|S1|+2 for the two-sided problem.
/// (The pure Wyner-Ziv reduction uses the known bound |X|+1 instead; see
/// special_cases.)
int default_u_size(const SourceProblem& prob);

/// (I(U;S1,X) - I(U;S2), E d(X,Xhat)) of the joint
/// p(x,s1,s2) p(u|x,s1) 1{xhat=g(u,s2)}.
std::pair<double, double> rd_objective(const SourceProblem& prob,
                                       const ConditionalKernel& u_given_xs1,
                                       const DeterministicMap& xhat_map);

/// d_min = E[min_xhat d(X,xhat)] (attainable once U can reveal X),
/// d_max = best constant-reconstruction distortion. d_min <= d_max.
std::pair<double, double> feasible_range(const SourceProblem& prob);

/// Lowest rate found subject to E d <= target_d: Lagrangian bisection over
/// the map enumeration / multi-start descent, then a penalty polish at the
/// target. The result is a certified upper bound on R(D).
RdPoint solve_rd_point(const SourceProblem& prob, double target_d, int u_size,
                       const SolverOptions& opts = {});

/// One Lagrangian point per lambda: minimize rate + lambda * distortion.
/// Dominated points are dropped and the survivors sorted by achieved_d.
RdCurve sweep_rd_curve(const SourceProblem& prob, int u_size, std::span<const double> lambda_grid,
                       const SolverOptions& opts = {});

}  // namespace sideinfo
