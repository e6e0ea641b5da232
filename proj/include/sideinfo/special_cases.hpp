#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "sideinfo/capacity.hpp"
#include "sideinfo/rate_distortion.hpp"

namespace sideinfo {

/// Which side observes the state. First subscript: sender (channel) /
/// encoder (source); second: receiver / decoder.
struct AvailabilityPattern {
    bool sender_knows = false;
    bool receiver_knows = false;

    static AvailabilityPattern from_subscript(const std::string& s);
    std::string subscript() const {
        return std::string(1, sender_knows ? '1' : '0') + (receiver_knows ? '1' : '0');
    }
};

/// Under the channel/source correspondence the subscripts swap: C_10 <-> R_01.
inline AvailabilityPattern dual_pattern(AvailabilityPattern p) {
    return {p.receiver_knows, p.sender_knows};
}

/// Channel with a single state variable: S ~ p(s), kernel p(y|x,s). The
/// two-sided problems are produced from this by degenerate().
struct StateChannel {
    Alphabet x_alpha, y_alpha, s_alpha;
    Dist state;                  ///< p(s)
    ConditionalKernel y_given_xs;  ///< (X,S) -> Y

    StateChannel(Alphabet x, Alphabet y, Alphabet s, Dist ps, ConditionalKernel k);
};

/// Source with a single state variable: (X,S) ~ p(x,s) plus d(x,xhat).
struct StateSource {
    Alphabet x_alpha, xhat_alpha, s_alpha;
    JointDist xs_joint;  ///< over (X,S)
    DistortionMatrix distortion;

    StateSource(Alphabet x, Alphabet xhat, Alphabet s, JointDist xs, DistortionMatrix d);
};

/// Two-sided problem with the unavailable side's state collapsed to a
/// size-1 alphabet (phi) and kernels re-marginalized accordingly. Pattern 11
/// places the same S on both sides via a diagonal joint.
ChannelProblem degenerate(const StateChannel& base, AvailabilityPattern pattern);
SourceProblem degenerate(const StateSource& base, AvailabilityPattern pattern);

// ---- Classical alternating-optimization iterations ----

/// Blahut-Arimoto channel capacity of a plain kernel X -> Y, in bits.
double ba_capacity(const ConditionalKernel& w, double rel_tol = 1e-9, long max_iters = 100000);

/// Rate-distortion of per-state sources sharing one distortion budget:
/// min sum_s p(s) I_s(X;Xhat) s.t. sum_s p(s) E_s d <= D. A common Lagrange
/// multiplier is bisected (exact for the convex per-state curves) and flat
/// segments are resolved by chord interpolation. One entry in x_given_s per
/// state; pass a single state for the plain R(D).
double conditional_rd(const Dist& ps, const std::vector<Dist>& x_given_s,
                      const DistortionMatrix& d, double target_d, double rel_tol = 1e-9,
                      long max_iters = 100000);

/// Plain rate-distortion min I(X;Xhat) s.t. E d <= D.
double ba_rd(const Dist& px, const DistortionMatrix& d, double target_d, double rel_tol = 1e-9,
             long max_iters = 100000);

// ---- Dedicated formulas (1)-(8) ----

double dedicated_capacity(const StateChannel& base, AvailabilityPattern pattern,
                          const SolverOptions& opts = {});

double dedicated_rd(const StateSource& base, AvailabilityPattern pattern, double target_d,
                    const SolverOptions& opts = {});

// ---- Reduction checks (Corollaries 1 and 2) ----

struct ReductionReport {
    std::string pattern;
    double general = 0.0;
    double dedicated = 0.0;
    double diff = 0.0;
    bool pass = false;  ///< |general - dedicated| <= 1e-3 bits
};

ReductionReport verify_reduction(const StateChannel& base, AvailabilityPattern pattern,
                                 const SolverOptions& opts = {});
ReductionReport verify_reduction(const StateSource& base, AvailabilityPattern pattern,
                                 double target_d, const SolverOptions& opts = {});

/// Auxiliary cardinality used for the general-theorem side of a reduction:
/// the embedding sizes that realize each dedicated formula, plus headroom
/// where time-sharing may be needed.
int reduction_u_size(const StateChannel& base, AvailabilityPattern pattern);
int reduction_u_size(const StateSource& base, AvailabilityPattern pattern);

// ---- Transformation table (duality) ----

enum class Side { channel, source };

struct DualTemplate {
    bool maximize = false;
    std::array<std::string, 2> outer_pair;  ///< variables of the positive term
    std::string subtract_var;               ///< variable of the negative term
    /// Variable correspondences, applied when mapping to the other side.
    std::vector<std::pair<std::string, std::string>> role_map;
};

inline bool operator==(const DualTemplate& a, const DualTemplate& b) {
    return a.maximize == b.maximize && a.outer_pair == b.outer_pair &&
           a.subtract_var == b.subtract_var && a.role_map == b.role_map;
}

DualTemplate dual_template_of(Side side);

/// Image of a template under its role map (channel <-> source). Applying
/// twice is the identity.
DualTemplate apply_role_map(const DualTemplate& t);

}  // namespace sideinfo
