#include "sideinfo/rate_distortion.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <string>

#include "sideinfo/capacity.hpp"  // map_count / map index helpers
#include "sideinfo/rng.hpp"
#include "projected_descent.hpp"
#include "starts.hpp"

namespace sideinfo {

namespace {

constexpr double kLog2E = 1.4426950408889634;

/// Flat-array evaluator for the Wyner-Ziv-form objective at fixed
/// g:(U,S2)->Xhat. Minimizes either J + lambda*Ed or the target penalty
/// J + mu*max(0, Ed - target).
struct WzEval {
    enum class Mode { lagrangian, penalty };

    int nu = 0, nx = 0, ns1 = 0, ns2 = 0, nxh = 0;
    std::vector<double> pxs1s2;  // p(x,s1,s2), s2 fastest
    std::vector<double> pxs1;    // p(x,s1)
    std::vector<double> ps2;     // p(s2)
    const DistortionMatrix* dist = nullptr;
    std::vector<double> c;  // C[(x,s1),u] = sum_s2 p(x,s1,s2) d(x, g(u,s2))
    std::vector<double> pus2;
    Mode mode = Mode::lagrangian;
    double lambda = 0.0;
    double mu = 0.0;
    double target = 0.0;

    WzEval(const SourceProblem& prob, int u_size) {
        nu = u_size;
        nx = prob.x_alpha.size;
        ns1 = prob.s1_alpha.size;
        ns2 = prob.s2_alpha.size;
        nxh = prob.xhat_alpha.size;
        pxs1s2 = prob.source_joint.mass();
        pxs1.assign(static_cast<std::size_t>(nx) * ns1, 0.0);
        ps2.assign(static_cast<std::size_t>(ns2), 0.0);
        for (int x = 0; x < nx; ++x)
            for (int s1 = 0; s1 < ns1; ++s1)
                for (int s2 = 0; s2 < ns2; ++s2) {
                    double p = pxs1s2[(static_cast<std::size_t>(x) * ns1 + s1) * ns2 + s2];
                    pxs1[static_cast<std::size_t>(x) * ns1 + s1] += p;
                    ps2[static_cast<std::size_t>(s2)] += p;
                }
        dist = &prob.distortion;
        c.assign(static_cast<std::size_t>(nx) * ns1 * nu, 0.0);
        pus2.assign(static_cast<std::size_t>(nu) * ns2, 0.0);
    }

    int rows() const { return nx * ns1; }
    int cols() const { return nu; }

    void set_map(const std::vector<int>& table) {
        // table[(u,s2)], s2 fastest
        for (int x = 0; x < nx; ++x)
            for (int s1 = 0; s1 < ns1; ++s1)
                for (int u = 0; u < nu; ++u) {
                    double acc = 0.0;
                    for (int s2 = 0; s2 < ns2; ++s2) {
                        int xh = table[static_cast<std::size_t>(u) * ns2 + s2];
                        acc += pxs1s2[(static_cast<std::size_t>(x) * ns1 + s1) * ns2 + s2] *
                               dist->at(x, xh);
                    }
                    c[(static_cast<std::size_t>(x) * ns1 + s1) * nu + u] = acc;
                }
    }

    void fill_pus2(const std::vector<double>& q) {
        std::fill(pus2.begin(), pus2.end(), 0.0);
        for (int x = 0; x < nx; ++x)
            for (int s1 = 0; s1 < ns1; ++s1) {
                std::size_t row = static_cast<std::size_t>(x) * ns1 + s1;
                for (int u = 0; u < nu; ++u) {
                    double qq = q[row * nu + u];
                    if (qq <= 0.0) continue;
                    const double* p = pxs1s2.data() + row * ns2;
                    for (int s2 = 0; s2 < ns2; ++s2)
                        pus2[static_cast<std::size_t>(u) * ns2 + s2] += qq * p[s2];
                }
            }
    }

    /// (J, Ed) with J = I(U;S1,X) - I(U;S2) = H(U|S2) - H(U|X,S1) in bits.
    std::pair<double, double> rate_and_distortion(const std::vector<double>& q) {
        fill_pus2(q);
        long double hu_s2 = 0.0L;
        for (int u = 0; u < nu; ++u)
            for (int s2 = 0; s2 < ns2; ++s2) {
                double p = pus2[static_cast<std::size_t>(u) * ns2 + s2];
                if (p > 0.0) hu_s2 -= static_cast<long double>(p) * std::log(p / ps2[s2]);
            }
        long double hu_xs1 = 0.0L;
        long double ed = 0.0L;
        for (int r = 0; r < nx * ns1; ++r) {
            double pr = pxs1[static_cast<std::size_t>(r)];
            for (int u = 0; u < nu; ++u) {
                double qq = q[static_cast<std::size_t>(r) * nu + u];
                if (qq > 0.0) {
                    if (pr > 0.0) hu_xs1 -= static_cast<long double>(pr) * qq * std::log(qq);
                    ed += static_cast<long double>(qq) * c[static_cast<std::size_t>(r) * nu + u];
                }
            }
        }
        return {static_cast<double>(hu_s2 - hu_xs1) * kLog2E, static_cast<double>(ed)};
    }

    double value(const std::vector<double>& q) {
        auto [j, ed] = rate_and_distortion(q);
        if (mode == Mode::lagrangian) return j + lambda * ed;
        return j + mu * std::max(0.0, ed - target);
    }

    bool gradient(const std::vector<double>& q, std::vector<double>& g) {
        fill_pus2(q);
        double dweight = lambda;
        if (mode == Mode::penalty) {
            long double ed = 0.0L;
            for (std::size_t i = 0; i < q.size(); ++i) ed += q[i] * c[i];
            dweight = (static_cast<double>(ed) > target) ? mu : 0.0;
        }
        bool finite = true;
        for (int r = 0; r < nx * ns1; ++r) {
            double pr = pxs1[static_cast<std::size_t>(r)];
            const double* p = pxs1s2.data() + static_cast<std::size_t>(r) * ns2;
            for (int u = 0; u < nu; ++u) {
                std::size_t gi = static_cast<std::size_t>(r) * nu + u;
                if (pr <= 0.0) {
                    g[gi] = 0.0;
                    continue;
                }
                double acc = pr * std::log2(q[gi]);
                for (int s2 = 0; s2 < ns2; ++s2) {
                    if (p[s2] > 0.0)
                        acc -= p[s2] * std::log2(pus2[static_cast<std::size_t>(u) * ns2 + s2]);
                }
                acc += dweight * c[gi];
                g[gi] = acc;
                if (!std::isfinite(acc)) finite = false;
            }
        }
        return finite;
    }
};

std::string unique_name(const std::string& wanted, const std::set<std::string>& taken) {
    if (!taken.count(wanted)) return wanted;
    for (int i = 0;; ++i) {
        std::string cand = wanted + "_" + std::to_string(i);
        if (!taken.count(cand)) return cand;
    }
}

std::vector<int> enumerated_table(std::uint64_t index, std::size_t cells, int nxh) {
    std::vector<int> table(cells);
    for (std::size_t c = 0; c < cells; ++c) {
        table[c] = static_cast<int>(index % static_cast<std::uint64_t>(nxh));
        index /= static_cast<std::uint64_t>(nxh);
    }
    return table;
}

std::vector<int> sampled_table(std::uint64_t seed, std::uint64_t index, std::size_t cells,
                               int nxh) {
    SplitMix64 g(mix_seed(seed, 0x676d617073ULL + index));
    std::vector<int> table(cells);
    for (auto& c : table) c = g.next_below(nxh);
    return table;
}

struct LagSolution {
    double penalized = 0.0;
    double rate = 0.0;
    double distortion = 0.0;
    std::vector<double> q;
    std::vector<int> table;
    std::uint64_t map_index = 0;
    int start_index = 0;
};

/// One full minimization of the (Lagrangian or penalty) objective over
/// deterministic maps x starts. extra_starts are appended after the
/// standard patterns.
LagSolution minimize_once(const SourceProblem& prob, int u_size, WzEval::Mode mode, double lam,
                          double mu, double target, const SolverOptions& opts, int n_starts,
                          const std::vector<std::vector<double>>& extra_starts,
                          SolverDiagnostics* diag) {
    std::set<std::string> taken{prob.x_alpha.name, prob.xhat_alpha.name, prob.s1_alpha.name,
                                prob.s2_alpha.name};
    Alphabet u_alpha{unique_name("u", taken), u_size};
    const std::size_t cells = static_cast<std::size_t>(u_size) * prob.s2_alpha.size;
    auto full_count = map_count(u_alpha, prob.s2_alpha, prob.xhat_alpha);
    bool sampled = !(full_count && *full_count <= opts.enum_cap);
    if (sampled && !opts.allow_map_sampling) {
        throw BudgetError("reconstruction-map enumeration needs " +
                          (full_count ? std::to_string(*full_count) : std::string(">2^63")) +
                          " maps (enum_cap " + std::to_string(opts.enum_cap) +
                          ") and sampling is disabled");
    }
    const std::uint64_t n_maps = sampled ? static_cast<std::uint64_t>(opts.map_samples) : *full_count;
    const int starts_total = n_starts + static_cast<int>(extra_starts.size());
    const std::uint64_t n_total = n_maps * static_cast<std::uint64_t>(starts_total);

    auto table_for = [&](std::uint64_t m) {
        return sampled ? sampled_table(opts.seed, m, cells, prob.xhat_alpha.size)
                       : enumerated_table(m, cells, prob.xhat_alpha.size);
    };
    auto start_for = [&](int r) {
        if (r < n_starts)
            return detail::make_start(r, prob.x_alpha.size * prob.s1_alpha.size, u_size, opts.seed);
        return extra_starts[static_cast<std::size_t>(r - n_starts)];
    };

    std::atomic<long long> total_iters{0};
    std::atomic<int> total_perturbs{0};

    struct Ctx {
        WzEval eval;
        std::uint64_t map_index = 0;
        bool has_map = false;
    };
    auto make_ctx = [&] {
        Ctx ctx{WzEval(prob, u_size), 0, false};
        ctx.eval.mode = mode;
        ctx.eval.lambda = lam;
        ctx.eval.mu = mu;
        ctx.eval.target = target;
        return ctx;
    };
    auto eval_one = [&](Ctx& ctx, std::size_t i) -> double {
        std::uint64_t m = static_cast<std::uint64_t>(i) / starts_total;
        int r = static_cast<int>(static_cast<std::uint64_t>(i) % starts_total);
        if (!ctx.has_map || ctx.map_index != m) {
            ctx.eval.set_map(table_for(m));
            ctx.map_index = m;
            ctx.has_map = true;
        }
        auto res = detail::projected_line_search(ctx.eval, start_for(r), opts.max_iters,
                                                 opts.tol_bits, -1.0);
        total_iters.fetch_add(res.iterations, std::memory_order_relaxed);
        total_perturbs.fetch_add(res.perturbations, std::memory_order_relaxed);
        return -res.value;  // back to minimization sense
    };
    auto [best_i, best_val] =
        par::reduce_best<double>(opts.exec, static_cast<std::size_t>(n_total), make_ctx, eval_one,
                                 [](double a, double b) { return a < b; });
    (void)best_val;

    const std::uint64_t m_win = static_cast<std::uint64_t>(best_i) / starts_total;
    const int r_win = static_cast<int>(static_cast<std::uint64_t>(best_i) % starts_total);

    WzEval eval(prob, u_size);
    eval.mode = mode;
    eval.lambda = lam;
    eval.mu = mu;
    eval.target = target;
    LagSolution sol;
    sol.table = table_for(m_win);
    eval.set_map(sol.table);
    auto res = detail::projected_line_search(eval, start_for(r_win), opts.max_iters, opts.tol_bits,
                                             -1.0);
    auto [j, ed] = eval.rate_and_distortion(res.q);
    sol.penalized = -res.value;
    sol.rate = j;
    sol.distortion = ed;
    sol.q = std::move(res.q);
    sol.map_index = m_win;
    sol.start_index = r_win;
    if (diag) {
        diag->iterations += total_iters.load();
        diag->perturbation_restarts += total_perturbs.load();
        diag->maps_considered = n_maps;
        diag->maps_sampled = sampled;
    }
    return sol;
}

RdPoint make_point(const SourceProblem& prob, int u_size, double target, const LagSolution& sol,
                   std::optional<double> lambda, SolverDiagnostics diag) {
    std::set<std::string> taken{prob.x_alpha.name, prob.xhat_alpha.name, prob.s1_alpha.name,
                                prob.s2_alpha.name};
    Alphabet u_alpha{unique_name("u", taken), u_size};
    RdPoint pt{target,
               0.0,
               0.0,
               ConditionalKernel({prob.x_alpha, prob.s1_alpha}, u_alpha, sol.q),
               DeterministicMap({u_alpha, prob.s2_alpha}, prob.xhat_alpha, sol.table),
               lambda,
               std::move(diag)};
    auto [rate, ed] = rd_objective(prob, pt.u_given_xs1, pt.xhat_map);
    pt.rate = rate;
    pt.achieved_d = ed;
    pt.diagnostics.winning_map_index = sol.map_index;
    pt.diagnostics.winning_restart = sol.start_index;
    return pt;
}

}  // namespace

DistortionMatrix::DistortionMatrix(Alphabet x, Alphabet xhat, std::vector<double> entries)
    : x_alpha(std::move(x)), xhat_alpha(std::move(xhat)), d(std::move(entries)) {
    if (x_alpha.size < 1 || xhat_alpha.size < 1)
        throw ValidationError("distortion alphabets must be nonempty");
    if (d.size() != static_cast<std::size_t>(x_alpha.size) * xhat_alpha.size)
        throw ValidationError("distortion matrix shape mismatch");
    for (double v : d) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw ValidationError("distortion entries must be finite and nonnegative");
    }
}

SourceProblem::SourceProblem(Alphabet x, Alphabet xhat, Alphabet s1, Alphabet s2, JointDist joint,
                             DistortionMatrix dist)
    : x_alpha(std::move(x)),
      xhat_alpha(std::move(xhat)),
      s1_alpha(std::move(s1)),
      s2_alpha(std::move(s2)),
      source_joint(std::move(joint)),
      distortion(std::move(dist)) {
    std::set<std::string> names{x_alpha.name, xhat_alpha.name, s1_alpha.name, s2_alpha.name};
    if (names.size() != 4) throw ValidationError("source problem alphabets must have distinct names");
    if (source_joint.rank() != 3 || !(source_joint.axis(0) == x_alpha) ||
        !(source_joint.axis(1) == s1_alpha) || !(source_joint.axis(2) == s2_alpha))
        throw ValidationError("source_joint must be over (X,S1,S2)");
    if (!(distortion.x_alpha == x_alpha) || !(distortion.xhat_alpha == xhat_alpha))
        throw ValidationError("distortion matrix must be over (X,Xhat)");
}

int default_u_size(const SourceProblem& prob) {
    return prob.x_alpha.size * prob.s1_alpha.size + 2;
}

std::pair<double, double> rd_objective(const SourceProblem& prob,
                                       const ConditionalKernel& u_given_xs1,
                                       const DeterministicMap& xhat_map) {
    if (u_given_xs1.from_axes().size() != 2 || !(u_given_xs1.from_axes()[0] == prob.x_alpha) ||
        !(u_given_xs1.from_axes()[1] == prob.s1_alpha))
        throw ValidationError("u_given_xs1 must condition on (X,S1)");
    const Alphabet& u_alpha = u_given_xs1.to_axis();
    if (xhat_map.from_axes().size() != 2 || !(xhat_map.from_axes()[0] == u_alpha) ||
        !(xhat_map.from_axes()[1] == prob.s2_alpha) || !(xhat_map.to_axis() == prob.xhat_alpha))
        throw ValidationError("xhat_map must map (U,S2) to Xhat");

    JointDist j = compose_joint(prob.source_joint, u_given_xs1);  // (x,s1,s2,u)
    j = compose_joint(j, xhat_map);                               // (x,s1,s2,u,xh)
    const int gu[] = {3}, gs1x[] = {0, 1}, gs2[] = {2};
    double rate = mutual_information_groups(j, gu, gs1x) - mutual_information_groups(j, gu, gs2);

    long double ed = 0.0L;
    const int nx = prob.x_alpha.size, ns1 = prob.s1_alpha.size, ns2 = prob.s2_alpha.size,
              nu = u_alpha.size, nxh = prob.xhat_alpha.size;
    std::size_t flat = 0;
    for (int x = 0; x < nx; ++x)
        for (int s1 = 0; s1 < ns1; ++s1)
            for (int s2 = 0; s2 < ns2; ++s2)
                for (int u = 0; u < nu; ++u)
                    for (int xh = 0; xh < nxh; ++xh, ++flat) {
                        double p = j[flat];
                        if (p > 0.0) ed += static_cast<long double>(p) * prob.distortion.at(x, xh);
                    }
    (void)ns1;
    return {rate, static_cast<double>(ed)};
}

std::pair<double, double> feasible_range(const SourceProblem& prob) {
    const int nx = prob.x_alpha.size, nxh = prob.xhat_alpha.size;
    Dist px = marginal(prob.source_joint, 0);
    long double dmin = 0.0L;
    for (int x = 0; x < nx; ++x) {
        double best = prob.distortion.at(x, 0);
        for (int xh = 1; xh < nxh; ++xh) best = std::min(best, prob.distortion.at(x, xh));
        dmin += static_cast<long double>(px[x]) * best;
    }
    double dmax = 0.0;
    for (int xh = 0; xh < nxh; ++xh) {
        long double e = 0.0L;
        for (int x = 0; x < nx; ++x)
            e += static_cast<long double>(px[x]) * prob.distortion.at(x, xh);
        if (xh == 0 || static_cast<double>(e) < dmax) dmax = static_cast<double>(e);
    }
    return {static_cast<double>(dmin), dmax};
}

RdPoint solve_rd_point(const SourceProblem& prob, double target_d, int u_size,
                       const SolverOptions& opts) {
    if (u_size < 1) throw ValidationError("u_size must be >= 1");
    auto [dmin, dmax] = feasible_range(prob);
    if (target_d < dmin - 1e-12) {
        throw InfeasibleError("target distortion " + std::to_string(target_d) +
                                  " below feasible minimum d_min = " + std::to_string(dmin),
                              dmin);
    }
    SolverDiagnostics diag;
    diag.restarts = std::max(1, opts.restarts);

    if (target_d >= dmax) {
        // Constant reconstruction already meets the target at zero rate.
        const int nxh = prob.xhat_alpha.size;
        Dist px = marginal(prob.source_joint, 0);
        int best_xh = 0;
        double best_e = 0.0;
        for (int xh = 0; xh < nxh; ++xh) {
            double e = 0.0;
            for (int x = 0; x < prob.x_alpha.size; ++x) e += px[x] * prob.distortion.at(x, xh);
            if (xh == 0 || e < best_e) {
                best_e = e;
                best_xh = xh;
            }
        }
        LagSolution sol;
        sol.q.assign(static_cast<std::size_t>(prob.x_alpha.size * prob.s1_alpha.size) * u_size, 0.0);
        for (int r = 0; r < prob.x_alpha.size * prob.s1_alpha.size; ++r)
            sol.q[static_cast<std::size_t>(r) * u_size] = 1.0;
        sol.table.assign(static_cast<std::size_t>(u_size) * prob.s2_alpha.size, best_xh);
        return make_point(prob, u_size, target_d, sol, 0.0, std::move(diag));
    }

    SolverOptions coarse = opts;
    coarse.restarts = std::max(4, opts.restarts / 4);
    const int n_coarse = coarse.restarts;
    const int n_full = std::max(1, opts.restarts);

    std::vector<std::vector<double>> warm;
    std::optional<LagSolution> best_feasible;
    double lambda_at_best = 0.0;
    auto consider = [&](const LagSolution& sol, double lam) {
        if (sol.distortion <= target_d + 1e-9) {
            if (!best_feasible || sol.rate < best_feasible->rate ||
                (sol.rate == best_feasible->rate && sol.distortion < best_feasible->distortion)) {
                best_feasible = sol;
                lambda_at_best = lam;
            }
        }
    };

    // Bracket the multiplier, keeping the best feasible configuration seen.
    double lam_lo = 0.0, lam_hi = 1.0;
    LagSolution sol = minimize_once(prob, u_size, WzEval::Mode::lagrangian, 0.0, 0.0, 0.0, coarse,
                                    n_coarse, warm, &diag);
    consider(sol, 0.0);
    warm.push_back(sol.q);
    bool bracketed = sol.distortion <= target_d + 1e-9;
    if (!bracketed) {
        for (int grow = 0; grow < 18; ++grow) {
            sol = minimize_once(prob, u_size, WzEval::Mode::lagrangian, lam_hi, 0.0, 0.0, coarse,
                                n_coarse, warm, &diag);
            consider(sol, lam_hi);
            if (warm.size() < 4) warm.push_back(sol.q);
            else warm.back() = sol.q;
            if (sol.distortion <= target_d + 1e-9) {
                bracketed = true;
                break;
            }
            lam_lo = lam_hi;
            lam_hi *= 8.0;
        }
    }
    if (bracketed) {
        for (int it = 0; it < 10 && lam_hi - lam_lo > 1e-4 * (1.0 + lam_hi); ++it) {
            double mid = 0.5 * (lam_lo + lam_hi);
            sol = minimize_once(prob, u_size, WzEval::Mode::lagrangian, mid, 0.0, 0.0, coarse,
                                n_coarse, warm, &diag);
            consider(sol, mid);
            if (warm.size() < 4) warm.push_back(sol.q);
            else warm.back() = sol.q;
            if (sol.distortion <= target_d + 1e-9)
                lam_hi = mid;
            else
                lam_lo = mid;
        }
    }

    // Penalty polish at the exact target; mu large enough to be an exact
    // penalty beyond the bracketing multiplier.
    double mu = 2.0 * (lam_hi + 1.0);
    if (best_feasible) warm.push_back(best_feasible->q);
    LagSolution polished = minimize_once(prob, u_size, WzEval::Mode::penalty, 0.0, mu, target_d,
                                         opts, n_full, warm, &diag);
    consider(polished, lam_hi);

    if (!best_feasible) {
        double reached = std::min(sol.distortion, polished.distortion);
        throw InfeasibleError("target distortion " + std::to_string(target_d) +
                                  " not reachable at u_size " + std::to_string(u_size) +
                                  " (closest achieved " + std::to_string(reached) +
                                  ", d_min = " + std::to_string(dmin) + ")",
                              dmin);
    }
    return make_point(prob, u_size, target_d, *best_feasible, lambda_at_best, std::move(diag));
}

RdCurve sweep_rd_curve(const SourceProblem& prob, int u_size, std::span<const double> lambda_grid,
                       const SolverOptions& opts) {
    if (lambda_grid.empty()) throw ValidationError("lambda grid must be nonempty");
    for (double l : lambda_grid) {
        if (!(l >= 0.0)) throw ValidationError("lambda grid values must be >= 0");
    }
    auto [dmin, dmax] = feasible_range(prob);

    // Grid points are independent solves; parallelism lives inside each one.
    std::vector<RdPoint> pts;
    pts.reserve(lambda_grid.size());
    for (double lam : lambda_grid) {
        SolverDiagnostics diag;
        diag.restarts = std::max(1, opts.restarts);
        LagSolution sol = minimize_once(prob, u_size, WzEval::Mode::lagrangian, lam, 0.0, 0.0,
                                        opts, std::max(1, opts.restarts), {}, &diag);
        RdPoint pt = make_point(prob, u_size, sol.distortion, sol, lam, std::move(diag));
        pt.target_d = pt.achieved_d;
        pts.push_back(std::move(pt));
    }

    // Lower-left staircase: drop dominated points, sort by distortion.
    std::vector<RdPoint> keep;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dominated = false;
        for (std::size_t k = 0; k < pts.size() && !dominated; ++k) {
            if (k == i) continue;
            bool le_d = pts[k].achieved_d <= pts[i].achieved_d;
            bool le_r = pts[k].rate <= pts[i].rate;
            bool strict = pts[k].achieved_d < pts[i].achieved_d || pts[k].rate < pts[i].rate;
            if (le_d && le_r && strict) dominated = true;
        }
        if (!dominated) keep.push_back(std::move(pts[i]));
    }
    std::sort(keep.begin(), keep.end(),
              [](const RdPoint& a, const RdPoint& b) { return a.achieved_d < b.achieved_d; });
    // Equal-distortion duplicates: keep the lowest rate.
    std::vector<RdPoint> uniq;
    for (auto& p : keep) {
        if (!uniq.empty() && std::fabs(uniq.back().achieved_d - p.achieved_d) < 1e-12) {
            if (p.rate < uniq.back().rate) uniq.back() = std::move(p);
        } else {
            uniq.push_back(std::move(p));
        }
    }
    return RdCurve{std::move(uniq), dmin, dmax};
}

}  // namespace sideinfo
