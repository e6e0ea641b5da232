#include "sideinfo/capacity.hpp"

#include <atomic>
#include <cmath>
#include <cstring>
#include <set>
#include <string>

#include "sideinfo/rng.hpp"
#include "projected_descent.hpp"
#include "starts.hpp"

namespace sideinfo {

namespace {

constexpr double kLog2E = 1.4426950408889634;

/// Flat-array evaluator for I(U;S2,Y) - I(U;S1) at fixed f:(U,S1)->X.
/// One instance per worker; value/gradient reuse scratch buffers.
struct GpEval {
    int nu = 0, ns1 = 0, ns2 = 0, nx = 0, ny = 0;
    std::vector<double> w;     // p(s1,s2), s2 fastest
    std::vector<double> ps1;   // p(s1)
    const std::vector<double>* chan = nullptr;  // kernel rows, (x,s1,s2) major
    std::vector<double> a;     // A[u][s1][s2][y]
    std::vector<double> pusy, psy, pu;

    GpEval(const ChannelProblem& prob, int u_size) {
        nu = u_size;
        ns1 = prob.s1_alpha.size;
        ns2 = prob.s2_alpha.size;
        nx = prob.x_alpha.size;
        ny = prob.y_alpha.size;
        w = prob.state_joint.mass();
        ps1.assign(static_cast<std::size_t>(ns1), 0.0);
        for (int s1 = 0; s1 < ns1; ++s1)
            for (int s2 = 0; s2 < ns2; ++s2) ps1[s1] += w[static_cast<std::size_t>(s1) * ns2 + s2];
        chan = &prob.channel.rows();
        a.assign(static_cast<std::size_t>(nu) * ns1 * ns2 * ny, 0.0);
        pusy.assign(static_cast<std::size_t>(nu) * ns2 * ny, 0.0);
        psy.assign(static_cast<std::size_t>(ns2) * ny, 0.0);
        pu.assign(static_cast<std::size_t>(nu), 0.0);
    }

    int rows() const { return ns1; }
    int cols() const { return nu; }

    void set_map(const std::vector<int>& table) {
        // table[(u,s1)], s1 fastest
        for (int u = 0; u < nu; ++u) {
            for (int s1 = 0; s1 < ns1; ++s1) {
                int x = table[static_cast<std::size_t>(u) * ns1 + s1];
                for (int s2 = 0; s2 < ns2; ++s2) {
                    std::size_t crow =
                        ((static_cast<std::size_t>(x) * ns1 + s1) * ns2 + s2) * ny;
                    std::size_t arow =
                        ((static_cast<std::size_t>(u) * ns1 + s1) * ns2 + s2) * ny;
                    double wv = w[static_cast<std::size_t>(s1) * ns2 + s2];
                    for (int y = 0; y < ny; ++y) a[arow + y] = wv * (*chan)[crow + y];
                }
            }
        }
    }

    void fill_pusy(const std::vector<double>& q) {
        std::fill(pusy.begin(), pusy.end(), 0.0);
        const std::size_t block = static_cast<std::size_t>(ns2) * ny;
        for (int s1 = 0; s1 < ns1; ++s1) {
            for (int u = 0; u < nu; ++u) {
                double qq = q[static_cast<std::size_t>(s1) * nu + u];
                if (qq <= 0.0) continue;
                const double* av = a.data() + (static_cast<std::size_t>(u) * ns1 + s1) * block;
                double* pv = pusy.data() + static_cast<std::size_t>(u) * block;
                for (std::size_t k = 0; k < block; ++k) pv[k] += qq * av[k];
            }
        }
        std::fill(psy.begin(), psy.end(), 0.0);
        for (int u = 0; u < nu; ++u) {
            const double* pv = pusy.data() + static_cast<std::size_t>(u) * block;
            for (std::size_t k = 0; k < block; ++k) psy[k] += pv[k];
        }
    }

    /// J = H(U|S1) - H(U|S2,Y) in bits.
    double value(const std::vector<double>& q) {
        fill_pusy(q);
        long double hu_s1 = 0.0L;
        for (int s1 = 0; s1 < ns1; ++s1) {
            double p1 = ps1[static_cast<std::size_t>(s1)];
            if (p1 <= 0.0) continue;
            for (int u = 0; u < nu; ++u) {
                double qq = q[static_cast<std::size_t>(s1) * nu + u];
                if (qq > 0.0) hu_s1 -= static_cast<long double>(p1) * qq * std::log(qq);
            }
        }
        long double hu_sy = 0.0L;
        const std::size_t block = static_cast<std::size_t>(ns2) * ny;
        for (int u = 0; u < nu; ++u) {
            const double* pv = pusy.data() + static_cast<std::size_t>(u) * block;
            for (std::size_t k = 0; k < block; ++k) {
                if (pv[k] > 0.0) hu_sy -= static_cast<long double>(pv[k]) * std::log(pv[k] / psy[k]);
            }
        }
        return static_cast<double>(hu_s1 - hu_sy) * kLog2E;
    }

    /// Gradient of J in bits; false when degenerate support makes an entry
    /// non-finite (caller perturbs and retries).
    bool gradient(const std::vector<double>& q, std::vector<double>& g) {
        fill_pusy(q);
        std::fill(pu.begin(), pu.end(), 0.0);
        for (int s1 = 0; s1 < ns1; ++s1)
            for (int u = 0; u < nu; ++u)
                pu[u] += ps1[static_cast<std::size_t>(s1)] * q[static_cast<std::size_t>(s1) * nu + u];
        bool finite = true;
        const std::size_t block = static_cast<std::size_t>(ns2) * ny;
        for (int s1 = 0; s1 < ns1; ++s1) {
            double p1 = ps1[static_cast<std::size_t>(s1)];
            for (int u = 0; u < nu; ++u) {
                std::size_t gi = static_cast<std::size_t>(s1) * nu + u;
                if (p1 <= 0.0) {
                    g[gi] = 0.0;
                    continue;
                }
                const double* av = a.data() + (static_cast<std::size_t>(u) * ns1 + s1) * block;
                const double* pv = pusy.data() + static_cast<std::size_t>(u) * block;
                double acc = 0.0;
                for (std::size_t k = 0; k < block; ++k) {
                    if (av[k] > 0.0) acc += av[k] * std::log2(pv[k] / psy[k]);
                }
                acc -= p1 * std::log2(q[gi] / pu[u]);
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

std::vector<int> sampled_map_table(std::uint64_t seed, std::uint64_t index, std::size_t cells,
                                   int nx) {
    SplitMix64 g(mix_seed(seed, 0x6d617073ULL + index));
    std::vector<int> table(cells);
    for (auto& c : table) c = g.next_below(nx);
    return table;
}

std::vector<int> enumerated_map_table(std::uint64_t index, std::size_t cells, int nx) {
    std::vector<int> table(cells);
    for (std::size_t c = 0; c < cells; ++c) {
        table[c] = static_cast<int>(index % static_cast<std::uint64_t>(nx));
        index /= static_cast<std::uint64_t>(nx);
    }
    return table;
}

}  // namespace

ChannelProblem::ChannelProblem(Alphabet x, Alphabet y, Alphabet s1, Alphabet s2, JointDist state,
                               ConditionalKernel chan)
    : x_alpha(std::move(x)),
      y_alpha(std::move(y)),
      s1_alpha(std::move(s1)),
      s2_alpha(std::move(s2)),
      state_joint(std::move(state)),
      channel(std::move(chan)) {
    std::set<std::string> names{x_alpha.name, y_alpha.name, s1_alpha.name, s2_alpha.name};
    if (names.size() != 4) throw ValidationError("channel problem alphabets must have distinct names");
    if (state_joint.rank() != 2 || !(state_joint.axis(0) == s1_alpha) ||
        !(state_joint.axis(1) == s2_alpha))
        throw ValidationError("state_joint must be over (S1,S2)");
    const auto& from = channel.from_axes();
    if (from.size() != 3 || !(from[0] == x_alpha) || !(from[1] == s1_alpha) ||
        !(from[2] == s2_alpha) || !(channel.to_axis() == y_alpha))
        throw ValidationError("channel kernel must map (X,S1,S2) to Y");
}

int default_u_size(const ChannelProblem& prob) {
    return prob.x_alpha.size * prob.s1_alpha.size + 1;
}

double objective(const ChannelProblem& prob, const ConditionalKernel& u_given_s1,
                 const DeterministicMap& x_map) {
    if (u_given_s1.from_axes().size() != 1 || !(u_given_s1.from_axes()[0] == prob.s1_alpha))
        throw ValidationError("u_given_s1 must condition on S1");
    const Alphabet& u_alpha = u_given_s1.to_axis();
    if (x_map.from_axes().size() != 2 || !(x_map.from_axes()[0] == u_alpha) ||
        !(x_map.from_axes()[1] == prob.s1_alpha) || !(x_map.to_axis() == prob.x_alpha))
        throw ValidationError("x_map must map (U,S1) to X");

    JointDist j = compose_joint(prob.state_joint, u_given_s1);  // (s1,s2,u)
    j = compose_joint(j, x_map);                                // (s1,s2,u,x)
    j = compose_joint(j, prob.channel);                         // (s1,s2,u,x,y)
    const int gu[] = {2}, gs2y[] = {1, 4}, gs1[] = {0};
    return mutual_information_groups(j, gu, gs2y) - mutual_information_groups(j, gu, gs1);
}

std::optional<std::uint64_t> map_count(const Alphabet& u_alpha, const Alphabet& s1_alpha,
                                       const Alphabet& x_alpha) {
    std::uint64_t cells =
        static_cast<std::uint64_t>(u_alpha.size) * static_cast<std::uint64_t>(s1_alpha.size);
    std::uint64_t count = 1;
    for (std::uint64_t c = 0; c < cells; ++c) {
        if (count > (~0ULL / 2) / static_cast<std::uint64_t>(x_alpha.size)) return std::nullopt;
        count *= static_cast<std::uint64_t>(x_alpha.size);
    }
    return count;
}

DeterministicMap map_by_index(const Alphabet& u_alpha, const Alphabet& s1_alpha,
                              const Alphabet& x_alpha, std::uint64_t index) {
    std::size_t cells = static_cast<std::size_t>(u_alpha.size) * s1_alpha.size;
    return DeterministicMap({u_alpha, s1_alpha}, x_alpha,
                            enumerated_map_table(index, cells, x_alpha.size));
}

std::vector<DeterministicMap> enumerate_maps(const Alphabet& u_alpha, const Alphabet& s1_alpha,
                                             const Alphabet& x_alpha) {
    auto count = map_count(u_alpha, s1_alpha, x_alpha);
    if (!count) throw BudgetError("deterministic map count overflows");
    std::vector<DeterministicMap> maps;
    maps.reserve(static_cast<std::size_t>(*count));
    for (std::uint64_t i = 0; i < *count; ++i)
        maps.push_back(map_by_index(u_alpha, s1_alpha, x_alpha, i));
    return maps;
}

AscentResult inner_ascent(const ChannelProblem& prob, const DeterministicMap& x_map,
                          const ConditionalKernel& start, const SolverOptions& opts) {
    if (start.from_axes().size() != 1 || !(start.from_axes()[0] == prob.s1_alpha))
        throw ValidationError("inner_ascent start must condition on S1");
    const Alphabet& u_alpha = start.to_axis();
    GpEval eval(prob, u_alpha.size);
    eval.set_map(x_map.table());
    auto res = detail::projected_line_search(eval, start.rows(), opts.max_iters, opts.tol_bits, 1.0);
    return AscentResult{ConditionalKernel({prob.s1_alpha}, u_alpha, std::move(res.q)), res.value,
                        res.iterations, res.perturbations};
}

CapacityResult solve_capacity(const ChannelProblem& prob, int u_size, const SolverOptions& opts) {
    if (u_size < 1) throw ValidationError("u_size must be >= 1");
    std::set<std::string> taken{prob.x_alpha.name, prob.y_alpha.name, prob.s1_alpha.name,
                                prob.s2_alpha.name};
    Alphabet u_alpha{unique_name("u", taken), u_size};

    const std::size_t cells = static_cast<std::size_t>(u_size) * prob.s1_alpha.size;
    auto full_count = map_count(u_alpha, prob.s1_alpha, prob.x_alpha);
    bool sampled = !(full_count && *full_count <= opts.enum_cap);
    if (sampled && !opts.allow_map_sampling) {
        throw BudgetError("map enumeration needs " +
                          (full_count ? std::to_string(*full_count) : std::string(">2^63")) +
                          " maps (enum_cap " + std::to_string(opts.enum_cap) +
                          ") and sampling is disabled");
    }
    const std::uint64_t n_maps = sampled ? static_cast<std::uint64_t>(opts.map_samples) : *full_count;
    const int n_starts = std::max(1, opts.restarts);
    const std::uint64_t n_total = n_maps * static_cast<std::uint64_t>(n_starts);

    auto table_for = [&](std::uint64_t m) {
        return sampled ? sampled_map_table(opts.seed, m, cells, prob.x_alpha.size)
                       : enumerated_map_table(m, cells, prob.x_alpha.size);
    };

    std::atomic<long long> total_iters{0};
    std::atomic<int> total_perturbs{0};

    struct Ctx {
        GpEval eval;
        std::uint64_t map_index;
        bool has_map = false;
    };
    auto make_ctx = [&] { return Ctx{GpEval(prob, u_size), 0, false}; };
    auto eval_one = [&](Ctx& ctx, std::size_t i) -> double {
        std::uint64_t m = static_cast<std::uint64_t>(i) / n_starts;
        int r = static_cast<int>(static_cast<std::uint64_t>(i) % n_starts);
        if (!ctx.has_map || ctx.map_index != m) {
            ctx.eval.set_map(table_for(m));
            ctx.map_index = m;
            ctx.has_map = true;
        }
        auto res = detail::projected_line_search(
            ctx.eval, detail::make_start(r, prob.s1_alpha.size, u_size, opts.seed),
            opts.max_iters, opts.tol_bits, 1.0);
        total_iters.fetch_add(res.iterations, std::memory_order_relaxed);
        total_perturbs.fetch_add(res.perturbations, std::memory_order_relaxed);
        return res.value;
    };
    auto [best_i, best_val] =
        par::reduce_best<double>(opts.exec, static_cast<std::size_t>(n_total), make_ctx, eval_one,
                                 [](double a, double b) { return a > b; });
    (void)best_val;

    const std::uint64_t m_win = static_cast<std::uint64_t>(best_i) / n_starts;
    const int r_win = static_cast<int>(static_cast<std::uint64_t>(best_i) % n_starts);

    // Deterministic replay of the winner (and its sibling starts for the
    // diagnostics) — payloads are not carried through the tournament.
    GpEval eval(prob, u_size);
    std::vector<int> table = table_for(m_win);
    eval.set_map(table);
    std::vector<double> restart_values(static_cast<std::size_t>(n_starts));
    detail::LineSearchResult winner;
    for (int r = 0; r < n_starts; ++r) {
        auto res = detail::projected_line_search(
            eval, detail::make_start(r, prob.s1_alpha.size, u_size, opts.seed), opts.max_iters,
            opts.tol_bits, 1.0);
        restart_values[static_cast<std::size_t>(r)] = res.value;
        if (r == r_win) winner = std::move(res);
    }

    CapacityResult out{
        0.0,
        u_size,
        ConditionalKernel({prob.s1_alpha}, u_alpha, std::move(winner.q)),
        DeterministicMap({u_alpha, prob.s1_alpha}, prob.x_alpha, std::move(table)),
        SolverDiagnostics{}};
    out.value = objective(prob, out.u_given_s1, out.x_map);
    out.diagnostics.iterations = total_iters.load();
    out.diagnostics.restarts = n_starts;
    out.diagnostics.perturbation_restarts = total_perturbs.load();
    out.diagnostics.restart_values = std::move(restart_values);
    out.diagnostics.maps_considered = n_maps;
    out.diagnostics.maps_sampled = sampled;
    out.diagnostics.winning_map_index = m_win;
    out.diagnostics.winning_restart = r_win;
    return out;
}

}  // namespace sideinfo
