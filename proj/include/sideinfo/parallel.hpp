#pragma once

#include <cstddef>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sideinfo::par {

/// Execution policy for the data-parallel kernels. `serial` is the reference
/// implementation; the OpenMP path must return bit-identical results, which
/// the test suite checks. Reductions therefore break ties by index, never by
/// completion order.
enum class Exec { serial, parallel };

/// Runs fn(i) for i in [0,n). Calls must be independent; any output goes to
/// caller-owned, index-addressed slots.
template <class Fn>
void for_each_index(Exec exec, std::size_t n, Fn&& fn) {
#ifdef _OPENMP
    if (exec == Exec::parallel && n > 1) {
#pragma omp parallel for schedule(dynamic, 4)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            fn(static_cast<std::size_t>(i));
        }
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

/// Deterministic tournament over an index space.
///
/// eval(ctx, i) must be a pure function of i (ctx is per-worker scratch from
/// make_ctx). better(a, b) is a strict "a beats b" comparison; ties go to the
/// smaller index, so the winner does not depend on the schedule or on the
/// number of workers. Returns {winner index, winner value}; index == n when
/// n == 0.
template <class Value, class MakeCtx, class Eval, class Better>
std::pair<std::size_t, Value> reduce_best(Exec exec, std::size_t n, MakeCtx&& make_ctx,
                                          Eval&& eval, Better&& better) {
    std::size_t best_i = n;
    Value best{};
#ifdef _OPENMP
    if (exec == Exec::parallel && n > 1) {
#pragma omp parallel
        {
            auto ctx = make_ctx();
            std::size_t loc_i = n;
            Value loc{};
#pragma omp for schedule(dynamic, 4) nowait
            for (long long i = 0; i < static_cast<long long>(n); ++i) {
                Value v = eval(ctx, static_cast<std::size_t>(i));
                if (loc_i == n || better(v, loc)) {
                    loc = v;
                    loc_i = static_cast<std::size_t>(i);
                }
            }
#pragma omp critical(sideinfo_reduce_best)
            {
                if (loc_i != n &&
                    (best_i == n || better(loc, best) ||
                     (!better(best, loc) && loc_i < best_i))) {
                    best = loc;
                    best_i = loc_i;
                }
            }
        }
        return {best_i, best};
    }
#endif
    auto ctx = make_ctx();
    for (std::size_t i = 0; i < n; ++i) {
        Value v = eval(ctx, i);
        if (best_i == n || better(v, best)) {
            best = v;
            best_i = i;
        }
    }
    return {best_i, best};
}

}  // namespace sideinfo::par
