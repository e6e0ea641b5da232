#pragma once

// Projected gradient loop on a product of probability simplices, shared by
// the capacity (ascent) and rate-distortion (descent) solvers. Header is
// internal to src/.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace sideinfo::detail {

/// Euclidean projection of v onto the probability simplex.
inline void project_simplex(std::vector<double>& scratch, double* v, int n) {
    scratch.assign(v, v + n);
    std::sort(scratch.begin(), scratch.end(), std::greater<double>());
    double cum = 0.0, theta = 0.0;
    int rho = 0;
    for (int i = 0; i < n; ++i) {
        cum += scratch[static_cast<std::size_t>(i)];
        double t = (cum - 1.0) / (i + 1);
        if (scratch[static_cast<std::size_t>(i)] - t > 0.0) {
            rho = i + 1;
            theta = t;
        }
    }
    (void)rho;
    for (int i = 0; i < n; ++i) v[i] = std::max(v[i] - theta, 0.0);
}

inline void project_rows(std::vector<double>& q, int rows, int cols,
                         std::vector<double>& scratch) {
    for (int r = 0; r < rows; ++r) project_simplex(scratch, q.data() + static_cast<std::size_t>(r) * cols, cols);
}

struct LineSearchResult {
    std::vector<double> q;
    double value = 0.0;       ///< in the maximization sense used internally
    long long iterations = 0;
    int perturbations = 0;
};

/// Monotone projected line search maximizing sign * F. F must provide
///   int rows() / int cols()            row-major stacked simplex variables
///   double value(const vector<double>&)
///   bool gradient(const vector<double>&, vector<double>&)  false if any
///        entry came out non-finite (degenerate support)
/// The returned value never falls below the start value: on a non-finite
/// gradient the point is restarted from a slightly perturbed interior point
/// and the best iterate seen is kept.
template <class F>
LineSearchResult projected_line_search(F& f, std::vector<double> q0, int max_iters,
                                       double tol, double sign) {
    const int rows = f.rows(), cols = f.cols();
    const std::size_t dim = static_cast<std::size_t>(rows) * cols;
    std::vector<double> scratch, g(dim), q_try(dim);

    LineSearchResult out;
    double val = sign * f.value(q0);
    out.q = q0;
    out.value = val;

    double eta = 0.5;
    for (int it = 0; it < max_iters; ++it) {
        ++out.iterations;
        if (!f.gradient(q0, g)) {
            // Degenerate support: mix with a touch of uniform and retry.
            ++out.perturbations;
            const double eps = 1e-9;
            for (std::size_t i = 0; i < dim; ++i)
                q0[i] = (1.0 - eps) * q0[i] + eps / cols;
            val = sign * f.value(q0);
            if (val > out.value) {
                out.value = val;
                out.q = q0;
            }
            continue;
        }
        if (sign < 0) {
            for (auto& x : g) x = -x;
        }
        bool accepted = false;
        double gain = 0.0;
        while (eta > 1e-14) {
            q_try = q0;
            for (std::size_t i = 0; i < dim; ++i) q_try[i] += eta * g[i];
            project_rows(q_try, rows, cols, scratch);
            double v_try = sign * f.value(q_try);
            if (v_try > val) {
                gain = v_try - val;
                q0.swap(q_try);
                val = v_try;
                accepted = true;
                eta = std::min(eta * 2.0, 8.0);
                break;
            }
            eta *= 0.5;
        }
        if (val > out.value) {
            out.value = val;
            out.q = q0;
        }
        if (!accepted || gain < tol) break;
    }
    return out;
}

}  // namespace sideinfo::detail
