#include "tbvp/oracle.hpp"

#include "tbvp/core.hpp"
#include "tbvp/errors.hpp"
#include "tbvp/l1min.hpp"
#include "tbvp/l2min.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>

namespace tbvp {

namespace {

void check_grid(int n) {
    if (n < 65 || n % 2 == 0) throw GridError("oracle grids need odd n >= 65");
}

// Last `window` objective values; stalled when the oldest beats the newest by < tol.
class StallMonitor {
public:
    StallMonitor(int window, double tol) : window_(window), tol_(tol) {}
    bool push(double value) {
        history_.push_back(value);
        if (static_cast<int>(history_.size()) > window_ + 1) history_.pop_front();
        return static_cast<int>(history_.size()) == window_ + 1 &&
               history_.front() - history_.back() < tol_;
    }

private:
    int window_;
    double tol_;
    std::deque<double> history_;
};

double l2_value(const Eigen::MatrixXd& M, const Vector& w, const Vector& v) {
    return w.dot((M.colwise() - v).cwiseAbs2().rowwise().sum());
}

double l1_value(const Eigen::MatrixXd& M, const Vector& w, const Vector& v) {
    return w.dot((M.colwise() - v).cwiseAbs().rowwise().sum());
}

OracleReport report(int p, const ShiftSequence& grid_ts, const Vector& w, const Vector& v,
                    double value, double analytic, const GridFunction& v_analytic, int iterations,
                    bool converged, double A) {
    const double a = grid_ts.a(), b = grid_ts.b();
    GridFunction vo(a, b, v);
    const double diff = (v - v_analytic.values()).cwiseAbs().maxCoeff();
    return {p,
            grid_ts.size(),
            value,
            analytic,
            std::abs(value - analytic) / std::max(analytic, 1e-12),
            iterations,
            converged,
            std::move(vo),
            v_analytic,
            diff,
            std::abs(w.dot(v) - A)};
}

}  // namespace

double oracle_tolerance(int p) {
    if (p == 2) return 1e-6;
    if (p == 1) return 1e-4;
    throw UnsupportedNorm(p);
}

OracleReport l2_oracle(const ShiftSequence& ts, double A, int n, std::uint64_t seed,
                       const OracleOptions& opts) {
    check_grid(n);
    const ShiftSequence grid_ts = ts.on_grid(n);
    const int K = grid_ts.K();
    const double h = grid_ts.spacing();
    const double T = 0.5 * (grid_ts.b() - grid_ts.a());
    const Eigen::MatrixXd M = grid_ts.matrix();
    const Vector w = simpson_weights(n, h);
    const double ww = w.squaredNorm();
    const double step = 1.0 / (2.0 * K * w.maxCoeff());
    const int max_iter = opts.max_iter > 0 ? opts.max_iter : 100000;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = unif(rng);
    v -= (w.dot(v) - A) / ww * w;

    const Vector row_sum = M.rowwise().sum();
    StallMonitor stall(opts.window, opts.stall_tol);
    bool converged = false;
    int it = 0;
    double value = l2_value(M, w, v);
    while (it < max_iter) {
        ++it;
        const Vector grad = 2.0 * w.cwiseProduct(K * v - row_sum);
        v -= step * grad;
        v -= (w.dot(v) - A) / ww * w;
        value = l2_value(M, w, v);
        if (stall.push(value)) {
            converged = true;
            break;
        }
    }

    const L2Solution sol = l2_minimizer(grid_ts, A, T);
    return report(2, grid_ts, w, v, value, sol.objective, sol.v, it, converged, A);
}

OracleReport l1_oracle(const ShiftSequence& ts, double A, int n, std::uint64_t seed,
                       const OracleOptions& opts) {
    check_grid(n);
    const ShiftSequence grid_ts = ts.on_grid(n);
    const int K = grid_ts.K();
    const double h = grid_ts.spacing();
    const Eigen::MatrixXd M = grid_ts.matrix();
    const Vector w = simpson_weights(n, h);
    const double wsum = w.sum();
    const int max_iter = opts.max_iter > 0 ? opts.max_iter : 200000;
    const double eta0 = M.size() ? M.maxCoeff() - M.minCoeff() : 0.0;

    // Start: the feasible constant plus noise on the scale of the data spread.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-0.5, 0.5);
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = eta0 * unif(rng);
    // Steps act in the Simpson-weighted metric, so the matching projection
    // onto sum w v = A is a constant shift.
    v.array() -= (w.dot(v) - A) / wsum;

    Vector best = v;
    double best_value = l1_value(M, w, v);
    // Diminishing steps eta / sqrt(k) restarted from the best iterate with
    // eta / 4 whenever the best value stalls; done once eta is negligible.
    const double eta_floor = 1e-12 * std::max(eta0, 1.0);
    double eta = eta0;
    int k = 0;
    StallMonitor stall(opts.window, opts.stall_tol);
    bool converged = eta0 == 0.0;
    int it = 0;
    Vector d(n);
    while (!converged && it < max_iter) {
        ++it;
        ++k;
        for (int x = 0; x < n; ++x) {
            double s = 0.0;
            for (int i = 0; i < K; ++i) {
                const double diff = v[x] - M(x, i);
                s += (diff > 0.0) - (diff < 0.0);
            }
            d[x] = s / K;
        }
        v -= (eta / std::sqrt(static_cast<double>(k))) * d;
        v.array() -= (w.dot(v) - A) / wsum;
        const double value = l1_value(M, w, v);
        if (value < best_value) {
            best_value = value;
            best = v;
        }
        if (stall.push(best_value)) {
            eta /= 4.0;
            if (eta < eta_floor) {
                converged = true;
                break;
            }
            v = best;
            k = 0;
            stall = StallMonitor(opts.window, opts.stall_tol);
        }
    }

    const StripSolution sol = l1_solve(grid_ts, A);
    return report(1, grid_ts, w, best, best_value, sol.objective, sol.h, it, converged, A);
}

}  // namespace tbvp
