#include "tbvp/verify.hpp"

#include "tbvp/extension.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace tbvp {

const char* to_string(Classification c) {
    switch (c) {
        case Classification::MS_candidate: return "MS_candidate";
        case Classification::pseudo_MS: return "pseudo_MS";
        case Classification::irregular: return "irregular";
        case Classification::infeasible: return "infeasible";
    }
    return "unknown";
}

namespace {

double spacing_of(const SolutionField& u) {
    return 2.0 * u.extension().T() / (u.extension().nodes_per_period() - 1);
}

struct Cluster {
    int first, last;  // flagged node range
    int core_first, core_last;
    double peak;
    int peak_index;
};

// Slope-discontinuity indicator h |d2 v_i - (d2 v_{i-2} + d2 v_{i+2}) / 2| on
// one period; a kink at a node shows at full height there and at half height
// two nodes away, so the core (>= 3/4 of the peak) marks the affected cells.
Vector indicator(const Vector& y, double h) {
    const int n = static_cast<int>(y.size());
    Vector s = Vector::Zero(n);
    if (n < 9) return s;
    Vector d2 = Vector::Zero(n);
    for (int i = 1; i + 1 < n; ++i) d2[i] = (y[i + 1] - 2.0 * y[i] + y[i - 1]) / (h * h);
    for (int i = 3; i + 3 < n; ++i) s[i] = h * std::abs(d2[i] - 0.5 * (d2[i - 2] + d2[i + 2]));
    return s;
}

Vector every_other(const Vector& y) {
    Vector out((y.size() + 1) / 2);
    for (Eigen::Index i = 0; i < out.size(); ++i) out[i] = y[2 * i];
    return out;
}

std::vector<Cluster> scan_kinks(const Vector& y, double h, double threshold) {
    const int n = static_cast<int>(y.size());
    std::vector<Cluster> out;
    if (n < 9) return out;
    const Vector s = indicator(y, h);

    int i = 3;
    while (i + 3 < n) {
        if (s[i] <= threshold) {
            ++i;
            continue;
        }
        Cluster c{i, i, i, i, s[i], i};
        int j = i + 1;
        while (j + 3 < n && (s[j] > threshold || (j + 1 + 3 < n && s[j + 1] > threshold))) {
            if (s[j] > threshold) c.last = j;
            if (s[j] > c.peak) {
                c.peak = s[j];
                c.peak_index = j;
            }
            ++j;
        }
        c.core_first = c.last;
        c.core_last = c.first;
        for (int k = c.first; k <= c.last; ++k) {
            if (s[k] >= 0.75 * c.peak) {
                c.core_first = std::min(c.core_first, k);
                c.core_last = std::max(c.core_last, k);
            }
        }
        out.push_back(c);
        i = j;
    }
    return out;
}

// A slope jump keeps its indicator height when the grid is halved, a jump in
// curvature roughly doubles it. Ratio >= 1.6 marks a feature the grid resolves.
bool resolved_on_coarse(const Vector& y, double h, const Cluster& c) {
    const Vector coarse = indicator(every_other(y), 2.0 * h);
    if (coarse.size() < 9) return false;
    const int lo = std::max<int>(0, c.first / 2 - 2);
    const int hi = std::min<int>(static_cast<int>(coarse.size()) - 1, c.last / 2 + 2);
    double peak = 0.0;
    for (int i = lo; i <= hi; ++i) peak = std::max(peak, coarse[i]);
    return peak >= 1.6 * c.peak;
}

}  // namespace

double pde_residual(const SolutionField& u, int n_t) {
    const double h = spacing_of(u);
    const double dt = 2.0 * h;
    const double T = u.extension().T();
    const double lo = u.spec().window_lo();
    const int nodes = u.extension().window().size();

    std::set<long> levels;
    for (int k = 0; k < n_t; ++k) {
        const long m = std::lround(k * T / (n_t - 1) / h);
        if (m >= 2) levels.insert(m);
    }
    double worst = 0.0;
    for (long m : levels) {
        const double t = m * h;
        for (int j = 1; j + 1 < nodes; ++j) {
            const double x = lo + j * h;
            if (!u.contains(t + dt, x) || !u.contains(t - dt, x) || !u.contains(t, x - h) ||
                !u.contains(t, x + h))
                continue;
            const double c = u(t, x);
            const double utt = (u(t + dt, x) - 2.0 * c + u(t - dt, x)) / (dt * dt);
            const double uxx = (u(t, x + h) - 2.0 * c + u(t, x - h)) / (h * h);
            worst = std::max(worst, std::abs(utt - uxx));
        }
    }
    return worst;
}

VerificationReport verify_solution(const GridFunction& v, const ProblemSpec& spec, int n_t,
                                   const VerifyOptions& opts) {
    VerificationReport r{};
    const double h = v.spacing();
    const double T = spec.T();
    r.integral_residual = std::abs(integrate(v) - spec.A());
    r.pde_budget = opts.budget_factor * h * h;

    const SolutionField u = dalembert(v, spec);
    const ExtendedInput& ext = u.extension();
    r.pde_residual_max = pde_residual(u, n_t);
    if (v.size() >= 9 && ((v.size() + 1) / 2) % 2 == 1) {
        const GridFunction coarse(v.a(), v.b(), every_other(v.values()));
        r.pde_residual_coarse = pde_residual(dalembert(coarse, spec), n_t);
    }
    const bool pde_ok = r.pde_residual_max <= r.pde_budget ||
                        r.pde_residual_max <= 0.75 * r.pde_residual_coarse;

    const GridFunction& w = ext.window();
    for (int j = 0; j < w.size(); ++j) {
        const double x = w.node(j);
        r.boundary0_max = std::max(r.boundary0_max, std::abs(u(0.0, x) - spec.f0().value(x)));
        if (u.contains(T, x))
            r.boundaryT_max = std::max(r.boundaryT_max, std::abs(u(T, x) - spec.fT().value(x)));
    }

    int feature_cells = 0;
    bool oversized = false;
    for (const Seam& s : ext.seams()) {
        r.seam_value_jumps.push_back({s.x, s.value_jump});
        r.seam_deriv_jumps.push_back({s.x, s.slope_jump});
        if (s.value_jump > opts.seam_tol || s.slope_jump > opts.seam_tol) ++feature_cells;
    }

    const double threshold = opts.kink_tol + h * h;
    for (int P = -spec.K1(); P <= spec.K2(); ++P) {
        const GridFunction period = ext.period(P);
        for (const Cluster& c : scan_kinks(period.values(), h, threshold)) {
            if (resolved_on_coarse(period.values(), h, c)) {
                r.curvature_features.push_back({period.node(c.peak_index), c.peak});
                continue;
            }
            const int cells = c.core_last - c.core_first + 1;
            r.kinks.push_back({period.node(c.peak_index), c.peak});
            r.kink_cells.push_back(cells);
            feature_cells += cells;
            if (cells > 2) oversized = true;
        }
    }
    r.exceptional_measure = feature_cells * h;

    for (int P = -spec.K1(); P <= spec.K2(); ++P)
        r.equilibrium_residuals.push_back(
            std::abs(integrate(ext.period(P)) - equilibrium_value(spec, P)));

    if (r.integral_residual > opts.integral_tol) {
        r.classification = Classification::infeasible;
    } else if (feature_cells == 0 && pde_ok &&
               r.boundary0_max <= r.pde_budget && r.boundaryT_max <= r.pde_budget) {
        r.classification = Classification::MS_candidate;
    } else if (!oversized) {
        r.classification = Classification::pseudo_MS;
    } else {
        r.classification = Classification::irregular;
    }
    return r;
}

std::vector<ConvergencePoint> convergence_study(const SmoothFunction& v, const ProblemSpec& spec,
                                                const std::vector<int>& grids, int n_t) {
    std::vector<ConvergencePoint> out;
    for (int n : grids) {
        const GridFunction vn = sample(v, -spec.T(), spec.T(), n);
        out.push_back({n, pde_residual(dalembert(vn, spec), n_t)});
    }
    return out;
}

}  // namespace tbvp
