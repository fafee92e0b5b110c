#include "tbvp/l1min.hpp"

#include "tbvp/core.hpp"
#include "tbvp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tbvp {

namespace {

constexpr double kBand = 1e-10;

bool coincide(double x, double y) {
    return std::abs(x - y) <= 1e-14 * std::max({1.0, std::abs(x), std::abs(y)});
}

// Cells on which two envelopes coincide at both ends.
int coincident_cells(const GridFunction& f, const GridFunction& g) {
    int cells = 0;
    for (int i = 0; i + 1 < f.size(); ++i)
        if (coincide(f[i], g[i]) && coincide(f[i + 1], g[i + 1])) ++cells;
    return cells;
}

bool within(const GridFunction& h, const GridFunction* lower, const GridFunction* upper) {
    for (int i = 0; i < h.size(); ++i) {
        if (lower && h[i] < (*lower)[i] - kBand) return false;
        if (upper && h[i] > (*upper)[i] + kBand) return false;
    }
    return true;
}

}  // namespace

double OrderEnvelopes::integral(int j) const {
    if (j <= 0) return std::numeric_limits<double>::infinity();
    if (j > K()) return -std::numeric_limits<double>::infinity();
    return integrals[j - 1];
}

OrderEnvelopes order_envelopes(const ShiftSequence& ts) {
    const int K = ts.K();
    const int n = ts.size();
    const Eigen::MatrixXd M = ts.matrix();

    OrderEnvelopes env;
    env.labels.resize(n, K);
    Eigen::MatrixXd sorted(n, K);
    std::vector<int> order(K);
    for (int x = 0; x < n; ++x) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int l, int r) { return M(x, l) > M(x, r); });
        for (int j = 0; j < K; ++j) {
            sorted(x, j) = M(x, order[j]);
            env.labels(x, j) = order[j];
        }
    }
    for (int j = 0; j < K; ++j) {
        env.a.emplace_back(ts.a(), ts.b(), sorted.col(j));
        env.integrals.push_back(integrate(env.a.back()));
    }

    const double h = ts.spacing();
    for (int l = 0; l < K; ++l) {
        for (int r = l + 1; r < K; ++r) {
            const Vector d = M.col(l) - M.col(r);
            for (int i = 0; i + 1 < n; ++i) {
                if (d[i] * d[i + 1] < 0.0) {
                    env.crossings.push_back(ts.a() + h * (i + d[i] / (d[i] - d[i + 1])));
                } else if (i > 0 && d[i] == 0.0 && d[i - 1] * d[i + 1] < 0.0) {
                    env.crossings.push_back(ts[0].node(i));
                }
            }
        }
    }
    std::sort(env.crossings.begin(), env.crossings.end());
    env.crossings.erase(std::unique(env.crossings.begin(), env.crossings.end(),
                                    [h](double x, double y) { return std::abs(x - y) < 1e-3 * h; }),
                        env.crossings.end());
    return env;
}

int select_strip(const OrderEnvelopes& env, double A) {
    const int K = env.K();
    if (A > env.integral(1)) return 0;
    if (A < env.integral(K)) return K;
    for (int j = 1; j < K; ++j)
        if (env.integral(j) >= A && A >= env.integral(j + 1)) return j;
    return K;  // unreachable for sorted integrals
}

const char* to_string(BoundaryCase c) {
    switch (c) {
        case BoundaryCase::interior: return "interior";
        case BoundaryCase::on_upper: return "on_upper";
        case BoundaryCase::on_lower: return "on_lower";
        case BoundaryCase::scaled_top: return "scaled_top";
        case BoundaryCase::scaled_bottom: return "scaled_bottom";
        case BoundaryCase::shifted_top: return "shifted_top";
        case BoundaryCase::shifted_bottom: return "shifted_bottom";
    }
    return "unknown";
}

StripSolution construct_h(const OrderEnvelopes& env, int j, double A) {
    const int K = env.K();
    if (j < 0 || j > K) throw BadParams("strip index out of range");
    const GridFunction& top = env.a.front();
    const GridFunction& bottom = env.a.back();
    const double length = top.b() - top.a();

    StripSolution s{j,
                    j < K ? env.envelope(j + 1) : bottom,
                    j > 0 ? env.envelope(j) : top,
                    j < K,
                    j > 0,
                    top,
                    std::numeric_limits<double>::quiet_NaN(),
                    BoundaryCase::interior,
                    false};

    if (j == 0) {
        const double p2 = env.integral(1);
        if (p2 == 0.0) {
            if (A != 0.0) throw DegenerateScaling("strip 0: integral of a_1 vanishes while A != 0");
            s.h = 0.0 * top;
            s.boundary_case = BoundaryCase::scaled_top;
            return s;
        }
        s.h = (A / p2) * top;
        s.boundary_case = BoundaryCase::scaled_top;
        if (A > p2 && !within(s.h, &top, nullptr)) {
            s.h = top + (A - p2) / length;
            s.boundary_case = BoundaryCase::shifted_top;
        }
        return s;
    }
    if (j == K) {
        const double p1 = env.integral(K);
        if (p1 == 0.0) {
            if (A != 0.0) throw DegenerateScaling("strip K: integral of a_K vanishes while A != 0");
            s.h = 0.0 * bottom;
            s.boundary_case = BoundaryCase::scaled_bottom;
            return s;
        }
        s.h = (A / p1) * bottom;
        s.boundary_case = BoundaryCase::scaled_bottom;
        if (A < p1 && !within(s.h, nullptr, &bottom)) {
            s.h = bottom + (A - p1) / length;
            s.boundary_case = BoundaryCase::shifted_bottom;
        }
        return s;
    }

    const GridFunction& upper = env.envelope(j);
    const GridFunction& lower = env.envelope(j + 1);
    const double p1 = env.integral(j);
    const double p2 = env.integral(j + 1);
    s.degenerate = coincident_cells(upper, lower) > 1;
    if (A == p1 || p1 == p2) {
        s.h = upper;
        s.boundary_case = BoundaryCase::on_upper;
    } else if (A == p2) {
        s.h = lower;
        s.boundary_case = BoundaryCase::on_lower;
    } else {
        const double lambda = (A - p2) / (p1 - p2);
        s.h = lambda * upper + (1.0 - lambda) * lower;
    }
    return s;
}

double l1_objective(const GridFunction& v, const ShiftSequence& ts) {
    return full_norm(v, ts, 1);
}

StripSolution l1_solve(const ShiftSequence& ts, double A) {
    const OrderEnvelopes env = order_envelopes(ts);
    StripSolution s = construct_h(env, select_strip(env, A), A);
    s.objective = l1_objective(s.h, ts);
    return s;
}

StripMeasure strip_membership(const GridFunction& v, const OrderEnvelopes& env, int j) {
    const int K = env.K();
    const double h = v.spacing();
    StripMeasure m{0.0, 0.0};
    for (int i = 0; i < v.size(); ++i) {
        const double w = (i == 0 || i + 1 == v.size()) ? 0.5 * h : h;
        bool in = true;
        if (j >= 1 && v[i] > env.envelope(j)[i] + kBand) in = false;
        if (j < K && v[i] < env.envelope(j + 1)[i] - kBand) in = false;
        (in ? m.inside : m.outside) += w;
    }
    return m;
}

EndpointVerdict ms_endpoint_check(const OrderEnvelopes& env, int j, double c1) {
    if (j < 1 || j >= env.K()) throw BadParams("endpoint check needs an interior strip");
    const GridFunction& up = env.envelope(j);
    const GridFunction& lo = env.envelope(j + 1);
    const double lower = lo.back() - up.front();
    const double upper = up.back() - lo.front();
    constexpr double tol = 1e-12;
    return (c1 >= lower - tol && c1 <= upper + tol) ? EndpointVerdict::possible
                                                     : EndpointVerdict::obstructed;
}

double pointwise_u(const ShiftSequence& ts, int i, double value) {
    double u = 0.0;
    for (int k = 0; k < ts.K(); ++k) u += std::abs(ts[k][i] - value);
    return u;
}

double l1_lower_bound(const OrderEnvelopes& env, const ShiftSequence& ts, int j, double A) {
    const int K = env.K();
    const GridFunction& ref = j < K ? env.envelope(j + 1) : env.envelope(K);
    const double slope = K - 2.0 * j;
    return l1_objective(ref, ts) + slope * (A - integrate(ref));
}

}  // namespace tbvp
