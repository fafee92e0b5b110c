#include "tbvp/quadrature.hpp"

#include "tbvp/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>

namespace tbvp {

GaussRule gauss_legendre(int points) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(points, points);
    for (int k = 1; k < points; ++k) {
        const double beta = k / std::sqrt(4.0 * k * k - 1.0);
        J(k, k - 1) = J(k - 1, k) = beta;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    GaussRule rule;
    for (int i = 0; i < points; ++i) {
        rule.x.push_back(es.eigenvalues()[i]);
        const double v0 = es.eigenvectors()(0, i);
        rule.w.push_back(2.0 * v0 * v0);
    }
    return rule;
}

namespace {

constexpr int kPoints = 8;

const GaussRule& rule8() {
    static const GaussRule r = gauss_legendre(kPoints);
    return r;
}

struct Panel {
    double lo, hi, estimate;
    int depth;
    std::array<double, kPoints> inner;
};

Panel evaluate(const std::function<double(double)>& inner,
               const std::function<double(double)>& outer, double lo, double hi, int depth) {
    const GaussRule& r = rule8();
    const double c = 0.5 * (lo + hi), s = 0.5 * (hi - lo);
    Panel p{lo, hi, 0.0, depth, {}};
    double sum = 0.0;
    for (int i = 0; i < kPoints; ++i) {
        p.inner[i] = inner(c + s * r.x[i]);
        sum += r.w[i] * outer(p.inner[i]);
    }
    p.estimate = s * sum;
    return p;
}

void record(std::vector<QuadNode>* used, const Panel& p) {
    if (!used) return;
    const GaussRule& r = rule8();
    const double c = 0.5 * (p.lo + p.hi), s = 0.5 * (p.hi - p.lo);
    for (int i = 0; i < kPoints; ++i) used->push_back({c + s * r.x[i], s * r.w[i], p.inner[i]});
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& inner,
                          const std::function<double(double)>& outer,
                          const std::vector<double>& breaks, double tol,
                          std::vector<QuadNode>* used, int max_depth) {
    if (breaks.size() < 2) return 0.0;
    const double total = breaks.back() - breaks.front();
    double result = 0.0;
    std::vector<Panel> stack;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const double lo = breaks[k], hi = breaks[k + 1];
        if (!(hi > lo)) continue;
        stack.push_back(evaluate(inner, outer, lo, hi, 0));
        while (!stack.empty()) {
            const Panel p = stack.back();
            stack.pop_back();
            const double mid = 0.5 * (p.lo + p.hi);
            Panel left = evaluate(inner, outer, p.lo, mid, p.depth + 1);
            Panel right = evaluate(inner, outer, mid, p.hi, p.depth + 1);
            const double refined = left.estimate + right.estimate;
            // Below a few ulps of the panel sums the comparison is rounding noise.
            const double allowed = std::max(tol * (p.hi - p.lo) / total,
                                            1e-14 * (std::abs(left.estimate) + std::abs(right.estimate)));
            if (std::abs(refined - p.estimate) <= allowed ||
                p.depth >= max_depth) {
                result += refined;
                record(used, left);
                record(used, right);
            } else {
                stack.push_back(std::move(right));
                stack.push_back(std::move(left));
            }
        }
    }
    return result;
}

double integrate_adaptive(const std::function<double(double)>& f,
                          const std::vector<double>& breaks, double tol) {
    return integrate_adaptive(f, [](double y) { return y; }, breaks, tol);
}

double lp_power_adaptive(const std::function<double(double)>& inner, int p,
                         const std::vector<double>& breaks, double tol,
                         std::vector<QuadNode>* used) {
    if (p == 1)
        return integrate_adaptive(inner, [](double y) { return std::abs(y); }, breaks, tol, used);
    if (p == 2) return integrate_adaptive(inner, [](double y) { return y * y; }, breaks, tol, used);
    throw UnsupportedNorm(p);
}

std::vector<double> graded_breakpoints(double a, double b, int n, int depth) {
    const double L = b - a;
    std::vector<double> out;
    out.reserve(n + 2 * depth);
    for (int i = 0; i < n; ++i) out.push_back(i + 1 == n ? b : a + L * i / (n - 1));
    for (int k = 1; k <= depth; ++k) {
        const double d = std::ldexp(L, -k);
        out.push_back(a + d);
        out.push_back(b - d);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace tbvp
