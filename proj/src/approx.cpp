#include "tbvp/approx.hpp"

#include "tbvp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tbvp {

namespace {

void check_delta(double delta, double a, double b) {
    if (!(delta > 0.0) || delta > 0.5 * (b - a))
        throw BadDelta("delta = " + std::to_string(delta) + " must lie in (0, (b - a) / 2]");
}

// Integral of the linear interpolant of f over [a, x].
double linear_prefix(const GridFunction& f, double x) {
    const double h = f.spacing();
    double s = 0.0;
    int i = 0;
    while (i + 1 < f.size() && f.node(i + 1) <= x) {
        s += 0.5 * h * (f[i] + f[i + 1]);
        ++i;
    }
    if (i + 1 < f.size() && x > f.node(i)) {
        const double w = x - f.node(i);
        s += 0.5 * w * (f[i] + f.interpolate(x));
    }
    return s;
}

// g2: f up to b - delta, then a line to f(a) + c1, minus r1 / (b - a).
struct TailedInput {
    const GridFunction* f;
    double xs, ys, ye, shift;

    double operator()(double x) const {
        const double b = f->b();
        const double g1 = x <= xs ? f->interpolate(x) : ys + (ye - ys) * (x - xs) / (b - xs);
        return g1 - shift;
    }
};

TailedInput make_tail(const GridFunction& f, double c1, double delta, double target) {
    TailedInput t{&f, f.b() - delta, 0.0, f.front() + c1, 0.0};
    t.ys = f.interpolate(t.xs);
    const double integral = linear_prefix(f, t.xs) + 0.5 * delta * (t.ys + t.ye);
    t.shift = (integral - target) / (f.b() - f.a());
    return t;
}

std::shared_ptr<const BernsteinPoly> bernstein_of(const TailedInput& g2, int m) {
    const GridFunction& f = *g2.f;
    const double a = f.a(), b = f.b(), L = b - a;
    Vector coef(m + 1);
    for (int k = 0; k <= m; ++k) coef[k] = g2(k == m ? b : a + L * k / m);
    return std::make_shared<const BernsteinPoly>(a, b, std::move(coef));
}

double root(double power, int p) { return p == 1 ? power : std::sqrt(std::max(power, 0.0)); }

double pw(double x, int p) { return p == 1 ? std::abs(x) : x * x; }

ApproxResult finish(const ApproxRequest& req, C1Approximant g, const ApproxStages& stages,
                    double tol) {
    const GridFunction& f = req.f;
    const double achieved =
        root(lp_power_adaptive([&](double x) { return g.value(x) - f.interpolate(x); }, req.p,
                               graded_breakpoints(f.a(), f.b(), f.size()), tol),
             req.p);
    C1Grid samples = g.sample(f);
    const double a = f.a(), b = f.b();
    ApproxResult r{std::move(g),
                   std::move(samples),
                   achieved,
                   0.0,
                   0.0,
                   0.0,
                   0.0,
                   stages};
    r.integral_residual = std::abs(r.approximant.integral() - req.target_integral);
    r.endpoint_value_residual =
        std::abs(r.approximant.value(b) - r.approximant.value(a) - req.c1);
    r.endpoint_deriv_residual = std::abs(r.approximant.d1(b) - r.approximant.d1(a) - req.c2);
    r.grid_integral_residual = std::abs(integrate(r.g.g) - req.target_integral);
    return r;
}

}  // namespace

GridFunction linear_tail(const GridFunction& f, double c1, double delta) {
    check_delta(delta, f.a(), f.b());
    const TailedInput t = make_tail(f, c1, delta, 0.0);
    Vector out(f.size());
    for (int i = 0; i < f.size(); ++i) {
        const double x = f.node(i);
        out[i] = x <= t.xs ? f[i] : t.ys + (t.ye - t.ys) * (x - t.xs) / (f.b() - t.xs);
    }
    return f.with_values(std::move(out));
}

GridFunction integral_shift(const GridFunction& g, double target) {
    return g - (integrate(g) - target) / (g.b() - g.a());
}

C1Grid integral_shift(const C1Grid& g, double target) {
    return {integral_shift(g.g, target), g.d1};
}

C1Grid bernstein(const GridFunction& g, int m) {
    if (m < 1) throw BadParams("Bernstein degree must be at least 1");
    const double a = g.a(), b = g.b();
    Vector coef(m + 1);
    for (int k = 0; k <= m; ++k) coef[k] = g.interpolate(k == m ? b : a + (b - a) * k / m);
    const BernsteinPoly B(a, b, std::move(coef));
    Vector values(g.size()), d1(g.size());
    for (int i = 0; i < g.size(); ++i) {
        values[i] = B.value(g.node(i));
        d1[i] = B.d1(g.node(i));
    }
    return {g.with_values(std::move(values)), std::move(d1)};
}

DegreeChoice choose_bernstein_degree(const GridFunction& g, double tol, int m_max) {
    DegreeChoice best{8, std::numeric_limits<double>::infinity(), false};
    for (int m = 8; m <= std::max(m_max, 8); m *= 2) {
        const C1Grid B = bernstein(g, m);
        const double err = (B.g.values() - g.values()).cwiseAbs().maxCoeff();
        best = {m, err, err < tol};
        if (best.reached) break;
    }
    return best;
}

C1Grid hermite_patch(const C1Grid& g4, double c2, double delta) {
    const GridFunction& g = g4.g;
    check_delta(delta, g.a(), g.b());
    const double b = g.b();
    const double xs = b - delta;
    const double h = g.spacing();
    const int i = std::clamp(static_cast<int>(std::floor((xs - g.a()) / h)), 0, g.size() - 2);
    const CubicHermite cell{g.node(i), g.node(i + 1), g[i], g4.d1[i], g[i + 1], g4.d1[i + 1]};
    const CubicHermite H{xs, b, cell.value(xs), cell.d1(xs), g.back(), g4.d1[0] + c2};

    Vector values = g.values(), d1 = g4.d1;
    for (int k = 0; k < g.size(); ++k) {
        const double x = g.node(k);
        if (x > xs) {
            values[k] = H.value(x);
            d1[k] = H.d1(x);
        }
    }
    return {g.with_values(std::move(values)), std::move(d1)};
}

C1Approximant::C1Approximant(std::shared_ptr<const BernsteinPoly> poly, double shift4,
                             CubicHermite patch, double shift)
    : poly_(std::move(poly)), shift4_(shift4), patch_(patch), shift_(shift) {}

double C1Approximant::value(double x) const {
    const double g5 = x > patch_.x0 ? patch_.value(x) : poly_->value(x) - shift4_;
    return g5 - shift_;
}

double C1Approximant::d1(double x) const {
    return x > patch_.x0 ? patch_.d1(x) : poly_->d1(x);
}

double C1Approximant::integral() const {
    const double L = b() - a();
    const double width = b() - patch_.x0;
    const double g4_total = poly_->integral() - shift4_ * L;
    const double g4_patch = poly_->integral_from(patch_.x0) - shift4_ * width;
    return g4_total - g4_patch + patch_.integral() - shift_ * L;
}

C1Grid C1Approximant::sample(const GridFunction& grid) const {
    Vector values(grid.size()), d(grid.size());
    for (int i = 0; i < grid.size(); ++i) {
        values[i] = value(grid.node(i));
        d[i] = d1(grid.node(i));
    }
    return {grid.with_values(std::move(values)), std::move(d)};
}

double lp_distance(const std::function<double(double)>& F, const GridFunction& f, int p,
                   double tol) {
    return root(lp_power_adaptive([&](double x) { return F(x) - f.interpolate(x); }, p,
                                  graded_breakpoints(f.a(), f.b(), f.size()), tol),
                p);
}

ApproxResult approximate_c1(const ApproxRequest& req, const ApproxOptions& opts) {
    if (req.p != 1 && req.p != 2) throw UnsupportedNorm(req.p);
    if (!(req.epsilon > 0.0)) throw BadParams("epsilon must be positive");
    const GridFunction& f = req.f;
    const double a = f.a(), b = f.b(), L = b - a;
    const int p = req.p;
    const double eps = req.epsilon;
    const double scale = std::max(1.0, f.values().cwiseAbs().maxCoeff()) * std::pow(L, 1.0 / p);
    // Below this level rounding dominates every stage: one cheap attempt, then give up.
    // Hoelder: any g with the target integral is at least this far from f.
    const double floor = std::abs(integrate(f) - req.target_integral) / std::pow(L, 1.0 - 1.0 / p);
    const bool unreachable = eps < 1e-12 * scale || floor >= eps;
    const double tol = std::max(1e-4 * std::pow(eps, p), 1e-14 * std::pow(scale, p));
    const double min_delta = std::ldexp(L, -opts.min_delta_exponent);
    const std::vector<double> breaks = graded_breakpoints(a, b, f.size());
    const auto distance = [&](const std::function<double(double)>& F,
                              std::vector<QuadNode>* used) {
        return root(lp_power_adaptive([&](double x) { return F(x) - f.interpolate(x); }, p,
                                      breaks, tol, used),
                    p);
    };

    double delta0 = L * opts.initial_fraction;
    double delta_h0 = L * opts.initial_fraction;
    int m_max = std::max(opts.m_max, 8);
    int m = 8;
    const int max_attempts = unreachable ? 1 : opts.max_attempts;
    std::unique_ptr<ApproxResult> best;

    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        ApproxStages st;
        st.attempts = attempt;

        // Stage 1: linear tail, widest delta within eps / 4.
        double delta = delta0;
        TailedInput g2 = make_tail(f, req.c1, delta, req.target_integral);
        st.error_g2 = distance(g2, nullptr);
        while (st.error_g2 >= eps / 4 && delta / 2 >= min_delta) {
            delta /= 2;
            g2 = make_tail(f, req.c1, delta, req.target_integral);
            st.error_g2 = distance(g2, nullptr);
        }
        st.delta = delta;

        // Stage 2: Bernstein degree by doubling until ||g4 - f|| < eps / 2.
        std::shared_ptr<const BernsteinPoly> poly;
        double shift4 = 0.0;
        std::vector<QuadNode> nodes;
        for (;;) {
            poly = bernstein_of(g2, m);
            shift4 = (poly->integral() - req.target_integral) / L;
            nodes.clear();
            st.error_g4 = distance([&](double x) { return poly->value(x) - shift4; }, &nodes);
            if (st.error_g4 < eps / 2 || 2 * m > m_max) break;
            m *= 2;
        }
        st.m = m;
        const bool last = attempt == max_attempts;
        const bool stage2_ok = st.error_g4 < eps / 2;

        if (stage2_ok || last) {
            // Stage 3: Hermite patch width from the cached g4 - f samples.
            const double g4_total = poly->integral() - shift4 * L;
            const double slope_b = poly->d1(a) + req.c2;
            double delta_h = delta_h0;
            CubicHermite H{};
            double shift = 0.0;
            for (;;) {
                const double xs = b - delta_h;
                H = CubicHermite{xs, b, poly->value(xs) - shift4, poly->d1(xs),
                                 poly->value(b) - shift4, slope_b};
                const double g4_patch = poly->integral_from(xs) - shift4 * delta_h;
                shift = (g4_total - g4_patch + H.integral() - req.target_integral) / L;
                double power = 0.0;
                for (const QuadNode& q : nodes)
                    if (q.x < xs) power += q.w * pw(q.inner - shift, p);
                std::vector<double> patch_breaks{xs};
                for (double x : breaks)
                    if (x > xs) patch_breaks.push_back(x);
                power += lp_power_adaptive(
                    [&](double x) { return H.value(x) - shift - f.interpolate(x); }, p,
                    patch_breaks, tol * delta_h / L);
                if (root(power, p) < 0.75 * eps || delta_h / 2 < min_delta) break;
                delta_h /= 2;
            }
            st.delta_hermite = delta_h;

            ApproxResult r = finish(req, C1Approximant(poly, shift4, H, shift), st, tol);
            if (r.achieved_lp_error < eps) return r;
            if (!best || r.achieved_lp_error < best->achieved_lp_error)
                best = std::make_unique<ApproxResult>(std::move(r));
        }

        if (m_max >= opts.m_cap && delta0 <= min_delta && delta_h0 <= min_delta) break;
        delta0 = std::max(delta0 / 2, min_delta);
        delta_h0 = std::max(delta_h0 / 2, min_delta);
        m_max = std::min(2 * m_max, opts.m_cap);
    }

    if (!best) {
        // Build the best-effort curve from the largest degree tried.
        const TailedInput g2 = make_tail(f, req.c1, delta0, req.target_integral);
        auto poly = bernstein_of(g2, m);
        const double shift4 = (poly->integral() - req.target_integral) / L;
        const double xs = b - delta_h0;
        const CubicHermite H{xs, b, poly->value(xs) - shift4, poly->d1(xs),
                             poly->value(b) - shift4, poly->d1(a) + req.c2};
        const double g4_patch = poly->integral_from(xs) - shift4 * delta_h0;
        const double shift =
            (poly->integral() - shift4 * L - g4_patch + H.integral() - req.target_integral) / L;
        ApproxStages st;
        st.delta = delta0;
        st.m = m;
        st.delta_hermite = delta_h0;
        st.attempts = max_attempts;
        best = std::make_unique<ApproxResult>(
            finish(req, C1Approximant(poly, shift4, H, shift), st, tol));
    }
    throw ApproxBudgetExceeded("epsilon = " + std::to_string(eps) +
                                   " not reached within the degree and width caps",
                               std::move(*best));
}

}  // namespace tbvp
