#include "tbvp/smooth_function.hpp"

#include "tbvp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace tbvp {

SmoothFunction::SmoothFunction(Map value, Map d1, Map d2, FunctionSource source, double lo,
                               double hi)
    : value_(std::move(value)), d1_(std::move(d1)), d2_(std::move(d2)), source_(source), lo_(lo),
      hi_(hi) {
    if (!(hi_ >= lo_)) throw DomainError("function domain requires hi >= lo");
}

SmoothFunction SmoothFunction::with_domain(double lo, double hi) const {
    return SmoothFunction(value_, d1_, d2_, source_, lo, hi);
}

SmoothFunction SmoothFunction::shifted(double shift) const {
    auto v = value_;
    auto d1 = d1_;
    auto d2 = d2_;
    return SmoothFunction([v, shift](double x) { return v(x + shift); },
                          [d1, shift](double x) { return d1(x + shift); },
                          [d2, shift](double x) { return d2(x + shift); }, source_, lo_ - shift,
                          hi_ - shift);
}

namespace {

void require_arity(const std::string& name, const std::vector<double>& params, std::size_t n) {
    if (params.size() != n)
        throw BadParams("catalog '" + name + "' expects " + std::to_string(n) + " parameters, got " +
                        std::to_string(params.size()));
}

SmoothFunction polynomial(std::vector<double> c) {
    // Horner on the coefficient vector and its formal derivatives.
    auto horner = [](const std::vector<double>& k, double x) {
        double s = 0.0;
        for (auto it = k.rbegin(); it != k.rend(); ++it) s = s * x + *it;
        return s;
    };
    auto differentiate = [](const std::vector<double>& k) {
        std::vector<double> d;
        for (std::size_t i = 1; i < k.size(); ++i) d.push_back(static_cast<double>(i) * k[i]);
        return d;
    };
    auto c1 = differentiate(c);
    auto c2 = differentiate(c1);
    return SmoothFunction([c, horner](double x) { return horner(c, x); },
                          [c1, horner](double x) { return horner(c1, x); },
                          [c2, horner](double x) { return horner(c2, x); },
                          FunctionSource::catalog_analytic);
}

}  // namespace

SmoothFunction catalog(const std::string& name, const std::vector<double>& params) {
    using FS = FunctionSource;
    if (name == "zero") {
        require_arity(name, params, 0);
        auto z = [](double) { return 0.0; };
        return SmoothFunction(z, z, z, FS::catalog_analytic);
    }
    if (name == "const") {
        require_arity(name, params, 1);
        const double c = params[0];
        auto z = [](double) { return 0.0; };
        return SmoothFunction([c](double) { return c; }, z, z, FS::catalog_analytic);
    }
    if (name == "poly") {
        if (params.empty()) throw BadParams("catalog 'poly' expects at least one coefficient");
        return polynomial(params);
    }
    if (name == "sin") {
        require_arity(name, params, 2);
        const double w = params[0], ph = params[1];
        return SmoothFunction([=](double x) { return std::sin(w * x + ph); },
                              [=](double x) { return w * std::cos(w * x + ph); },
                              [=](double x) { return -w * w * std::sin(w * x + ph); },
                              FS::catalog_analytic);
    }
    if (name == "cos") {
        require_arity(name, params, 2);
        const double w = params[0], ph = params[1];
        return SmoothFunction([=](double x) { return std::cos(w * x + ph); },
                              [=](double x) { return -w * std::sin(w * x + ph); },
                              [=](double x) { return -w * w * std::cos(w * x + ph); },
                              FS::catalog_analytic);
    }
    if (name == "gaussian") {
        require_arity(name, params, 3);
        const double amp = params[0], c = params[1], s = params[2];
        if (!(s > 0.0)) throw BadParams("gaussian width must be positive");
        auto g = [=](double x) { return amp * std::exp(-(x - c) * (x - c) / (2.0 * s * s)); };
        return SmoothFunction(
            g, [=](double x) { return -(x - c) / (s * s) * g(x); },
            [=](double x) { return ((x - c) * (x - c) / (s * s) - 1.0) / (s * s) * g(x); },
            FS::catalog_analytic);
    }
    if (name == "tanh-bump") {
        require_arity(name, params, 4);
        const double amp = params[0], c = params[1], half = params[2], k = params[3];
        if (!(k > 0.0)) throw BadParams("tanh-bump steepness must be positive");
        // With T(z) = tanh(z): T' = 1 - T^2, T'' = -2 T (1 - T^2).
        auto part = [=](double x, int order) {
            double out = 0.0;
            for (int s : {+1, -1}) {
                const double t = std::tanh((x - c + s * half) / k);
                const double sech2 = 1.0 - t * t;
                const double term = order == 0   ? t
                                    : order == 1 ? sech2 / k
                                                 : -2.0 * t * sech2 / (k * k);
                out += s * term;
            }
            return 0.5 * amp * out;
        };
        return SmoothFunction([=](double x) { return part(x, 0); },
                              [=](double x) { return part(x, 1); },
                              [=](double x) { return part(x, 2); }, FS::catalog_analytic);
    }
    throw UnknownCatalogEntry(name);
}

namespace {

struct NaturalSpline {
    std::vector<double> x, y, m;  // m: second derivatives at knots

    std::size_t segment(double t) const {
        const double slack = 1e-12 * (x.back() - x.front());
        if (t < x.front() - slack || t > x.back() + slack)
            throw DomainError("spline evaluated outside its samples at x = " + std::to_string(t));
        auto it = std::upper_bound(x.begin(), x.end(), t);
        std::size_t i = it == x.begin() ? 0 : static_cast<std::size_t>(it - x.begin()) - 1;
        return std::min(i, x.size() - 2);
    }

    double eval(double t, int order) const {
        const std::size_t i = segment(t);
        const double h = x[i + 1] - x[i];
        const double A = x[i + 1] - t, B = t - x[i];
        switch (order) {
        case 0:
            return m[i] * A * A * A / (6 * h) + m[i + 1] * B * B * B / (6 * h) +
                   (y[i] / h - m[i] * h / 6) * A + (y[i + 1] / h - m[i + 1] * h / 6) * B;
        case 1:
            return -m[i] * A * A / (2 * h) + m[i + 1] * B * B / (2 * h) - (y[i] / h - m[i] * h / 6) +
                   (y[i + 1] / h - m[i + 1] * h / 6);
        default: return m[i] * A / h + m[i + 1] * B / h;
        }
    }
};

}  // namespace

SmoothFunction spline_from_samples(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 3 || y.size() != n) throw BadParams("spline needs >= 3 matching (x, y) samples");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x[i] > x[i - 1])) throw BadParams("spline abscissae must be strictly increasing");

    auto s = std::make_shared<NaturalSpline>();
    s->x = x;
    s->y = y;
    s->m.assign(n, 0.0);

    // Thomas algorithm on the interior second-derivative system.
    const std::size_t k = n - 2;
    std::vector<double> diag(k), upper(k), rhs(k);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t i = j + 1;
        const double h0 = x[i] - x[i - 1], h1 = x[i + 1] - x[i];
        diag[j] = 2.0 * (h0 + h1);
        upper[j] = h1;
        rhs[j] = 6.0 * ((y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0);
    }
    for (std::size_t j = 1; j < k; ++j) {
        const double lower = x[j + 1] - x[j];
        const double w = lower / diag[j - 1];
        diag[j] -= w * upper[j - 1];
        rhs[j] -= w * rhs[j - 1];
    }
    for (std::size_t j = k; j-- > 0;) {
        const double next = j + 1 < k ? s->m[j + 2] : 0.0;
        s->m[j + 1] = (rhs[j] - upper[j] * next) / diag[j];
    }

    return SmoothFunction([s](double t) { return s->eval(t, 0); },
                          [s](double t) { return s->eval(t, 1); },
                          [s](double t) { return s->eval(t, 2); },
                          FunctionSource::spline_from_samples, x.front(), x.back());
}

GridFunction sample(const SmoothFunction& f, double a, double b, int n) {
    if (!f.covers(a, b))
        throw DomainError("sample interval [" + std::to_string(a) + ", " + std::to_string(b) +
                          "] exceeds the function domain");
    if (n < 3 || n % 2 == 0) throw GridError("sample size must be odd and >= 3");
    return GridFunction::from(a, b, n, [&](double x) { return f.value(x); });
}

}  // namespace tbvp
