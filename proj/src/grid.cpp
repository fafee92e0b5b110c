#include "tbvp/grid.hpp"

#include "tbvp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tbvp {

GridFunction::GridFunction(double a, double b, Vector values)
    : a_(a), b_(b), values_(std::move(values)) {
    if (!(b_ > a_)) throw GridError("grid requires b > a");
    const auto n = values_.size();
    if (n < 3 || n % 2 == 0)
        throw GridError("grid size must be odd and >= 3, got " + std::to_string(n));
    if (!values_.allFinite()) throw GridError("grid values must be finite");
}

GridFunction GridFunction::constant(double a, double b, int n, double c) {
    return GridFunction(a, b, Vector::Constant(n, c));
}

Vector GridFunction::nodes() const {
    Vector x(size());
    for (int i = 0; i < size(); ++i) x[i] = node(i);
    return x;
}

bool GridFunction::same_grid(const GridFunction& other) const {
    return size() == other.size() && a_ == other.a_ && b_ == other.b_;
}

double GridFunction::interpolate(double x) const {
    const double h = spacing();
    const double slack = 1e-12 * (b_ - a_);
    if (x < a_ - slack || x > b_ + slack)
        throw DomainError("interpolation point " + std::to_string(x) + " outside grid");
    double s = (x - a_) / h;
    int i = static_cast<int>(std::floor(s));
    if (i < 0) i = 0;
    if (i > size() - 2) i = size() - 2;
    const double theta = std::clamp(s - i, 0.0, 1.0);
    return (1.0 - theta) * values_[i] + theta * values_[i + 1];
}

void require_same_grid(const GridFunction& f, const GridFunction& g, const char* what) {
    if (!f.same_grid(g)) throw GridError(std::string("grid mismatch in ") + what);
}

GridFunction operator+(const GridFunction& f, const GridFunction& g) {
    require_same_grid(f, g, "operator+");
    return f.with_values(f.values() + g.values());
}

GridFunction operator-(const GridFunction& f, const GridFunction& g) {
    require_same_grid(f, g, "operator-");
    return f.with_values(f.values() - g.values());
}

GridFunction operator+(const GridFunction& f, double c) {
    return f.with_values(f.values().array() + c);
}

GridFunction operator-(const GridFunction& f, double c) {
    return f.with_values(f.values().array() - c);
}

GridFunction operator*(double c, const GridFunction& f) { return f.with_values(c * f.values()); }

GridFunction abs(const GridFunction& f) { return f.with_values(f.values().cwiseAbs()); }

Vector simpson_weights(int n, double h) {
    if (n < 3 || n % 2 == 0) throw GridError("Simpson weights need an odd node count >= 3");
    Vector w(n);
    for (int i = 0; i < n; ++i) w[i] = (i % 2 == 1) ? 4.0 : 2.0;
    w[0] = 1.0;
    w[n - 1] = 1.0;
    return w * (h / 3.0);
}

double integrate(const GridFunction& g) {
    return simpson_weights(g.size(), g.spacing()).dot(g.values());
}

double lp_power(const GridFunction& g, int p) {
    const Vector w = simpson_weights(g.size(), g.spacing());
    switch (p) {
    case 1: return w.dot(g.values().cwiseAbs());
    case 2: return w.dot(g.values().cwiseAbs2());
    default: throw UnsupportedNorm(p);
    }
}

double lp_norm(const GridFunction& g, int p) {
    const double s = lp_power(g, p);
    return p == 1 ? s : std::sqrt(s);
}

GridFunction resample(const GridFunction& g, int n) {
    return GridFunction::from(g.a(), g.b(), n, [&](double x) { return g.interpolate(x); });
}

double left_end_slope(const Vector& f, double h) {
    if (f.size() < 5) return (f[1] - f[0]) / h;
    return (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h);
}

double right_end_slope(const Vector& f, double h) {
    const auto n = f.size();
    if (n < 5) return (f[n - 1] - f[n - 2]) / h;
    return (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]) /
           (12.0 * h);
}

Vector derivative(const Vector& f, double h) {
    const auto n = f.size();
    Vector d(n);
    if (n < 5) {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == 0) d[i] = (f[1] - f[0]) / h;
            else if (i == n - 1) d[i] = (f[n - 1] - f[n - 2]) / h;
            else d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
        }
        return d;
    }
    for (Eigen::Index i = 2; i < n - 2; ++i)
        d[i] = (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
    d[0] = left_end_slope(f, h);
    d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / (12.0 * h);
    d[n - 1] = right_end_slope(f, h);
    d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) /
               (12.0 * h);
    return d;
}

}  // namespace tbvp
