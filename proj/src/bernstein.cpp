#include "tbvp/bernstein.hpp"

#include "tbvp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace tbvp {

namespace {

constexpr int kDirectDegree = 48;
constexpr double kCut = 1e-18;

// Normalised sum over k of c(k) b_{k,m}(u) for 0 < u < 1.
template <class C>
double windowed(int m, double u, C&& c) {
    const double ratio = u / (1.0 - u);
    const int mode = std::clamp(static_cast<int>(std::floor((m + 1) * u)), 0, m);
    double num = c(mode), den = 1.0;
    double w = 1.0;
    for (int k = mode; k < m; ++k) {
        w *= (static_cast<double>(m - k) / (k + 1)) * ratio;
        if (w < kCut) break;
        num += w * c(k + 1);
        den += w;
    }
    w = 1.0;
    for (int k = mode; k > 0; --k) {
        w *= (static_cast<double>(k) / (m - k + 1)) / ratio;
        if (w < kCut) break;
        num += w * c(k - 1);
        den += w;
    }
    return num / den;
}

template <class C>
double direct(int m, double u, C&& c) {
    std::vector<double> q(m + 1);
    for (int k = 0; k <= m; ++k) q[k] = c(k);
    for (int r = m; r > 0; --r)
        for (int k = 0; k < r; ++k) q[k] = (1.0 - u) * q[k] + u * q[k + 1];
    return q[0];
}

template <class C>
double bernstein_sum(int m, double u, C&& c) {
    if (u <= 0.0) return c(0);
    if (u >= 1.0) return c(m);
    if (m <= kDirectDegree) return direct(m, u, c);
    return windowed(m, u, c);
}

}  // namespace

double de_casteljau(const Vector& coef, double u) {
    return direct(static_cast<int>(coef.size()) - 1, u, [&](int k) { return coef[k]; });
}

BernsteinPoly::BernsteinPoly(double a, double b, Vector coef) : a_(a), b_(b), coef_(std::move(coef)) {
    if (!(b > a)) throw GridError("Bernstein interval must have b > a");
    if (coef_.size() < 2) throw BadParams("Bernstein degree must be at least 1");
}

double BernsteinPoly::value(double x) const {
    const double u = (x - a_) / (b_ - a_);
    return bernstein_sum(degree(), u, [this](int k) { return coef_[k]; });
}

double BernsteinPoly::d1(double x) const {
    const int m = degree();
    const double u = (x - a_) / (b_ - a_);
    const double s = bernstein_sum(m - 1, u, [this](int k) { return coef_[k + 1] - coef_[k]; });
    return m * s / (b_ - a_);
}

double BernsteinPoly::integral() const {
    long double s = 0.0L;
    for (Eigen::Index k = 0; k < coef_.size(); ++k) s += coef_[k];
    return static_cast<double>((b_ - a_) * s / coef_.size());
}

double BernsteinPoly::integral_from(double x) const {
    // Over [x, b]: (b - a)/(m + 1) * sum_k S_k b_{k,m+1}(u), S_k = sum_{i >= k} c_i.
    const int m = degree();
    const double u = (x - a_) / (b_ - a_);
    std::vector<double> suffix(m + 2);
    long double acc = 0.0L;
    suffix[m + 1] = 0.0;
    for (int k = m; k >= 0; --k) {
        acc += coef_[k];
        suffix[k] = static_cast<double>(acc);
    }
    const double s = bernstein_sum(m + 1, u, [&](int k) { return suffix[k]; });
    return (b_ - a_) * s / (m + 1);
}

}  // namespace tbvp
