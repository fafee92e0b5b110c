#ifndef TBVP_TESTS_SUPPORT_HPP
#define TBVP_TESTS_SUPPORT_HPP

#include "tbvp/core.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace tbvp::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// u = sin(x - t): f0 = sin, fT = sin(x - T).
inline ProblemSpec traveling_wave(double T = 1.0, int K1 = 1, int K2 = 1) {
    return ProblemSpec(catalog("sin", {1.0, 0.0}), catalog("sin", {1.0, -T}), T, K1, K2);
}

inline ProblemSpec zero_problem(double T = 1.0, int K1 = 1, int K2 = 1) {
    return ProblemSpec(catalog("zero", {}), catalog("zero", {}), T, K1, K2);
}

/// Random trigonometric sum with a few modes, smooth on any interval.
struct RandomSmooth {
    std::vector<double> amp, freq, phase;
    double offset = 0.0;

    double operator()(double x) const {
        double s = offset;
        for (std::size_t k = 0; k < amp.size(); ++k) s += amp[k] * std::sin(freq[k] * x + phase[k]);
        return s;
    }
    double d1(double x) const {
        double s = 0.0;
        for (std::size_t k = 0; k < amp.size(); ++k)
            s += amp[k] * freq[k] * std::cos(freq[k] * x + phase[k]);
        return s;
    }
    double integral(double a, double b) const {
        double s = offset * (b - a);
        for (std::size_t k = 0; k < amp.size(); ++k)
            s += amp[k] / freq[k] * (std::cos(freq[k] * a + phase[k]) - std::cos(freq[k] * b + phase[k]));
        return s;
    }
};

inline RandomSmooth random_smooth(Rng& rng, int modes = 3, double scale = 1.0) {
    RandomSmooth f;
    for (int k = 0; k < modes; ++k) {
        f.amp.push_back(scale * uniform(rng, -1.0, 1.0));
        f.freq.push_back(uniform(rng, 0.5, 3.0));
        f.phase.push_back(uniform(rng, 0.0, 6.283185307179586));
    }
    f.offset = scale * uniform(rng, -0.5, 0.5);
    return f;
}

/// Random smooth problem data built from catalog entries.
inline ProblemSpec random_problem(Rng& rng, double T = 1.0, int K1 = 1, int K2 = 1) {
    const SmoothFunction f0 = catalog("gaussian", {uniform(rng, 0.5, 2.0), uniform(rng, -1.0, 1.0),
                                                   uniform(rng, 0.7, 2.0)});
    const SmoothFunction fT = catalog("sin", {uniform(rng, 0.3, 1.5), uniform(rng, 0.0, 6.28)});
    return ProblemSpec(f0, fT, T, K1, K2);
}

/// Random shift family on [-T, T]: t_1 = 0, the rest random smooth curves.
inline ShiftSequence random_shifts(Rng& rng, int K, int n, double T = 1.0) {
    std::vector<GridFunction> ts{GridFunction::constant(-T, T, n, 0.0)};
    for (int i = 1; i < K; ++i) {
        const RandomSmooth f = random_smooth(rng, 2);
        ts.push_back(GridFunction::from(-T, T, n, f));
    }
    return ShiftSequence::from_samples(std::move(ts));
}

/// Samples of g shifted by a constant so the Simpson integral equals A.
inline GridFunction with_integral(const GridFunction& g, double A) {
    return g - (integrate(g) - A) / (g.b() - g.a());
}

/// Smooth zero-integral bump family on [a, b]: sin(k pi (x - a) / (b - a)) for even k
/// vanishes at both ends; sums of such terms times random weights.
inline GridFunction zero_integral_bump(Rng& rng, double a, double b, int n, double scale) {
    const double pi = 3.141592653589793;
    const int k = 2 * static_cast<int>(uniform(rng, 1.0, 4.0));
    const double c = scale * uniform(rng, -1.0, 1.0);
    GridFunction g = GridFunction::from(a, b, n, [&](double x) {
        return c * std::sin(k * pi * (x - a) / (b - a));
    });
    return with_integral(g, 0.0);
}

}  // namespace tbvp::testing

#endif  // TBVP_TESTS_SUPPORT_HPP
