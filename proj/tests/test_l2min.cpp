#include "support.hpp"
#include "tbvp/l2min.hpp"

#include <doctest.h>

#include <cmath>

using namespace tbvp;
using namespace tbvp::testing;

namespace {

ShiftSequence zeros(int K, int n = 33, double T = 1.0) {
    return ShiftSequence::from_samples(std::vector<GridFunction>(K, GridFunction::constant(-T, T, n, 0.0)));
}

}  // namespace

TEST_CASE("a1_constant examples") {
    CHECK(a1_constant(zeros(3), 0.0, 1.0) == 0.0);
    CHECK(a1_constant(zeros(3), 3.0, 1.0) == 3.0);
    // Mean shift x: members 0, 3x/2, 3x/2.
    const GridFunction s = GridFunction::from(-1.0, 1.0, 33, [](double x) { return 1.5 * x; });
    const ShiftSequence ts = ShiftSequence::from_samples({GridFunction::constant(-1.0, 1.0, 33, 0.0), s, s});
    CHECK(std::abs(a1_constant(ts, 2.0, 1.0) - 2.0) < 1e-15);
}

TEST_CASE("l2_minimizer examples") {
    const L2Solution z = l2_minimizer(zeros(3), 0.0, 1.0);
    CHECK(z.v.values().cwiseAbs().maxCoeff() == 0.0);
    CHECK(z.objective == 0.0);

    const L2Solution c = l2_minimizer(zeros(3), 2.0, 1.0);
    for (int i = 0; i < c.v.size(); ++i) CHECK(c.v[i] == 1.0);
    CHECK(c.objective == doctest::Approx(6.0).epsilon(1e-14));

    const GridFunction s = GridFunction::from(-1.0, 1.0, 33, [](double x) { return std::exp(x); });
    const ShiftSequence sym = ShiftSequence::from_samples({GridFunction::constant(-1.0, 1.0, 33, 0.0), s, -1.0 * s});
    const L2Solution v = l2_minimizer(sym, 0.7, 1.0);
    for (int i = 0; i < v.v.size(); ++i) CHECK(std::abs(v.v[i] - 0.35) < 1e-15);
}

TEST_CASE("minimizer invariants on problem data") {
    Rng rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const ProblemSpec spec = random_problem(rng, uniform(rng, 0.5, 1.5), 1 + trial % 3, 1 + trial % 2);
        const ShiftSequence ts = shift_sequence(spec, 257);
        const L2Solution sol = l2_minimizer(ts, spec.A(), spec.T());
        for (int i = 0; i < sol.v.size(); ++i)
            CHECK(std::abs(sol.v[i] - (sol.mean_shift[i] + sol.A1 / (2.0 * spec.T()))) < 1e-14);
        CHECK(std::abs(integrate(sol.v) - spec.A()) < 1e-10);
        CHECK(sol.objective == doctest::Approx(full_norm(sol.v, spec, 2)).epsilon(1e-14));
    }
}

TEST_CASE("Hoelder bound: zero-integral perturbations raise the objective by K times their energy") {
    Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const ProblemSpec spec = random_problem(rng, uniform(rng, 0.5, 1.5), 1 + trial % 2, 1 + trial % 3);
        const ShiftSequence ts = shift_sequence(spec, 129);
        const L2Solution sol = l2_minimizer(ts, spec.A(), spec.T());
        const GridFunction w = zero_integral_bump(rng, -spec.T(), spec.T(), 129, uniform(rng, 1e-3, 1.0));
        const double energy = lp_power(w, 2);
        const double raised = full_norm(sol.v + w, ts, 2);
        CHECK(raised >= sol.objective + (1.0 - 1e-6) * ts.K() * energy);
        const double residual = lp_power(sol.v - sol.mean_shift, 2);
        CHECK(residual >= sol.A1 * sol.A1 / (2.0 * spec.T()) - 1e-10);
    }
}

TEST_CASE("quadratic decomposition of the objective") {
    Rng rng(57);
    for (int trial = 0; trial < 50; ++trial) {
        const int K = 2 + trial % 5;
        const ShiftSequence ts = random_shifts(rng, K, 129);
        const GridFunction v = GridFunction::from(-1.0, 1.0, 129, random_smooth(rng, 3));
        const GridFunction mean = (1.0 / K) * ts.sum();
        Vector sq = Vector::Zero(ts.size());
        for (int i = 0; i < K; ++i) sq += ts[i].values().cwiseAbs2();
        const Vector spread = sq - ts.sum().values().cwiseAbs2() / K;
        const double lhs = full_norm(v, ts, 2);
        const double rhs = K * lp_power(v - mean, 2) + integrate(v.with_values(spread));
        CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("l2_ms_check examples") {
    const ProblemSpec zero = zero_problem();
    const L2Solution z = l2_minimizer(shift_sequence(zero, 65), zero.A(), zero.T());
    CHECK(l2_ms_check(z, zero) == MsVerdict::ms_exists);

    const ProblemSpec jump(catalog("zero", {}), catalog("sin", {1.0, 0.0}), 1.0, 1, 1);
    REQUIRE(jump.c1() != 0.0);
    const L2Solution c{GridFunction::constant(-1.0, 1.0, 65, 0.5), 1.0,
                       GridFunction::constant(-1.0, 1.0, 65, 0.0), 0.0};
    CHECK(l2_ms_check(c, jump) == MsVerdict::pms_only);

    // Both sides evaluated analytically: mean shift (2/3)(cos 2 - 1) cos x.
    const ProblemSpec wave = traveling_wave();
    const L2Solution w = l2_minimizer(shift_sequence(wave, 1025), wave.A(), wave.T());
    const double k = 2.0 / 3.0 * (std::cos(2.0) - 1.0);
    const double value_defect = std::abs(0.0 - wave.c1());
    const double slope_defect = std::abs(-2.0 * k * std::sin(1.0) - wave.c2());
    const bool exists = value_defect <= 1e-8 && slope_defect <= 1e-6;
    const EndpointDefects d = endpoint_defects(w.v, wave);
    CHECK(std::abs(d.value - value_defect) < 1e-12);
    CHECK(std::abs(d.slope - slope_defect) < 1e-9);
    CHECK(l2_ms_check(w, wave) == (exists ? MsVerdict::ms_exists : MsVerdict::pms_only));
    CHECK(std::string(to_string(l2_ms_check(w, wave))) == "pms_only");
}
