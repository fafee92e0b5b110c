#include "support.hpp"
#include "tbvp/approx.hpp"
#include "tbvp/l1min.hpp"
#include "tbvp/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace tbvp;
using namespace tbvp::testing;

TEST_CASE("verify zero data") {
    const VerificationReport r = verify_solution(GridFunction::constant(-1.0, 1.0, 129, 0.0), zero_problem(), 17);
    CHECK(r.integral_residual == 0.0);
    CHECK(r.pde_residual_max == 0.0);
    CHECK(r.boundary0_max == 0.0);
    CHECK(r.boundaryT_max == 0.0);
    for (const Located& s : r.seam_value_jumps) CHECK(s.magnitude == 0.0);
    for (const Located& s : r.seam_deriv_jumps) CHECK(s.magnitude == 0.0);
    CHECK(r.kinks.empty());
    for (double e : r.equilibrium_residuals) CHECK(e == 0.0);
    CHECK(r.classification == Classification::MS_candidate);
    CHECK(std::string(to_string(r.classification)) == "MS_candidate");
}

TEST_CASE("verify the traveling wave") {
    const ProblemSpec wave = traveling_wave();
    const GridFunction v = GridFunction::from(-1.0, 1.0, 513, [](double x) { return -std::cos(x); });
    const VerificationReport r = verify_solution(v, wave, 17);
    const double h = v.spacing();
    CHECK(r.pde_residual_max <= r.pde_budget);
    CHECK(r.pde_budget == doctest::Approx(1e3 * h * h));
    CHECK(r.boundary0_max < 1e-8);
    CHECK(r.boundaryT_max < 1e-8);
    CHECK(r.seam_value_jumps.size() == 2);
    for (const Located& s : r.seam_value_jumps) CHECK(s.magnitude < 1e-6);
    for (const Located& s : r.seam_deriv_jumps) CHECK(s.magnitude < 1e-6);
    CHECK(r.kinks.empty());
    CHECK(r.classification == Classification::MS_candidate);
}

TEST_CASE("L1 strip solution with a kink is pseudo-MS") {
    const ProblemSpec wave = traveling_wave();
    const ShiftSequence ts = shift_sequence(wave, 513);
    const StripSolution s = l1_solve(ts, wave.A());
    const OrderEnvelopes env = order_envelopes(ts);
    REQUIRE_FALSE(env.crossings.empty());
    const VerificationReport r = verify_solution(s.h, wave, 17);
    CHECK(r.classification == Classification::pseudo_MS);
    CHECK(r.integral_residual < 1e-8);
    REQUIRE_FALSE(r.kinks.empty());
    bool located = false;
    for (const Located& k : r.kinks)
        for (double c : env.crossings)
            if (std::abs(k.x - c) <= 2.0 * s.h.spacing()) located = true;
    CHECK(located);
    for (int cells : r.kink_cells) CHECK(cells <= 2);
    CHECK(r.exceptional_measure <= wave.K() * 2.0 * s.h.spacing() * (1 + r.kinks.size()));
}

TEST_CASE("integral violation is infeasible") {
    const ProblemSpec wave = traveling_wave();
    const GridFunction v = GridFunction::from(-1.0, 1.0, 129, [](double x) { return -std::cos(x) + 0.1; });
    const VerificationReport r = verify_solution(v, wave, 17);
    CHECK(r.classification == Classification::infeasible);
    CHECK(r.integral_residual == doctest::Approx(0.2).epsilon(1e-8));
}

TEST_CASE("seam jump at T measures the endpoint violation") {
    Rng rng(91);
    for (int trial = 0; trial < 10; ++trial) {
        const ProblemSpec spec = random_problem(rng, 1.0, 1, 1);
        const GridFunction v = with_integral(GridFunction::from(-1.0, 1.0, 257, random_smooth(rng, 3)), spec.A());
        const VerificationReport r = verify_solution(v, spec, 9);
        bool found = false;
        for (const Located& s : r.seam_value_jumps) {
            if (std::abs(s.x - 1.0) < 1e-12) {
                found = true;
                CHECK(std::abs(s.magnitude - std::abs(v.back() - v.front() - spec.c1())) < 1e-10);
            }
        }
        CHECK(found);
        CHECK(r.classification != Classification::MS_candidate);
    }
}

TEST_CASE("equilibrium residuals vanish for feasible inputs, smooth or not") {
    Rng rng(93);
    for (int trial = 0; trial < 20; ++trial) {
        const ProblemSpec spec = random_problem(rng, uniform(rng, 0.5, 1.5), 1 + trial % 2, 1 + trial % 3);
        GridFunction v = GridFunction::from(-spec.T(), spec.T(), 513, random_smooth(rng, 3));
        if (trial % 2) v = abs(v);
        v = with_integral(v, spec.A());
        const VerificationReport r = verify_solution(v, spec, 9);
        CHECK(r.equilibrium_residuals.size() == static_cast<std::size_t>(spec.K()));
        for (double e : r.equilibrium_residuals) CHECK(e < 1e-8);
    }
}

TEST_CASE("convergence study examples") {
    const ProblemSpec wave = traveling_wave();
    const SmoothFunction v(
        [](double x) { return -std::cos(x); }, [](double x) { return std::sin(x); },
        [](double x) { return std::cos(x); }, FunctionSource::catalog_analytic);
    const std::vector<ConvergencePoint> pts = convergence_study(v, wave, {129, 257, 513});
    REQUIRE(pts.size() == 3);
    for (int k = 0; k + 1 < 3; ++k) {
        const double ratio = pts[k].pde_residual_max / pts[k + 1].pde_residual_max;
        CHECK(ratio >= 3.0);
        CHECK(ratio <= 5.0);
    }
    for (const ConvergencePoint& p : convergence_study(catalog("zero", {}), zero_problem(), {65, 129, 257}))
        CHECK(p.pde_residual_max == 0.0);

    // A seam jump stops the decay.
    const SmoothFunction jumpy(
        [](double x) { return -std::cos(x) + 0.3 * x; }, [](double x) { return std::sin(x) + 0.3; },
        [](double x) { return std::cos(x); }, FunctionSource::catalog_analytic);
    const std::vector<ConvergencePoint> bad = convergence_study(jumpy, wave, {129, 257, 513});
    for (int k = 0; k + 1 < 3; ++k) CHECK(bad[k].pde_residual_max / bad[k + 1].pde_residual_max < 3.0);
}

TEST_CASE("smoothing a pseudo-MS input gives an MS candidate") {
    const ProblemSpec wave = traveling_wave();
    const ShiftSequence ts = shift_sequence(wave, 513);
    const StripSolution s = l1_solve(ts, wave.A());
    REQUIRE(verify_solution(s.h, wave, 17).classification == Classification::pseudo_MS);
    const ApproxResult g = approximate_c1({s.h, wave.c1(), wave.c2(), wave.A(), 1e-2, 1});
    const VerificationReport r = verify_solution(g.g.g, wave, 17);
    CHECK(r.integral_residual < 1e-8);
    CHECK(r.classification == Classification::MS_candidate);
}
