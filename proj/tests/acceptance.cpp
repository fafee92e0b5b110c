#include "support.hpp"

#include "tbvp/approx.hpp"
#include "tbvp/cli.hpp"
#include "tbvp/extension.hpp"
#include "tbvp/l1min.hpp"
#include "tbvp/l2min.hpp"
#include "tbvp/oracle.hpp"
#include "tbvp/pms.hpp"
#include "tbvp/verify.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace tbvp;
using namespace tbvp::testing;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances and limits.
constexpr double kWaveTol = 1e-7;
constexpr double kWaveSeconds = 5.0;
constexpr double kZeroTol = 1e-12;
constexpr double kL2Gap = 1e-6;
constexpr double kL2Nodes = 1e-5;
constexpr double kL2Seconds = 60.0;
constexpr double kL1Slack = 1e-8;
constexpr double kL1Gap = 1e-4;
constexpr double kFlatTol = 1e-8;
constexpr double kLowerBoundTol = 1e-8;
constexpr double kApproxEps = 1e-3;
constexpr double kConstraintTol = 1e-10;
constexpr double kSeamTol = 1e-9;
constexpr double kSideSlopeTol = 1e-6;  // relative to the seam slope
constexpr double kApproxSeconds = 10.0;
constexpr double kEquilibriumTol = 1e-8;
constexpr double kReductionTol = 1e-6;
constexpr double kRatioLo = 3.0;
constexpr double kRatioHi = 5.0;

struct Outcome {
    bool pass;
    std::string detail;
};

class Detail {
public:
    template <class T>
    Detail& operator()(const char* key, T value) {
        if (!s_.str().empty()) s_ << ", ";
        s_ << key << '=' << value;
        return *this;
    }
    std::string str() const { return s_.str(); }

private:
    std::ostringstream s_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double max_abs(const GridFunction& g) { return g.values().cwiseAbs().maxCoeff(); }

GridFunction random_feasible(Rng& rng, const ProblemSpec& spec, int n) {
    return with_integral(GridFunction::from(-spec.T(), spec.T(), n, random_smooth(rng, 3)), spec.A());
}

Outcome traveling_wave_exactness() {
    const auto t0 = std::chrono::steady_clock::now();
    const ProblemSpec wave = traveling_wave();
    const GridFunction v = GridFunction::from(-1.0, 1.0, 1025, [](double x) { return -std::cos(x); });
    const SolutionField u = dalembert(v, wave);
    // Omega: 0 <= t <= T, |x| <= 3 - t on the window [-3, 3].
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double t = i / 200.0;
        for (int j = 0; j <= 600; ++j) {
            const double x = -3.0 + t + j * (6.0 - 2.0 * t) / 600.0;
            worst = std::max(worst, std::abs(u(t, x) - std::sin(x - t)));
        }
    }
    const double secs = seconds_since(t0);
    return {worst < kWaveTol && secs < kWaveSeconds,
            Detail()("max_error", worst)("seconds", secs).str()};
}

Outcome zero_data_suite() {
    const ProblemSpec zero = zero_problem();
    const ShiftSequence ts = shift_sequence(zero, 257);
    double worst = std::max({std::abs(zero.A()), std::abs(zero.c1()), std::abs(zero.c2())});
    for (int i = 0; i < ts.K(); ++i) worst = std::max(worst, max_abs(ts[i]));
    const L2Solution l2 = l2_minimizer(ts, zero.A(), zero.T());
    worst = std::max({worst, max_abs(l2.v), std::abs(l2.objective)});
    const StripSolution l1 = l1_solve(ts, zero.A());
    worst = std::max({worst, max_abs(l1.h), std::abs(l1.objective)});
    const VerificationReport r = verify_solution(l2.v, zero, 33);
    const bool ms = r.classification == Classification::MS_candidate;
    return {worst <= kZeroTol && ms,
            Detail()("max_abs", worst)("classification", to_string(r.classification)).str()};
}

Outcome l2_closed_form() {
    Rng rng(3001);
    double gap = 0.0, nodes = 0.0, slowest = 0.0;
    bool converged = true;
    for (int trial = 0; trial < 5; ++trial) {
        const int K1 = 1 + trial % 2, K2 = 1 + (trial / 2) % 2;
        const ProblemSpec spec = random_problem(rng, uniform(rng, 0.5, 1.5), K1, K2);
        const auto t0 = std::chrono::steady_clock::now();
        const OracleReport r = l2_oracle(shift_sequence(spec, 257), spec.A(), 257, 17 + trial);
        slowest = std::max(slowest, seconds_since(t0));
        converged = converged && r.converged;
        gap = std::max(gap, r.rel_gap);
        nodes = std::max(nodes, r.max_node_diff);
    }
    return {converged && gap < kL2Gap && nodes < kL2Nodes && slowest < kL2Seconds,
            Detail()("max_rel_gap", gap)("max_node_diff", nodes)("slowest_seconds", slowest).str()};
}

Outcome l1_strip_optimality() {
    Rng rng(4001);
    double worst_slack = -1e300, gap = 0.0, flat = 0.0;
    bool converged = true;
    int flat_pairs = 0;
    for (int trial = 0; trial < 5; ++trial) {
        const ProblemSpec spec = random_problem(rng, uniform(rng, 0.5, 1.5), 1 + trial % 2, 1 + (trial / 2) % 2);
        const int n = 257;
        const ShiftSequence ts = shift_sequence(spec, n);
        const OrderEnvelopes env = order_envelopes(ts);
        const StripSolution s = l1_solve(ts, spec.A());
        for (int k = 0; k < 200; ++k) {
            const GridFunction v = k % 2 == 0
                ? random_feasible(rng, spec, n)
                : s.h + zero_integral_bump(rng, -spec.T(), spec.T(), n, uniform(rng, 1e-3, 1.0));
            worst_slack = std::max(worst_slack, s.objective - l1_objective(v, ts));
        }
        const OracleReport r = l1_oracle(ts, spec.A(), n, 23 + trial);
        converged = converged && r.converged;
        gap = std::max(gap, r.rel_gap);

        // A second in-strip feasible function: a varying blend weight mu in [0, 1]
        // between the strip envelopes, rebalanced to the integral.
        if (s.j >= 1 && s.j < env.K() && !s.degenerate) {
            const GridFunction& up = env.envelope(s.j);
            const GridFunction& lo = env.envelope(s.j + 1);
            const double pu = env.integral(s.j), pl = env.integral(s.j + 1);
            if (pu > pl) {
                const double lambda = (spec.A() - pl) / (pu - pl);
                const double room = std::min(lambda, 1.0 - lambda);
                const Vector width = (up - lo).values();
                Vector mu(n);
                for (int i = 0; i < n; ++i)
                    mu[i] = lambda + 0.5 * room * std::sin(3.141592653589793 * (up.node(i) + spec.T()) / spec.T());
                const double denom = integrate(up.with_values(width));
                if (denom > 0.0) {
                    const double excess = integrate(up.with_values(mu.cwiseProduct(width) + lo.values())) - spec.A();
                    mu.array() -= excess / denom;
                    const GridFunction second = up.with_values(mu.cwiseProduct(width) + lo.values());
                    bool inside = true;
                    for (int i = 0; i < n; ++i) inside = inside && mu[i] >= 0.0 && mu[i] <= 1.0;
                    if (inside && max_abs(second - s.h) > 1e-6) {
                        ++flat_pairs;
                        flat = std::max(flat, std::abs(l1_objective(second, ts) - s.objective));
                    }
                }
            }
        }
    }
    return {worst_slack <= kL1Slack && converged && gap < kL1Gap && flat_pairs > 0 && flat <= kFlatTol,
            Detail()("max_objective_excess", worst_slack)("max_rel_gap", gap)("flat_pairs", flat_pairs)(
                "flat_diff", flat)
                .str()};
}

Outcome lower_bound_identity() {
    Rng rng(5001);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const ProblemSpec spec = random_problem(rng, uniform(rng, 0.5, 1.5), 1 + trial % 2, 1 + (trial / 2) % 3);
        const ShiftSequence ts = shift_sequence(spec, 257);
        const OrderEnvelopes env = order_envelopes(ts);
        const StripSolution s = l1_solve(ts, spec.A());
        const int K = env.K();
        const GridFunction& ref = s.j < K ? env.envelope(s.j + 1) : env.envelope(K);
        double Uref = 0.0;
        {
            Vector u(ref.size());
            for (int i = 0; i < ref.size(); ++i) u[i] = pointwise_u(ts, i, ref[i]);
            Uref = integrate(ref.with_values(u));
        }
        const double rhs = Uref + (K - 2.0 * s.j) * (spec.A() - integrate(ref));
        worst = std::max(worst, std::abs(s.objective - rhs));
    }
    return {worst <= kLowerBoundTol, Detail()("max_difference", worst).str()};
}

Outcome approximation_constraints() {
    const GridFunction f = GridFunction::from(-1.0, 1.0, 2049, [](double x) { return std::abs(x); });
    bool pass = true;
    Detail d;
    for (int p : {1, 2}) {
        const auto t0 = std::chrono::steady_clock::now();
        const ApproxResult r = approximate_c1({f, 0.3, -0.7, 1.0, kApproxEps, p});
        const double secs = seconds_since(t0);
        const C1Approximant& g = r.approximant;
        const CubicHermite& H = g.patch();
        const double xs = H.x0;
        const double seam_value = std::abs(H.value(xs) - g.g4(xs));
        const double seam_slope = std::abs(H.d1(xs) - g.g4_d1(xs));
        // Slope jump across the seam through the public evaluator, extrapolated
        // to zero offset: J(e) = J0 + c1 e + c2 e^2.
        const auto J = [&](double e) { return g.d1(xs + e) - g.d1(xs - e); };
        const double e = 1e-3 * (1.0 - xs);
        const double side_slope =
            std::abs(8.0 * J(e / 4) - 6.0 * J(e / 2) + J(e)) / 3.0 / std::max(1.0, std::abs(g.d1(xs)));
        const double value_end = std::abs(g.value(1.0) - g.value(-1.0) - 0.3);
        const double slope_end = std::abs(g.d1(1.0) - g.d1(-1.0) + 0.7);
        const double integral = std::abs(g.integral() - 1.0);
        const bool ok = r.achieved_lp_error < kApproxEps && r.integral_residual <= kConstraintTol &&
                        integral <= kConstraintTol && r.endpoint_value_residual <= kConstraintTol &&
                        r.endpoint_deriv_residual <= kConstraintTol && value_end <= kConstraintTol &&
                        slope_end <= kConstraintTol && seam_value <= kSeamTol && seam_slope <= kSeamTol &&
                        side_slope <= kSideSlopeTol &&
                        secs < kApproxSeconds;
        pass = pass && ok;
        const std::string tag = "p" + std::to_string(p) + "_";
        d((tag + "error").c_str(), r.achieved_lp_error)((tag + "integral").c_str(), integral)(
            (tag + "endpoints").c_str(), std::max(value_end, slope_end))(
            (tag + "seam").c_str(), std::max(seam_value, seam_slope))((tag + "seam_side_slope").c_str(), side_slope)((tag + "seconds").c_str(), secs);
    }
    return {pass, d.str()};
}

Outcome pms_bounds() {
    const ProblemSpec wave = traveling_wave();
    const ShiftSequence ts = shift_sequence(wave, 513);
    const std::vector<double> eps{1e-1, 1e-2, 1e-3};
    bool pass = true;
    double worst1 = 0.0, worst2 = 0.0;
    const StripSolution s = l1_solve(ts, wave.A());
    for (const PmsEntry& e : pms_sequence(s.h, wave, eps, 1)) {
        pass = pass && !e.budget_exceeded && e.gap <= 2.0 * ts.K() * wave.T() * e.epsilon;
        worst1 = std::max(worst1, e.gap / e.bound);
    }
    const L2Solution v2 = l2_minimizer(ts, wave.A(), wave.T());
    for (const PmsEntry& e : pms_sequence(v2.v, wave, eps, 2)) {
        pass = pass && !e.budget_exceeded && e.M > 0.0 && e.gap <= e.M * e.epsilon;
        worst2 = std::max(worst2, e.gap / e.bound);
    }
    return {pass, Detail()("l1_max_gap_over_bound", worst1)("l2_max_gap_over_bound", worst2).str()};
}

Outcome equilibrium_identity() {
    Rng rng(8001);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const ProblemSpec spec = random_problem(rng, uniform(rng, 0.5, 1.5), 1 + trial % 3, 1 + trial % 2);
        const GridFunction v = random_feasible(rng, spec, 1025);
        const ExtendedInput ext = extend_input(v, spec);
        for (int P = -spec.K1(); P <= spec.K2(); ++P)
            worst = std::max(worst, std::abs(integrate(ext.period(P)) - equilibrium_value(spec, P)));
    }
    return {worst < kEquilibriumTol, Detail()("max_residual", worst).str()};
}

Outcome reduction_identity() {
    Rng rng(9001);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const ProblemSpec spec = random_problem(rng, uniform(rng, 0.5, 1.5), 1 + trial % 2, 1 + trial % 3);
        const GridFunction v = GridFunction::from(-spec.T(), spec.T(), 257, random_smooth(rng, 3));
        const ExtendedInput ext = extend_input(v, spec);
        for (int p : {1, 2}) {
            const double lhs = full_norm(v, spec, p);
            const double rhs = window_lp_power(ext, p);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
        }
    }
    return {worst <= kReductionTol, Detail()("max_relative_difference", worst).str()};
}

Outcome convergence_order() {
    const SmoothFunction v([](double x) { return -std::cos(x); }, [](double x) { return std::sin(x); },
                           [](double x) { return std::cos(x); }, FunctionSource::catalog_analytic);
    const std::vector<ConvergencePoint> pts = convergence_study(v, traveling_wave(), {129, 257, 513});
    bool pass = true;
    Detail d;
    for (int k = 0; k + 1 < 3; ++k) {
        const double ratio = pts[k].pde_residual_max / pts[k + 1].pde_residual_max;
        pass = pass && ratio >= kRatioLo && ratio <= kRatioHi;
        d(k == 0 ? "ratio_129_257" : "ratio_257_513", ratio);
    }
    return {pass, d.str()};
}

int invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "tbvp");
    std::vector<char*> argv;
    for (std::string& a : args) argv.push_back(a.data());
    std::ostringstream sink;
    std::streambuf* out = std::cout.rdbuf(sink.rdbuf());
    std::streambuf* err = std::cerr.rdbuf(sink.rdbuf());
    const int code = cli::run(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(out);
    std::cerr.rdbuf(err);
    return code;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome cli_contract() {
    const fs::path d = fs::temp_directory_path() / "tbvp_acceptance_cli";
    fs::remove_all(d);
    fs::create_directories(d);
    const auto write = [&](const std::string& name, const std::string& text) {
        std::ofstream(d / name, std::ios::binary) << text;
        return (d / name).string();
    };
    const std::string wave = write("wave.cfg",
                                   "f0 = sin(1, 0)\nfT = sin(1, -1)\nnorm = l1\nn = 513\nseed = 5\n");
    bool identical = true;
    const int a = invoke({"solve", "--config", wave, "--out", (d / "one").string(), "--quiet"});
    const int b = invoke({"solve", "--config", wave, "--out", (d / "two").string(), "--quiet"});
    for (const char* f : {"minimizer.csv", "shifts.csv", "envelopes.csv", "extended.csv"}) {
        const std::string x = slurp(d / "one" / f);
        identical = identical && !x.empty() && x == slurp(d / "two" / f);
    }

    const int config = invoke({"solve", "--config", write("even.cfg", "f0 = zero\nfT = zero\nn = 512\n")});

    const std::string zero = write("zero.cfg", "f0 = zero\nfT = zero\nnorm = l2\nn = 129\n");
    invoke({"solve", "--config", zero, "--out", (d / "zero").string(), "--quiet"});
    std::ofstream edited(d / "edited.csv", std::ios::binary);
    edited << "x,v\n";
    for (int i = 0; i < 129; ++i) edited << cli::format_number(-1.0 + i / 64.0) << ",0.25\n";
    edited.close();
    const int infeasible = invoke({"verify", "--config", zero, "--out", (d / "zero").string(), "--quiet",
                                   "--input", (d / "edited.csv").string()});

    const std::string tiny = write("tiny.cfg", "f0 = sin(1, 0)\nfT = sin(1, -1)\nnorm = l1\nn = 257\n"
                                               "eps_schedule = 1e-15\n");
    const int budget = invoke({"pms", "--config", tiny, "--out", (d / "pms").string(), "--quiet"});

    const bool pass = a == 0 && b == 0 && identical && config == 2 && infeasible == 4 && budget == 6;
    return {pass, Detail()("byte_identical", identical ? "yes" : "no")("even_n_exit", config)(
                      "infeasible_exit", infeasible)("budget_exit", budget)
                      .str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"traveling-wave exactness", traveling_wave_exactness},
        {"zero-data degenerate suite", zero_data_suite},
        {"L2 closed form vs oracle", l2_closed_form},
        {"L1 strip optimality", l1_strip_optimality},
        {"lower-bound identity", lower_bound_identity},
        {"C1 approximation constraints", approximation_constraints},
        {"PMS bounds", pms_bounds},
        {"equilibrium identity", equilibrium_identity},
        {"reduction identity", reduction_identity},
        {"convergence order", convergence_order},
        {"CLI determinism and exit codes", cli_contract},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
