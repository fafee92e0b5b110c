#include "tbvp/cli.hpp"

#include "tbvp/approx.hpp"
#include "tbvp/core.hpp"
#include "tbvp/l1min.hpp"
#include "tbvp/l2min.hpp"
#include "tbvp/oracle.hpp"
#include "tbvp/pms.hpp"
#include "tbvp/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace tbvp::cli {

namespace {

namespace fs = std::filesystem;

std::string out_path(const RunConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.output_dir);
    return (fs::path(cfg.output_dir) / name).string();
}

std::vector<std::string> numbered(const std::string& stem, int count) {
    std::vector<std::string> h{"x"};
    for (int i = 1; i <= count; ++i) h.push_back(stem + std::to_string(i));
    return h;
}

struct Minimizer {
    GridFunction v;
    std::string summary;
};

// Minimizer of the configured norm plus the solve summary lines.
Minimizer minimize(const ProblemSpec& spec, const ShiftSequence& ts, int norm,
                   OrderEnvelopes* env_out = nullptr) {
    std::ostringstream s;
    if (norm == 2) {
        const L2Solution sol = l2_minimizer(ts, spec.A(), spec.T());
        const EndpointDefects d = endpoint_defects(sol.v, spec);
        s << "A1 = " << format_number(sol.A1) << '\n'
          << "objective = " << format_number(sol.objective) << '\n'
          << "endpoint value defect = " << format_number(d.value) << '\n'
          << "endpoint slope defect = " << format_number(d.slope) << '\n'
          << "MS verdict = " << to_string(l2_ms_check(sol, spec)) << '\n';
        if (env_out) *env_out = order_envelopes(ts);
        return {sol.v, s.str()};
    }
    OrderEnvelopes env = order_envelopes(ts);
    const int j = select_strip(env, spec.A());
    StripSolution sol = construct_h(env, j, spec.A());
    sol.objective = l1_objective(sol.h, ts);
    const EndpointDefects d = endpoint_defects(sol.h, spec);
    s << "strip = " << j << '\n'
      << "boundary case = " << to_string(sol.boundary_case) << '\n'
      << "degenerate strip = " << (sol.degenerate ? "yes" : "no") << '\n'
      << "objective = " << format_number(sol.objective) << '\n'
      << "lower bound = " << format_number(l1_lower_bound(env, ts, j, spec.A())) << '\n'
      << "envelope crossings = " << env.crossings.size() << '\n'
      << "endpoint value defect = " << format_number(d.value) << '\n'
      << "endpoint slope defect = " << format_number(d.slope) << '\n';
    std::string verdict;
    if (j >= 1 && j < env.K() &&
        ms_endpoint_check(env, j, spec.c1()) == EndpointVerdict::obstructed) {
        s << "endpoint interval check = obstructed\n";
        verdict = "pms_only";
    } else {
        if (j >= 1 && j < env.K()) s << "endpoint interval check = possible\n";
        verdict = (d.value <= 1e-8 && d.slope <= 1e-6) ? "ms_exists" : "undetermined";
    }
    s << "MS verdict = " << verdict << '\n';
    if (env_out) *env_out = std::move(env);
    return {sol.h, s.str()};
}

void print_header(std::ostream& out, const ProblemSpec& spec) {
    out << "A = " << format_number(spec.A()) << '\n'
        << "c1 = " << format_number(spec.c1()) << '\n'
        << "c2 = " << format_number(spec.c2()) << '\n'
        << "K = " << spec.K() << '\n';
}

}  // namespace

int cmd_solve(const RunConfig& cfg, bool quiet, std::ostream& out) {
    const ProblemSpec spec = build_problem(cfg);
    const ShiftSequence ts = shift_sequence(spec, cfg.n);
    OrderEnvelopes env;
    const Minimizer m = minimize(spec, ts, cfg.norm, &env);
    const Vector x = ts[0].nodes();

    std::vector<Vector> shifts{x}, envs{x};
    for (int i = 0; i < ts.K(); ++i) shifts.push_back(ts[i].values());
    for (int j = 0; j < env.K(); ++j) envs.push_back(env.a[j].values());
    write_csv(out_path(cfg, "shifts.csv"), numbered("t_", ts.K()), shifts);
    write_csv(out_path(cfg, "envelopes.csv"), numbered("a_", env.K()), envs);
    write_csv(out_path(cfg, "minimizer.csv"), {"x", "v"}, {x, m.v.values()});
    const ExtendedInput ext = extend_input(m.v, ts);
    write_csv(out_path(cfg, "extended.csv"), {"x", "v_ext"},
              {ext.window().nodes(), ext.window().values()});

    if (!quiet) {
        out << "norm = l" << cfg.norm << '\n';
        print_header(out, spec);
        out << m.summary;
        out << "wrote shifts.csv envelopes.csv minimizer.csv extended.csv to " << cfg.output_dir
            << '\n';
    }
    return exit_ok;
}

int cmd_verify(const RunConfig& cfg, const std::string& input_csv, bool quiet, std::ostream& out) {
    const ProblemSpec spec = build_problem(cfg);
    const GridFunction v = read_input(input_csv, cfg.T);
    const VerificationReport r = verify_solution(v, spec, cfg.n_t);

    std::ofstream csv(out_path(cfg, "report.csv"), std::ios::binary);
    csv << "quantity,x,value\n";
    const auto row = [&](const std::string& q, const std::string& x, const std::string& val) {
        csv << q << ',' << x << ',' << val << '\n';
    };
    row("integral_residual", "", format_number(r.integral_residual));
    row("pde_residual_max", "", format_number(r.pde_residual_max));
    row("pde_budget", "", format_number(r.pde_budget));
    row("pde_residual_coarse", "", format_number(r.pde_residual_coarse));
    row("boundary0_max", "", format_number(r.boundary0_max));
    row("boundaryT_max", "", format_number(r.boundaryT_max));
    for (const Located& s : r.seam_value_jumps)
        row("seam_value_jump", format_number(s.x), format_number(s.magnitude));
    for (const Located& s : r.seam_deriv_jumps)
        row("seam_deriv_jump", format_number(s.x), format_number(s.magnitude));
    for (const Located& k : r.kinks) row("kink", format_number(k.x), format_number(k.magnitude));
    for (const Located& k : r.curvature_features)
        row("curvature_feature", format_number(k.x), format_number(k.magnitude));
    for (std::size_t k = 0; k < r.equilibrium_residuals.size(); ++k)
        row("equilibrium_residual", std::to_string(static_cast<int>(k) - spec.K1()),
            format_number(r.equilibrium_residuals[k]));
    row("exceptional_measure", "", format_number(r.exceptional_measure));
    row("classification", "", to_string(r.classification));

    if (!quiet) {
        out << "integral residual = " << format_number(r.integral_residual) << '\n'
            << "pde residual max = " << format_number(r.pde_residual_max) << " (budget "
            << format_number(r.pde_budget) << ", coarse grid "
            << format_number(r.pde_residual_coarse) << ")\n"
            << "boundary t=0 max = " << format_number(r.boundary0_max) << '\n'
            << "boundary t=T max = " << format_number(r.boundaryT_max) << '\n';
        for (std::size_t k = 0; k < r.seam_value_jumps.size(); ++k)
            out << "seam x = " << format_number(r.seam_value_jumps[k].x)
                << ": value jump " << format_number(r.seam_value_jumps[k].magnitude)
                << ", slope jump " << format_number(r.seam_deriv_jumps[k].magnitude) << '\n';
        for (const Located& k : r.kinks)
            out << "kink x = " << format_number(k.x) << ": " << format_number(k.magnitude)
                << '\n';
        double eq = 0.0;
        for (double e : r.equilibrium_residuals) eq = std::max(eq, e);
        out << "equilibrium residual max = " << format_number(eq) << '\n'
            << "classification = " << to_string(r.classification) << '\n';
    }
    switch (r.classification) {
        case Classification::MS_candidate:
        case Classification::pseudo_MS: return exit_ok;
        default: return exit_infeasible;
    }
}

int cmd_oracle(const RunConfig& cfg, bool quiet, std::ostream& out) {
    const ProblemSpec spec = build_problem(cfg);
    const ShiftSequence ts = shift_sequence(spec, cfg.oracle_n);
    OracleOptions opts;
    opts.max_iter = cfg.oracle_max_iter;
    const OracleReport r = cfg.norm == 2 ? l2_oracle(ts, spec.A(), cfg.oracle_n, cfg.seed, opts)
                                         : l1_oracle(ts, spec.A(), cfg.oracle_n, cfg.seed, opts);
    const bool ok = r.converged && r.rel_gap <= oracle_tolerance(r.p);
    if (!quiet) {
        out << "norm = l" << r.p << '\n'
            << "n = " << r.n << '\n'
            << "oracle value = " << format_number(r.oracle_value) << '\n'
            << "analytic value = " << format_number(r.analytic_value) << '\n'
            << "relative gap = " << format_number(r.rel_gap) << " (tolerance "
            << format_number(oracle_tolerance(r.p)) << ")\n"
            << "max node difference = " << format_number(r.max_node_diff) << '\n'
            << "iterations = " << r.iterations << '\n'
            << "converged = " << (r.converged ? "yes" : "no") << '\n';
    }
    return ok ? exit_ok : exit_oracle_gap;
}

int cmd_pms(const RunConfig& cfg, bool quiet, std::ostream& out) {
    const ProblemSpec spec = build_problem(cfg);
    const ShiftSequence ts = shift_sequence(spec, cfg.n);
    const Minimizer m = minimize(spec, ts, cfg.norm);
    const std::vector<PmsEntry> entries = pms_sequence(m.v, spec, cfg.eps_schedule, cfg.norm);

    std::vector<Vector> summary(5, Vector(static_cast<Eigen::Index>(entries.size())));
    bool exceeded = false;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const PmsEntry& e = entries[k];
        char name[32];
        std::snprintf(name, sizeof name, "pms_%03zu.csv", k + 1);
        write_csv(out_path(cfg, name), {"x", "v", "dv"},
                  {e.result.g.g.nodes(), e.result.g.g.values(), e.result.g.d1});
        summary[0][k] = e.epsilon;
        summary[1][k] = e.result.achieved_lp_error;
        summary[2][k] = e.gap;
        summary[3][k] = e.bound;
        summary[4][k] = e.satisfied ? 1.0 : 0.0;
        exceeded = exceeded || e.budget_exceeded;
        if (!quiet) {
            out << "eps = " << format_number(e.epsilon)
                << ": error = " << format_number(e.result.achieved_lp_error)
                << ", gap = " << format_number(e.gap) << ", bound = " << format_number(e.bound)
                << (e.satisfied ? " (satisfied)" : " (violated)")
                << (e.budget_exceeded ? ", budget exceeded" : "") << '\n';
        }
    }
    {
        std::ofstream csv(out_path(cfg, "pms_summary.csv"), std::ios::binary);
        csv << "eps,achieved_error,gap,bound,satisfied\n";
        for (std::size_t k = 0; k < entries.size(); ++k)
            csv << format_number(summary[0][k]) << ',' << format_number(summary[1][k]) << ','
                << format_number(summary[2][k]) << ',' << format_number(summary[3][k]) << ','
                << (entries[k].satisfied ? "yes" : "no") << '\n';
    }
    return exceeded ? exit_approx_budget : exit_ok;
}

int run(int argc, char** argv) {
    CLI::App app{"Minimum-input controls for the wave equation two-point boundary value problem"};
    app.require_subcommand(1);

    std::string config, out_dir, input;
    bool quiet = false;
    const auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config, "problem configuration file")->required();
        sub->add_option("--out", out_dir, "output directory (overrides output_dir)");
        sub->add_flag("--quiet", quiet, "suppress the summary");
    };
    CLI::App* solve = app.add_subcommand("solve", "minimizer, shifts, envelopes and extension");
    CLI::App* verify = app.add_subcommand("verify", "verify an input read from CSV");
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force certificate of the minimizer");
    CLI::App* pms = app.add_subcommand("pms", "C^1 pre-minimum-input sequence");
    for (CLI::App* sub : {solve, verify, oracle, pms}) common(sub);
    verify->add_option("--input", input, "CSV with columns x, v")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        RunConfig cfg = load_config(config);
        if (!out_dir.empty()) cfg.output_dir = out_dir;
        std::ostream& out = std::cout;
        if (solve->parsed()) return cmd_solve(cfg, quiet, out);
        if (verify->parsed()) return cmd_verify(cfg, input, quiet, out);
        if (oracle->parsed()) return cmd_oracle(cfg, quiet, out);
        return cmd_pms(cfg, quiet, out);
    } catch (const DegenerateScaling& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_degenerate;
    } catch (const ApproxBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_approx_budget;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const UnknownCatalogEntry& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const BadParams& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const DomainError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const GridError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
}

}  // namespace tbvp::cli
