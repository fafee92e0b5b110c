#ifndef TBVP_CLI_HPP
#define TBVP_CLI_HPP

#include "tbvp/errors.hpp"
#include "tbvp/grid.hpp"
#include "tbvp/problem.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tbvp::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_error = 1,
    exit_config = 2,
    exit_degenerate = 3,
    exit_infeasible = 4,
    exit_oracle_gap = 5,
    exit_approx_budget = 6,
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Either a catalog entry name(p1, p2, ...) or file(path.csv).
struct FunctionSpec {
    std::string name;
    std::vector<double> params;
    std::string file;  ///< non-empty for sampled functions
};

struct RunConfig {
    FunctionSpec f0;
    FunctionSpec fT;
    double T = 1.0;
    int K1 = 1;
    int K2 = 1;
    int n = 2049;
    int norm = 1;
    std::vector<double> eps_schedule{1e-1, 1e-2, 1e-3};
    std::uint64_t seed = 0;
    std::string output_dir = ".";
    int oracle_n = 257;
    int oracle_max_iter = 0;  ///< 0: oracle default
    int n_t = 33;             ///< time levels sampled by verify
};

FunctionSpec parse_function(const std::string& text);

/// `key = value` lines, `#` comments. ConfigError names the offending key.
RunConfig parse_config(std::istream& in, const std::string& base_dir = ".");
RunConfig load_config(const std::string& path);

ProblemSpec build_problem(const RunConfig& cfg);

// CSV helpers.

/// Shortest decimal that reads back to the same double.
std::string format_number(double x);

/// Writes header then rows of columns (all of equal length).
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<Vector>& columns);

/// Numeric table; a non-numeric first line is taken as the header.
/// ConfigError on ragged or unparsable rows.
std::vector<std::vector<double>> read_csv(const std::string& path,
                                          std::vector<std::string>* header = nullptr);

/// Input column v of an (x, v) file, checked to sit on a uniform odd grid of [-T, T].
GridFunction read_input(const std::string& path, double T);

int cmd_solve(const RunConfig& cfg, bool quiet, std::ostream& out);
int cmd_verify(const RunConfig& cfg, const std::string& input_csv, bool quiet, std::ostream& out);
int cmd_oracle(const RunConfig& cfg, bool quiet, std::ostream& out);
int cmd_pms(const RunConfig& cfg, bool quiet, std::ostream& out);

/// Argument parsing and exception-to-exit-code mapping for the tbvp tool.
int run(int argc, char** argv);

}  // namespace tbvp::cli

#endif  // TBVP_CLI_HPP
