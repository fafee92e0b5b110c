#include "tbvp/l2min.hpp"

#include "tbvp/core.hpp"

#include <cmath>

namespace tbvp {

namespace {

GridFunction mean_of(const ShiftSequence& ts) {
    return (1.0 / ts.K()) * ts.sum();
}

}  // namespace

double a1_constant(const ShiftSequence& ts, double A, double /*T*/) {
    return A - integrate(mean_of(ts));
}

L2Solution l2_minimizer(const ShiftSequence& ts, double A, double T) {
    GridFunction mean = mean_of(ts);
    const double A1 = A - integrate(mean);
    GridFunction v = mean + A1 / (2.0 * T);
    const double objective = full_norm(v, ts, 2);
    return {std::move(v), A1, std::move(mean), objective};
}

const char* to_string(MsVerdict v) {
    return v == MsVerdict::ms_exists ? "ms_exists" : "pms_only";
}

EndpointDefects endpoint_defects(const GridFunction& v, const ProblemSpec& spec) {
    const double h = v.spacing();
    const double dl = left_end_slope(v.values(), h);
    const double dr = right_end_slope(v.values(), h);
    return {std::abs(v.back() - v.front() - spec.c1()), std::abs(dr - dl - spec.c2())};
}

MsVerdict l2_ms_check(const L2Solution& sol, const ProblemSpec& spec, double tol_val,
                      double tol_der) {
    const EndpointDefects d = endpoint_defects(sol.v, spec);
    return (d.value <= tol_val && d.slope <= tol_der) ? MsVerdict::ms_exists : MsVerdict::pms_only;
}

}  // namespace tbvp
