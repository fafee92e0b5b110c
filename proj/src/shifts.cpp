#include "tbvp/shifts.hpp"

#include "tbvp/errors.hpp"

#include <cstdlib>

namespace tbvp {

namespace {

// One application of the recurrence, in value (order 0) or slope (order 1) form.
// Rightward step j maps v(x + 2(j-1)T) to v(x + 2jT); leftward step j maps
// v(x - 2(j-1)T) to v(x - 2jT). The returned increment is what t_P gains.
double step_increment(const ProblemSpec& spec, int direction, int j, double x, int order) {
    const double T = spec.T();
    auto f0 = [&](double y) { return order == 0 ? spec.f0().d1(y) : spec.f0().d2(y); };
    auto fT = [&](double y) { return order == 0 ? spec.fT().d1(y) : spec.fT().d2(y); };
    if (direction > 0) {
        return -2.0 * fT(x + (2 * j - 1) * T) + f0(x + 2 * j * T) + f0(x + (2 * j - 2) * T);
    }
    return 2.0 * fT(x - (2 * j - 1) * T) - f0(x - (2 * j - 2) * T) - f0(x - 2 * j * T);
}

double accumulate(const ProblemSpec& spec, int period, double x, int order) {
    const int direction = period > 0 ? 1 : -1;
    double t = 0.0;
    for (int j = 1; j <= std::abs(period); ++j) t += step_increment(spec, direction, j, x, order);
    return t;
}

}  // namespace

double shift_value(const ProblemSpec& spec, int period, double x) {
    return accumulate(spec, period, x, 0);
}

double shift_slope(const ProblemSpec& spec, int period, double x) {
    return accumulate(spec, period, x, 1);
}

ShiftSequence ShiftSequence::from_samples(std::vector<GridFunction> ts) {
    if (ts.empty()) throw GridError("shift sequence needs at least one member");
    for (const auto& t : ts) require_same_grid(ts.front(), t, "shift sequence");
    if (ts.front().values().cwiseAbs().maxCoeff() != 0.0)
        throw GridError("first member of a shift sequence must vanish identically");
    ShiftSequence s;
    s.ts_ = std::move(ts);
    for (const auto& t : s.ts_) s.slopes_.push_back(derivative(t));
    return s;
}

Eigen::MatrixXd ShiftSequence::matrix() const {
    Eigen::MatrixXd m(size(), K());
    for (int i = 0; i < K(); ++i) m.col(i) = ts_[i].values();
    return m;
}

GridFunction ShiftSequence::sum() const {
    Vector s = Vector::Zero(size());
    for (const auto& t : ts_) s += t.values();
    return ts_.front().with_values(std::move(s));
}

int ShiftSequence::period(int i) const {
    if (!spec_) throw GridError("period layout requires an attached problem");
    const int K2 = spec_->K2();
    if (i == 0) return 0;
    if (i <= K2) return i;
    return -(i - K2);
}

int ShiftSequence::index_of_period(int P) const {
    if (!spec_) throw GridError("period layout requires an attached problem");
    if (P >= 0) return P;
    return spec_->K2() - P;
}

ShiftSequence ShiftSequence::on_grid(int n) const {
    if (spec_) return shift_sequence(*spec_, n);
    std::vector<GridFunction> ts;
    for (const auto& t : ts_) ts.push_back(resample(t, n));
    return from_samples(std::move(ts));
}

ShiftSequence shift_sequence(const ProblemSpec& spec, int n) {
    if (n < 3 || n % 2 == 0) throw GridError("shift sequence grid size must be odd and >= 3");
    const double T = spec.T();
    if (!spec.f0().covers(spec.window_lo(), spec.window_hi()) ||
        !spec.fT().covers(-2.0 * spec.K1() * T, 2.0 * spec.K2() * T))
        throw DomainError("f0/fT domains are too small for the shift sequence");

    ShiftSequence s;
    s.spec_ = std::make_shared<const ProblemSpec>(spec);
    const int K = spec.K();
    for (int i = 0; i < K; ++i) {
        const int P = i == 0 ? 0 : (i <= spec.K2() ? i : -(i - spec.K2()));
        s.ts_.push_back(
            GridFunction::from(-T, T, n, [&](double x) { return shift_value(spec, P, x); }));
        Vector d(n);
        const auto& g = s.ts_.back();
        for (int k = 0; k < n; ++k) d[k] = shift_slope(spec, P, g.node(k));
        s.slopes_.push_back(std::move(d));
    }
    return s;
}

}  // namespace tbvp
