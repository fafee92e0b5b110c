#ifndef TBVP_SHIFTS_HPP
#define TBVP_SHIFTS_HPP

#include "tbvp/grid.hpp"
#include "tbvp/problem.hpp"

#include <memory>
#include <vector>

namespace tbvp {

/// Offset t_P(x) = v(x) - v(x + 2 P T) imposed by the recurrence
///   v(y + T) = v(y - T) + 2 fT'(y) - f0'(y + T) - f0'(y - T)
/// for x in [-T, T], accumulated step by step over |P| periods.
double shift_value(const ProblemSpec& spec, int period, double x);

/// d/dx of shift_value, accumulated from second derivatives of f0 and fT.
double shift_slope(const ProblemSpec& spec, int period, double x);

/// The K functions t_1 .. t_K on the decision interval [-T, T] that turn the
/// window L^p norm of an input into a sum of |t_i - v|^p terms.
///
/// Index layout (0-based): 0 is t_1 = 0; 1 .. K2 are the rightward periods
/// P = 1 .. K2; K2 + 1 .. K - 1 are the leftward periods P = -1 .. -K1.
class ShiftSequence {
public:
    /// Arbitrary family on a shared grid; the first member must vanish.
    static ShiftSequence from_samples(std::vector<GridFunction> ts);

    int K() const { return static_cast<int>(ts_.size()); }
    int size() const { return ts_.front().size(); }
    double a() const { return ts_.front().a(); }
    double b() const { return ts_.front().b(); }
    double spacing() const { return ts_.front().spacing(); }

    const GridFunction& operator[](int i) const { return ts_[i]; }
    const std::vector<GridFunction>& members() const { return ts_; }
    /// Derivative samples of member i (analytic when built from a problem).
    const Vector& slopes(int i) const { return slopes_[i]; }

    /// n x K matrix, column i holding t_{i+1}.
    Eigen::MatrixXd matrix() const;
    /// Pointwise sum of all members.
    GridFunction sum() const;

    /// Problem this sequence was derived from, or nullptr for synthetic families.
    const ProblemSpec* spec() const { return spec_.get(); }
    std::shared_ptr<const ProblemSpec> shared_spec() const { return spec_; }

    /// Period offset P of member i; only meaningful with a problem attached.
    int period(int i) const;
    int index_of_period(int period) const;

    /// Same family on n nodes: recomputed exactly when a problem is attached,
    /// linearly resampled otherwise.
    ShiftSequence on_grid(int n) const;

    bool same_grid(const GridFunction& g) const { return ts_.front().same_grid(g); }

private:
    friend ShiftSequence shift_sequence(const ProblemSpec& spec, int n);
    ShiftSequence() = default;

    std::shared_ptr<const ProblemSpec> spec_;
    std::vector<GridFunction> ts_;
    std::vector<Vector> slopes_;
};

/// Shift sequence of a problem on n nodes of [-T, T].
ShiftSequence shift_sequence(const ProblemSpec& spec, int n);

}  // namespace tbvp

#endif  // TBVP_SHIFTS_HPP
