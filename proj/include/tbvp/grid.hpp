#ifndef TBVP_GRID_HPP
#define TBVP_GRID_HPP

#include <Eigen/Dense>

#include <utility>

namespace tbvp {

using Vector = Eigen::VectorXd;

/// Real function sampled on a uniform grid x_i = a + i (b - a) / (n - 1).
///
/// n is odd and at least 3 so composite Simpson weights apply exactly;
/// all samples are finite. Between nodes the function is read as its
/// piecewise-linear interpolant.
class GridFunction {
public:
    GridFunction(double a, double b, Vector values);

    static GridFunction constant(double a, double b, int n, double c);

    template <class F>
    static GridFunction from(double a, double b, int n, F&& f) {
        Vector v(n);
        const double h = (b - a) / (n - 1);
        for (int i = 0; i < n; ++i) v[i] = f(i + 1 == n ? b : a + i * h);
        return GridFunction(a, b, std::move(v));
    }

    double a() const { return a_; }
    double b() const { return b_; }
    int size() const { return static_cast<int>(values_.size()); }
    double spacing() const { return (b_ - a_) / (size() - 1); }
    double node(int i) const { return i + 1 == size() ? b_ : a_ + i * spacing(); }
    Vector nodes() const;

    const Vector& values() const { return values_; }
    double operator[](int i) const { return values_[i]; }
    double front() const { return values_[0]; }
    double back() const { return values_[size() - 1]; }

    /// Same (a, b, n) as other.
    bool same_grid(const GridFunction& other) const;

    /// Piecewise-linear interpolant; DomainError outside [a, b].
    double interpolate(double x) const;

    GridFunction with_values(Vector values) const { return GridFunction(a_, b_, std::move(values)); }

private:
    double a_;
    double b_;
    Vector values_;
};

/// Throws GridError unless the two functions share a grid.
void require_same_grid(const GridFunction& f, const GridFunction& g, const char* what);

GridFunction operator+(const GridFunction& f, const GridFunction& g);
GridFunction operator-(const GridFunction& f, const GridFunction& g);
GridFunction operator+(const GridFunction& f, double c);
GridFunction operator-(const GridFunction& f, double c);
GridFunction operator*(double c, const GridFunction& f);
GridFunction abs(const GridFunction& f);

/// Composite Simpson weights for n (odd) nodes with spacing h.
Vector simpson_weights(int n, double h);

/// Composite Simpson estimate of the integral over [a, b].
double integrate(const GridFunction& g);

/// Integral of |g|^p; p in {1, 2}, otherwise UnsupportedNorm.
double lp_power(const GridFunction& g, int p);

/// (integral of |g|^p)^(1/p); p in {1, 2}.
double lp_norm(const GridFunction& g, int p);

/// Linear resampling onto n uniform nodes over the same interval.
GridFunction resample(const GridFunction& g, int n);

/// First derivative by fourth-order central differences, with one-sided
/// five-point stencils at the two outermost nodes of each end.
Vector derivative(const Vector& values, double h);
inline Vector derivative(const GridFunction& g) { return derivative(g.values(), g.spacing()); }

/// One-sided fourth-order derivative at the first node of values.
double left_end_slope(const Vector& values, double h);
/// One-sided fourth-order derivative at the last node of values.
double right_end_slope(const Vector& values, double h);

}  // namespace tbvp

#endif  // TBVP_GRID_HPP
