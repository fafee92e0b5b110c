#ifndef TBVP_QUADRATURE_HPP
#define TBVP_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace tbvp {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};

/// Golub-Welsch: nodes and weights from the Jacobi matrix eigen-decomposition.
GaussRule gauss_legendre(int points);

/// Accepted quadrature node with the inner function value found there.
struct QuadNode {
    double x;
    double w;
    double inner;
};

/// Composite adaptive Gauss-Legendre (8 points) of outer(inner(x)) over
/// consecutive breakpoints. A panel is accepted when its estimate agrees with
/// the sum over its two halves to tol * (panel length / total length).
/// Accepted nodes are appended to `used` when given.
double integrate_adaptive(const std::function<double(double)>& inner,
                          const std::function<double(double)>& outer,
                          const std::vector<double>& breaks, double tol,
                          std::vector<QuadNode>* used = nullptr, int max_depth = 40);

double integrate_adaptive(const std::function<double(double)>& f,
                          const std::vector<double>& breaks, double tol);

/// Integral of |inner|^p.
double lp_power_adaptive(const std::function<double(double)>& inner, int p,
                         const std::vector<double>& breaks, double tol,
                         std::vector<QuadNode>* used = nullptr);

/// Grid nodes of [a, b] (n of them) plus the geometric points a + L 2^-k and
/// b - L 2^-k for k = 1 .. depth, sorted and deduplicated.
std::vector<double> graded_breakpoints(double a, double b, int n, int depth = 48);

}  // namespace tbvp

#endif  // TBVP_QUADRATURE_HPP
