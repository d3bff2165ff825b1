#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace tritangent::num {

// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
// Throws ToleranceNotMet when the evaluation budget or recursion depth is
// exhausted before the interval estimates settle.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol, long budget = 1'000'000);

// Safeguarded Newton on a bracket [lo, hi]; fdf returns (value, derivative).
// Every step that would leave the bracket, or that shrinks it slower than
// bisection would, is replaced by a bisection step, so convergence is
// guaranteed for any continuous sign-changing f.
double find_root(const std::function<std::pair<double, double>(double)>& fdf,
                 double lo, double hi, double xtol);

// Bisection-only variant for functions without a usable derivative.
double find_root_bisect(const std::function<double(double)>& f, double lo,
                        double hi, double xtol);

struct LeastSquares {
  std::vector<double> coeff;
  double condition = 0.0;     // spectral condition of the scaled normal matrix
  double max_residual = 0.0;  // max |Ax - b| over rows, unweighted
  double rms_residual = 0.0;
};

// Weighted linear least squares via column-scaled normal equations and
// Cholesky. columns[j] is the j-th basis column sampled at all observation
// points. Throws IllConditioned when the scaled normal matrix has spectral
// condition above 1e12.
LeastSquares fit_least_squares(const std::vector<std::vector<double>>& columns,
                               const std::vector<double>& rhs,
                               const std::vector<double>* weights = nullptr);

// Eigenvalues of a small dense symmetric matrix (row-major n*n), ascending.
// Cyclic Jacobi; intended for n <= 8.
std::vector<double> symmetric_eigenvalues(std::vector<double> m, int n);

}  // namespace tritangent::num
