#include "tritangent/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tritangent/errors.hpp"

namespace tritangent::num {

namespace {

struct QuadState {
  const std::function<double(double)>& f;
  long evals_left;
};

double quad_eval(QuadState& q, double x) {
  if (--q.evals_left < 0)
    fail(Errc::ToleranceNotMet, "quadrature evaluation budget exhausted");
  return q.f(x);
}

double simpson_recurse(QuadState& q, double a, double m, double b, double fa,
                       double fm, double fb, double whole, double tol,
                       int depth) {
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = quad_eval(q, lm);
  double frm = quad_eval(q, rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  // 15 = 2^4 - 1: Richardson factor for the composite rule's h^4 error.
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0)
    fail(Errc::ToleranceNotMet, "quadrature recursion depth exhausted");
  return simpson_recurse(q, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(q, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol, long budget) {
  if (!(tol > 0.0)) fail(Errc::BadParameter, "quadrature tolerance must be > 0");
  if (a == b) return 0.0;
  QuadState q{f, budget};
  double m = 0.5 * (a + b);
  double fa = quad_eval(q, a);
  double fm = quad_eval(q, m);
  double fb = quad_eval(q, b);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_recurse(q, a, m, b, fa, fm, fb, whole, tol, 64);
}

double find_root(const std::function<std::pair<double, double>(double)>& fdf,
                 double lo, double hi, double xtol) {
  if (!(xtol > 0.0)) fail(Errc::BadParameter, "root tolerance must be > 0");
  auto [flo, dlo] = fdf(lo);
  if (flo == 0.0) return lo;
  auto [fhi, dhi] = fdf(hi);
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    fail(Errc::BadParameter, "root not bracketed");
  // Orient so f(xl) < 0 < f(xh); xl, xh need not stay ordered.
  double xl = lo, xh = hi;
  if (flo > 0.0) std::swap(xl, xh);
  double x = 0.5 * (lo + hi);
  double dxold = std::abs(hi - lo);
  double dx = dxold;
  auto [fv, dv] = fdf(x);
  for (int it = 0; it < 200; ++it) {
    bool newton_ok =
        ((x - xh) * dv - fv) * ((x - xl) * dv - fv) < 0.0 &&
        std::abs(2.0 * fv) <= std::abs(dxold * dv);
    if (newton_ok) {
      dxold = dx;
      dx = fv / dv;
      double prev = x;
      x -= dx;
      if (x == prev) return x;
    } else {
      dxold = dx;
      dx = 0.5 * (xh - xl);
      x = xl + dx;
      if (x == xl) return x;
    }
    if (std::abs(dx) < xtol) return x;
    std::tie(fv, dv) = fdf(x);
    if (fv < 0.0)
      xl = x;
    else
      xh = x;
  }
  fail(Errc::ToleranceNotMet, "root iteration did not converge");
}

double find_root_bisect(const std::function<double(double)>& f, double lo,
                        double hi, double xtol) {
  return find_root([&f](double x) { return std::pair{f(x), 0.0}; }, lo, hi,
                   xtol);
}

std::vector<double> symmetric_eigenvalues(std::vector<double> m, int n) {
  auto at = [&m, n](int i, int j) -> double& { return m[i * n + j]; };
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    if (off < 1e-300) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (apq == 0.0) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = std::copysign(1.0, theta) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

namespace {

// Cholesky solve of the SPD system n x = r, in place. Returns false when a
// pivot is not strictly positive.
bool cholesky_solve(std::vector<double>& nmat, std::vector<double>& r, int k) {
  auto at = [&nmat, k](int i, int j) -> double& { return nmat[i * k + j]; };
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j <= i; ++j) {
      double sum = at(i, j);
      for (int p = 0; p < j; ++p) sum -= at(i, p) * at(j, p);
      if (i == j) {
        if (!(sum > 0.0)) return false;
        at(i, i) = std::sqrt(sum);
      } else {
        at(i, j) = sum / at(j, j);
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    double sum = r[i];
    for (int p = 0; p < i; ++p) sum -= at(i, p) * r[p];
    r[i] = sum / at(i, i);
  }
  for (int i = k - 1; i >= 0; --i) {
    double sum = r[i];
    for (int p = i + 1; p < k; ++p) sum -= at(p, i) * r[p];
    r[i] = sum / at(i, i);
  }
  return true;
}

}  // namespace

LeastSquares fit_least_squares(const std::vector<std::vector<double>>& columns,
                               const std::vector<double>& rhs,
                               const std::vector<double>* weights) {
  int k = static_cast<int>(columns.size());
  if (k == 0) fail(Errc::BadParameter, "least squares needs a basis");
  size_t m = rhs.size();
  for (const auto& col : columns)
    if (col.size() != m)
      fail(Errc::BadParameter, "basis column length mismatch");
  if (weights && weights->size() != m)
    fail(Errc::BadParameter, "weight vector length mismatch");
  if (m < static_cast<size_t>(k))
    fail(Errc::BadParameter, "fewer samples than basis functions");

  std::vector<double> scale(k, 0.0);
  for (int j = 0; j < k; ++j) {
    for (double v : columns[j]) scale[j] = std::max(scale[j], std::abs(v));
    if (scale[j] == 0.0) scale[j] = 1.0;
  }

  std::vector<double> nmat(static_cast<size_t>(k) * k, 0.0);
  std::vector<double> nrhs(k, 0.0);
  for (size_t r = 0; r < m; ++r) {
    double w = weights ? (*weights)[r] : 1.0;
    for (int i = 0; i < k; ++i) {
      double ai = columns[i][r] / scale[i];
      nrhs[i] += w * ai * rhs[r];
      for (int j = i; j < k; ++j)
        nmat[i * k + j] += w * ai * (columns[j][r] / scale[j]);
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < i; ++j) nmat[i * k + j] = nmat[j * k + i];

  auto ev = symmetric_eigenvalues(nmat, k);
  double cond = (ev.front() > 0.0) ? ev.back() / ev.front()
                                   : std::numeric_limits<double>::infinity();
  if (!(cond <= 1e12))
    fail(Errc::IllConditioned, "normal matrix condition exceeds 1e12");

  std::vector<double> sol = nrhs;
  if (!cholesky_solve(nmat, sol, k))
    fail(Errc::IllConditioned, "normal matrix not positive definite");

  LeastSquares out;
  out.coeff.resize(k);
  for (int j = 0; j < k; ++j) out.coeff[j] = sol[j] / scale[j];
  out.condition = cond;
  double ss = 0.0;
  for (size_t r = 0; r < m; ++r) {
    double pred = 0.0;
    for (int j = 0; j < k; ++j) pred += out.coeff[j] * columns[j][r];
    double res = pred - rhs[r];
    out.max_residual = std::max(out.max_residual, std::abs(res));
    ss += res * res;
  }
  out.rms_residual = std::sqrt(ss / static_cast<double>(m));
  return out;
}

}  // namespace tritangent::num
