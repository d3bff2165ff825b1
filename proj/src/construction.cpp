#include "tritangent/construction.hpp"

#include <algorithm>
#include <cmath>

#include "tritangent/errors.hpp"
#include "tritangent/numerics.hpp"

namespace tritangent {

namespace {

// Root of f(dir * x) = h for x > 0. The bracket grows geometrically from
// the abscissa the osculating parabola predicts; f is strictly increasing
// in x on each side, so the root is unique.
double solve_side(const LocalGraph& g, double h, int dir) {
  double bound = dir > 0 ? g.x_hi() : -g.x_lo();
  auto val = [&g, dir, h](double x) { return g.value(dir * x) - h; };
  auto der = [&g, dir](double x) { return dir * g.slope(dir * x); };

  double x1 = std::sqrt(2.0 * h / g.curvature_at_origin());
  x1 = std::min(x1, 0.5 * bound);
  double x0 = 0.0;
  double f1 = val(x1);
  while (f1 < 0.0) {
    x0 = x1;
    double next = std::min(2.0 * x1, bound);
    if (next == x1)
      fail(Errc::HeightOutOfRange,
           "height is not reached inside the working interval");
    x1 = next;
    f1 = val(x1);
  }
  if (f1 == 0.0) return dir * x1;

  double x = num::find_root(
      [&](double m) { return std::pair{val(m), der(m)}; }, x0, x1,
      5e-16 * (x1 + 1e-3 * g.scale()));
  for (int i = 0; i < 2; ++i) {
    double step = val(x) / der(x);
    double xn = std::clamp(x - step, x0, x1);
    if (xn == x) break;
    x = xn;
  }
  return dir * x;
}

}  // namespace

std::pair<double, double> chord_endpoints(const LocalGraph& g, double h) {
  double floor_h = 1e-14 * g.scale() * g.scale() * g.curvature_at_origin();
  if (!(h > floor_h))
    fail(Errc::HeightOutOfRange, "height below the representable floor");
  if (!(h < g.height_sup()))
    fail(Errc::HeightOutOfRange, "height exceeds the working interval");
  double t = solve_side(g, h, +1);
  double s = solve_side(g, h, -1);
  return {s, t};
}

Figure build_figure(const LocalGraph& g, double h) {
  auto [s, t] = chord_endpoints(g, h);
  double fs = g.slope(s);
  double ft = g.slope(t);
  if (!(fs < 0.0) || !(ft > 0.0))
    fail(Errc::DegenerateFigure, "endpoint tangent slope has the wrong sign");

  Figure fig;
  fig.frame = g.frame();
  fig.h = h;
  fig.s = s;
  fig.t = t;
  fig.slope_s = fs;
  fig.slope_t = ft;
  fig.p = fig.frame.origin;
  fig.a1 = fig.frame.to_world({s, h});
  fig.a2 = fig.frame.to_world({t, h});
  double x0 = (t * ft - s * fs) / (ft - fs);
  double y0 = h + ft * fs * (t - s) / (ft - fs);
  fig.b = fig.frame.to_world({x0, y0});
  fig.b1 = fig.frame.to_world({s - h / fs, 0.0});
  fig.b2 = fig.frame.to_world({t - h / ft, 0.0});
  return fig;
}

Figure build_figure(const Curve& curve, const Point2& p, double h) {
  auto g = canonical_graph(curve, p);
  return build_figure(*g, h);
}

namespace {

// Every consumer compares S against the companion areas, so the quadrature
// budget has to track the figure's own scale: a fixed absolute tolerance
// would let the deepest height levels terminate one Richardson step early.
double sector_quadrature(const LocalGraph& g, double h, double s, double t,
                         double tol) {
  double scale = std::max(h * (t - s), 1e-300);
  return num::integrate([&g, h](double x) { return h - g.value(x); }, s, t,
                        tol * scale);
}

}  // namespace

double sector_area(const LocalGraph& g, double h, double tol) {
  auto [s, t] = chord_endpoints(g, h);
  return sector_quadrature(g, h, s, t, tol);
}

Measures measure(const Figure& fig, double sector) {
  double fs = fig.slope_s, ft = fig.slope_t, h = fig.h;
  if (fs == 0.0 || ft == 0.0)
    fail(Errc::DegenerateFigure, "endpoint tangent slope vanished");
  Measures m;
  m.L = fig.t - fig.s;
  m.ell = m.L + h * (ft - fs) / (fs * ft);
  m.T = 0.5 * h * m.L;
  m.V = -fs * ft * m.L * m.L / (2.0 * (ft - fs));
  m.W = 0.5 * h * (m.L + m.ell);
  // Difference form: B's coordinates cancel badly at small h.
  m.U = m.V - m.W;
  m.alpha = (ft - fs) / (-fs * ft) * std::sqrt(h);
  m.S = sector;
  return m;
}

Measures measure_at(const LocalGraph& g, double h, double quad_tol) {
  Figure fig = build_figure(g, h);
  return measure(fig, sector_quadrature(g, h, fig.s, fig.t, quad_tol));
}

Point2 apex_for_chord(const Curve& curve, const Point2& a1, const Point2& a2) {
  double u1 = curve.param_checked(a1);
  double u2 = curve.param_checked(a2);
  if (u1 > u2) std::swap(u1, u2);
  if (!(u2 > u1))
    fail(Errc::BadParameter, "chord endpoints must be distinct");
  Vec2 d = a2 - a1;
  auto turn = [&curve, d](double u) {
    return cross(curve.tangent_at_param(u), d);
  };
  double c1 = turn(u1), c2 = turn(u2);
  if (!(c1 * c2 < 0.0))
    fail(Errc::NoApexInWindow,
         "tangent never turns parallel to the chord inside the window");
  double u = num::find_root_bisect(turn, u1, u2, 1e-15 * (u2 - u1));
  return curve.point_at(u);
}

}  // namespace tritangent
