#pragma once

#include <utility>

#include "tritangent/curve.hpp"
#include "tritangent/geometry.hpp"

namespace tritangent {

// Chord/tangent figure at (P, h): the chord A1 A2 cut by the line parallel
// to the tangent at P at height h on the convex side, the tangents at P,
// A1, A2, and their intersections B (tangents at A1 and A2), B1 (tangent at
// A1 against the base tangent), B2 (tangent at A2 against the base tangent).
// Points are world coordinates; s, t and the slopes refer to the frame.
struct Figure {
  Point2 p;
  double h = 0.0;
  Point2 a1, a2;
  Point2 b, b1, b2;
  double s = 0.0, t = 0.0;  // frame abscissas of A1, A2; s < 0 < t
  double slope_s = 0.0, slope_t = 0.0;
  Frame frame;
};

struct Measures {
  double L = 0.0;      // chord length |A1 A2|
  double ell = 0.0;    // base segment |B1 B2|
  double T = 0.0;      // area of triangle P A1 A2, equals h L / 2
  double U = 0.0;      // area of tangent triangle B B1 B2
  double V = 0.0;      // area of triangle B A1 A2
  double W = 0.0;      // area of trapezoid A1 A2 B2 B1
  double S = 0.0;      // area between chord and arc
  double alpha = 0.0;  // (L - ell) / sqrt(h)
};

// Unique abscissas s < 0 < t with f(s) = f(t) = h.
std::pair<double, double> chord_endpoints(const LocalGraph& g, double h);

Figure build_figure(const LocalGraph& g, double h);
Figure build_figure(const Curve& curve, const Point2& p, double h);

// Integral of (h - f) over [s, t]; tol is taken relative to the sector
// scale h*(t - s), so deep height levels keep their significant digits.
double sector_area(const LocalGraph& g, double h, double tol);

// Derives all measures from the figure; the sector integral is supplied.
Measures measure(const Figure& fig, double sector);

// Figure + quadrature in one call, reusing the chord solve.
Measures measure_at(const LocalGraph& g, double h, double quad_tol = 1e-10);

// Point between A1 and A2 whose tangent is parallel to the chord A1 A2.
Point2 apex_for_chord(const Curve& curve, const Point2& a1, const Point2& a2);

}  // namespace tritangent
