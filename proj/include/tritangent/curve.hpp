#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "tritangent/geometry.hpp"

namespace tritangent {

// A strictly convex arc expressed in the canonical frame of one of its
// points: the point sits at the origin, the tangent there is the x-axis,
// and the convex side faces +y, so the arc is the graph of a function f
// with f(0) = 0, f'(0) = 0 and f'' > 0 on (x_lo, x_hi).
class LocalGraph {
 public:
  virtual ~LocalGraph() = default;

  virtual double value(double x) const = 0;
  virtual double slope(double x) const = 0;
  virtual double second_derivative(double x) const = 0;
  // Third derivative of f at 0 when the model carries one.
  virtual std::optional<double> third_derivative_at_origin() const = 0;

  double x_lo() const { return x_lo_; }
  double x_hi() const { return x_hi_; }
  // Supremum of heights h for which the line y = h crosses the graph on
  // both sides of the origin inside (x_lo, x_hi). May be +infinity.
  double height_sup() const { return height_sup_; }
  double scale() const { return scale_; }
  const Frame& frame() const { return frame_; }
  double curvature_at_origin() const { return second_derivative(0.0); }

 protected:
  LocalGraph(Frame frame, double scale) : frame_(frame), scale_(scale) {}
  void set_bounds(double lo, double hi, double height_sup) {
    x_lo_ = lo;
    x_hi_ = hi;
    height_sup_ = height_sup;
  }

  Frame frame_;
  double scale_ = 1.0;
  double x_lo_ = 0.0;
  double x_hi_ = 0.0;
  double height_sup_ = 0.0;
};

class Curve;
using CurveModel = std::shared_ptr<const Curve>;

// Immutable strictly convex plane curve. Parameters index points; the
// parameter range is an open interval and all evaluators are pure.
class Curve {
 public:
  virtual ~Curve() = default;

  virtual double scale() const = 0;
  // Maximal open parameter interval (entries may be infinite).
  virtual std::pair<double, double> param_range() const = 0;
  // Finite sub-interval suited to point grids (away from domain edges).
  virtual std::pair<double, double> recommended_params() const = 0;
  virtual Point2 point_at(double u) const = 0;
  // Unit tangent in the direction of increasing parameter.
  virtual Vec2 tangent_at_param(double u) const = 0;
  virtual double curvature_at_param(double u) const = 0;
  virtual std::unique_ptr<const LocalGraph> graph_at_param(double u) const = 0;
  // Parameter of P if P lies on the curve within tol, else nullopt.
  virtual std::optional<double> param_of(const Point2& p, double tol) const = 0;

  double membership_tol() const { return 1e-9 * (1.0 + scale()); }
  // Parameter of an on-curve point; throws OffCurve otherwise.
  double param_checked(const Point2& p) const;
};

CurveModel make_parabola(double a, double b);
CurveModel make_circle(double r);
CurveModel make_ellipse(double p, double q);

using GraphFn = std::function<double(double)>;
CurveModel make_convex_graph(GraphFn f, GraphFn d1, GraphFn d2, GraphFn d3,
                             double lo, double hi);

// Rigid motion of an analytic model: rotation by angle, then translation.
CurveModel make_transformed(CurveModel base, double angle, Vec2 shift);

double curvature_at(const Curve& curve, const Point2& p);
std::unique_ptr<const LocalGraph> canonical_graph(const Curve& curve,
                                                  const Point2& p);

// n parameters evenly spread over the interior of recommended_params().
std::vector<double> interior_params(const Curve& curve, int n);

namespace detail {

// Conic q20 x^2 + q11 xy + q02 y^2 + q10 x + q01 y + q00 in some frame.
using Conic6 = std::array<double, 6>;

Conic6 rigid_transform_conic(const Conic6& q, double c, double s, Vec2 shift);

// Graph branch of a conic through the origin tangent to the x-axis:
// A x^2 + B xy + C y^2 + D y = 0 with A > 0, D < 0, solved for the branch
// with y(0) = 0, y >= 0. Closed-form evaluators, no iteration.
class ConicLocalGraph final : public LocalGraph {
 public:
  ConicLocalGraph(Frame frame, double scale, double A, double B, double C,
                  double D);

  double value(double x) const override;
  double slope(double x) const override;
  double second_derivative(double x) const override;
  std::optional<double> third_derivative_at_origin() const override;

 private:
  double a_, b_, c_, d_;
  double value_and_fy(double x, double& fy) const;
};

}  // namespace detail

}  // namespace tritangent
