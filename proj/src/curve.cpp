#include "tritangent/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tritangent/errors.hpp"
#include "tritangent/numerics.hpp"

namespace tritangent {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Real roots of qa x^2 + qb x + qc = 0, stable near qa -> 0.
void quad_roots(double qa, double qb, double qc, std::vector<double>& out) {
  if (qa == 0.0) {
    if (qb != 0.0) out.push_back(-qc / qb);
    return;
  }
  double disc = qb * qb - 4.0 * qa * qc;
  if (disc < 0.0) return;
  double sq = std::sqrt(disc);
  double q = -0.5 * (qb + std::copysign(sq, qb));
  if (q != 0.0) {
    out.push_back(q / qa);
    out.push_back(qc / q);
  } else {
    out.push_back(0.0);
  }
}

}  // namespace

double Curve::param_checked(const Point2& p) const {
  auto u = param_of(p, membership_tol());
  if (!u) fail(Errc::OffCurve, "point is not on the curve within tolerance");
  return *u;
}

namespace detail {

Conic6 rigid_transform_conic(const Conic6& q, double c, double s, Vec2 shift) {
  // Coefficients of the conic traced by Y = R X + T when Q(X) = 0.
  double s00 = q[0], s01 = 0.5 * q[1], s11 = q[2];
  double gx = 0.5 * q[3], gy = 0.5 * q[4];
  // S' = R S R^T with R = [[c,-s],[s,c]].
  double a00 = c * s00 - s * s01, a01 = c * s01 - s * s11;
  double a10 = s * s00 + c * s01, a11 = s * s01 + c * s11;
  double t00 = a00 * c - a01 * s, t01 = a00 * s + a01 * c;
  double t11 = a10 * s + a11 * c;
  double rgx = c * gx - s * gy, rgy = s * gx + c * gy;
  double gpx = rgx - (t00 * shift.x + t01 * shift.y);
  double gpy = rgy - (t01 * shift.x + t11 * shift.y);
  double c0 = shift.x * (t00 * shift.x + t01 * shift.y) +
              shift.y * (t01 * shift.x + t11 * shift.y) -
              2.0 * (rgx * shift.x + rgy * shift.y) + q[5];
  return {t00, 2.0 * t01, t11, 2.0 * gpx, 2.0 * gpy, c0};
}

ConicLocalGraph::ConicLocalGraph(Frame frame, double scale, double A, double B,
                                 double C, double D)
    : LocalGraph(frame, scale), a_(A), b_(B), c_(C), d_(D) {
  if (d_ > 0.0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
  if (!(d_ < 0.0) || !(a_ > 0.0))
    fail(Errc::NonConvex, "conic is not convex toward +y at the base point");

  // Chart edges: where the branch stops being a graph. Candidates are the
  // roots of the discriminant (B^2-4AC)x^2 + 2BD x + D^2 and of Bx + D.
  std::vector<double> roots;
  quad_roots(b_ * b_ - 4.0 * a_ * c_, 2.0 * b_ * d_, d_ * d_, roots);
  if (b_ != 0.0) roots.push_back(-d_ / b_);
  double lo = -kInf, hi = kInf;
  for (double r : roots) {
    if (r > 0.0) hi = std::min(hi, r);
    if (r < 0.0) lo = std::max(lo, r);
  }
  if (std::isfinite(hi)) hi -= 1e-9 * (std::abs(hi) + scale);
  if (std::isfinite(lo)) lo += 1e-9 * (std::abs(lo) + scale);
  if (!(lo < 0.0 && hi > 0.0))
    fail(Errc::NonConvex, "conic chart collapses at the base point");
  double sup = kInf;
  if (std::isfinite(hi)) sup = std::min(sup, value(hi));
  if (std::isfinite(lo)) sup = std::min(sup, value(lo));
  set_bounds(lo, hi, sup);
}

double ConicLocalGraph::value_and_fy(double x, double& fy) const {
  double p = b_ * x + d_;
  double qt = a_ * x * x;
  double disc = p * p - 4.0 * c_ * qt;
  if (disc < 0.0) disc = 0.0;  // round-off at the chart edge
  double y = 2.0 * qt / (-p + std::sqrt(disc));
  fy = p + 2.0 * c_ * y;
  return y;
}

double ConicLocalGraph::value(double x) const {
  double fy;
  return value_and_fy(x, fy);
}

double ConicLocalGraph::slope(double x) const {
  double fy;
  double y = value_and_fy(x, fy);
  return -(2.0 * a_ * x + b_ * y) / fy;
}

double ConicLocalGraph::second_derivative(double x) const {
  double fy;
  double y = value_and_fy(x, fy);
  double yp = -(2.0 * a_ * x + b_ * y) / fy;
  double g = 2.0 * (a_ + b_ * yp + c_ * yp * yp);
  return -g / fy;
}

std::optional<double> ConicLocalGraph::third_derivative_at_origin() const {
  return 6.0 * a_ * b_ / (d_ * d_);
}

}  // namespace detail

namespace {

// Parametric C^3 source; parameters live on an open interval.
class ParametricSource {
 public:
  virtual ~ParametricSource() = default;
  virtual Point2 position(double u) const = 0;
  virtual Vec2 derivative(double u, int order) const = 0;  // order in 1..3
  // Models built without a third-derivative callback report false and
  // must not be asked for order 3.
  virtual bool has_third_derivative() const { return true; }
};

// Canonical graph realized by inverting the chart x = <X(u) - P, ex> with a
// bracketed solve per evaluation. Used for non-conic analytic curves.
class ChartLocalGraph final : public LocalGraph {
 public:
  ChartLocalGraph(Frame frame, double scale,
                  std::shared_ptr<const ParametricSource> src, double u0,
                  double ulo, double uhi)
      : LocalGraph(frame, scale), src_(std::move(src)), u0_(u0), ulo_(ulo),
        uhi_(uhi) {
    set_bounds(xi(ulo_), xi(uhi_), std::min(eta(ulo_), eta(uhi_)));
  }

  double value(double x) const override { return eta(u_of_x(x)); }

  double slope(double x) const override {
    double u = u_of_x(x);
    Vec2 d1 = src_->derivative(u, 1);
    return dot(d1, frame_.ey) / dot(d1, frame_.ex);
  }

  double second_derivative(double x) const override {
    double u = u_of_x(x);
    Vec2 d1 = src_->derivative(u, 1);
    Vec2 d2 = src_->derivative(u, 2);
    double xp = dot(d1, frame_.ex), yp = dot(d1, frame_.ey);
    double xpp = dot(d2, frame_.ex), ypp = dot(d2, frame_.ey);
    return (ypp * xp - yp * xpp) / (xp * xp * xp);
  }

  std::optional<double> third_derivative_at_origin() const override {
    if (!src_->has_third_derivative()) return std::nullopt;
    Vec2 d1 = src_->derivative(u0_, 1);
    Vec2 d2 = src_->derivative(u0_, 2);
    Vec2 d3 = src_->derivative(u0_, 3);
    double xp = dot(d1, frame_.ex), yp = dot(d1, frame_.ey);
    double xpp = dot(d2, frame_.ex), ypp = dot(d2, frame_.ey);
    double xppp = dot(d3, frame_.ex), yppp = dot(d3, frame_.ey);
    double num = yppp * xp * xp - 3.0 * ypp * xp * xpp - yp * xp * xppp +
                 3.0 * yp * xpp * xpp;
    return num / std::pow(xp, 5);
  }

 private:
  double xi(double u) const {
    return dot(src_->position(u) - frame_.origin, frame_.ex);
  }
  double eta(double u) const {
    return dot(src_->position(u) - frame_.origin, frame_.ey);
  }

  double u_of_x(double x) const {
    if (x == 0.0) return u0_;
    double xtol = 7e-16 * (std::abs(ulo_) + std::abs(uhi_) + 1.0);
    double u = num::find_root(
        [this, x](double v) {
          return std::pair{xi(v) - x, dot(src_->derivative(v, 1), frame_.ex)};
        },
        ulo_, uhi_, xtol);
    double d = dot(src_->derivative(u, 1), frame_.ex);
    double un = u - (xi(u) - x) / d;  // one polishing step
    if (un > ulo_ && un < uhi_) u = un;
    return u;
  }

  std::shared_ptr<const ParametricSource> src_;
  double u0_, ulo_, uhi_;
};

class AnalyticCurve : public Curve,
                      public ParametricSource,
                      public std::enable_shared_from_this<AnalyticCurve> {
 public:
  Point2 point_at(double u) const override { return position(u); }

  Vec2 tangent_at_param(double u) const override {
    Vec2 v = derivative(u, 1);
    double n = norm(v);
    return {v.x / n, v.y / n};
  }

  double curvature_at_param(double u) const override {
    Vec2 d1 = derivative(u, 1);
    Vec2 d2 = derivative(u, 2);
    double n = norm(d1);
    double k = cross(d1, d2) / (n * n * n);
    if (!(k > 0.0)) fail(Errc::NonConvex, "curvature is not positive here");
    return k;
  }

  std::unique_ptr<const LocalGraph> graph_at_param(double u) const override {
    Frame frame = frame_from_tangent(position(u), derivative(u, 1));
    if (auto c6 = conic()) return conic_graph(*c6, frame);
    return chart_graph(frame, u);
  }

  virtual std::optional<detail::Conic6> conic() const { return std::nullopt; }

 protected:
  std::unique_ptr<const LocalGraph> conic_graph(const detail::Conic6& world,
                                                const Frame& frame) const {
    // Frame coordinates z satisfy X = origin + [ex ey] z, so the frame conic
    // is the world conic pushed through the inverse motion.
    double c = frame.ex.x, s = -frame.ex.y;
    Vec2 shift{-(c * frame.origin.x - s * frame.origin.y),
               -(s * frame.origin.x + c * frame.origin.y)};
    auto q = detail::rigid_transform_conic(world, c, s, shift);
    double mag = 0.0;
    for (double v : q) mag = std::max(mag, std::abs(v));
    double sc = scale();
    // Tangency forces the constant and x-linear terms to vanish; anything
    // beyond round-off means the base point was not on the curve.
    if (std::abs(q[5]) > 1e-7 * mag * (1.0 + sc * sc) ||
        std::abs(q[3]) > 1e-7 * mag * (1.0 + sc))
      fail(Errc::OffCurve, "tangent frame is not incident to the conic");
    return std::make_unique<detail::ConicLocalGraph>(frame, sc, q[0], q[1],
                                                     q[2], q[4]);
  }

  std::unique_ptr<const LocalGraph> chart_graph(const Frame& frame,
                                                double u0) const {
    auto [plo, phi] = param_range();
    double span = phi - plo;
    auto edge = [this, &frame, u0, span](double target) {
      // March toward the domain edge until the chart direction <X'(u), ex>
      // turns; bisect onto the turning point and stay just inside it.
      auto dxi = [this, &frame](double u) {
        return dot(derivative(u, 1), frame.ex);
      };
      double inset = 1e-9 * span;
      target += (target > u0) ? -inset : inset;
      double prev = u0;
      double dprev = dxi(prev);
      const int steps = 64;
      for (int k = 1; k <= steps; ++k) {
        double u = u0 + (target - u0) * (static_cast<double>(k) / steps);
        double d = dxi(u);
        if ((d > 0.0) != (dprev > 0.0)) {
          double a = prev, b = u;
          for (int i = 0; i < 80; ++i) {
            double m = 0.5 * (a + b);
            if ((dxi(m) > 0.0) == (dprev > 0.0))
              a = m;
            else
              b = m;
          }
          return a;
        }
        prev = u;
        dprev = d;
      }
      return target;
    };
    double ulo = edge(plo);
    double uhi = edge(phi);
    return std::make_unique<ChartLocalGraph>(frame, scale(),
                                             shared_from_this(), u0, ulo, uhi);
  }
};

class ParabolaCurve final : public AnalyticCurve {
 public:
  ParabolaCurve(double a, double b) : a_(a), b_(b) {
    if (!(b > 0.0) || !std::isfinite(b) || !std::isfinite(a))
      fail(Errc::BadParameter, "parabola needs finite a and b > 0");
  }

  double scale() const override { return b_; }

  std::pair<double, double> param_range() const override {
    if (a_ > 0.0) return {-b_ / (2.0 * a_), kInf};
    if (a_ < 0.0) return {-kInf, -b_ / (2.0 * a_)};
    return {-kInf, kInf};
  }

  std::pair<double, double> recommended_params() const override {
    double lo = -1.5 * b_, hi = 1.5 * b_;
    if (a_ > 0.0) lo = std::max(lo, -0.3 * b_ / a_);
    if (a_ < 0.0) hi = std::min(hi, 0.3 * b_ / -a_);
    return {lo, hi};
  }

  Point2 point_at(double u) const override { return {u, f0(u)}; }
  Point2 position(double u) const override { return {u, f0(u)}; }

  Vec2 derivative(double u, int order) const override {
    double r = root(u);
    switch (order) {
      case 1: return {1.0, 2.0 * b_ * u / (r * (r + b_))};
      case 2: return {0.0, b_ * b_ / (r * r * r)};
      case 3: return {0.0, -3.0 * a_ * b_ * b_ * b_ / std::pow(r, 5)};
    }
    fail(Errc::BadParameter, "derivative order must be 1..3");
  }

  std::optional<detail::Conic6> conic() const override {
    return detail::Conic6{1.0, -2.0 * a_, a_ * a_, 0.0, -2.0 * b_, 0.0};
  }

  std::optional<double> param_of(const Point2& p, double tol) const override {
    auto [lo, hi] = param_range();
    if (!(p.x > lo && p.x < hi)) return std::nullopt;
    double dy = p.y - f0(p.x);
    double sl = derivative(p.x, 1).y;
    if (std::abs(dy) / std::sqrt(1.0 + sl * sl) > tol) return std::nullopt;
    return p.x;
  }

 private:
  double root(double u) const {
    double r2 = b_ * b_ + 2.0 * a_ * b_ * u;
    if (!(r2 > 0.0)) fail(Errc::BadParameter, "parameter outside the branch");
    return std::sqrt(r2);
  }
  double f0(double u) const { return u * u / (a_ * u + b_ + root(u)); }

  double a_, b_;
};

class CircleCurve final : public AnalyticCurve {
 public:
  explicit CircleCurve(double r) : r_(r) {
    if (!(r > 0.0) || !std::isfinite(r))
      fail(Errc::BadParameter, "circle needs r > 0");
  }

  double scale() const override { return r_; }
  std::pair<double, double> param_range() const override {
    return {-std::acos(-1.0), std::acos(-1.0)};
  }
  std::pair<double, double> recommended_params() const override {
    return {-0.75 * std::acos(-1.0), 0.75 * std::acos(-1.0)};
  }

  Point2 position(double u) const override {
    return {r_ * std::sin(u), r_ * (1.0 - std::cos(u))};
  }

  Vec2 derivative(double u, int order) const override {
    double c = r_ * std::cos(u), s = r_ * std::sin(u);
    switch (order) {
      case 1: return {c, s};
      case 2: return {-s, c};
      case 3: return {-c, -s};
    }
    fail(Errc::BadParameter, "derivative order must be 1..3");
  }

  std::optional<detail::Conic6> conic() const override {
    return detail::Conic6{1.0, 0.0, 1.0, 0.0, -2.0 * r_, 0.0};
  }

  std::optional<double> param_of(const Point2& p, double tol) const override {
    double u = std::atan2(p.x, r_ - p.y);
    if (dist(position(u), p) > tol) return std::nullopt;
    return u;
  }

 private:
  double r_;
};

class EllipseCurve final : public AnalyticCurve {
 public:
  EllipseCurve(double p, double q) : p_(p), q_(q) {
    if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q))
      fail(Errc::BadParameter, "ellipse needs p > 0 and q > 0");
  }

  double scale() const override { return std::max(p_, q_); }
  std::pair<double, double> param_range() const override {
    return {-std::acos(-1.0), std::acos(-1.0)};
  }
  std::pair<double, double> recommended_params() const override {
    return {-0.75 * std::acos(-1.0), 0.75 * std::acos(-1.0)};
  }

  Point2 position(double u) const override {
    return {q_ * std::sin(u), p_ * (1.0 - std::cos(u))};
  }

  Vec2 derivative(double u, int order) const override {
    double c = std::cos(u), s = std::sin(u);
    switch (order) {
      case 1: return {q_ * c, p_ * s};
      case 2: return {-q_ * s, p_ * c};
      case 3: return {-q_ * c, -p_ * s};
    }
    fail(Errc::BadParameter, "derivative order must be 1..3");
  }

  std::optional<detail::Conic6> conic() const override {
    return detail::Conic6{p_ * p_, 0.0, q_ * q_, 0.0, -2.0 * q_ * q_ * p_,
                          0.0};
  }

  std::optional<double> param_of(const Point2& p, double tol) const override {
    double u = std::atan2(p.x / q_, 1.0 - p.y / p_);
    if (dist(position(u), p) > tol) return std::nullopt;
    return u;
  }

 private:
  double p_, q_;
};

class GraphCurve final : public AnalyticCurve {
 public:
  GraphCurve(GraphFn f, GraphFn d1, GraphFn d2, GraphFn d3, double lo,
             double hi)
      : f_{std::move(f), std::move(d1), std::move(d2), std::move(d3)},
        lo_(lo), hi_(hi) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
      fail(Errc::BadParameter, "graph domain must be a finite open interval");
    double m = 0.0;
    for (int i = 0; i <= 100; ++i) {
      double x = lo_ + (hi_ - lo_) * (i + 0.5) / 101.0;
      if (!(f_[2](x) > 0.0))
        fail(Errc::NonConvex, "second derivative is not positive on domain");
      m = std::max(m, std::abs(f_[0](x)));
    }
    scale_ = std::max(hi_ - lo_, m);
  }

  double scale() const override { return scale_; }
  std::pair<double, double> param_range() const override { return {lo_, hi_}; }
  std::pair<double, double> recommended_params() const override {
    double pad = 0.05 * (hi_ - lo_);
    return {lo_ + pad, hi_ - pad};
  }

  Point2 position(double u) const override { return {u, f_[0](u)}; }

  Vec2 derivative(double u, int order) const override {
    switch (order) {
      case 1: return {1.0, f_[1](u)};
      case 2: return {0.0, f_[2](u)};
      case 3: return {0.0, f_[3](u)};
    }
    fail(Errc::BadParameter, "derivative order must be 1..3");
  }

  std::optional<double> param_of(const Point2& p, double tol) const override {
    if (!(p.x > lo_ && p.x < hi_)) return std::nullopt;
    double dy = p.y - f_[0](p.x);
    double sl = f_[1](p.x);
    if (std::abs(dy) / std::sqrt(1.0 + sl * sl) > tol) return std::nullopt;
    return p.x;
  }

  bool has_third_derivative() const override {
    return static_cast<bool>(f_[3]);
  }

 private:
  std::array<GraphFn, 4> f_;
  double lo_, hi_;
  double scale_ = 1.0;
};

class TransformedCurve final : public AnalyticCurve {
 public:
  TransformedCurve(std::shared_ptr<const AnalyticCurve> inner, double angle,
                   Vec2 shift)
      : inner_(std::move(inner)), c_(std::cos(angle)), s_(std::sin(angle)),
        shift_(shift) {}

  double scale() const override { return inner_->scale(); }
  std::pair<double, double> param_range() const override {
    return inner_->param_range();
  }
  std::pair<double, double> recommended_params() const override {
    return inner_->recommended_params();
  }

  Point2 position(double u) const override {
    return rot(inner_->position(u)) + shift_;
  }

  Vec2 derivative(double u, int order) const override {
    return rot(inner_->derivative(u, order));
  }

  bool has_third_derivative() const override {
    return inner_->has_third_derivative();
  }

  std::optional<detail::Conic6> conic() const override {
    auto inner = inner_->conic();
    if (!inner) return std::nullopt;
    return detail::rigid_transform_conic(*inner, c_, s_, shift_);
  }

  std::optional<double> param_of(const Point2& p, double tol) const override {
    Vec2 d = p - shift_;
    return inner_->param_of({c_ * d.x + s_ * d.y, -s_ * d.x + c_ * d.y}, tol);
  }

 private:
  Vec2 rot(Vec2 v) const { return {c_ * v.x - s_ * v.y, s_ * v.x + c_ * v.y}; }

  std::shared_ptr<const AnalyticCurve> inner_;
  double c_, s_;
  Vec2 shift_;
};

}  // namespace

CurveModel make_parabola(double a, double b) {
  return std::make_shared<ParabolaCurve>(a, b);
}

CurveModel make_circle(double r) { return std::make_shared<CircleCurve>(r); }

CurveModel make_ellipse(double p, double q) {
  return std::make_shared<EllipseCurve>(p, q);
}

CurveModel make_convex_graph(GraphFn f, GraphFn d1, GraphFn d2, GraphFn d3,
                             double lo, double hi) {
  return std::make_shared<GraphCurve>(std::move(f), std::move(d1),
                                      std::move(d2), std::move(d3), lo, hi);
}

CurveModel make_transformed(CurveModel base, double angle, Vec2 shift) {
  auto analytic = std::dynamic_pointer_cast<const AnalyticCurve>(base);
  if (!analytic)
    fail(Errc::BadParameter, "rigid transform requires an analytic model");
  return std::make_shared<TransformedCurve>(std::move(analytic), angle, shift);
}

double curvature_at(const Curve& curve, const Point2& p) {
  return curve.curvature_at_param(curve.param_checked(p));
}

std::unique_ptr<const LocalGraph> canonical_graph(const Curve& curve,
                                                  const Point2& p) {
  return curve.graph_at_param(curve.param_checked(p));
}

std::vector<double> interior_params(const Curve& curve, int n) {
  if (n < 1) fail(Errc::BadParameter, "need at least one grid point");
  auto [lo, hi] = curve.recommended_params();
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = lo + (hi - lo) * (i + 1.0) / (n + 1.0);
  return out;
}

}  // namespace tritangent
