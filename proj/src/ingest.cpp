#include "tritangent/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <string_view>

#include "tritangent/errors.hpp"
#include "tritangent/numerics.hpp"

namespace tritangent {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

bool parse_real(std::string_view tok, double& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size() &&
         std::isfinite(out);
}

}  // namespace

PointCloud load_points(std::istream& in, const std::string& source) {
  PointCloud cloud;
  cloud.source = source;
  std::string line;
  int lineno = 0;
  bool header_grace = true;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv = trim(line);
    if (sv.empty()) continue;
    size_t comma = sv.find(',');
    auto bad = [&](size_t col) {
      if (header_grace && cloud.points.empty()) return true;  // header line
      std::ostringstream msg;
      msg << source << (source.empty() ? "" : ": ") << "line " << lineno
          << ", column " << col + 1 << ": malformed x,y entry";
      fail(Errc::ParseError, msg.str());
    };
    double x = 0.0, y = 0.0;
    if (comma == std::string_view::npos || sv.find(',', comma + 1) !=
                                               std::string_view::npos) {
      bad(comma == std::string_view::npos ? 0 : comma + 1);
      header_grace = false;
      continue;
    }
    if (!parse_real(trim(sv.substr(0, comma)), x)) {
      bad(0);
      header_grace = false;
      continue;
    }
    if (!parse_real(trim(sv.substr(comma + 1)), y)) {
      bad(comma + 1);
      header_grace = false;
      continue;
    }
    header_grace = false;
    if (!cloud.points.empty() && cloud.points.back().x == x &&
        cloud.points.back().y == y) {
      std::ostringstream msg;
      msg << source << (source.empty() ? "" : ": ") << "line " << lineno
          << ": duplicate of the previous point";
      fail(Errc::ParseError, msg.str());
    }
    cloud.points.push_back({x, y});
  }
  if (cloud.points.size() < 7)
    fail(Errc::TooFewPoints, "need at least 7 points");
  return cloud;
}

PointCloud load_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, path + ": cannot open file");
  return load_points(in, path);
}

namespace {

// Quartic graph in its fitted tangent frame; constant and linear terms are
// removed by the frame iteration.
class PolyLocalGraph final : public LocalGraph {
 public:
  PolyLocalGraph(Frame frame, double scale, double c2, double c3, double c4,
                 double xlo, double xhi)
      : LocalGraph(frame, scale), c2_(c2), c3_(c3), c4_(c4) {
    set_bounds(xlo, xhi, std::min(value(xlo), value(xhi)));
  }

  double value(double x) const override {
    return x * x * (c2_ + x * (c3_ + x * c4_));
  }
  double slope(double x) const override {
    return x * (2.0 * c2_ + x * (3.0 * c3_ + 4.0 * c4_ * x));
  }
  double second_derivative(double x) const override {
    return 2.0 * c2_ + x * (6.0 * c3_ + 12.0 * c4_ * x);
  }
  std::optional<double> third_derivative_at_origin() const override {
    return 6.0 * c3_;
  }

 private:
  double c2_, c3_, c4_;
};

struct CenterFit {
  Frame frame;
  double c2 = 0.0, c3 = 0.0, c4 = 0.0;
  double rms = 0.0;  // weighted window residual
  double xlo = 0.0, xhi = 0.0;
};

class SampledCurveImpl final : public SampledCurve {
 public:
  SampledCurveImpl(const PointCloud& cloud, int w) : w_(w) {
    if (w < 3) fail(Errc::WindowTooSmall, "window half-width must be >= 3");
    pts_ = cloud.points;
    size_t n = pts_.size();
    if (n < 7) fail(Errc::TooFewPoints, "need at least 7 points");
    if (static_cast<size_t>(2 * w + 1) > n)
      fail(Errc::WindowTooLarge, "window exceeds the cloud size");

    orient();

    Point2 lo = pts_.front(), hi = pts_.front();
    for (const auto& p : pts_) {
      lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    scale_ = std::max(dist(lo, hi), 1e-12);

    fits_.resize(n);
    std::vector<double> rmss;
    for (size_t i = w_; i + w_ < n; ++i) {
      fits_[i] = fit_center(i);
      rmss.push_back(fits_[i].rms);
    }
    std::sort(rmss.begin(), rmss.end());
    noise_ = rmss[rmss.size() / 2];
  }

  double noise_estimate() const override { return noise_; }
  int window_halfwidth() const override { return w_; }
  std::size_t sample_count() const override { return pts_.size(); }

  double scale() const override { return scale_; }

  std::pair<double, double> param_range() const override {
    return {static_cast<double>(w_), static_cast<double>(pts_.size() - 1 - w_)};
  }
  std::pair<double, double> recommended_params() const override {
    auto [lo, hi] = param_range();
    double pad = 0.05 * (hi - lo);
    return {lo + pad, hi - pad};
  }

  Point2 point_at(double u) const override {
    return fits_[index_of(u)].frame.origin;
  }
  Vec2 tangent_at_param(double u) const override {
    return fits_[index_of(u)].frame.ex;
  }
  double curvature_at_param(double u) const override {
    return 2.0 * fits_[index_of(u)].c2;
  }

  std::unique_ptr<const LocalGraph> graph_at_param(double u) const override {
    const CenterFit& f = fits_[index_of(u)];
    return std::make_unique<PolyLocalGraph>(f.frame, scale_, f.c2, f.c3,
                                            f.c4, f.xlo, f.xhi);
  }

  std::optional<double> param_of(const Point2& p, double tol) const override {
    size_t n = pts_.size();
    size_t best = w_;
    double bestd = std::numeric_limits<double>::infinity();
    for (size_t i = w_; i + w_ < n; ++i) {
      double d = dist(fits_[i].frame.origin, p);
      if (d < bestd) {
        bestd = d;
        best = i;
      }
    }
    if (bestd > std::max(tol, 4.0 * noise_ + 1e-12 * scale_))
      return std::nullopt;
    return static_cast<double>(best);
  }

 private:
  size_t index_of(double u) const {
    auto [lo, hi] = param_range();
    double c = std::clamp(std::round(u), lo, hi);
    return static_cast<size_t>(c);
  }

  // A convex arc turns one way; flip the stored order so the convex side
  // is to the left of traversal (+y of every fitted frame).
  void orient() {
    int sign = 0;
    for (size_t i = 0; i + 2 < pts_.size(); ++i) {
      double cr = cross(pts_[i + 1] - pts_[i], pts_[i + 2] - pts_[i + 1]);
      int s = (cr > 0.0) ? 1 : (cr < 0.0 ? -1 : 0);
      if (s == 0)
        fail(Errc::NotConvex, "three consecutive samples are collinear");
      if (sign == 0) sign = s;
      if (s != sign)
        fail(Errc::NotConvex, "turning direction flips along the cloud");
    }
    if (sign < 0) std::reverse(pts_.begin(), pts_.end());
  }

  CenterFit fit_center(size_t i) const {
    Frame frame;
    frame.origin = pts_[i];
    frame = frame_from_tangent(frame.origin, pts_[i + 1] - pts_[i - 1]);

    size_t lo = i - w_, hi = i + w_;
    std::array<double, 5> c{};
    double span = 0.0;
    for (int iter = 0; iter < 6; ++iter) {
      std::vector<double> xs(hi - lo + 1), ys(hi - lo + 1), wts(hi - lo + 1);
      span = 0.0;
      for (size_t j = lo; j <= hi; ++j) {
        Point2 q = frame.to_local(pts_[j]);
        xs[j - lo] = q.x;
        ys[j - lo] = q.y;
        span = std::max(span, std::abs(q.x));
      }
      std::vector<std::vector<double>> cols(5,
                                            std::vector<double>(xs.size()));
      for (size_t j = 0; j < xs.size(); ++j) {
        double z = xs[j] / span;
        double u = std::abs(z) / 1.05;
        double t3 = 1.0 - u * u * u;
        wts[j] = t3 * t3 * t3;
        double p = 1.0;
        for (int k = 0; k < 5; ++k) {
          cols[k][j] = p;
          p *= z;
        }
      }
      auto fit = num::fit_least_squares(cols, ys, &wts);
      double sp = 1.0;
      for (int k = 0; k < 5; ++k) {
        c[k] = fit.coeff[k] / sp;
        sp *= span;
      }
      bool done = std::abs(c[1]) < 1e-13 && std::abs(c[0]) < 1e-13 * span;
      // Slide the frame onto the fitted arc: absorb the constant term into
      // the origin and the linear term into the tangent direction.
      frame.origin = frame.origin + c[0] * frame.ey;
      double phi = std::atan(c[1]);
      double cs = std::cos(phi), sn = std::sin(phi);
      Vec2 ex{cs * frame.ex.x + sn * frame.ey.x,
              cs * frame.ex.y + sn * frame.ey.y};
      frame.ex = ex;
      frame.ey = {-ex.y, ex.x};
      if (done) break;
    }

    CenterFit out;
    out.frame = frame;
    out.c2 = c[2];
    out.c3 = c[3];
    out.c4 = c[4];

    double xmin = 0.0, xmax = 0.0;
    double rsum = 0.0;
    // Unweighted residuals: the window edges carry the truncation error that
    // limits everything built on these fits, so they must count fully.
    for (size_t j = lo; j <= hi; ++j) {
      Point2 q = frame.to_local(pts_[j]);
      xmin = std::min(xmin, q.x);
      xmax = std::max(xmax, q.x);
      double pred =
          q.x * q.x * (c[2] + q.x * (c[3] + q.x * c[4])) + c[0] + c[1] * q.x;
      rsum += (q.y - pred) * (q.y - pred);
    }
    out.rms = std::sqrt(rsum / static_cast<double>(hi - lo + 1));

    if (!(out.c2 > 0.0))
      fail(Errc::NotConvex, "window fit is concave at a sample");
    out.xlo = 0.9 * xmin;
    out.xhi = 0.9 * xmax;
    // Quartics can lose convexity away from the center; shrink until the
    // second derivative stays positive across the working interval.
    for (int k = 0; k < 80; ++k) {
      if (convex_on(out, out.xlo, out.xhi)) break;
      out.xlo *= 0.8;
      out.xhi *= 0.8;
    }
    if (!convex_on(out, out.xlo, out.xhi))
      fail(Errc::WindowTooSmall, "no convex working interval at a sample");
    return out;
  }

  static bool convex_on(const CenterFit& f, double xlo, double xhi) {
    auto d2 = [&f](double x) {
      return 2.0 * f.c2 + x * (6.0 * f.c3 + 12.0 * f.c4 * x);
    };
    if (!(d2(xlo) > 0.0) || !(d2(xhi) > 0.0)) return false;
    if (f.c4 != 0.0) {
      double xc = -f.c3 / (4.0 * f.c4);
      if (xc > xlo && xc < xhi && !(d2(xc) > 0.0)) return false;
    }
    return true;
  }

  int w_;
  std::vector<Point2> pts_;
  std::vector<CenterFit> fits_;
  double scale_ = 1.0;
  double noise_ = 0.0;
};

}  // namespace

CurveModel fit_local_model(const PointCloud& cloud, int window) {
  return std::make_shared<SampledCurveImpl>(cloud, window);
}

}  // namespace tritangent
