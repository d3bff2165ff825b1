#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "tritangent/construction.hpp"
#include "tritangent/curve.hpp"
#include "tritangent/errors.hpp"

using namespace tritangent;

TEST_CASE("vertex parabola figure at h = 0.5 matches closed forms") {
  namespace o = oracle::parabola_h05;
  auto c = make_parabola(0.0, 1.0);
  auto g = c->graph_at_param(0.0);
  Figure fig = build_figure(*g, 0.5);
  CHECK(fig.s == doctest::Approx(o::s).epsilon(1e-13));
  CHECK(fig.t == doctest::Approx(o::t).epsilon(1e-13));
  CHECK(fig.b.x == doctest::Approx(o::bx).epsilon(1e-13));
  CHECK(fig.b.y == doctest::Approx(o::by).epsilon(1e-13));
  CHECK(fig.b1.x == doctest::Approx(o::b1x).epsilon(1e-13));
  CHECK(fig.b2.x == doctest::Approx(o::b2x).epsilon(1e-13));

  Measures m = measure_at(*g, 0.5);
  CHECK(m.L == doctest::Approx(o::L).epsilon(1e-12));
  CHECK(m.ell == doctest::Approx(o::ell).epsilon(1e-12));
  CHECK(m.T == doctest::Approx(o::T).epsilon(1e-12));
  CHECK(m.U == doctest::Approx(o::U).epsilon(1e-12));
  CHECK(m.V == doctest::Approx(o::V).epsilon(1e-12));
  CHECK(m.W == doctest::Approx(o::W).epsilon(1e-12));
  CHECK(m.S == doctest::Approx(o::S).epsilon(1e-9));
  CHECK(m.alpha == doctest::Approx(o::alpha).epsilon(1e-12));
}

TEST_CASE("unit circle figure at h = 0.5 matches closed forms") {
  namespace o = oracle::circle_h05;
  auto c = make_circle(1.0);
  auto g = c->graph_at_param(0.0);
  Figure fig = build_figure(*g, 0.5);
  CHECK(fig.b.x == doctest::Approx(o::bx).epsilon(1e-12));
  CHECK(fig.b.y == doctest::Approx(o::by).epsilon(1e-12));

  Measures m = measure_at(*g, 0.5);
  CHECK(m.L == doctest::Approx(o::L).epsilon(1e-12));
  CHECK(m.ell == doctest::Approx(o::ell).epsilon(1e-12));
  CHECK(m.T == doctest::Approx(o::T).epsilon(1e-12));
  CHECK(m.U == doctest::Approx(o::U).epsilon(1e-11));
  CHECK(m.V == doctest::Approx(o::V).epsilon(1e-11));
  CHECK(m.W == doctest::Approx(o::W).epsilon(1e-12));
  CHECK(m.S == doctest::Approx(o::S).epsilon(1e-9));
  CHECK(m.alpha == doctest::Approx(o::alpha).epsilon(1e-11));
  CHECK(m.U / m.T == doctest::Approx(o::ut).epsilon(1e-11));
}

TEST_CASE("ellipse figure at h = 0.4 matches closed forms") {
  namespace o = oracle::ellipse_h04;
  auto c = make_ellipse(2.0, 1.0);
  Measures m = measure_at(*c->graph_at_param(0.0), 0.4);
  CHECK(m.L == doctest::Approx(o::L).epsilon(1e-12));
  CHECK(m.ell == doctest::Approx(o::ell).epsilon(1e-12));
  CHECK(m.T == doctest::Approx(o::T).epsilon(1e-12));
  CHECK(m.U == doctest::Approx(o::U).epsilon(1e-11));
  CHECK(m.V == doctest::Approx(o::V).epsilon(1e-11));
  CHECK(m.W == doctest::Approx(o::W).epsilon(1e-12));
  CHECK(m.S == doctest::Approx(o::S).epsilon(1e-9));
}

TEST_CASE("cosh graph figure at h = 0.3 matches closed forms") {
  namespace o = oracle::cosh_h03;
  auto c = make_convex_graph([](double x) { return std::cosh(x) - 1.0; },
                             [](double x) { return std::sinh(x); },
                             [](double x) { return std::cosh(x); },
                             [](double x) { return std::sinh(x); }, -1.5, 1.5);
  Measures m = measure_at(*c->graph_at_param(0.0), 0.3);
  CHECK(m.L == doctest::Approx(o::L).epsilon(1e-11));
  CHECK(m.ell == doctest::Approx(o::ell).epsilon(1e-11));
  CHECK(m.T == doctest::Approx(o::T).epsilon(1e-11));
  CHECK(m.U == doctest::Approx(o::U).epsilon(1e-10));
  CHECK(m.V == doctest::Approx(o::V).epsilon(1e-10));
  CHECK(m.W == doctest::Approx(o::W).epsilon(1e-11));
  CHECK(m.S == doctest::Approx(o::S).epsilon(1e-9));
  CHECK(m.alpha == doctest::Approx(o::alpha).epsilon(1e-10));
}

TEST_CASE("chord endpoints sit on the curve at the requested height") {
  auto c = make_ellipse(1.7, 0.9);
  for (double u : interior_params(*c, 4)) {
    auto g = c->graph_at_param(u);
    double sup = g->height_sup();
    for (double frac : {0.02, 0.2, 0.6}) {
      double h = frac * sup;
      auto [s, t] = chord_endpoints(*g, h);
      CHECK(s < 0.0);
      CHECK(t > 0.0);
      CHECK(std::abs(g->value(s) - h) <= 1e-12 * (1.0 + h));
      CHECK(std::abs(g->value(t) - h) <= 1e-12 * (1.0 + h));
    }
  }
}

TEST_CASE("heights outside the working interval are rejected") {
  auto c = make_circle(1.0);
  auto g = c->graph_at_param(0.0);
  CHECK_THROWS_AS(chord_endpoints(*g, 1.5), Error);
  CHECK_THROWS_AS(chord_endpoints(*g, 0.0), Error);
  CHECK_THROWS_AS(chord_endpoints(*g, -0.2), Error);
  CHECK_THROWS_AS(chord_endpoints(*g, 1e-18), Error);
  try {
    chord_endpoints(*g, 1.5);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::HeightOutOfRange);
  }
}

TEST_CASE("sector area grows at the chord rate") {
  // dS/dh at fixed P is L(h): the integrand h - f vanishes at the moving
  // endpoints, so only the strip of width L contributes.
  auto models = std::vector<CurveModel>{make_parabola(0.3, 1.2),
                                        make_circle(1.5),
                                        make_ellipse(2.0, 1.0)};
  for (const auto& c : models) {
    auto g = c->graph_at_param(0.2);
    for (double frac : {0.1, 0.4}) {
      double h = frac * std::min(g->height_sup(), c->scale());
      double d = 1e-4 * h;
      double sp = sector_area(*g, h + d, 1e-12);
      double sm = sector_area(*g, h - d, 1e-12);
      double deriv = (sp - sm) / (2.0 * d);
      double L = measure_at(*g, h, 1e-12).L;
      CHECK(deriv == doctest::Approx(L).epsilon(1e-5));
    }
  }
}

TEST_CASE("triangle equivalences hold on any figure") {
  // V = W + U and the alpha identity, straight from the tangent geometry.
  auto c = make_ellipse(1.3, 1.1);
  for (double u : interior_params(*c, 3)) {
    auto g = c->graph_at_param(u);
    double h = 0.3 * g->height_sup();
    Measures m = measure_at(*g, h);
    CHECK(m.V == doctest::Approx(m.W + m.U).epsilon(1e-10));
    CHECK(m.alpha ==
          doctest::Approx((m.L - m.ell) / std::sqrt(h)).epsilon(1e-10));
    // the tangent triangle area agrees with the cross-product formula
    Figure fig = build_figure(*g, h);
    double direct = triangle_area(fig.b, fig.a1, fig.a2);
    CHECK(m.V == doctest::Approx(direct).epsilon(1e-9));
  }
}

TEST_CASE("apex recovery from a chord") {
  auto c = make_ellipse(1.8, 1.2);
  double u0 = 0.35;
  auto g = c->graph_at_param(u0);
  Figure fig = build_figure(*g, 0.2);
  Point2 p = apex_for_chord(*c, fig.a1, fig.a2);
  CHECK(dist(p, fig.p) < 1e-9 * (1.0 + c->scale()));
}

TEST_CASE("apex recovery on a one-sided chord") {
  auto c = make_parabola(0.0, 1.0);
  // chord strictly right of the vertex; the parallel tangent touches at x = 1
  Point2 a1 = c->point_at(0.5);
  Point2 a2 = c->point_at(1.5);
  Point2 p = apex_for_chord(*c, a1, a2);
  CHECK(p.x == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(p.y == doctest::Approx(0.5).epsilon(1e-9));
  // coincident endpoints never define a chord
  CHECK_THROWS_AS(apex_for_chord(*c, a1, a1), Error);
}

TEST_CASE("figures carry world coordinates consistent with the frame") {
  auto moved = make_transformed(make_parabola(0.0, 1.0), 0.77, {1.0, -2.0});
  auto g = moved->graph_at_param(0.0);
  Figure fig = build_figure(*g, 0.5);
  // A1, A2 must lie on the moved curve
  CHECK_NOTHROW(moved->param_of(fig.a1, 1e-9));
  CHECK_NOTHROW(moved->param_of(fig.a2, 1e-9));
  // chord endpoints at height h along the frame normal
  Point2 local = fig.frame.to_local(fig.a1);
  CHECK(local.y == doctest::Approx(0.5).epsilon(1e-12));
}
