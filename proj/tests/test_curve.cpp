#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <memory>
#include <vector>

#include "doctest.h"
#include "tritangent/curve.hpp"
#include "tritangent/errors.hpp"

using namespace tritangent;

namespace {

// Every local graph must be a genuine tangent-frame chart.
void check_graph_invariants(const LocalGraph& g) {
  CHECK(g.value(0.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(g.slope(0.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(g.second_derivative(0.0) > 0.0);
  CHECK(g.x_lo() < 0.0);
  CHECK(g.x_hi() > 0.0);
  // bounds may be infinite; sample inside a scale-sized window
  double lo = std::max(g.x_lo(), -4.0 * g.scale());
  double hi = std::min(g.x_hi(), 4.0 * g.scale());
  double xs[] = {0.8 * lo, 0.3 * lo, 0.4 * hi, 0.9 * hi};
  for (double x : xs) {
    CHECK(g.value(x) > 0.0);
    CHECK(g.second_derivative(x) > 0.0);
    // slope consistent with a central difference of the values
    double d = 1e-6 * (std::abs(x) + 1.0);
    if (x - d > g.x_lo() && x + d < g.x_hi()) {
      double fd = (g.value(x + d) - g.value(x - d)) / (2.0 * d);
      CHECK(g.slope(x) == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

}  // namespace

TEST_CASE("parabola graphs at the frame origin") {
  auto c = make_parabola(0.3, 1.7);
  auto g = c->graph_at_param(0.0);
  check_graph_invariants(*g);
  CHECK(g->second_derivative(0.0) == doctest::Approx(1.0 / 1.7).epsilon(1e-14));
  REQUIRE(g->third_derivative_at_origin().has_value());
  CHECK(*g->third_derivative_at_origin() ==
        doctest::Approx(-3.0 * 0.3 / (1.7 * 1.7)).epsilon(1e-13));
}

TEST_CASE("parabola graphs away from the origin") {
  auto c = make_parabola(-0.4, 0.9);
  for (double u : {-0.7, 0.35, 1.1}) {
    auto g = c->graph_at_param(u);
    check_graph_invariants(*g);
    CHECK(g->curvature_at_origin() ==
          doctest::Approx(c->curvature_at_param(u)).epsilon(1e-12));
  }
}

TEST_CASE("circle and ellipse graphs") {
  auto circ = make_circle(2.5);
  auto g = circ->graph_at_param(0.0);
  check_graph_invariants(*g);
  CHECK(g->second_derivative(0.0) == doctest::Approx(1.0 / 2.5).epsilon(1e-14));
  REQUIRE(g->third_derivative_at_origin().has_value());
  CHECK(*g->third_derivative_at_origin() == doctest::Approx(0.0));
  // the chart cannot reach past the equator
  CHECK(g->height_sup() <= 2.5 * (1.0 + 1e-9));

  auto ell = make_ellipse(2.0, 1.0);
  auto ge = ell->graph_at_param(0.0);
  check_graph_invariants(*ge);
  CHECK(ge->second_derivative(0.0) == doctest::Approx(2.0).epsilon(1e-13));
  for (double u : {-0.8, 0.5}) check_graph_invariants(*ell->graph_at_param(u));
}

TEST_CASE("explicit graph model uses the chart fallback") {
  auto c = make_convex_graph([](double x) { return std::cosh(x) - 1.0; },
                             [](double x) { return std::sinh(x); },
                             [](double x) { return std::cosh(x); },
                             [](double x) { return std::sinh(x); }, -1.5, 1.5);
  auto g0 = c->graph_at_param(0.0);
  check_graph_invariants(*g0);
  CHECK(g0->second_derivative(0.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(g0->value(1.0) == doctest::Approx(std::cosh(1.0) - 1.0).epsilon(1e-12));
  auto g1 = c->graph_at_param(0.6);
  check_graph_invariants(*g1);

  // no third-derivative callback: the jet is reported as absent
  auto c2 = make_convex_graph([](double x) { return std::cosh(x) - 1.0; },
                              [](double x) { return std::sinh(x); },
                              [](double x) { return std::cosh(x); }, nullptr,
                              -1.5, 1.5);
  CHECK_FALSE(c2->graph_at_param(0.0)->third_derivative_at_origin().has_value());
}

TEST_CASE("concave graph input is rejected") {
  CHECK_THROWS_AS(make_convex_graph([](double x) { return -x * x; },
                                    [](double x) { return -2.0 * x; },
                                    [](double) { return -2.0; }, nullptr, -1.0,
                                    1.0),
                  Error);
}

TEST_CASE("bad parabola parameters are rejected") {
  CHECK_THROWS_AS(make_parabola(0.0, 0.0), Error);
  CHECK_THROWS_AS(make_parabola(0.0, -2.0), Error);
  CHECK_THROWS_AS(make_circle(0.0), Error);
  CHECK_THROWS_AS(make_ellipse(1.0, 0.0), Error);
}

TEST_CASE("param_of inverts point_at within membership tolerance") {
  auto models = std::vector<CurveModel>{
      make_parabola(0.2, 1.3), make_circle(1.8), make_ellipse(1.5, 0.8)};
  for (const auto& c : models) {
    for (double u : interior_params(*c, 5)) {
      Point2 p = c->point_at(u);
      double v = c->param_of(p, c->membership_tol()).value();
      Point2 q = c->point_at(v);
      CHECK(dist(p, q) <= 1e-9 * (1.0 + c->scale()));
    }
  }
}

TEST_CASE("points off the curve have no parameter") {
  auto c = make_circle(1.0);
  CHECK_FALSE(c->param_of({0.3, 5.0}, 0.0).has_value());
  CHECK_THROWS_AS(c->param_checked({0.3, 5.0}), Error);
  try {
    c->param_checked({0.3, 5.0});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OffCurve);
  }
}

TEST_CASE("rigid transforms preserve the local graphs") {
  auto base = make_parabola(0.25, 1.1);
  auto moved = make_transformed(base, 0.83, {2.0, -3.5});
  for (double u : {-0.5, 0.0, 0.9}) {
    auto g0 = base->graph_at_param(u);
    auto g1 = moved->graph_at_param(u);
    check_graph_invariants(*g1);
    for (double x : {-0.3, 0.1, 0.45}) {
      CHECK(g1->value(x) == doctest::Approx(g0->value(x)).epsilon(1e-11));
      CHECK(g1->slope(x) == doctest::Approx(g0->slope(x)).epsilon(1e-11));
    }
    CHECK(g1->curvature_at_origin() ==
          doctest::Approx(g0->curvature_at_origin()).epsilon(1e-12));
  }
  // world positions actually moved
  CHECK(dist(base->point_at(0.0), moved->point_at(0.0)) > 1.0);
}

TEST_CASE("transforms compose for circles and ellipses") {
  auto moved = make_transformed(make_circle(1.4), -1.2, {0.3, 0.8});
  auto g = moved->graph_at_param(0.4);
  check_graph_invariants(*g);
  CHECK(g->second_derivative(0.0) == doctest::Approx(1.0 / 1.4).epsilon(1e-12));

  // explicit graph models move like any other analytic model
  auto chart = make_convex_graph([](double x) { return std::cosh(x) - 1.0; },
                                 [](double x) { return std::sinh(x); },
                                 [](double x) { return std::cosh(x); }, nullptr,
                                 -1.0, 1.0);
  auto mc = make_transformed(chart, 0.5, {1.0, -2.0});
  auto gc = mc->graph_at_param(0.3);
  check_graph_invariants(*gc);
  CHECK(gc->curvature_at_origin() ==
        doctest::Approx(chart->curvature_at_param(0.3)).epsilon(1e-12));
}

TEST_CASE("canonical graph lookup by world point") {
  auto c = make_circle(1.0);
  Point2 p = c->point_at(0.7);
  auto g = canonical_graph(*c, p);
  CHECK(g->value(0.0) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(g->curvature_at_origin() == doctest::Approx(1.0).epsilon(1e-12));
  Point2 back = g->frame().to_world({0.0, 0.0});
  CHECK(dist(back, p) < 1e-12);
}

TEST_CASE("interior params spread over the range") {
  auto c = make_circle(1.0);
  auto us = interior_params(*c, 7);
  REQUIRE(us.size() == 7);
  auto [lo, hi] = c->recommended_params();
  for (size_t i = 0; i < us.size(); ++i) {
    CHECK(us[i] > lo);
    CHECK(us[i] < hi);
    if (i) CHECK(us[i] > us[i - 1]);
  }
}
