#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <utility>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tritangent/asymptotics.hpp"
#include "tritangent/construction.hpp"
#include "tritangent/curve.hpp"
#include "tritangent/errors.hpp"

using namespace tritangent;

namespace {

std::vector<std::pair<double, double>> synth_grid(double h0, int n, double c0,
                                                  double c1, double c2) {
  std::vector<std::pair<double, double>> out;
  double h = h0;
  for (int i = 0; i < n; ++i) {
    out.emplace_back(h, c0 + c1 * std::sqrt(h) + c2 * h);
    h *= 0.25;
  }
  return out;
}

}  // namespace

TEST_CASE("extrapolation recovers the constant of a sqrt(h) expansion") {
  // Data exactly in the model space: the fit must return c0 to rounding.
  auto grid = synth_grid(1e-5, 6, 0.731, -2.4, 5.9);
  LimitEstimate est = limit_estimate(grid, 0.731);
  CHECK(std::abs(est.extrapolated - 0.731) < 1e-8);
  CHECK(est.abs_error < 1e-8);
  CHECK(est.model_order == 3);
  CHECK(est.samples.size() == 6);

  // A genuine h^(3/2) term is outside the basis but shrinks with the window.
  auto grid2 = synth_grid(1e-5, 8, 1.25, 0.7, -2.0);
  for (auto& [h, q] : grid2) q += 3.0 * h * std::sqrt(h);
  LimitEstimate est2 = limit_estimate(grid2, 1.25);
  CHECK(std::abs(est2.extrapolated - 1.25) < 1e-8);
}

TEST_CASE("extrapolation validates its grid") {
  CHECK_THROWS_AS(limit_estimate({{0.1, 1.0}, {0.025, 1.0}}, 1.0), Error);
  auto bad_ratio = synth_grid(1e-4, 4, 1.0, 1.0, 0.0);
  bad_ratio[2].first *= 1.5;  // breaks the geometric spacing
  CHECK_THROWS_AS(limit_estimate(bad_ratio, 1.0), Error);
  auto neg = synth_grid(1e-4, 5, 1.0, 0.0, 0.0);
  neg[4].first = -neg[4].first;
  CHECK_THROWS_AS(limit_estimate(neg, 1.0), Error);
  try {
    limit_estimate({{0.1, 1.0}, {0.025, 1.0}}, 1.0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadGrid);
  }
}

TEST_CASE("fit_error reflects the window sensitivity") {
  auto grid = synth_grid(1e-4, 6, 2.0, 1.0, 1.0);
  LimitEstimate est = limit_estimate(grid, 2.0);
  CHECK(est.fit_error < 1e-8);  // exact model: dropping a sample changes nothing
  for (auto& [h, q] : grid) q += 0.3 * h * std::sqrt(h);
  LimitEstimate est2 = limit_estimate(grid, 2.0);
  CHECK(est2.fit_error > est.fit_error);
  CHECK(est2.fit_error < 1e-4);
}

TEST_CASE("scaled laws on the unit circle approach the kappa closed forms") {
  auto c = make_circle(1.0);
  SmallHReport rep = verify_small_h_laws(*c, c->point_at(0.0), 0.4, 7);
  CHECK(rep.kappa == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(rep.laws.size() == 8);
  namespace o = oracle::limits;
  double targets[8] = {o::L_scaled,  o::ell_scaled, o::S_scaled, o::T_scaled,
                       o::U_scaled,  o::V_scaled,   o::W_scaled,
                       o::alpha_scaled};
  for (int i = 0; i < 8; ++i) {
    CHECK(rep.laws[i].target == doctest::Approx(targets[i]).epsilon(1e-12));
    CHECK(rep.laws[i].estimate.abs_error < 1e-3);
  }
}

TEST_CASE("scaled laws hold away from symmetry points") {
  auto c = make_ellipse(2.0, 1.0);
  Point2 p = c->point_at(0.6);
  SmallHReport rep = verify_small_h_laws(*c, p, 0.1, 7);
  double kap = curvature_at(*c, p);
  CHECK(rep.kappa == doctest::Approx(kap).epsilon(1e-10));
  for (const auto& law : rep.laws) CHECK(law.estimate.abs_error < 1e-3);
}

TEST_CASE("two extra levels shrink the extrapolation error") {
  auto c = make_circle(1.0);
  Point2 p = c->point_at(0.0);
  SmallHReport coarse = verify_small_h_laws(*c, p, 0.4, 6);
  SmallHReport fine = verify_small_h_laws(*c, p, 0.4, 8);
  double worst_c = 0.0, worst_f = 0.0;
  for (int i = 0; i < 8; ++i) {
    worst_c = std::max(worst_c, coarse.laws[i].estimate.abs_error);
    worst_f = std::max(worst_f, fine.laws[i].estimate.abs_error);
  }
  CHECK(worst_f * 4.0 <= worst_c);
}

TEST_CASE("parabola scaled quantities are constant in h") {
  // Every scaled sample equals its limit; the extrapolation is exact.
  auto c = make_parabola(0.2, 0.8);
  SmallHReport rep = verify_small_h_laws(*c, c->point_at(0.0), 0.2, 6);
  for (const auto& law : rep.laws) {
    CHECK(law.estimate.abs_error < 1e-7);
    for (const auto& [h, q] : law.estimate.samples)
      CHECK(q == doctest::Approx(law.target).epsilon(1e-7));
  }
}

TEST_CASE("law verification validates inputs") {
  auto c = make_circle(1.0);
  Point2 p = c->point_at(0.0);
  CHECK_THROWS_AS(verify_small_h_laws(*c, p, 0.4, 3), Error);
  CHECK_THROWS_AS(verify_small_h_laws(*c, p, -0.1, 6), Error);
  CHECK_THROWS_AS(verify_small_h_laws(*c, p, 5.0, 6), Error);
}

TEST_CASE("inner length equals L minus h dL/dh at finite heights") {
  auto models = std::vector<CurveModel>{
      make_parabola(0.35, 1.4), make_circle(1.0), make_ellipse(2.0, 1.0)};
  for (const auto& c : models) {
    for (double u : interior_params(*c, 3)) {
      auto g = c->graph_at_param(u);
      for (double frac : {0.05, 0.3, 0.6}) {
        double h = frac * g->height_sup();
        double L = measure_at(*g, h).L;
        double res = length_derivative_identity(*c, c->point_at(u), h);
        CHECK(res < 1e-6 * L);
      }
    }
  }
}
