#include "tritangent/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "tritangent/errors.hpp"
#include "tritangent/numerics.hpp"

namespace tritangent {

namespace {

double constant_term(const std::vector<std::pair<double, double>>& pts) {
  // Basis {1, sqrt(h), h} with sqrt(h) normalized by the largest sample.
  double zmax = std::sqrt(pts.front().first);
  std::vector<double> c0, c1, c2, rhs;
  for (auto [h, q] : pts) {
    double z = std::sqrt(h) / zmax;
    c0.push_back(1.0);
    c1.push_back(z);
    c2.push_back(z * z);
    rhs.push_back(q);
  }
  auto fit = num::fit_least_squares({c0, c1, c2}, rhs);
  return fit.coeff[0];
}

}  // namespace

LimitEstimate limit_estimate(std::vector<std::pair<double, double>> samples,
                             std::optional<double> theoretical) {
  std::sort(samples.begin(), samples.end(),
            [](auto& a, auto& b) { return a.first > b.first; });
  if (samples.size() < 4)
    fail(Errc::BadGrid, "limit estimation needs at least 4 samples");
  for (auto [h, q] : samples)
    if (!(h > 0.0)) fail(Errc::BadGrid, "heights must be positive");
  for (size_t i = 0; i + 1 < samples.size(); ++i) {
    double ratio = samples[i].first / samples[i + 1].first;
    if (std::abs(ratio / 4.0 - 1.0) > 1e-6)
      fail(Errc::BadGrid, "heights must form a geometric grid with ratio 4");
  }

  size_t w = std::min<size_t>(samples.size(), 6);
  std::vector<std::pair<double, double>> tail(samples.end() - w,
                                              samples.end());
  LimitEstimate est;
  est.samples = samples;
  est.model_order = 3;
  est.extrapolated = constant_term(tail);
  std::vector<std::pair<double, double>> shorter(tail.begin() + 1, tail.end());
  est.fit_error = std::abs(est.extrapolated - constant_term(shorter));
  est.theoretical = theoretical;
  if (theoretical) est.abs_error = std::abs(est.extrapolated - *theoretical);
  return est;
}

SmallHReport verify_small_h_laws(const Curve& curve, const Point2& p,
                                 double h0, int levels) {
  if (levels < 4) fail(Errc::BadParameter, "need at least 4 grid levels");
  auto g = canonical_graph(curve, p);
  if (!(h0 > 0.0) || !(h0 < g->height_sup()))
    fail(Errc::HeightOutOfRange, "h0 outside the working height range");

  SmallHReport report;
  report.kappa = g->curvature_at_origin();
  report.h0 = h0;
  report.levels = levels;

  double h_floor = std::max(1e-10, 1e-6 * h0);
  std::array<std::vector<std::pair<double, double>>, 8> samples;
  int used = 0;
  for (int k = 0; k < levels; ++k) {
    double h = h0 * std::pow(4.0, -k);
    if (h < h_floor) break;
    // measure_at's tolerance is already relative to the sector scale.
    Measures m = measure_at(*g, h, 1e-9);
    double rh = std::sqrt(h);
    double hrh = h * rh;
    samples[0].push_back({h, m.L / rh});
    samples[1].push_back({h, m.ell / rh});
    samples[2].push_back({h, m.S / hrh});
    samples[3].push_back({h, m.T / hrh});
    samples[4].push_back({h, m.U / hrh});
    samples[5].push_back({h, m.V / hrh});
    samples[6].push_back({h, m.W / hrh});
    samples[7].push_back({h, m.alpha});
    ++used;
  }
  if (used < 4)
    fail(Errc::BadGrid, "grid collapsed below the height floor");

  double rt2 = std::sqrt(2.0);
  double sq = std::sqrt(report.kappa);
  const std::array<std::pair<const char*, double>, 8> targets = {{
      {"L/sqrt(h)", 2.0 * rt2 / sq},
      {"ell/sqrt(h)", rt2 / sq},
      {"S/(h*sqrt(h))", 4.0 * rt2 / (3.0 * sq)},
      {"T/(h*sqrt(h))", rt2 / sq},
      {"U/(h*sqrt(h))", rt2 / (2.0 * sq)},
      {"V/(h*sqrt(h))", 2.0 * rt2 / sq},
      {"W/(h*sqrt(h))", 3.0 * rt2 / (2.0 * sq)},
      {"alpha", rt2 / sq},
  }};
  for (int i = 0; i < 8; ++i) {
    report.laws[i].name = targets[i].first;
    report.laws[i].target = targets[i].second;
    report.laws[i].estimate =
        limit_estimate(std::move(samples[i]), targets[i].second);
  }
  return report;
}

double length_derivative_identity(const Curve& curve, const Point2& p,
                                  double h) {
  auto g = canonical_graph(curve, p);
  auto chord_len = [&g](double hh) {
    auto [s, t] = chord_endpoints(*g, hh);
    return t - s;
  };
  double delta = 1e-5 * h;
  double lp = (chord_len(h + delta) - chord_len(h - delta)) / (2.0 * delta);
  Figure fig = build_figure(*g, h);
  double L = fig.t - fig.s;
  double ell =
      L + h * (fig.slope_t - fig.slope_s) / (fig.slope_s * fig.slope_t);
  return std::abs(ell - (L - h * lp));
}

}  // namespace tritangent
