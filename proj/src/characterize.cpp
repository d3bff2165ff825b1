#include "tritangent/characterize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tritangent/errors.hpp"
#include "tritangent/ingest.hpp"
#include "tritangent/numerics.hpp"

namespace tritangent {

RatioTable ratio_profile(const Curve& curve,
                         const std::vector<double>& p_params,
                         const std::vector<double>& h_values,
                         double quad_tol) {
  if (p_params.empty() || h_values.empty())
    fail(Errc::EmptyGrid, "point and height grids must be non-empty");

  RatioTable table;
  table.p_params = p_params;
  table.h_values = h_values;
  std::sort(table.h_values.begin(), table.h_values.end(),
            [](double a, double b) { return a > b; });

  double sup_min = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < p_params.size(); ++i) {
    auto g = curve.graph_at_param(p_params[i]);
    sup_min = std::min(sup_min, g->height_sup());
    for (double h : table.h_values) {
      RatioRow row;
      row.p_id = static_cast<int>(i);
      row.p_param = p_params[i];
      row.h = h;
      try {
        row.m = measure_at(*g, h, quad_tol);
        row.r_st = row.m.S / row.m.T;
        row.r_sv = row.m.S / row.m.V;
        row.r_sw = row.m.S / row.m.W;
        row.r_ut = row.m.U / row.m.T;
        row.r_ell_l = row.m.ell / row.m.L;
        row.ok = true;
      } catch (const Error& e) {
        if (e.code() != Errc::HeightOutOfRange) throw;
        row.skip_reason = errc_name(e.code());
      }
      table.rows.push_back(std::move(row));
    }
  }
  // Unbounded charts give no finite reference for the detection floor;
  // fall back to the curve's own length scale, as default_heights does.
  if (!std::isfinite(sup_min)) sup_min = curve.scale();
  table.height_sup_min = sup_min;
  return table;
}

std::vector<double> default_heights(const Curve& curve,
                                    const std::vector<double>& p_params,
                                    int levels,
                                    std::optional<double> h_max) {
  if (levels < 1) fail(Errc::BadParameter, "need at least one height level");
  if (p_params.empty()) fail(Errc::EmptyGrid, "point grid is empty");
  double top;
  if (h_max) {
    top = *h_max;
    if (!(top > 0.0)) fail(Errc::BadParameter, "h_max must be positive");
  } else {
    double sup = std::numeric_limits<double>::infinity();
    for (double u : p_params)
      sup = std::min(sup, curve.graph_at_param(u)->height_sup());
    if (!std::isfinite(sup)) sup = curve.scale();
    // Fitted models are only trustworthy well inside their windows; chords
    // near the window edge pick up the quartic truncation error.
    bool sampled = dynamic_cast<const SampledCurve*>(&curve) != nullptr;
    top = (sampled ? 0.15 : 0.4) * sup;
  }
  std::vector<double> out(levels);
  for (int k = 0; k < levels; ++k) out[k] = top * std::pow(4.0, -k);
  return out;
}

Verdict detect_parabola(const RatioTable& table, double tol) {
  if (!(tol > 0.0)) fail(Errc::BadParameter, "tolerance must be positive");

  Verdict v;
  v.tolerance = tol;
  v.h_floor = 0.05 * table.height_sup_min;

  const std::array<std::pair<const char*, double>, 5> families = {{
      {"S/T", 4.0 / 3.0},
      {"S/V", 2.0 / 3.0},
      {"S/W", 8.0 / 9.0},
      {"U/T", 0.5},
      {"ell/L", 0.5},
  }};

  size_t np = table.p_params.size();
  std::vector<int> ok_heights(np, 0);
  std::vector<double> max_ok_h(np, 0.0);
  // per family, per point: sum and count for the mean ratio
  std::vector<std::array<double, 5>> sums(np, std::array<double, 5>{});
  std::vector<int> counts(np, 0);

  for (const auto& row : table.rows) {
    if (!row.ok) continue;
    ++v.cells_used;
    size_t pid = static_cast<size_t>(row.p_id);
    ++ok_heights[pid];
    max_ok_h[pid] = std::max(max_ok_h[pid], row.h);
    const std::array<double, 5> ratios = {row.r_st, row.r_sv, row.r_sw,
                                          row.r_ut, row.r_ell_l};
    for (int fam = 0; fam < 5; ++fam) {
      double dev = std::abs(ratios[fam] / families[fam].second - 1.0);
      if (dev > v.families[fam].max_deviation) {
        v.families[fam].max_deviation = dev;
        v.families[fam].witness_p = row.p_id;
        v.families[fam].witness_h = row.h;
      }
      sums[pid][fam] += ratios[fam];
    }
    ++counts[pid];
  }

  for (size_t pid = 0; pid < np; ++pid) {
    if (ok_heights[pid] < 3)
      fail(Errc::InsufficientSpread,
           "need at least 3 usable heights per point");
    if (max_ok_h[pid] < v.h_floor)
      fail(Errc::InsufficientSpread,
           "all usable heights sit below the detection floor");
  }

  v.is_parabola = true;
  for (int fam = 0; fam < 5; ++fam) {
    v.families[fam].name = families[fam].first;
    v.families[fam].target = families[fam].second;
    v.families[fam].within = v.families[fam].max_deviation <= tol;
    if (fam < 4 && !v.families[fam].within) v.is_parabola = false;
  }

  for (int fam = 0; fam < 4; ++fam) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (size_t pid = 0; pid < np; ++pid) {
      double mean = sums[pid][fam] / counts[pid];
      lo = std::min(lo, mean);
      hi = std::max(hi, mean);
    }
    v.lambda_spread =
        std::max(v.lambda_spread, (hi - lo) / families[fam].second);
  }
  v.lambda_agree = v.lambda_spread <= tol;
  return v;
}

Reconstruction reconstruct_parabola(const LocalGraph& g) {
  auto d3 = g.third_derivative_at_origin();
  if (!d3)
    fail(Errc::MissingThirdDerivative,
         "model does not expose a third derivative at the base point");
  double b = 1.0 / g.curvature_at_origin();
  double a = -*d3 * b * b / 3.0;

  Reconstruction rec;
  rec.conic.a = a;
  rec.conic.b = b;
  rec.conic.implicit = {1.0, -2.0 * a, a * a, 0.0, -2.0 * b, 0.0};
  rec.residual_scale = g.scale() * g.scale();

  double xw = 0.95 * std::min(-g.x_lo(), g.x_hi());
  for (int i = 0; i <= 100; ++i) {
    double x = -xw + 2.0 * xw * i / 100.0;
    double y = g.value(x);
    double q = x - a * y;
    double res = q * q - 2.0 * b * y;
    rec.max_residual = std::max(rec.max_residual, std::abs(res));
  }
  rec.conic_fits = rec.max_residual < 1e-8 * rec.residual_scale;
  return rec;
}

OdeReport ode_residuals(const LocalGraph& g, double t_lo, double t_hi,
                        int count) {
  if (count < 2 || !(t_lo < t_hi))
    fail(Errc::BadParameter, "need an increasing grid of at least 2 points");
  if (!(t_lo > g.x_lo() && t_hi < g.x_hi()))
    fail(Errc::BadParameter, "grid leaves the working interval");

  std::vector<double> ts(count), vs(count);
  for (int i = 0; i < count; ++i) {
    double t = t_lo + (t_hi - t_lo) * i / (count - 1.0);
    if (std::abs(t) < 1e-12 * (std::abs(t_lo) + std::abs(t_hi)))
      fail(Errc::SingularAtOrigin, "grid touches the base point t = 0");
    ts[i] = t;
  }

  OdeReport rep;
  double mean = 0.0;
  for (int i = 0; i < count; ++i) {
    double t = ts[i];
    double f = g.value(t);
    double fp = g.slope(t);
    double fpp = g.second_derivative(t);
    double res = 2.0 * f * f * fpp - fp * fp * (t * fp - f);
    rep.ode_max_residual = std::max(rep.ode_max_residual, std::abs(res));
    vs[i] = 2.0 / fp - t / f;
    mean += vs[i];
  }
  mean /= count;
  rep.intercept_constant = mean;
  for (double vv : vs)
    rep.intercept_max_residual =
        std::max(rep.intercept_max_residual, std::abs(vv - mean));
  return rep;
}

ChordLawFit chord_law_fit(const std::vector<std::pair<double, double>>& hL) {
  if (hL.size() < 5)
    fail(Errc::BadParameter, "need at least 5 chord-length samples");
  std::vector<double> c1, c2, rhs;
  for (auto [h, L] : hL) {
    if (!(h > 0.0)) fail(Errc::NonPositiveSample, "heights must be positive");
    double rh = std::sqrt(h);
    c1.push_back(rh);
    c2.push_back(rh * std::log(h));
    rhs.push_back(L);
  }
  auto fit = num::fit_least_squares({c1, c2}, rhs);
  return {fit.coeff[0], fit.coeff[1], fit.max_residual};
}

std::pair<double, double> power_law_fit(
    const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 3)
    fail(Errc::BadParameter, "need at least 3 samples");
  double blo = std::numeric_limits<double>::infinity(), bhi = 0.0;
  std::vector<double> ones, logs, rhs;
  for (auto [base, value] : samples) {
    if (!(base > 0.0) || !(value > 0.0))
      fail(Errc::NonPositiveSample, "power-law samples must be positive");
    blo = std::min(blo, base);
    bhi = std::max(bhi, base);
    ones.push_back(1.0);
    logs.push_back(std::log(base));
    rhs.push_back(std::log(value));
  }
  if (bhi / blo < 99.999)
    fail(Errc::InsufficientSpread, "bases must span at least two decades");
  auto fit = num::fit_least_squares({ones, logs}, rhs);
  return {std::exp(fit.coeff[0]), fit.coeff[1]};
}

}  // namespace tritangent
