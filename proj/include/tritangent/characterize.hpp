#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tritangent/construction.hpp"
#include "tritangent/curve.hpp"

namespace tritangent {

struct RatioRow {
  int p_id = 0;
  double p_param = 0.0;
  double h = 0.0;
  bool ok = false;
  std::string skip_reason;  // empty when ok
  Measures m;               // valid when ok
  double r_st = 0.0, r_sv = 0.0, r_sw = 0.0, r_ut = 0.0, r_ell_l = 0.0;
};

struct RatioTable {
  std::vector<RatioRow> rows;    // ordered by p_id, then h descending
  std::vector<double> p_params;
  std::vector<double> h_values;  // descending
  double height_sup_min = 0.0;   // tightest working height among the points
};

RatioTable ratio_profile(const Curve& curve,
                         const std::vector<double>& p_params,
                         const std::vector<double>& h_values,
                         double quad_tol = 1e-10);

// Geometric height grid h_max * 4^-k, k = 0..levels-1. Without an explicit
// h_max, uses 0.4 of the tightest working height over the point grid.
std::vector<double> default_heights(const Curve& curve,
                                    const std::vector<double>& p_params,
                                    int levels,
                                    std::optional<double> h_max = {});

// Deviations are relative: max |ratio/target - 1| over the table.
struct FamilyDeviation {
  const char* name = "";
  double target = 0.0;
  double max_deviation = 0.0;
  int witness_p = -1;
  double witness_h = 0.0;
  bool within = false;
};

struct Verdict {
  bool is_parabola = false;
  double tolerance = 0.0;
  double h_floor = 0.0;  // detection power needs heights above this
  // S/T, S/V, S/W, U/T decide; ell/L is reported alongside.
  std::array<FamilyDeviation, 5> families;
  // Cross-point agreement of the per-point mean ratios, per deciding
  // family; reported in addition to the per-cell test.
  double lambda_spread = 0.0;
  bool lambda_agree = false;
  int cells_used = 0;
};

Verdict detect_parabola(const RatioTable& table, double tol);

struct ConicCoefficients {
  double a = 0.0;
  double b = 0.0;
  // x^2, xy, y^2, x, y, 1 coefficients with the x^2 entry normalized to 1.
  std::array<double, 6> implicit{};
};

struct Reconstruction {
  ConicCoefficients conic;
  double max_residual = 0.0;     // implicit form evaluated along the graph
  double residual_scale = 0.0;   // scale^2 reference for the residual
  bool conic_fits = false;       // max_residual < 1e-8 * residual_scale
};

// Reads curvature and the third derivative at the base point and returns
// the unique candidate conic tangent to the frame axis there.
Reconstruction reconstruct_parabola(const LocalGraph& g);

struct OdeReport {
  // max |2 f^2 f'' - f'^2 (t f' - f)| over the grid
  double ode_max_residual = 0.0;
  // best-fit constant a in 2/f' - t/f = a, and the worst deviation from it
  double intercept_constant = 0.0;
  double intercept_max_residual = 0.0;
};

OdeReport ode_residuals(const LocalGraph& g, double t_lo, double t_hi,
                        int count);

struct ChordLawFit {
  double coeff_sqrt = 0.0;      // C1 in L(h) = C1 sqrt(h) + C2 sqrt(h) ln h
  double coeff_sqrt_log = 0.0;  // C2
  double max_residual = 0.0;    // data residual against the fitted solution
};

// Fits chord-length samples (h, L) against the solution basis of the
// second-order equation 4 h^2 L'' + L = 0.
ChordLawFit chord_law_fit(const std::vector<std::pair<double, double>>& hL);

// Least squares of log(value) = log(lambda) + mu log(base);
// returns (lambda, mu).
std::pair<double, double> power_law_fit(
    const std::vector<std::pair<double, double>>& samples);

}  // namespace tritangent
