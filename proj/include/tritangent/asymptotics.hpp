#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "tritangent/construction.hpp"
#include "tritangent/curve.hpp"

namespace tritangent {

struct LimitEstimate {
  std::vector<std::pair<double, double>> samples;  // (h, q), h descending
  double extrapolated = 0.0;
  int model_order = 3;  // number of sqrt(h) powers in the fitted basis
  std::optional<double> theoretical;
  double abs_error = 0.0;  // |extrapolated - theoretical| when supplied
  double fit_error = 0.0;  // shift of the constant when the largest h drops
};

// Fits q(h) ~ c0 + c1 sqrt(h) + c2 h on the tail of a ratio-4 geometric
// grid and extrapolates to h = 0.
LimitEstimate limit_estimate(std::vector<std::pair<double, double>> samples,
                             std::optional<double> theoretical = {});

struct ScaledLimit {
  const char* name;    // quantity scaled by its vanishing rate
  double target;       // closed form in the curvature at P
  LimitEstimate estimate;
};

struct SmallHReport {
  double kappa = 0.0;
  double h0 = 0.0;
  int levels = 0;
  // L/sqrt(h), ell/sqrt(h), S, T, U, V, W over h*sqrt(h), then alpha.
  std::array<ScaledLimit, 8> laws;
};

// Measures the figure on the geometric grid h0 * 4^-k and extrapolates all
// scaled quantities, comparing each against its curvature closed form.
SmallHReport verify_small_h_laws(const Curve& curve, const Point2& p,
                                 double h0, int levels = 6);

// Residual of ell(h) against L(h) - h dL/dh with a central difference at
// relative step 1e-5. The identity is exact, so the residual is pure
// numerics at any valid h.
double length_derivative_identity(const Curve& curve, const Point2& p,
                                  double h);

}  // namespace tritangent
