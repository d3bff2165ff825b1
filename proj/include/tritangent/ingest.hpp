#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "tritangent/curve.hpp"
#include "tritangent/geometry.hpp"

namespace tritangent {

struct PointCloud {
  std::vector<Point2> points;  // input order, consecutive entries distinct
  std::string source;
};

// CSV, one "x,y" per line, optional single header line, blank lines skipped.
PointCloud load_points(std::istream& in, const std::string& source = "");
PointCloud load_points_file(const std::string& path);

// Curve backed by moving-window quartic fits; parameters are sample
// indices of the admissible centers.
class SampledCurve : public Curve {
 public:
  virtual double noise_estimate() const = 0;  // median window-fit RMS
  virtual int window_halfwidth() const = 0;
  virtual std::size_t sample_count() const = 0;
};

// Fits the local model with 2*window+1 point windows. The cloud must be
// convex-orderable; the model's convex side is chosen from the turning
// direction of the data.
CurveModel fit_local_model(const PointCloud& cloud, int window);

}  // namespace tritangent
