#pragma once

#include <cstdint>

#include "nuc/image.hpp"
#include "nuc/mire.hpp"

namespace nuc {

/// Plain root-mean-squared error; throws on dimension mismatch.
double rmse(const GrayImage& u, const GrayImage& v);

/// Contrast-invariant RMSE: both images are specified onto the midway of
/// their two global histograms first, so any shared monotone contrast change
/// costs (almost) nothing. Symmetric in its arguments.
double rmse_ci(const GrayImage& u, const GrayImage& v);

struct MetricReport {
  double rmse = 0.0;
  double rmse_ci = 0.0;
  std::int64_t tv_before = 0;  // tv_line of the reference image
  std::int64_t tv_after = 0;   // tv_line of the test image
};

MetricReport evaluate_pair(const GrayImage& truth, const GrayImage& test,
                           Orientation orientation = Orientation::columns);

}  // namespace nuc
