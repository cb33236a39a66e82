#include "nuc/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "nuc/histogram.hpp"

namespace nuc {

namespace {

void check_same_size(const GrayImage& u, const GrayImage& v) {
  if (u.width() != v.width() || u.height() != v.height())
    throw std::invalid_argument("metrics: image dimensions differ");
}

}  // namespace

double rmse(const GrayImage& u, const GrayImage& v) {
  check_same_size(u, v);
  double acc = 0.0;
  for (std::size_t p = 0; p < u.size(); ++p) {
    const double d = double(u.pixels()[p]) - double(v.pixels()[p]);
    acc += d * d;
  }
  return std::sqrt(acc / double(u.size()));
}

double rmse_ci(const GrayImage& u, const GrayImage& v) {
  check_same_size(u, v);
  const CumulativeHistogram hu = global_cumhist(u);
  const CumulativeHistogram hv = global_cumhist(v);
  WeightVector half;
  half.radius = 0;  // radius unused here; two members, equal weight
  half.weights = {0.5, 0.5};
  const PseudoInverse midway({hu, hv}, half);

  const auto lut_u = specification_lut(hu, midway);
  const auto lut_v = specification_lut(hv, midway);
  double acc = 0.0;
  for (std::size_t p = 0; p < u.size(); ++p) {
    const double d = double(lut_u[u.pixels()[p]]) - double(lut_v[v.pixels()[p]]);
    acc += d * d;
  }
  return std::sqrt(acc / double(u.size()));
}

MetricReport evaluate_pair(const GrayImage& truth, const GrayImage& test,
                           Orientation orientation) {
  MetricReport r;
  r.rmse = rmse(truth, test);
  r.rmse_ci = rmse_ci(truth, test);
  r.tv_before = tv_line(truth, orientation);
  r.tv_after = tv_line(test, orientation);
  return r;
}

}  // namespace nuc
