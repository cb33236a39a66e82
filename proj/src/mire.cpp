#include "nuc/mire.hpp"

#include <cstdlib>
#include <stdexcept>

namespace nuc {

int reflect_index(int idx, int size) {
  const int period = 2 * size;
  idx = ((idx % period) + period) % period;
  return idx < size ? idx : period - 1 - idx;
}

std::int64_t tv_line(const GrayImage& img, Orientation orientation) {
  if (orientation == Orientation::rows) return tv_line(img.transposed());
  std::int64_t acc = 0;
  for (int i = 0; i < img.height(); ++i) {
    const auto row = img.row(i);
    for (int j = 0; j + 1 < img.width(); ++j)
      acc += std::abs(int(row[j + 1]) - int(row[j]));
  }
  return acc;
}

std::int64_t tv_line_patch(const GrayImage& img, int y0, int x0, int patch) {
  std::int64_t acc = 0;
  for (int i = y0; i < y0 + patch; ++i) {
    const auto row = img.row(i);
    for (int j = x0; j + 1 < x0 + patch; ++j)
      acc += std::abs(int(row[j + 1]) - int(row[j]));
  }
  return acc;
}

GrayImage mire_fixed_s(const GrayImage& img, double s, Orientation orientation) {
  if (s < 0.0) throw std::invalid_argument("mire_fixed_s: negative s");
  if (orientation == Orientation::rows)
    return mire_fixed_s(img.transposed(), s, Orientation::columns).transposed();
  if (s == 0.0) return img;

  const int m = img.width();
  std::vector<CumulativeHistogram> hist(m);
  for (int j = 0; j < m; ++j) hist[j] = column_cumhist(img, j);

  const WeightVector w = gaussian_weights(s);
  const int n = w.radius;

  GrayImage out(img.width(), img.height());
  for (int j = 0; j < m; ++j) {
    std::vector<CumulativeHistogram> window;
    window.reserve(2 * n + 1);
    for (int k = -n; k <= n; ++k)
      window.push_back(hist[reflect_index(j + k, m)]);
    const PseudoInverse target(std::move(window), w);
    out.set_column(j, specify(img.column(j), hist[j], target));
  }
  return out;
}

std::vector<double> s_candidates(const MireParams& params) {
  if (params.s_step <= 0.0) throw std::invalid_argument("s_candidates: s_step must be > 0");
  if (params.s_max < 0.0) throw std::invalid_argument("s_candidates: s_max must be >= 0");
  std::vector<double> out;
  for (int k = 0;; ++k) {
    const double s = k * params.s_step;
    if (s > params.s_max * (1.0 + 1e-12) + 1e-12) break;
    out.push_back(s);
  }
  return out;
}

AutoSResult auto_s(const GrayImage& img, const MireParams& params) {
  AutoSResult best{0.0, img, s_candidates(params), {}};
  std::int64_t best_tv = -1;
  for (double s : best.candidates) {
    GrayImage candidate = mire_fixed_s(img, s, params.orientation);
    const std::int64_t tv = tv_line(candidate, params.orientation);
    best.tv_scores.push_back(tv);
    if (best_tv < 0 || tv < best_tv) {  // ties keep the earlier (smaller) s
      best_tv = tv;
      best.s = s;
      best.image = std::move(candidate);
    }
  }
  return best;
}

}  // namespace nuc
