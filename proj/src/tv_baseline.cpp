#include "nuc/tv_baseline.hpp"

#include <cstdlib>
#include <numeric>

namespace nuc {

namespace {

bool delta_wins_tie(int candidate, int incumbent) {
  const int ca = std::abs(candidate), ia = std::abs(incumbent);
  if (ca != ia) return ca < ia;
  return candidate < incumbent;  // negative before positive
}

}  // namespace

TvBaselineResult tv_baseline(const GrayImage& img, Orientation orientation) {
  if (orientation == Orientation::rows) {
    TvBaselineResult r = tv_baseline(img.transposed(), Orientation::columns);
    r.image = r.image.transposed();
    return r;
  }

  const int m = img.width(), n = img.height();
  TvBaselineResult result{img, std::vector<int>(m, 0), 0, 0};
  if (m < 2) return result;

  // unclamped working copy; clamping waits until after the mean correction
  std::vector<std::vector<int>> work(m);
  for (int j = 0; j < m; ++j) {
    work[j].resize(n);
    for (int i = 0; i < n; ++i) work[j][i] = img(i, j);
  }

  for (int j = 0; j + 1 < m; ++j) {
    long best_cost = -1;
    int best_delta = 0;
    for (int delta = -255; delta <= 255; ++delta) {
      long cost = 0;
      for (int i = 0; i < n; ++i)
        cost += std::abs(img(i, j + 1) + delta - work[j][i]);
      if (best_cost < 0 || cost < best_cost ||
          (cost == best_cost && delta_wins_tie(delta, best_delta))) {
        best_cost = cost;
        best_delta = delta;
      }
    }
    result.offsets[j + 1] = best_delta;
    for (int i = 0; i < n; ++i) work[j + 1][i] = img(i, j + 1) + best_delta;
  }

  long long in_sum = 0, out_sum = 0;
  for (std::uint8_t v : img.pixels()) in_sum += v;
  for (int j = 0; j < m; ++j) out_sum += std::accumulate(work[j].begin(), work[j].end(), 0LL);
  const double mean_gap = (double(in_sum) - double(out_sum)) / (double(m) * n);
  result.mean_shift = round_half_up(mean_gap);

  GrayImage out(m, n);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) {
      const int v = work[j][i] + result.mean_shift;
      if (v < 0 || v > 255) ++result.clipped;
      out(i, j) = clamp_level(v);
    }
  result.image = std::move(out);
  return result;
}

}  // namespace nuc
