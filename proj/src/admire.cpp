#include "nuc/admire.hpp"

#include <stdexcept>

namespace nuc {

namespace {

std::vector<int> axis_origins(int extent, int patch, int stride) {
  std::vector<int> out;
  const int last = extent - patch;
  for (int o = 0; o < last; o += stride) out.push_back(o);
  out.push_back(last);  // final patch aligned with the edge
  return out;
}

}  // namespace

PatchGrid make_patch_grid(int width, int height, int patch_size, int stride) {
  if (patch_size < 2) throw std::invalid_argument("make_patch_grid: patch_size must be >= 2");
  if (stride < 1 || stride > patch_size)
    throw std::invalid_argument("make_patch_grid: stride must be in [1, patch_size]");
  if (width < patch_size || height < patch_size)
    throw std::invalid_argument("make_patch_grid: image smaller than one patch");
  PatchGrid g;
  g.patch_size = patch_size;
  g.stride = stride;
  g.xs = axis_origins(width, patch_size, stride);
  g.ys = axis_origins(height, patch_size, stride);
  return g;
}

std::vector<long> winner_counts(const AdaptiveMireResult& r) {
  std::vector<long> counts(r.candidates.size(), 0);
  if (r.global_fallback) {
    for (std::size_t c = 0; c < r.candidates.size(); ++c)
      if (r.candidates[c] == r.fallback_s) ++counts[c];
    return counts;
  }
  for (int w : r.patch_winner) ++counts[w];
  return counts;
}

AdaptiveMireResult adaptive_mire(const GrayImage& img, const AdmireParams& params) {
  if (params.mire.orientation == Orientation::rows) {
    AdmireParams p = params;
    p.mire.orientation = Orientation::columns;
    AdaptiveMireResult r = adaptive_mire(img.transposed(), p);
    r.image = r.image.transposed();
    return r;
  }

  AdaptiveMireResult result{GrayImage(1, 1), s_candidates(params.mire), {}, {}, false, 0.0};

  if (img.width() < params.patch_size || img.height() < params.patch_size) {
    AutoSResult global = auto_s(img, params.mire);
    result.image = std::move(global.image);
    result.global_fallback = true;
    result.fallback_s = global.s;
    return result;
  }

  std::vector<GrayImage> candidates;
  candidates.reserve(result.candidates.size());
  for (double s : result.candidates)
    candidates.push_back(mire_fixed_s(img, s, Orientation::columns));

  const PatchGrid grid = make_patch_grid(img.width(), img.height(),
                                         params.patch_size, params.stride);
  const int patch = grid.patch_size;

  // integer accumulation keeps the averaged result independent of patch order
  std::vector<std::uint32_t> accum(img.size(), 0);
  std::vector<std::uint32_t> weight(img.size(), 0);
  result.patch_winner.reserve(grid.ys.size() * grid.xs.size());

  for (int y0 : grid.ys)
    for (int x0 : grid.xs) {
      int best = 0;
      std::int64_t best_tv = tv_line_patch(candidates[0], y0, x0, patch);
      for (std::size_t c = 1; c < candidates.size(); ++c) {
        const std::int64_t tv = tv_line_patch(candidates[c], y0, x0, patch);
        if (tv < best_tv) {  // ties keep the smaller s
          best_tv = tv;
          best = static_cast<int>(c);
        }
      }
      result.patch_winner.push_back(best);
      const GrayImage& win = candidates[best];
      for (int i = y0; i < y0 + patch; ++i)
        for (int j = x0; j < x0 + patch; ++j) {
          const std::size_t p = std::size_t(i) * img.width() + j;
          accum[p] += win(i, j);
          ++weight[p];
        }
    }

  GrayImage out(img.width(), img.height());
  for (std::size_t p = 0; p < accum.size(); ++p) {
    // round(a/w) half-up, exactly, in integers
    const std::uint32_t q = (2 * accum[p] + weight[p]) / (2 * weight[p]);
    out.pixels()[p] = clamp_level(static_cast<int>(q));
  }
  result.image = std::move(out);
  result.grid = grid;
  return result;
}

AdmireResult admire_pipeline(const GrayImage& img, const AdmireParams& params) {
  AdmireResult result{GrayImage(1, 1), adaptive_mire(img, params), false};
  if (params.denoise_enabled) {
    DenoiseParams d = params.denoise;
    d.pattern_orientation = params.mire.orientation;
    DenoiseResult den = dct_denoise_aniso(result.equalization.image, d);
    result.image = std::move(den.image);
    result.denoise_applied = den.applied;
  } else {
    result.image = result.equalization.image;
  }
  return result;
}

}  // namespace nuc
