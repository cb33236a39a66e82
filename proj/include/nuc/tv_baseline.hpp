#pragma once

#include <cstdint>
#include <vector>

#include "nuc/image.hpp"

namespace nuc {

struct TvBaselineResult {
  GrayImage image;
  /// Total additive shift applied to each column (before the global mean
  /// correction). offsets[0] == 0.
  std::vector<int> offsets;
  int mean_shift = 0;    // global constant restoring the input mean
  long clipped = 0;      // pixels clamped by the final [0,255] cut
};

/// Column-offset destriping: sweeping left to right, shift each column by the
/// integer delta in [-255,255] minimizing the L1 difference to the already
/// corrected previous column (ties: smallest |delta|, then negative), then
/// shift the whole image to restore the input mean and clamp.
TvBaselineResult tv_baseline(const GrayImage& img,
                             Orientation orientation = Orientation::columns);

}  // namespace nuc
