#pragma once

#include <cstdint>
#include <vector>

#include "nuc/dct_denoise.hpp"
#include "nuc/image.hpp"
#include "nuc/mire.hpp"

namespace nuc {

/// Overlapping-patch bookkeeping: origins cover the image completely, the
/// last origin per axis clamped to the edge.
struct PatchGrid {
  int patch_size = 8;
  int stride = 4;
  std::vector<int> xs;  // left coordinates
  std::vector<int> ys;  // top coordinates
};

PatchGrid make_patch_grid(int width, int height, int patch_size, int stride);

struct AdmireParams {
  MireParams mire;
  int patch_size = 8;
  int stride = 4;
  DenoiseParams denoise;
  bool denoise_enabled = true;
};

struct AdaptiveMireResult {
  GrayImage image;
  std::vector<double> candidates;  // scanned s values
  PatchGrid grid;
  /// Winning candidate index per patch, row-major over (ys, xs). Empty when
  /// the image was smaller than one patch and the global search ran instead.
  std::vector<int> patch_winner;
  bool global_fallback = false;
  double fallback_s = 0.0;
};

/// Per-candidate count of winning patches (index-aligned with candidates).
std::vector<long> winner_counts(const AdaptiveMireResult& r);

/// Locally adaptive midway equalization: every patch picks, among the
/// fixed-s candidates, the one with the smallest in-patch tv_line (ties to
/// smaller s); winning patches are averaged into the output.
AdaptiveMireResult adaptive_mire(const GrayImage& img, const AdmireParams& params);

struct AdmireResult {
  GrayImage image;
  AdaptiveMireResult equalization;
  bool denoise_applied = false;
};

/// The full correction chain: adaptive midway equalization, then (optionally)
/// the anisotropic DCT threshold denoiser.
AdmireResult admire_pipeline(const GrayImage& img, const AdmireParams& params);

}  // namespace nuc
