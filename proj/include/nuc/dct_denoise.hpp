#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nuc/image.hpp"

namespace nuc {

/// Hard-threshold strengths for the anisotropic patch DCT filter, in gray
/// levels of the orthonormal coefficient scale. t_i belongs to the image's
/// i (row) axis, t_j to the j (column) axis; the threshold named after the
/// pattern axis is applied to the pure pattern-direction frequencies, the
/// other one everywhere else (DC is never touched).
struct DenoiseParams {
  int patch_size = 8;
  double t_i = 0.0;
  double t_j = 0.0;
  Orientation pattern_orientation = Orientation::columns;
};

/// Orthonormal 2-D DCT-II of a square patch (row-major, n*n values).
std::vector<double> dct2(std::span<const double> patch, int n);

/// Inverse of dct2; round-trips to within 1e-9 per sample.
std::vector<double> idct2(std::span<const double> coeffs, int n);

/// Zero every coefficient strictly below its threshold. Coefficient (u,v)
/// (u = row frequency, v = column frequency) gets, for a columns pattern,
/// t_j when u == 0 && v > 0 and t_i elsewhere; for a rows pattern, t_i when
/// v == 0 && u > 0 and t_j elsewhere. (0,0) is always kept.
void threshold_aniso(std::span<double> coeffs, const DenoiseParams& params);

struct DenoiseResult {
  GrayImage image;
  bool applied = true;  // false when the image is smaller than one patch
};

/// Anisotropic hard-threshold DCT on fully overlapping (stride 1) patches,
/// averaged back per pixel. Images smaller than one patch pass through.
DenoiseResult dct_denoise_aniso(const GrayImage& img, const DenoiseParams& params);

}  // namespace nuc
