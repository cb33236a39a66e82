#pragma once

#include <cstdint>
#include <vector>

#include "nuc/histogram.hpp"
#include "nuc/image.hpp"

namespace nuc {

struct MireParams {
  double s = 0.0;       // Gaussian std-dev of the column window, in columns
  double s_step = 0.5;  // search increment
  double s_max = 8.0;   // search upper bound
  Orientation orientation = Orientation::columns;
};

/// Discrete line total variation: sum of |differences| taken ACROSS the
/// pattern direction (between adjacent columns when the pattern is columns).
/// Exact integer sum; 0 for images one pixel thick in the gradient direction.
std::int64_t tv_line(const GrayImage& img,
                     Orientation orientation = Orientation::columns);

/// tv_line restricted to one patch: only differences strictly inside
/// [y0, y0+patch) x [x0, x0+patch) count, in the columns frame.
std::int64_t tv_line_patch(const GrayImage& img, int y0, int x0, int patch);

/// One sliding-midway pass: every column is specified onto the Gaussian
/// weighted midway of its 2n+1 neighboring column histograms (n = round(4s)),
/// neighbors beyond the border taken by mirror reflection. s == 0 is the
/// identity.
GrayImage mire_fixed_s(const GrayImage& img, double s,
                       Orientation orientation = Orientation::columns);

/// Candidate smoothing levels {0, s_step, 2*s_step, ..., s_max}.
std::vector<double> s_candidates(const MireParams& params);

struct AutoSResult {
  double s = 0.0;
  GrayImage image;
  std::vector<double> candidates;      // the scanned s values
  std::vector<std::int64_t> tv_scores; // tv_line of each candidate
};

/// Scan the candidate grid, return the s minimizing tv_line (ties toward
/// smaller s) together with its image. s = 0 is always in the scan set, so
/// the result never has larger tv_line than the input.
AutoSResult auto_s(const GrayImage& img, const MireParams& params);

/// Mirror index into [0, size): ..., 1, 0 | 0, 1, ..., size-1 | size-1, ...
int reflect_index(int idx, int size);

}  // namespace nuc
