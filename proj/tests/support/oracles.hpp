#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nuc/image.hpp"
#include "nuc/random.hpp"

namespace testoracle {

/// Independent reference for the column-offset sweep: per column, the
/// L1-optimal shift is any integer between the two middle order statistics of
/// the pixel differences; apply the [-255,255] range and the
/// smallest-|delta|-negative-first tie rule.
std::vector<int> baseline_offsets(const nuc::GrayImage& img);

/// Random level map strictly increasing on the levels present in img
/// (arbitrary elsewhere): a contrast change that should cost rmse_ci nothing.
std::array<std::uint8_t, 256> random_monotone_lut(const nuc::GrayImage& img,
                                                  nuc::Rng& rng);

nuc::GrayImage apply_lut(const nuc::GrayImage& img,
                         const std::array<std::uint8_t, 256>& lut);

}  // namespace testoracle
