#pragma once

#include <cstdint>

#include "nuc/histogram.hpp"
#include "nuc/image.hpp"
#include "nuc/random.hpp"

namespace testimg {

/// Smooth drifting-wave landscape. Every column is a cyclic shift of the same
/// periodic vertical profile, so all column histograms are identical: a clean
/// image in the strictest sense for the equalizer.
nuc::GrayImage wave_landscape(int width, int height);

/// Smooth gradient with soft blobs, one soft-edged block and faint texture; a
/// stand-in for a natural photograph.
nuc::GrayImage shapes_landscape(int width, int height, std::uint32_t seed);

/// Uniform random levels in [lo, hi].
nuc::GrayImage random_image(int width, int height, std::uint32_t seed, int lo = 0,
                            int hi = 255);

/// Affine level rescale into [lo, hi] (input range assumed to span something).
nuc::GrayImage scale_into(const nuc::GrayImage& img, int lo, int hi);

}  // namespace testimg

namespace testhist {

/// Random smooth multi-bump distribution as a 256-bin cumulative histogram.
nuc::CumulativeHistogram random_cdf(nuc::Rng& rng);

/// Empirical histogram of `count` samples drawn from `truth` with additive
/// Gaussian level jitter: one noisy sensor column looking at one landscape.
nuc::CumulativeHistogram sampled_from(const nuc::CumulativeHistogram& truth,
                                      nuc::Rng& rng, int count, double jitter);

}  // namespace testhist
