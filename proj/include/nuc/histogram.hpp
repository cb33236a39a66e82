#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "nuc/image.hpp"

namespace nuc {

/// Normalized cumulative distribution of 8-bit levels.
/// bins[l] = fraction of samples with value <= l; bins[255] == 1 whenever
/// sample_count > 0. Bins are exact rationals count/N, so comparisons between
/// histograms of equal sample count are exact.
struct CumulativeHistogram {
  std::array<double, 256> bins{};
  int sample_count = 0;
};

CumulativeHistogram column_cumhist(const GrayImage& img, int j);
CumulativeHistogram global_cumhist(const GrayImage& img);
CumulativeHistogram cumhist_of(std::span<const std::uint8_t> samples);

/// Smallest level z with H(z) >= l. At l == 0 returns the smallest occupied
/// level (not 0), so that specification stays content-driven.
int pseudo_inverse_eval(const CumulativeHistogram& h, double level);

/// Symmetric window of 2*radius+1 non-negative weights summing to 1.
struct WeightVector {
  std::vector<double> weights;  // indexed 0..2*radius, center at [radius]
  int radius = 0;

  double at(int k) const { return weights[k + radius]; }  // k in [-radius, radius]
  int size() const { return static_cast<int>(weights.size()); }
};

/// Truncated Gaussian window with radius n = round(4s), renormalized to sum 1.
/// s == 0 gives the single-entry identity window.
WeightVector gaussian_weights(double s);

/// Weighted average of member pseudo-inverses: the quantile function of the
/// midway (Wasserstein barycenter) of the member histograms.
class PseudoInverse {
 public:
  explicit PseudoInverse(CumulativeHistogram h);
  PseudoInverse(std::vector<CumulativeHistogram> members, WeightVector w);

  /// Weighted average of member inverses at `level`, unrounded.
  double eval_real(double level) const;
  /// eval_real rounded half-up and clamped to [0,255].
  int eval(double level) const;

  const std::vector<CumulativeHistogram>& members() const { return members_; }

 private:
  std::vector<CumulativeHistogram> members_;
  WeightVector weights_;
};

/// Remap a column so its histogram becomes the target: out = target(H_own(in)).
/// H_own must be the cumulative histogram of exactly this column.
std::vector<std::uint8_t> specify(std::span<const std::uint8_t> column,
                                  const CumulativeHistogram& own,
                                  const PseudoInverse& target);

/// The 256-entry lookup table realizing specify() for a whole column.
std::array<std::uint8_t, 256> specification_lut(const CumulativeHistogram& own,
                                                const PseudoInverse& target);

/// Materialize the midway of the members as a cumulative histogram: the
/// distribution whose quantile function is the weighted average of the member
/// quantile functions. Used by distribution-level comparisons.
CumulativeHistogram midway_cumhist(std::vector<CumulativeHistogram> members,
                                   const WeightVector& w);

/// L2 distance between two histograms over the 256 cumulative bins.
double cumhist_l2(const CumulativeHistogram& a, const CumulativeHistogram& b);

}  // namespace nuc
