#include "nuc/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nuc {

namespace {

CumulativeHistogram from_counts(const std::array<int, 256>& counts, int n) {
  CumulativeHistogram h;
  h.sample_count = n;
  int acc = 0;
  for (int l = 0; l < 256; ++l) {
    acc += counts[l];
    // single division keeps bins[255] == n/n == 1 exactly
    h.bins[l] = static_cast<double>(acc) / n;
  }
  return h;
}

}  // namespace

CumulativeHistogram cumhist_of(std::span<const std::uint8_t> samples) {
  if (samples.empty())
    throw std::invalid_argument("cumhist_of: no samples");
  std::array<int, 256> counts{};
  for (std::uint8_t v : samples) ++counts[v];
  return from_counts(counts, static_cast<int>(samples.size()));
}

CumulativeHistogram column_cumhist(const GrayImage& img, int j) {
  if (j < 0 || j >= img.width())
    throw std::out_of_range("column_cumhist: column index out of range");
  std::array<int, 256> counts{};
  for (int i = 0; i < img.height(); ++i) ++counts[img(i, j)];
  return from_counts(counts, img.height());
}

CumulativeHistogram global_cumhist(const GrayImage& img) {
  std::array<int, 256> counts{};
  for (std::uint8_t v : img.pixels()) ++counts[v];
  return from_counts(counts, static_cast<int>(img.size()));
}

int pseudo_inverse_eval(const CumulativeHistogram& h, double level) {
  if (level < 0.0 || level > 1.0)
    throw std::invalid_argument("pseudo_inverse_eval: level outside [0,1]");
  if (h.sample_count <= 0)
    throw std::invalid_argument("pseudo_inverse_eval: empty histogram");
  if (level == 0.0) {
    for (int z = 0; z < 256; ++z)
      if (h.bins[z] > 0.0) return z;
    return 255;  // unreachable for a valid histogram
  }
  // bins are monotone, so the smallest z with bins[z] >= level is found by
  // binary search
  const auto it = std::lower_bound(h.bins.begin(), h.bins.end(), level);
  return static_cast<int>(it - h.bins.begin());
}

WeightVector gaussian_weights(double s) {
  if (s < 0.0)
    throw std::invalid_argument("gaussian_weights: negative standard deviation");
  WeightVector w;
  if (s == 0.0) {
    w.radius = 0;
    w.weights = {1.0};
    return w;
  }
  const int n = static_cast<int>(std::llround(4.0 * s));
  w.radius = n;
  w.weights.resize(2 * n + 1);
  double sum = 0.0;
  for (int k = -n; k <= n; ++k) {
    const double g = std::exp(-(double(k) * k) / (2.0 * s * s));
    w.weights[k + n] = g;
    sum += g;
  }
  // the truncated window is renormalized so identical members are an exact
  // fixed point of the midway
  for (double& v : w.weights) v /= sum;
  return w;
}

PseudoInverse::PseudoInverse(CumulativeHistogram h) {
  members_.push_back(std::move(h));
  weights_.radius = 0;
  weights_.weights = {1.0};
}

PseudoInverse::PseudoInverse(std::vector<CumulativeHistogram> members, WeightVector w)
    : members_(std::move(members)), weights_(std::move(w)) {
  if (static_cast<int>(members_.size()) != weights_.size())
    throw std::invalid_argument("PseudoInverse: member count does not match weights");
}

double PseudoInverse::eval_real(double level) const {
  double acc = 0.0;
  for (std::size_t k = 0; k < members_.size(); ++k)
    acc += weights_.weights[k] * pseudo_inverse_eval(members_[k], level);
  return acc;
}

int PseudoInverse::eval(double level) const {
  const int v = round_half_up(eval_real(level));
  return v < 0 ? 0 : (v > 255 ? 255 : v);
}

std::array<std::uint8_t, 256> specification_lut(const CumulativeHistogram& own,
                                                const PseudoInverse& target) {
  std::array<std::uint8_t, 256> lut{};
  for (int l = 0; l < 256; ++l)
    lut[l] = static_cast<std::uint8_t>(target.eval(own.bins[l]));
  return lut;
}

std::vector<std::uint8_t> specify(std::span<const std::uint8_t> column,
                                  const CumulativeHistogram& own,
                                  const PseudoInverse& target) {
  const auto lut = specification_lut(own, target);
  std::vector<std::uint8_t> out(column.size());
  for (std::size_t i = 0; i < column.size(); ++i) out[i] = lut[column[i]];
  return out;
}

CumulativeHistogram midway_cumhist(std::vector<CumulativeHistogram> members,
                                   const WeightVector& w) {
  PseudoInverse inv(members, w);

  // Quantile breakpoints: the union of all member bin values in (0,1]. The
  // averaged inverse is a left-continuous step function of the level, constant
  // between consecutive breakpoints, so evaluating at the breakpoints captures
  // it entirely.
  std::vector<double> breakpoints;
  for (const auto& m : members)
    for (double b : m.bins)
      if (b > 0.0) breakpoints.push_back(b);
  breakpoints.push_back(1.0);
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()),
                    breakpoints.end());

  // Hmid(z) = largest quantile whose averaged inverse is still <= z. The
  // 1e-9 slack absorbs the rounding of the weight normalization; real gaps
  // between distinct inverse values are at least 1/(member count).
  CumulativeHistogram out;
  for (const auto& m : members) out.sample_count += m.sample_count;
  std::size_t m_idx = 0;
  double reached = 0.0;
  for (int z = 0; z < 256; ++z) {
    while (m_idx < breakpoints.size() &&
           inv.eval_real(breakpoints[m_idx]) <= z + 1e-9) {
      reached = breakpoints[m_idx];
      ++m_idx;
    }
    out.bins[z] = reached;
  }
  return out;
}

double cumhist_l2(const CumulativeHistogram& a, const CumulativeHistogram& b) {
  double acc = 0.0;
  for (int l = 0; l < 256; ++l) {
    const double d = a.bins[l] - b.bins[l];
    acc += d * d;
  }
  return std::sqrt(acc);
}

}  // namespace nuc
