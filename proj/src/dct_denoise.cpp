#include "nuc/dct_denoise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nuc {

namespace {

// Rows of the orthonormal DCT-II basis: B(u,x) = a(u) cos(pi (2x+1) u / 2n).
std::vector<double> dct_basis(int n) {
  std::vector<double> b(static_cast<std::size_t>(n) * n);
  const double a0 = std::sqrt(1.0 / n);
  const double au = std::sqrt(2.0 / n);
  for (int u = 0; u < n; ++u)
    for (int x = 0; x < n; ++x)
      b[u * n + x] = (u == 0 ? a0 : au) *
                     std::cos(std::numbers::pi * (2.0 * x + 1.0) * u / (2.0 * n));
  return b;
}

// out = B * p * B^T (forward) with p row-major; transposing the basis on both
// sides gives the inverse.
void transform(std::span<const double> in, int n, const std::vector<double>& basis,
               bool forward, std::span<double> out, std::span<double> scratch) {
  // scratch = M * in where M is basis (forward) or basis^T (inverse)
  for (int u = 0; u < n; ++u)
    for (int y = 0; y < n; ++y) {
      double acc = 0.0;
      for (int x = 0; x < n; ++x)
        acc += (forward ? basis[u * n + x] : basis[x * n + u]) * in[x * n + y];
      scratch[u * n + y] = acc;
    }
  // out = scratch * M^T
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      double acc = 0.0;
      for (int y = 0; y < n; ++y)
        acc += scratch[u * n + y] * (forward ? basis[v * n + y] : basis[y * n + v]);
      out[u * n + v] = acc;
    }
}

void check_patch(std::size_t size, int n) {
  if (n < 1 || size != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("dct2: patch is not n x n");
}

}  // namespace

std::vector<double> dct2(std::span<const double> patch, int n) {
  check_patch(patch.size(), n);
  const auto basis = dct_basis(n);
  std::vector<double> out(patch.size()), scratch(patch.size());
  transform(patch, n, basis, true, out, scratch);
  return out;
}

std::vector<double> idct2(std::span<const double> coeffs, int n) {
  check_patch(coeffs.size(), n);
  const auto basis = dct_basis(n);
  std::vector<double> out(coeffs.size()), scratch(coeffs.size());
  transform(coeffs, n, basis, false, out, scratch);
  return out;
}

void threshold_aniso(std::span<double> coeffs, const DenoiseParams& params) {
  const int n = params.patch_size;
  check_patch(coeffs.size(), n);
  if (params.t_i < 0.0 || params.t_j < 0.0)
    throw std::invalid_argument("threshold_aniso: negative threshold");
  const bool cols = params.pattern_orientation == Orientation::columns;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == 0 && v == 0) continue;  // DC holds the patch mean
      const bool pattern_pure = cols ? (u == 0) : (v == 0);
      const double t = cols ? (pattern_pure ? params.t_j : params.t_i)
                            : (pattern_pure ? params.t_i : params.t_j);
      double& c = coeffs[u * n + v];
      if (std::abs(c) < t) c = 0.0;  // equality keeps the coefficient
    }
}

DenoiseResult dct_denoise_aniso(const GrayImage& img, const DenoiseParams& params) {
  if (params.patch_size < 2)
    throw std::invalid_argument("dct_denoise_aniso: patch_size must be >= 2");
  if (params.pattern_orientation == Orientation::rows) {
    // Same code path on the transpose keeps the duality bit-exact.
    DenoiseParams p = params;
    p.pattern_orientation = Orientation::columns;
    std::swap(p.t_i, p.t_j);
    DenoiseResult r = dct_denoise_aniso(img.transposed(), p);
    return {r.image.transposed(), r.applied};
  }

  const int n = params.patch_size;
  const int h = img.height(), w = img.width();
  if (h < n || w < n) return {img, false};

  const auto basis = dct_basis(n);
  std::vector<double> accum(img.size(), 0.0);
  std::vector<std::uint32_t> weight(img.size(), 0);
  std::vector<double> patch(n * n), coeffs(n * n), scratch(n * n);

  for (int y0 = 0; y0 + n <= h; ++y0)
    for (int x0 = 0; x0 + n <= w; ++x0) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) patch[i * n + j] = img(y0 + i, x0 + j);
      transform(patch, n, basis, true, coeffs, scratch);
      threshold_aniso(coeffs, params);
      transform(coeffs, n, basis, false, patch, scratch);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const std::size_t p = std::size_t(y0 + i) * w + (x0 + j);
          accum[p] += patch[i * n + j];
          ++weight[p];
        }
    }

  GrayImage out(w, h);
  for (std::size_t p = 0; p < accum.size(); ++p)
    out.pixels()[p] = clamp_level(round_half_up(accum[p] / weight[p]));
  return {std::move(out), true};
}

}  // namespace nuc
