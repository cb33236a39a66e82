#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nuc/image.hpp"

namespace nuc {

/// Per-column monotone transfer functions used to fabricate non-uniformity:
/// phi_j(x) = clamp(round(a_j x + b_j + c_j bump(x))) with bump(x) =
/// 4 x (255-x) / 255^2 (unit peak at mid-range), repaired to monotone by
/// cumulative max. Same seed, same field.
struct NuField {
  std::vector<std::array<std::uint8_t, 256>> transfer;  // one table per column
  std::uint32_t seed = 0;
  double gain_spread = 0.0;       // a_j in [1-alpha, 1+alpha]
  double offset_spread = 0.0;     // b_j in [-beta, beta]
  double curvature_spread = 0.0;  // c_j in [-gamma, gamma]

  int columns() const { return static_cast<int>(transfer.size()); }
};

NuField make_nu_field(int columns, std::uint32_t seed, double alpha, double beta,
                      double gamma);

/// Corrupt an image: per pixel, add seeded Gaussian noise (std noise_sigma),
/// clamp, then push the result through the column's transfer function. The
/// noise goes in before the transfer, like the physical readout chain.
GrayImage apply_nu(const GrayImage& img, const NuField& field, double noise_sigma,
                   std::uint32_t noise_seed);

}  // namespace nuc
