#include "nuc/simulate.hpp"

#include <stdexcept>

#include "nuc/random.hpp"

namespace nuc {

NuField make_nu_field(int columns, std::uint32_t seed, double alpha, double beta,
                      double gamma) {
  if (columns < 1) throw std::invalid_argument("make_nu_field: columns must be >= 1");
  if (alpha < 0 || beta < 0 || gamma < 0)
    throw std::invalid_argument("make_nu_field: spreads must be >= 0");

  NuField field;
  field.seed = seed;
  field.gain_spread = alpha;
  field.offset_spread = beta;
  field.curvature_spread = gamma;
  field.transfer.resize(columns);

  Rng rng(seed);
  for (int j = 0; j < columns; ++j) {
    const double a = rng.uniform(1.0 - alpha, 1.0 + alpha);
    const double b = rng.uniform(-beta, beta);
    const double c = rng.uniform(-gamma, gamma);
    auto& t = field.transfer[j];
    int prev = 0;
    for (int x = 0; x < 256; ++x) {
      const double bump = 4.0 * x * (255.0 - x) / (255.0 * 255.0);
      int v = round_half_up(a * x + b + c * bump);
      v = v < 0 ? 0 : (v > 255 ? 255 : v);
      if (x > 0 && v < prev) v = prev;  // monotone repair
      t[x] = static_cast<std::uint8_t>(v);
      prev = v;
    }
    if (t[0] == t[255])
      throw std::invalid_argument("make_nu_field: degenerate (constant) transfer");
  }
  return field;
}

GrayImage apply_nu(const GrayImage& img, const NuField& field, double noise_sigma,
                   std::uint32_t noise_seed) {
  if (field.columns() != img.width())
    throw std::invalid_argument("apply_nu: field column count does not match image");
  if (noise_sigma < 0) throw std::invalid_argument("apply_nu: negative noise sigma");

  GrayImage out(img.width(), img.height());
  Rng rng(noise_seed);
  for (int i = 0; i < img.height(); ++i)
    for (int j = 0; j < img.width(); ++j) {
      int v = img(i, j);
      if (noise_sigma > 0.0)
        v = round_half_up(v + rng.gaussian(0.0, noise_sigma));
      out(i, j) = field.transfer[j][clamp_level(v)];
    }
  return out;
}

}  // namespace nuc
