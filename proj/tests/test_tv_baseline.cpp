#include <algorithm>
#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "nuc/mire.hpp"
#include "nuc/random.hpp"
#include "nuc/tv_baseline.hpp"
#include "support/oracles.hpp"
#include "support/test_images.hpp"

using namespace nuc;

namespace {

double mean_of(const GrayImage& img) {
  double acc = 0;
  for (auto v : img.pixels()) acc += v;
  return acc / img.size();
}

}  // namespace

TEST_CASE("tv_baseline: constant image is untouched") {
  const GrayImage img(9, 6, std::uint8_t{88});
  const TvBaselineResult r = tv_baseline(img);
  CHECK(r.image == img);
  for (int d : r.offsets) CHECK(d == 0);
  CHECK(r.mean_shift == 0);
  CHECK(r.clipped == 0);
}

TEST_CASE("tv_baseline: single column is the identity") {
  const GrayImage img = testimg::random_image(1, 12, 3);
  CHECK(tv_baseline(img).image == img);
}

TEST_CASE("tv_baseline: constant landscape with per-column offsets flattens") {
  // cols [50, 70, 40]: delta(1) = -20, delta(2) = +10, flat at 50,
  // then +3 restores the mean 160/3 as closely as integers allow
  GrayImage img(3, 4);
  const std::uint8_t levels[3] = {50, 70, 40};
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 4; ++i) img(i, j) = levels[j];

  const TvBaselineResult r = tv_baseline(img);
  CHECK(r.offsets == std::vector<int>{0, -20, 10});
  CHECK(r.mean_shift == 3);
  for (auto v : r.image.pixels()) CHECK(v == 53);
  CHECK(std::abs(mean_of(r.image) - mean_of(img)) <= 0.5);
}

TEST_CASE("tv_baseline: already-smooth image needs almost no offsets") {
  // all columns equal plus faint texture
  GrayImage img = testimg::wave_landscape(64, 64);
  for (int j = 1; j < 64; ++j)
    for (int i = 0; i < 64; ++i) img(i, j) = img(i, 0);
  Rng rng(15);
  GrayImage noisy = img;
  for (auto& v : noisy.pixels()) v = clamp_level(v + round_half_up(rng.gaussian(0, 2.0)));

  const TvBaselineResult exact = tv_baseline(img);
  long sum_abs = 0;
  for (int d : exact.offsets) sum_abs += std::abs(d);
  CHECK(sum_abs == 0);
  CHECK(tv_line(exact.image) == tv_line(img));

  // with faint texture the offsets stay tiny (vs. 8..25 for real striping),
  // and the sweep never increases the line total variation
  const TvBaselineResult r = tv_baseline(noisy);
  sum_abs = 0;
  int max_abs = 0;
  for (int d : r.offsets) {
    sum_abs += std::abs(d);
    max_abs = std::max(max_abs, std::abs(d));
  }
  CHECK(sum_abs <= 64);
  CHECK(max_abs <= 3);
  CHECK(tv_line(r.image) <= tv_line(noisy));
}

TEST_CASE("tv_baseline: every chosen delta is exhaustively optimal") {
  const GrayImage img = testimg::random_image(12, 10, 21);
  const TvBaselineResult r = tv_baseline(img);

  std::vector<int> prev(img.height());
  for (int i = 0; i < img.height(); ++i) prev[i] = img(i, 0);
  for (int j = 0; j + 1 < img.width(); ++j) {
    const int chosen = r.offsets[j + 1];
    long chosen_cost = 0;
    for (int i = 0; i < img.height(); ++i)
      chosen_cost += std::abs(img(i, j + 1) + chosen - prev[i]);
    for (int delta = -255; delta <= 255; ++delta) {
      long cost = 0;
      for (int i = 0; i < img.height(); ++i)
        cost += std::abs(img(i, j + 1) + delta - prev[i]);
      CHECK(cost >= chosen_cost);
    }
    for (int i = 0; i < img.height(); ++i) prev[i] = img(i, j + 1) + chosen;
  }
}

TEST_CASE("tv_baseline: matches the median-of-differences oracle on 50 seeded images") {
  for (std::uint32_t seed = 1; seed <= 50; ++seed) {
    const GrayImage img = testimg::random_image(32, 32, seed);
    const TvBaselineResult r = tv_baseline(img);
    CHECK(r.offsets == testoracle::baseline_offsets(img));
  }
}

TEST_CASE("tv_baseline: mean preserved within half a level, shifts additive per column") {
  for (std::uint32_t seed : {4u, 5u}) {
    // mid-range image: nothing clips, so the additive structure is visible
    const GrayImage img = testimg::random_image(20, 16, seed, 60, 190);
    const TvBaselineResult r = tv_baseline(img);
    CHECK(r.clipped == 0);
    CHECK(std::abs(mean_of(r.image) - mean_of(img)) <= 0.5);
    for (int j = 0; j < img.width(); ++j) {
      const int diff = int(r.image(0, j)) - int(img(0, j));
      for (int i = 0; i < img.height(); ++i)
        CHECK(int(r.image(i, j)) - int(img(i, j)) == diff);
    }
  }
}

TEST_CASE("tv_baseline: clipping is counted") {
  GrayImage img(2, 4);
  const std::uint8_t col0[4] = {255, 255, 255, 200};
  const std::uint8_t col1[4] = {0, 0, 0, 200};
  for (int i = 0; i < 4; ++i) {
    img(i, 0) = col0[i];
    img(i, 1) = col1[i];
  }
  const TvBaselineResult r = tv_baseline(img);
  // delta = 255 (median of {255,255,255,0}), mean shift -127, one pixel at 328
  CHECK(r.offsets == std::vector<int>{0, 255});
  CHECK(r.mean_shift == -127);
  CHECK(r.clipped == 1);
  CHECK(r.image(3, 1) == 255);
  CHECK(r.image(0, 0) == 128);
}

TEST_CASE("tv_baseline: rows orientation works on the transpose") {
  const GrayImage img = testimg::random_image(10, 14, 8);
  CHECK(tv_baseline(img.transposed(), Orientation::rows).image ==
        tv_baseline(img).image.transposed());
}
