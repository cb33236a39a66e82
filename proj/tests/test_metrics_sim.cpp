#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "nuc/metrics.hpp"
#include "nuc/random.hpp"
#include "nuc/simulate.hpp"
#include "support/oracles.hpp"
#include "support/test_images.hpp"

using namespace nuc;
using testoracle::apply_lut;
using testoracle::random_monotone_lut;

TEST_CASE("rmse: identical images score zero") {
  const GrayImage img = testimg::random_image(9, 9, 1);
  CHECK(rmse(img, img) == 0.0);
}

TEST_CASE("rmse: a +10 shift without clipping scores exactly 10") {
  const GrayImage u = testimg::scale_into(testimg::wave_landscape(64, 64), 10, 245);
  std::array<std::uint8_t, 256> plus10{};
  for (int v = 0; v < 256; ++v) plus10[v] = clamp_level(v + 10);
  const GrayImage v = apply_lut(u, plus10);
  CHECK(rmse(u, v) == 10.0);
}

TEST_CASE("rmse: hand arithmetic on a 2x1 pair") {
  const GrayImage a(1, 2, std::vector<std::uint8_t>{0, 0});
  const GrayImage b(1, 2, std::vector<std::uint8_t>{3, 4});
  CHECK(rmse(a, b) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-12));
}

TEST_CASE("rmse/rmse_ci: dimension mismatch throws") {
  const GrayImage a(2, 2), b(3, 2);
  CHECK_THROWS_AS(rmse(a, b), std::invalid_argument);
  CHECK_THROWS_AS(rmse_ci(a, b), std::invalid_argument);
}

TEST_CASE("rmse_ci: invariant to a constant shift") {
  const GrayImage u = testimg::scale_into(testimg::wave_landscape(64, 64), 10, 245);
  std::array<std::uint8_t, 256> plus10{};
  for (int v = 0; v < 256; ++v) plus10[v] = clamp_level(v + 10);
  const GrayImage v = apply_lut(u, plus10);
  CHECK(rmse_ci(u, v) == 0.0);
  CHECK(rmse_ci(u, u) == 0.0);
}

TEST_CASE("rmse_ci: near-invariant to any strictly monotone contrast change") {
  const GrayImage u = testimg::shapes_landscape(64, 64, 9);
  Rng rng(33);
  for (int t = 0; t < 8; ++t) {
    const GrayImage v = apply_lut(u, random_monotone_lut(u, rng));
    CHECK(rmse_ci(u, v) <= 0.5);
  }
}

TEST_CASE("rmse_ci: symmetric, bit for bit") {
  Rng rng(41);
  for (int t = 0; t < 5; ++t) {
    const GrayImage u = testimg::random_image(24, 18, 100 + t);
    const GrayImage v = testimg::random_image(24, 18, 200 + t);
    CHECK(rmse_ci(u, v) == rmse_ci(v, u));
  }
}

TEST_CASE("make_nu_field: zero spreads give the identity") {
  const NuField f = make_nu_field(8, 5, 0.0, 0.0, 0.0);
  for (const auto& t : f.transfer)
    for (int x = 0; x < 256; ++x) CHECK(t[x] == x);
}

TEST_CASE("make_nu_field: same seed, same field") {
  const NuField a = make_nu_field(32, 12, 0.1, 10, 10);
  const NuField b = make_nu_field(32, 12, 0.1, 10, 10);
  for (int j = 0; j < 32; ++j) CHECK(a.transfer[j] == b.transfer[j]);
  const NuField c = make_nu_field(32, 13, 0.1, 10, 10);
  bool any_diff = false;
  for (int j = 0; j < 32; ++j) any_diff = any_diff || (a.transfer[j] != c.transfer[j]);
  CHECK(any_diff);
}

TEST_CASE("make_nu_field: transfers are always monotone, even with strong curvature") {
  for (std::uint32_t seed : {1u, 2u, 3u}) {
    const NuField f = make_nu_field(64, seed, 0.3, 20, 60);
    for (const auto& t : f.transfer)
      for (int x = 1; x < 256; ++x) CHECK(t[x] >= t[x - 1]);
  }
}

TEST_CASE("make_nu_field: degenerate parameter ranges are rejected") {
  CHECK_THROWS_AS(make_nu_field(64, 1, 0.0, 5000.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_nu_field(0, 1, 0.1, 10, 10), std::invalid_argument);
  CHECK_THROWS_AS(make_nu_field(4, 1, -0.1, 10, 10), std::invalid_argument);
}

TEST_CASE("make_nu_field: corruption lands in the expected magnitude range") {
  const GrayImage clean = testimg::shapes_landscape(256, 256, 7);
  const NuField f = make_nu_field(256, 1, 0.1, 10, 10);
  const GrayImage corrupted = apply_nu(clean, f, 0.0, 2);
  const double e = rmse(clean, corrupted);
  CHECK(e > 4.0);
  CHECK(e < 50.0);
}

TEST_CASE("apply_nu: identity field and zero noise change nothing") {
  const GrayImage img = testimg::random_image(16, 16, 3);
  const NuField f = make_nu_field(16, 1, 0.0, 0.0, 0.0);
  CHECK(apply_nu(img, f, 0.0, 9) == img);
}

TEST_CASE("apply_nu: offsets-only field shifts each column by its draw") {
  const int m = 12;
  const double beta = 10.0;
  const std::uint32_t seed = 6;
  const NuField f = make_nu_field(m, seed, 0.0, beta, 0.0);

  // replay the generator's draw order: a, b, c per column
  Rng rng(seed);
  std::vector<int> shifts(m);
  for (int j = 0; j < m; ++j) {
    (void)rng.uniform(1.0, 1.0);
    const double b = rng.uniform(-beta, beta);
    (void)rng.uniform(0.0, 0.0);
    shifts[j] = round_half_up(b);
  }

  const GrayImage img(m, 5, std::uint8_t{100});
  const GrayImage out = apply_nu(img, f, 0.0, 1);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < 5; ++i) CHECK(out(i, j) == clamp_level(100 + shifts[j]));
}

TEST_CASE("apply_nu: noise statistics match the requested sigma") {
  const GrayImage flat(256, 256, std::uint8_t{128});
  const NuField identity = make_nu_field(256, 1, 0.0, 0.0, 0.0);
  const GrayImage noisy = apply_nu(flat, identity, 5.0, 77);
  double mean = 0;
  for (auto v : noisy.pixels()) mean += v;
  mean /= noisy.size();
  double var = 0;
  for (auto v : noisy.pixels()) {
    const double d = v - mean;
    var += d * d;
  }
  var /= noisy.size();
  CHECK(std::sqrt(var) == doctest::Approx(5.0).epsilon(0.1));
  CHECK_THROWS_AS(apply_nu(flat, identity, -1.0, 3), std::invalid_argument);
}

TEST_CASE("apply_nu: column count must match") {
  const GrayImage img(8, 8);
  const NuField f = make_nu_field(9, 1, 0.0, 0.0, 0.0);
  CHECK_THROWS_AS(apply_nu(img, f, 0.0, 1), std::invalid_argument);
}

TEST_CASE("evaluate_pair fills all four fields") {
  const GrayImage u = testimg::wave_landscape(32, 32);
  const NuField f = make_nu_field(32, 4, 0.1, 10, 10);
  const GrayImage v = apply_nu(u, f, 0.0, 5);
  const MetricReport r = evaluate_pair(u, v);
  CHECK(r.rmse > 0);
  CHECK(r.rmse_ci >= 0);
  CHECK(r.tv_before == tv_line(u));
  CHECK(r.tv_after == tv_line(v));
}
