// Command line front end: non-uniformity correction (adaptive midway
// equalization + anisotropic DCT denoising), the column-offset TV baseline,
// a nonlinear NU simulator and contrast-invariant quality metrics.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nuc/admire.hpp"
#include "nuc/metrics.hpp"
#include "nuc/pgm_io.hpp"
#include "nuc/simulate.hpp"
#include "nuc/tv_baseline.hpp"

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
      .count();
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string fmt_s(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", s);
  return buf;
}

std::string s_histogram_string(const nuc::AdaptiveMireResult& r) {
  const auto counts = nuc::winner_counts(r);
  std::string out;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (!out.empty()) out += "|";
    out += fmt_s(r.candidates[c]) + ":" + std::to_string(counts[c]);
  }
  return out;
}

const char* orientation_name(nuc::Orientation o) {
  return o == nuc::Orientation::columns ? "columns" : "rows";
}

struct OrientationFlag {
  std::string value = "columns";
  nuc::Orientation parse() const {
    if (value == "columns") return nuc::Orientation::columns;
    if (value == "rows") return nuc::Orientation::rows;
    throw CLI::ValidationError("--orientation must be 'columns' or 'rows'");
  }
};

int run_correct(const std::string& in_path, const std::string& out_path,
                nuc::AdmireParams params, bool csv) {
  const auto t0 = Clock::now();
  const nuc::GrayImage input = nuc::read_pgm(in_path);
  const nuc::AdmireResult result = nuc::admire_pipeline(input, params);
  nuc::write_pgm(result.image, out_path);

  const auto tv_before = nuc::tv_line(input, params.mire.orientation);
  const auto tv_after = nuc::tv_line(result.image, params.mire.orientation);
  const std::string shist = s_histogram_string(result.equalization);
  const long ms = elapsed_ms(t0);

  if (csv) {
    std::printf("input,output,s_step,s_max,patch,stride,orientation,denoise,ti,tj,"
                "s_histogram,tv_before,tv_after,wall_ms\n");
    std::printf("%s,%s,%s,%s,%d,%d,%s,%s,%s,%s,%s,%lld,%lld,%ld\n", in_path.c_str(),
                out_path.c_str(), fmt_s(params.mire.s_step).c_str(),
                fmt_s(params.mire.s_max).c_str(), params.patch_size, params.stride,
                orientation_name(params.mire.orientation),
                params.denoise_enabled ? "on" : "off",
                params.denoise_enabled ? fmt_s(params.denoise.t_i).c_str() : "",
                params.denoise_enabled ? fmt_s(params.denoise.t_j).c_str() : "", shist.c_str(),
                static_cast<long long>(tv_before), static_cast<long long>(tv_after), ms);
  } else {
    std::printf("# command=correct input=%s output=%s\n", in_path.c_str(), out_path.c_str());
    std::printf("# s_step=%s s_max=%s patch=%d stride=%d orientation=%s denoise=%s",
                fmt_s(params.mire.s_step).c_str(), fmt_s(params.mire.s_max).c_str(),
                params.patch_size, params.stride,
                orientation_name(params.mire.orientation),
                params.denoise_enabled ? "on" : "off");
    if (params.denoise_enabled)
      std::printf(" ti=%s tj=%s", fmt_s(params.denoise.t_i).c_str(),
                  fmt_s(params.denoise.t_j).c_str());
    std::printf("\n");
    if (result.equalization.global_fallback)
      std::printf("global_fallback_s=%s\n", fmt_s(result.equalization.fallback_s).c_str());
    std::printf("s_histogram=%s\n", shist.c_str());
    std::printf("tv_before=%lld\n", static_cast<long long>(tv_before));
    std::printf("tv_after=%lld\n", static_cast<long long>(tv_after));
    if (params.denoise_enabled && !result.denoise_applied)
      std::printf("warning=image smaller than one patch, denoising skipped\n");
    std::printf("wall_ms=%ld\n", ms);
  }
  return 0;
}

int run_baseline(const std::string& in_path, const std::string& out_path,
                 nuc::Orientation orientation) {
  const auto t0 = Clock::now();
  const nuc::GrayImage input = nuc::read_pgm(in_path);
  const nuc::TvBaselineResult result = nuc::tv_baseline(input, orientation);
  nuc::write_pgm(result.image, out_path);

  long long abs_offsets = 0;
  for (int d : result.offsets) abs_offsets += std::abs(d);
  std::printf("# command=baseline input=%s output=%s orientation=%s\n", in_path.c_str(),
              out_path.c_str(), orientation_name(orientation));
  std::printf("total_abs_offset=%lld\n", abs_offsets);
  std::printf("mean_shift=%d\n", result.mean_shift);
  std::printf("clipped=%ld\n", result.clipped);
  std::printf("tv_before=%lld\n", static_cast<long long>(nuc::tv_line(input, orientation)));
  std::printf("tv_after=%lld\n",
              static_cast<long long>(nuc::tv_line(result.image, orientation)));
  std::printf("wall_ms=%ld\n", elapsed_ms(t0));
  return 0;
}

int run_simulate(const std::string& in_path, const std::string& out_path,
                 std::uint32_t seed, double alpha, double beta, double gamma,
                 double noise_sigma) {
  const nuc::GrayImage input = nuc::read_pgm(in_path);
  const nuc::NuField field = nuc::make_nu_field(input.width(), seed, alpha, beta, gamma);
  const nuc::GrayImage corrupted = nuc::apply_nu(input, field, noise_sigma, seed + 1);
  nuc::write_pgm(corrupted, out_path);
  std::printf("# command=simulate input=%s output=%s\n", in_path.c_str(), out_path.c_str());
  std::printf("# seed=%u alpha=%s beta=%s gamma=%s noise_sigma=%s\n", seed,
              fmt_s(alpha).c_str(), fmt_s(beta).c_str(), fmt_s(gamma).c_str(),
              fmt_s(noise_sigma).c_str());
  std::printf("rmse_vs_input=%s\n", fmt_double(nuc::rmse(input, corrupted)).c_str());
  return 0;
}

int run_evaluate(const std::string& truth_path, const std::string& test_path,
                 nuc::Orientation orientation, bool csv) {
  const nuc::GrayImage truth = nuc::read_pgm(truth_path);
  const nuc::GrayImage test = nuc::read_pgm(test_path);
  const nuc::MetricReport r = nuc::evaluate_pair(truth, test, orientation);
  if (csv) {
    std::printf("truth,test,rmse,rmse_ci,tv_before,tv_after\n");
    std::printf("%s,%s,%s,%s,%lld,%lld\n", truth_path.c_str(), test_path.c_str(),
                fmt_double(r.rmse).c_str(), fmt_double(r.rmse_ci).c_str(),
                static_cast<long long>(r.tv_before), static_cast<long long>(r.tv_after));
  } else {
    std::printf("# command=evaluate truth=%s test=%s orientation=%s\n", truth_path.c_str(),
                test_path.c_str(), orientation_name(orientation));
    std::printf("rmse=%s\n", fmt_double(r.rmse).c_str());
    std::printf("rmse_ci=%s\n", fmt_double(r.rmse_ci).c_str());
    std::printf("tv_before=%lld\n", static_cast<long long>(r.tv_before));
    std::printf("tv_after=%lld\n", static_cast<long long>(r.tv_after));
  }
  return 0;
}

int run_bench(const std::vector<std::string>& truth_paths, int seed_lo, int seed_hi,
              double alpha, double beta, double gamma, double noise_sigma,
              const nuc::AdmireParams& base_params) {
  std::printf("image,method,rmse,rmse_ci,tv_before,tv_after,s_histogram,wall_ms\n");
  for (const auto& path : truth_paths) {
    const nuc::GrayImage truth = nuc::read_pgm(path);
    std::string stem = path;
    if (const auto slash = stem.find_last_of('/'); slash != std::string::npos)
      stem = stem.substr(slash + 1);
    if (const auto dot = stem.find_last_of('.'); dot != std::string::npos)
      stem = stem.substr(0, dot);

    for (int seed = seed_lo; seed <= seed_hi; ++seed) {
      const nuc::NuField field =
          nuc::make_nu_field(truth.width(), static_cast<std::uint32_t>(seed), alpha,
                             beta, gamma);
      const nuc::GrayImage corrupted =
          nuc::apply_nu(truth, field, noise_sigma, static_cast<std::uint32_t>(seed) + 1);
      const auto tv0 = nuc::tv_line(corrupted);
      const std::string tag = stem + "#" + std::to_string(seed);

      auto emit = [&](const char* method, const nuc::GrayImage& out,
                      const std::string& shist, long ms) {
        std::printf("%s,%s,%s,%s,%lld,%lld,%s,%ld\n", tag.c_str(), method,
                    fmt_double(nuc::rmse(truth, out)).c_str(),
                    fmt_double(nuc::rmse_ci(truth, out)).c_str(),
                    static_cast<long long>(tv0),
                    static_cast<long long>(nuc::tv_line(out)), shist.c_str(), ms);
      };

      emit("identity", corrupted, "", 0);

      {
        nuc::AdmireParams params = base_params;
        params.denoise_enabled = false;
        const auto t0 = Clock::now();
        const nuc::AdmireResult r = nuc::admire_pipeline(corrupted, params);
        const long ms = elapsed_ms(t0);
        emit("admire_nodenoise", r.image, s_histogram_string(r.equalization), ms);
      }
      {
        const auto t0 = Clock::now();
        const nuc::TvBaselineResult r = nuc::tv_baseline(corrupted);
        emit("tvline", r.image, "", elapsed_ms(t0));
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-image non-uniformity correction toolkit"};
  app.require_subcommand(1);

  std::string in_path, out_path, truth_path, test_path;
  OrientationFlag orientation;
  bool csv = false;

  nuc::AdmireParams params;
  params.denoise_enabled = true;
  bool no_denoise = false;
  double ti = 0.0, tj = 0.0;

  auto* correct = app.add_subcommand("correct", "Correct non-uniformity in one image");
  correct->add_option("input", in_path, "input PGM")->required();
  correct->add_option("output", out_path, "output PGM")->required();
  correct->add_flag("--no-denoise", no_denoise, "skip the DCT denoising stage");
  correct->add_option("--s-step", params.mire.s_step, "search increment for s");
  correct->add_option("--s-max", params.mire.s_max, "search upper bound for s");
  correct->add_option("--patch", params.patch_size, "patch side length");
  correct->add_option("--stride", params.stride, "patch origin step");
  correct->add_option("--ti", ti, "DCT threshold, row-axis frequencies");
  correct->add_option("--tj", tj, "DCT threshold, column-axis frequencies");
  correct->add_option("--orientation", orientation.value, "pattern direction: columns|rows");
  correct->add_flag("--csv", csv, "CSV report");

  auto* baseline = app.add_subcommand("baseline", "Column-offset total-variation baseline");
  baseline->add_option("input", in_path, "input PGM")->required();
  baseline->add_option("output", out_path, "output PGM")->required();
  baseline->add_option("--orientation", orientation.value, "pattern direction: columns|rows");

  std::uint32_t seed = 0;
  double alpha = 0.1, beta = 10.0, gamma = 10.0, noise_sigma = 0.0;
  auto* simulate = app.add_subcommand("simulate", "Corrupt an image with synthetic NU");
  simulate->add_option("input", in_path, "clean PGM")->required();
  simulate->add_option("output", out_path, "corrupted PGM")->required();
  simulate->add_option("--seed", seed, "RNG seed")->required();
  simulate->add_option("--alpha", alpha, "gain spread");
  simulate->add_option("--beta", beta, "offset spread");
  simulate->add_option("--gamma", gamma, "curvature spread");
  simulate->add_option("--noise-sigma", noise_sigma, "photon noise std-dev");

  auto* evaluate = app.add_subcommand("evaluate", "Metrics for a (truth, test) pair");
  evaluate->add_option("truth", truth_path, "reference PGM")->required();
  evaluate->add_option("test", test_path, "image under test")->required();
  evaluate->add_option("--orientation", orientation.value, "pattern direction: columns|rows");
  evaluate->add_flag("--csv", csv, "CSV report");

  std::vector<std::string> bench_truths;
  int seed_lo = 1, seed_hi = 10;
  auto* bench = app.add_subcommand("bench", "Corrupt/correct/score experiment grid (CSV)");
  bench->add_option("truth", bench_truths, "clean PGM images")->required()->expected(-1);
  bench->add_option("--seed-min", seed_lo, "first seed");
  bench->add_option("--seed-max", seed_hi, "last seed");
  bench->add_option("--alpha", alpha, "gain spread");
  bench->add_option("--beta", beta, "offset spread");
  bench->add_option("--gamma", gamma, "curvature spread");
  bench->add_option("--noise-sigma", noise_sigma, "photon noise std-dev");
  bench->add_option("--s-step", params.mire.s_step, "search increment for s");
  bench->add_option("--s-max", params.mire.s_max, "search upper bound for s");
  bench->add_option("--patch", params.patch_size, "patch side length");
  bench->add_option("--stride", params.stride, "patch origin step");

  try {
    app.parse(argc, argv);

    params.mire.orientation = orientation.parse();
    params.denoise.pattern_orientation = params.mire.orientation;
    params.denoise.patch_size = params.patch_size;

    if (correct->parsed()) {
      params.denoise_enabled = !no_denoise;
      if (params.denoise_enabled) {
        if (correct->count("--ti") == 0 || correct->count("--tj") == 0)
          throw std::runtime_error("--ti and --tj are required unless --no-denoise is given");
        params.denoise.t_i = ti;
        params.denoise.t_j = tj;
      }
      return run_correct(in_path, out_path, params, csv);
    }
    if (baseline->parsed())
      return run_baseline(in_path, out_path, params.mire.orientation);
    if (simulate->parsed())
      return run_simulate(in_path, out_path, seed, alpha, beta, gamma, noise_sigma);
    if (evaluate->parsed())
      return run_evaluate(truth_path, test_path, params.mire.orientation, csv);
    if (bench->parsed())
      return run_bench(bench_truths, seed_lo, seed_hi, alpha, beta, gamma, noise_sigma,
                       params);
    return 1;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
