#ifndef NEUTRO_TESTS_SUPPORT_HPP
#define NEUTRO_TESTS_SUPPORT_HPP

// Test-only helpers: synthetic images and a brute-force per-pixel oracle of
// the entropy sweep. The oracle deliberately shares no code with the
// library: it walks the pixel list directly and re-derives every formula.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "neutro/image.hpp"

namespace neutro::testing {

inline GrayImage image_from(const std::vector<int>& levels, Eigen::Index width, int depth = 256) {
  const Eigen::Index height = Eigen::Index(levels.size()) / width;
  LevelMatrix m(height, width);
  for (std::size_t i = 0; i < levels.size(); ++i) m.data()[i] = std::uint16_t(levels[i]);
  return GrayImage(std::move(m), depth);
}

inline GrayImage row_image(const std::vector<int>& levels, int depth = 256) {
  return image_from(levels, Eigen::Index(levels.size()), depth);
}

inline GrayImage random_image(Eigen::Index width, Eigen::Index height, std::uint64_t seed,
                              int depth = 256) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> level(0, depth - 1);
  LevelMatrix m(height, width);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = std::uint16_t(level(rng));
  return GrayImage(std::move(m), depth);
}

/// 8-bit image of `n` pixels drawn from an equal-weight Gaussian mixture,
/// clamped to [0,1] and rounded onto the 255-step grid.
inline GrayImage mixture_image(const std::vector<double>& means, double sigma, std::size_t n,
                               std::uint64_t seed, Eigen::Index width = 100) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, means.size() - 1);
  std::normal_distribution<double> noise(0.0, sigma);
  std::vector<int> levels(n);
  for (auto& l : levels) {
    const double g = std::clamp(means[pick(rng)] + noise(rng), 0.0, 1.0);
    l = int(std::lround(g * 255.0));
  }
  return image_from(levels, width);
}

inline std::vector<double> pixel_grays(const GrayImage& image) {
  std::vector<double> out(std::size_t(image.pixel_count()));
  for (Eigen::Index p = 0; p < image.pixel_count(); ++p)
    out[std::size_t(p)] = double(image.levels().data()[p]) / double(image.depth() - 1);
  return out;
}

struct OracleRow {
  double t, e_t, e_i, e_f, total;
};

namespace oracle {

inline double d(double x, double y) {
  return 2.0 * std::fabs(x - y) / (1.0 + std::fabs(x - 0.5) + std::fabs(y - 0.5));
}

inline double entropy(double T, double I, double F) {
  const double U = std::max(0.0, 1.0 - T - F);
  const double C = std::max(0.0, T + F - 1.0);
  const double pt = (T + U + I / 2.0) / (1.0 + I + U + C);
  const double pf = (F + U + I / 2.0) / (1.0 + I + U + C);
  double s = 0.0;
  if (pt > 0.0) s += pt * std::log(pt);
  if (pf > 0.0) s += pf * std::log(pf);
  return std::min(1.0, std::max(0.0, s / -std::log(2.0)));
}

}  // namespace oracle

/// Literal sweep over the pixel multiset. Candidates are k/q strictly
/// between the darkest and brightest pixel.
inline std::vector<OracleRow> oracle_curve(const std::vector<double>& pixels, int q) {
  const auto [lo_it, hi_it] = std::minmax_element(pixels.begin(), pixels.end());
  const double lo = *lo_it, hi = *hi_it;
  std::vector<OracleRow> rows;
  for (int k = 1; k < q; ++k) {
    const double t = double(k) / double(q);
    if (!(lo < t && t < hi)) continue;

    double s1 = 0, s2 = 0, n1 = 0, n2 = 0;
    for (const double x : pixels) {
      if (x <= t) { s1 += x; n1 += 1; }
      if (x >= t) { s2 += x; n2 += 1; }
    }
    const double v1 = s1 / n1, v2 = s2 / n2;

    double wt = 0, wi = 0, wf = 0, st = 0, si = 0, sf = 0;
    for (const double x : pixels) {
      const double d1 = oracle::d(x, v1), d2 = oracle::d(x, v2), dt = oracle::d(x, t);
      const double dv = std::min(d1, d2);
      double T = 0.5, F = 0.5, I = 1.0;
      if (d1 + d2 - d1 * d2 != 0.0) {
        T = (d2 - d1 * d2) / (d1 + d2 - d1 * d2);
        F = (d1 - d1 * d2) / (d1 + d2 - d1 * d2);
      }
      if (dt + dv - dt * dv != 0.0) I = (dv - dt * dv) / (dt + dv - dt * dv);
      const double e = oracle::entropy(T, I, F);
      wt += T; st += T * e;
      wi += I; si += I * e;
      wf += F; sf += F * e;
    }
    const double et = wt < 1e-12 ? 0.0 : st / wt;
    const double ei = wi < 1e-12 ? 0.0 : si / wi;
    const double ef = wf < 1e-12 ? 0.0 : sf / wf;
    rows.push_back({t, et, ei, ef, (et + ei + ef) / 3.0});
  }
  return rows;
}

/// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("neutrothresh_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace neutro::testing

#endif  // NEUTRO_TESTS_SUPPORT_HPP
