// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "neutro/axioms.hpp"
#include "neutro/core.hpp"
#include "neutro/imgio.hpp"
#include "neutro/segmenter.hpp"
#include "neutro/sweep.hpp"
#include "support.hpp"

using namespace neutro;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << "[violated] " << what << "; ";
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Exactly the same equal-weight mixture sampler the unit tests use.
GrayImage mixture(const std::vector<double>& means, double sigma, std::uint64_t seed) {
  return testing::mixture_image(means, sigma, 10000, seed);
}

std::size_t distinct_levels(const GrayImage& img) {
  std::set<int> s;
  for (const auto l : img.flat()) s.insert(l);
  return s.size();
}

Outcome axiom_suite() {
  Outcome o;
  const auto start = Clock::now();
  constexpr std::uint64_t seed = 20181001;
  constexpr std::size_t n = 10000;

  const AxiomCheck corners = check_certainty_corners();
  o.expect(neutro_entropy(1.0, 0.0, 0.0) == 0.0 && neutro_entropy(0.0, 0.0, 1.0) == 0.0,
           "e(1,0,0) = e(0,0,1) = 0 exactly");
  o.expect(corners.passed, corners.name);

  // e(T,I,T) = 1 and e(F,I,F) = 1 are the same statement under renaming.
  const AxiomCheck balanced = check_balanced_maximum(seed, n);
  o.expect(balanced.passed && balanced.samples == n, "e(T,I,T) = 1 within 1e-12");

  const AxiomCheck symmetry = check_truth_falsity_symmetry(seed + 1, n);
  o.expect(symmetry.passed && symmetry.worst_error == 0.0 && symmetry.samples == n,
           "e(T,I,F) = e(F,I,T) exactly");

  const AxiomCheck mono = check_monotonicity(seed + 2, n);
  o.expect(mono.passed && mono.samples == n, "monotonicity within 1e-12 over 1e4 accepted pairs");

  const double elapsed = seconds_since(start);
  o.expect(elapsed < 5.0, "runtime < 5 s");
  o.detail << "worst (ii) " << balanced.worst_error << ", (iii) " << symmetry.worst_error
           << ", (iv) excess " << mono.worst_error << ", " << elapsed << " s";
  return o;
}

Outcome algebraic_identities() {
  Outcome o;
  const AxiomCheck c = check_component_identities(77, 100000);
  o.expect(c.samples == 100000, "1e5 quadruples sampled");
  o.expect(c.worst_error <= 1e-12, "C = 0, U = 1-T-F, p_T+p_F = 1, |T+F-1| = C+U within 1e-12");
  o.detail << "worst deviation " << c.worst_error << " over " << c.samples << " quadruples";
  return o;
}

Outcome component_anchors() {
  Outcome o;
  constexpr double v1 = 0.15, v2 = 0.75, t = 0.3;
  o.expect(std::abs(neutro_components(0.15, v1, v2, t).truth - 1.0) <= 1e-12, "T(0.15) = 1");
  o.expect(std::abs(neutro_components(0.75, v1, v2, t).falsity - 1.0) <= 1e-12, "F(0.75) = 1");
  o.expect(std::abs(neutro_components(0.30, v1, v2, t).neutrality - 1.0) <= 1e-12, "I(0.3) = 1");

  // Shape between the class means, where truth hands over to falsity.
  constexpr int points = 1001;
  double prev_t = 2.0, prev_f = -1.0;
  int t_violations = 0, f_violations = 0;
  for (int k = 0; k < points; ++k) {
    const double x = v1 + (v2 - v1) * double(k) / double(points - 1);
    const auto tif = neutro_components(x, v1, v2, t);
    t_violations += tif.truth > prev_t;
    f_violations += tif.falsity < prev_f;
    prev_t = tif.truth;
    prev_f = tif.falsity;
  }
  o.expect(t_violations == 0, "T non-increasing on the 1001-point grid over [v1, v2]");
  o.expect(f_violations == 0, "F non-decreasing on the 1001-point grid over [v1, v2]");
  o.detail << "1001-point grid on [0.15, 0.75]; monotonicity violations T " << t_violations
           << ", F " << f_violations;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  double worst = 0.0;
  bool rows_match = true;
  for (std::uint64_t k = 0; k < 50; ++k) {
    const GrayImage img = testing::random_image(32, 32, 5000 + k);
    const EntropyCurve c = entropy_curve(build_histogram(img, 255));
    const auto rows = testing::oracle_curve(testing::pixel_grays(img), 255);
    if (std::size_t(c.size()) != rows.size()) {
      rows_match = false;
      continue;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto i = Eigen::Index(r);
      rows_match = rows_match && c.t[i] == rows[r].t;
      worst = std::max({worst, std::abs(c.e_truth[i] - rows[r].e_t),
                        std::abs(c.e_neutrality[i] - rows[r].e_i),
                        std::abs(c.e_falsity[i] - rows[r].e_f), std::abs(c.total[i] - rows[r].total)});
    }
  }
  o.expect(rows_match, "identical candidate grids");
  o.expect(worst <= 1e-12, "every row within 1e-12");
  o.detail << "50 images, worst deviation " << worst;
  return o;
}

Outcome synthetic_bimodal() {
  Outcome o;
  const GrayImage img = mixture({0.25, 0.75}, 0.05, 1);
  const EntropyCurve curve = entropy_curve(build_histogram(img, 255));
  const ThresholdSet set = find_thresholds(curve);

  o.expect(set.thresholds.size() == 1, "exactly one threshold");
  o.expect(!set.fallback_used, "threshold is an interior minimum");
  if (set.thresholds.empty()) return o;
  const double t = set.thresholds.front();
  o.expect(t > 0.25 && t < 0.75, "threshold strictly between the modes");

  // Brute-force confirmation on the raw pixels.
  const auto rows = testing::oracle_curve(testing::pixel_grays(img), 255);
  std::size_t argmin = 0, at = rows.size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].total < rows[argmin].total) argmin = r;
    if (rows[r].t == t) at = r;
  }
  o.expect(at > 0 && at + 1 < rows.size(), "threshold on the oracle grid, interior");
  if (at > 0 && at + 1 < rows.size()) {
    o.expect(rows[at].total < rows[at - 1].total && rows[at].total < rows[at + 1].total,
             "oracle confirms a strict local minimum");
    o.expect(std::abs(double(at) - double(argmin)) <= 1.0, "within one grid step of oracle argmin");
  }
  o.detail << "threshold " << t << " (level " << std::lround(t * 255) << "), oracle argmin t "
           << rows[argmin].t << ", E " << rows[argmin].total;
  return o;
}

Outcome synthetic_trimodal() {
  Outcome o;
  const GrayImage img = mixture({0.15, 0.5, 0.85}, 0.04, 1);
  const EntropyCurve curve = entropy_curve(build_histogram(img, 255));
  const ThresholdSet set = find_thresholds(curve);

  o.expect(set.thresholds.size() == 2, "exactly two thresholds");
  const auto in = [&](double lo, double hi) {
    return std::count_if(set.thresholds.begin(), set.thresholds.end(),
                         [&](double t) { return t > lo && t < hi; });
  };
  o.expect(in(0.15, 0.5) == 1 && in(0.5, 0.85) == 1, "one threshold in each valley");

  const GrayImage rendered = render(segment(img, set.thresholds), img);
  const std::size_t levels = distinct_levels(rendered);
  o.expect(levels == 3, "segmented output has exactly 3 gray levels");

  o.detail << "thresholds";
  for (std::size_t i = 0; i < set.thresholds.size(); ++i)
    o.detail << ' ' << set.thresholds[i] << " (E " << curve.total[set.rows[i]] << ")";
  o.detail << "; rendered levels " << levels;
  return o;
}

Outcome degenerate_inputs() {
  Outcome o;
  testing::TempDir dir;

  write_file(dir / "constant.pgm", write_pgm(testing::row_image({128, 128, 128, 128})));
  std::ostringstream out, err;
  const int code = cli::run({"threshold", (dir / "constant.pgm").string()}, out, err);
  o.expect(code == 2, "constant image exits with status 2");

  const GrayImage two = testing::image_from({51, 204, 204, 51, 51, 204}, 3);
  const EntropyCurve curve = entropy_curve(build_histogram(two, 255));
  const double worst = curve.total.abs().maxCoeff();
  o.expect(worst <= 1e-12, "two-level curve is zero within 1e-12");
  const ThresholdSet set = find_thresholds(curve);
  o.expect(set.thresholds.size() == 1, "single threshold");
  if (!set.thresholds.empty())
    o.expect(set.thresholds[0] > 0.2 && set.thresholds[0] < 0.8, "threshold in (0.2, 0.8)");

  o.detail << "constant exit " << code << "; two-level max |E| " << worst << ", threshold "
           << (set.thresholds.empty() ? -1.0 : set.thresholds[0])
           << (set.fallback_used ? " (fallback)" : " (interior minimum)");
  return o;
}

Outcome performance() {
  Outcome o;
  const GrayImage img = testing::random_image(512, 512, 512);
  const auto start = Clock::now();
  const EntropyCurve curve = entropy_curve(build_histogram(img, 255));
  const ThresholdSet set = find_thresholds(curve);
  const double elapsed = seconds_since(start);
  o.expect(curve.size() == 254, "full candidate grid");
  o.expect(!set.thresholds.empty(), "thresholds produced");
  o.expect(elapsed < 1.0, "sweep under 1 s");
  o.detail << "512x512, " << curve.size() << " candidates, " << elapsed << " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axiom suite (i)-(iv)", axiom_suite},
      {"algebraic identities", algebraic_identities},
      {"component anchors v1=0.15 v2=0.75 t=0.3", component_anchors},
      {"histogram vs per-pixel oracle", oracle_equivalence},
      {"synthetic bimodal", synthetic_bimodal},
      {"synthetic trimodal", synthetic_trimodal},
      {"degenerate inputs", degenerate_inputs},
      {"performance 512x512 Q=255", performance},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << "exception: " << e.what();
    }
    failed += !o.passed;
    std::cout << (o.passed ? "PASS  " : "FAIL  ") << name << ": " << o.detail.str() << '\n';
  }
  std::cout << (criteria.size() - std::size_t(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
