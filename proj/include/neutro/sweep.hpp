#ifndef NEUTRO_SWEEP_HPP
#define NEUTRO_SWEEP_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "neutro/image.hpp"

namespace neutro {

using CountVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Gray-level multiset of an image, quantized onto the grid {0, 1/q, ..., 1}.
struct Histogram {
  int q = 0;
  CountVector counts;  // q + 1 bins; bin k holds gray value k/q
  std::int64_t total = 0;

  double bin_value(Eigen::Index k) const noexcept { return double(k) / double(q); }
};

struct ClassStats {
  double t = 0.0;
  double v1 = 0.0;  // mean gray of the levels <= t
  double v2 = 0.0;  // mean gray of the levels >= t
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
};

struct PartialEntropies {
  double truth = 0.0;
  double neutrality = 0.0;
  double falsity = 0.0;

  double total() const noexcept { return (truth + neutrality + falsity) / 3.0; }
};

/// Sampled partial and total entropies, one entry per candidate threshold,
/// ascending in t. Columns are stored as parallel arrays.
struct EntropyCurve {
  int q = 0;
  Eigen::ArrayXd t;
  Eigen::ArrayXd e_truth;
  Eigen::ArrayXd e_neutrality;
  Eigen::ArrayXd e_falsity;
  Eigen::ArrayXd total;

  Eigen::Index size() const noexcept { return t.size(); }
  bool empty() const noexcept { return t.size() == 0; }
  void resize(Eigen::Index n);
};

struct ThresholdOptions {
  int max_thresholds = 8;
  /// Minimum depth of a reported minimum, as a fraction of the curve's
  /// dynamic range (max E - min E). Zero keeps every strict local minimum.
  double min_relative_prominence = 0.10;
};

struct ThresholdSet {
  std::vector<double> thresholds;
  std::vector<Eigen::Index> rows;  // curve rows the thresholds came from
  bool fallback_used = false;
};

Histogram build_histogram(const GrayImage& image, int q);

ClassStats class_stats(const Histogram& hist, double t);

/// Grid points k/q strictly between the smallest and largest occupied bins.
/// Throws ConstantImage when fewer than two bins are occupied; the returned
/// list may still be empty when the two extremes are adjacent bins.
Eigen::ArrayXd candidate_thresholds(const Histogram& hist);

PartialEntropies partial_entropies(const Histogram& hist, double t);

EntropyCurve entropy_curve(const Histogram& hist);

/// Local minima of the total entropy. A row (or the centre of a plateau of
/// equal values) is a minimum when both neighbours are strictly higher;
/// the curve endpoints never are. Minima shallower than the configured
/// prominence, or than 1e-12 in absolute terms, are dropped. When more than
/// `max_thresholds` remain, the ones with the lowest E win (ties to smaller
/// t). With no minimum left, the global minimum is returned and
/// `fallback_used` is set.
ThresholdSet find_thresholds(const EntropyCurve& curve, const ThresholdOptions& options = {});

/// Topographic prominence of the minimum plateau [first, last] of `values`:
/// the lower of the two barriers one must climb before reaching a strictly
/// lower value (or the end of the curve), minus the plateau value.
double minimum_prominence(const Eigen::ArrayXd& values, Eigen::Index first, Eigen::Index last);

}  // namespace neutro

#endif  // NEUTRO_SWEEP_HPP
