#include "neutro/sweep.hpp"

#include <algorithm>
#include <string>

#include "neutro/core.hpp"
#include "neutro/error.hpp"

namespace neutro {

namespace {

constexpr double kEmptyWeight = 1e-12;
// Entropy differences at or below this are treated as round-off.
constexpr double kFlatTolerance = 1e-12;

// Occupied bins of a histogram as parallel (gray value, count) arrays.
struct OccupiedBins {
  Eigen::ArrayXd value;
  Eigen::ArrayXd weight;
  Eigen::Index first_bin = -1;
  Eigen::Index last_bin = -1;
};

OccupiedBins occupied_bins(const Histogram& hist) {
  if (hist.q < 2 || hist.counts.size() != hist.q + 1)
    throw Error(Errc::InvalidArgument, "histogram must have q + 1 bins with q >= 2");

  const Eigen::Index n = (hist.counts.array() > 0).count();
  OccupiedBins bins;
  bins.value.resize(n);
  bins.weight.resize(n);
  Eigen::Index j = 0;
  for (Eigen::Index k = 0; k < hist.counts.size(); ++k) {
    if (hist.counts[k] <= 0) continue;
    if (bins.first_bin < 0) bins.first_bin = k;
    bins.last_bin = k;
    bins.value[j] = hist.bin_value(k);
    bins.weight[j] = double(hist.counts[k]);
    ++j;
  }
  return bins;
}

ClassStats class_stats(const OccupiedBins& bins, double t) {
  if (bins.value.size() == 0 || !(bins.value[0] < t && t < bins.value[bins.value.size() - 1]))
    throw Error(Errc::ThresholdOutOfRange,
                "threshold " + std::to_string(t) + " is not strictly inside the gray range");

  // A bin sitting exactly on t belongs to both classes.
  const Eigen::ArrayXd w1 = (bins.value <= t).select(bins.weight, 0.0);
  const Eigen::ArrayXd w2 = (bins.value >= t).select(bins.weight, 0.0);
  const double n1 = w1.sum();
  const double n2 = w2.sum();

  // Means are accumulated as offsets from each class's first bin, so a class
  // holding a single level reproduces that level exactly.
  const double base1 = bins.value[0];
  Eigen::Index first2 = 0;
  while (!(bins.value[first2] >= t)) ++first2;
  const double base2 = bins.value[first2];

  ClassStats stats;
  stats.t = t;
  stats.v1 = base1 + (w1 * (bins.value - base1)).sum() / n1;
  stats.v2 = base2 + (w2 * (bins.value - base2)).sum() / n2;
  stats.n1 = std::int64_t(n1);
  stats.n2 = std::int64_t(n2);
  return stats;
}

PartialEntropies partial_entropies(const OccupiedBins& bins, double t) {
  const ClassStats stats = class_stats(bins, t);
  const Eigen::Index n = bins.value.size();

  Eigen::ArrayXd truth(n), neutrality(n), falsity(n), entropy(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto tif = neutro_components(bins.value[i], stats.v1, stats.v2, t);
    truth[i] = tif.truth;
    neutrality[i] = tif.neutrality;
    falsity[i] = tif.falsity;
    entropy[i] = neutro_entropy(tif);
  }

  const auto weighted_mean = [&](const Eigen::ArrayXd& membership) {
    const double den = (bins.weight * membership).sum();
    if (den < kEmptyWeight) return 0.0;
    return (bins.weight * membership * entropy).sum() / den;
  };
  return {weighted_mean(truth), weighted_mean(neutrality), weighted_mean(falsity)};
}

}  // namespace

void EntropyCurve::resize(Eigen::Index n) {
  t.resize(n);
  e_truth.resize(n);
  e_neutrality.resize(n);
  e_falsity.resize(n);
  total.resize(n);
}

Histogram build_histogram(const GrayImage& image, int q) {
  if (image.empty()) throw Error(Errc::EmptyImage, "image has no pixels");
  if (q < 2) throw Error(Errc::InvalidArgument, "quantization q must be at least 2");

  Histogram hist;
  hist.q = q;
  hist.counts = CountVector::Zero(q + 1);
  hist.total = image.pixel_count();

  // round(level / (depth-1) * q), half away from zero, in exact integer form.
  const std::int64_t top = image.depth() - 1;
  for (const std::uint16_t level : image.flat()) {
    const std::int64_t bin = (2 * std::int64_t(level) * q + top) / (2 * top);
    ++hist.counts[bin];
  }
  return hist;
}

ClassStats class_stats(const Histogram& hist, double t) {
  return class_stats(occupied_bins(hist), t);
}

Eigen::ArrayXd candidate_thresholds(const Histogram& hist) {
  const OccupiedBins bins = occupied_bins(hist);
  if (bins.value.size() < 2)
    throw Error(Errc::ConstantImage, "constant image: fewer than two distinct gray levels");

  const Eigen::Index lo = std::max<Eigen::Index>(bins.first_bin + 1, 1);
  const Eigen::Index hi = std::min<Eigen::Index>(bins.last_bin - 1, hist.q - 1);
  Eigen::ArrayXd out(std::max<Eigen::Index>(hi - lo + 1, 0));
  for (Eigen::Index k = lo; k <= hi; ++k) out[k - lo] = hist.bin_value(k);
  return out;
}

PartialEntropies partial_entropies(const Histogram& hist, double t) {
  return partial_entropies(occupied_bins(hist), t);
}

EntropyCurve entropy_curve(const Histogram& hist) {
  const Eigen::ArrayXd candidates = candidate_thresholds(hist);
  if (candidates.size() == 0)
    throw Error(Errc::NoCandidates, "no candidate threshold lies strictly between the gray extremes");

  const OccupiedBins bins = occupied_bins(hist);
  EntropyCurve curve;
  curve.q = hist.q;
  curve.resize(candidates.size());
  for (Eigen::Index r = 0; r < candidates.size(); ++r) {
    const PartialEntropies e = partial_entropies(bins, candidates[r]);
    curve.t[r] = candidates[r];
    curve.e_truth[r] = e.truth;
    curve.e_neutrality[r] = e.neutrality;
    curve.e_falsity[r] = e.falsity;
    curve.total[r] = e.total();
  }
  return curve;
}

double minimum_prominence(const Eigen::ArrayXd& values, Eigen::Index first, Eigen::Index last) {
  const double v = values[first];

  double left = v;
  for (Eigen::Index j = first - 1; j >= 0 && values[j] >= v; --j) left = std::max(left, values[j]);

  double right = v;
  for (Eigen::Index j = last + 1; j < values.size() && values[j] >= v; ++j)
    right = std::max(right, values[j]);

  return std::min(left, right) - v;
}

ThresholdSet find_thresholds(const EntropyCurve& curve, const ThresholdOptions& options) {
  if (curve.empty()) throw Error(Errc::InvalidArgument, "entropy curve is empty");
  if (options.max_thresholds < 1) throw Error(Errc::InvalidArgument, "max_thresholds must be >= 1");
  if (!(options.min_relative_prominence >= 0.0 && options.min_relative_prominence <= 1.0))
    throw Error(Errc::InvalidArgument, "relative prominence must lie in [0,1]");

  const Eigen::ArrayXd& e = curve.total;
  const Eigen::Index n = e.size();
  const double range = e.maxCoeff() - e.minCoeff();
  const double min_depth = options.min_relative_prominence * range;

  std::vector<Eigen::Index> minima;
  for (Eigen::Index first = 0; first < n;) {
    Eigen::Index last = first;
    while (last + 1 < n && e[last + 1] == e[first]) ++last;

    const bool interior = first > 0 && last < n - 1;
    if (interior && e[first - 1] > e[first] && e[last + 1] > e[last]) {
      const double depth = minimum_prominence(e, first, last);
      if (depth > kFlatTolerance && depth >= min_depth) minima.push_back((first + last) / 2);
    }
    first = last + 1;
  }

  ThresholdSet out;
  if (minima.empty()) {
    Eigen::Index best = 0;
    for (Eigen::Index r = 1; r < n; ++r)
      if (e[r] < e[best]) best = r;
    out.rows = {best};
    out.fallback_used = true;
  } else {
    if (minima.size() > std::size_t(options.max_thresholds)) {
      std::stable_sort(minima.begin(), minima.end(),
                       [&](Eigen::Index a, Eigen::Index b) { return e[a] < e[b]; });
      minima.resize(std::size_t(options.max_thresholds));
      std::sort(minima.begin(), minima.end());
    }
    out.rows = std::move(minima);
  }

  out.thresholds.reserve(out.rows.size());
  for (const Eigen::Index r : out.rows) out.thresholds.push_back(curve.t[r]);
  return out;
}

}  // namespace neutro
