#include "neutro/segmenter.hpp"

#include <algorithm>
#include <cmath>

#include "neutro/error.hpp"

namespace neutro {

int region_of(double gray, const std::vector<double>& thresholds) {
  // Pixels exactly on a threshold go to the lower region.
  return int(std::lower_bound(thresholds.begin(), thresholds.end(), gray) - thresholds.begin());
}

Segmentation segment(const GrayImage& image, const std::vector<double>& thresholds) {
  if (image.empty()) throw Error(Errc::EmptyImage, "image has no pixels");
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (!(thresholds[i] > 0.0 && thresholds[i] < 1.0))
      throw Error(Errc::ThresholdOutOfRange, "thresholds must lie in (0,1)");
    if (i > 0 && !(thresholds[i - 1] < thresholds[i]))
      throw Error(Errc::UnsortedThresholds, "thresholds must be strictly ascending");
  }

  const Eigen::Index regions = Eigen::Index(thresholds.size()) + 1;
  Segmentation seg;
  seg.thresholds = thresholds;
  seg.labels.resize(image.height(), image.width());
  seg.region_counts = CountVector::Zero(regions);

  Eigen::ArrayXd sums = Eigen::ArrayXd::Zero(regions);
  int* label = seg.labels.data();
  for (Eigen::Index p = 0; p < image.pixel_count(); ++p) {
    const double g = image.gray(p);
    const int r = region_of(g, thresholds);
    label[p] = r;
    sums[r] += g;
    ++seg.region_counts[r];
  }

  seg.region_values.resize(regions);
  for (Eigen::Index r = 0; r < regions; ++r) {
    if (seg.region_counts[r] > 0) {
      seg.region_values[r] = sums[r] / double(seg.region_counts[r]);
    } else {
      const double lo = r == 0 ? 0.0 : thresholds[std::size_t(r - 1)];
      const double hi = r == regions - 1 ? 1.0 : thresholds[std::size_t(r)];
      seg.region_values[r] = 0.5 * (lo + hi);
    }
  }
  return seg;
}

GrayImage render(const Segmentation& seg, const GrayImage& image) {
  if (seg.labels.rows() != image.height() || seg.labels.cols() != image.width())
    throw Error(Errc::DimensionMismatch, "segmentation and image dimensions differ");

  const double top = double(image.depth() - 1);
  std::vector<std::uint16_t> palette(std::size_t(seg.region_count()));
  for (Eigen::Index r = 0; r < seg.region_count(); ++r)
    palette[std::size_t(r)] = std::uint16_t(std::lround(seg.region_values[r] * top));

  LevelMatrix out(image.height(), image.width());
  out = seg.labels.unaryExpr([&](int r) { return palette.at(std::size_t(r)); });
  return GrayImage(std::move(out), image.depth());
}

}  // namespace neutro
