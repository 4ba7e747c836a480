#ifndef NEUTRO_SEGMENTER_HPP
#define NEUTRO_SEGMENTER_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "neutro/image.hpp"
#include "neutro/sweep.hpp"

namespace neutro {

using LabelMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Region partition of an image by k sorted thresholds. Region 0 is [0, t1],
/// region j is (tj, tj+1] and region k is (tk, 1].
struct Segmentation {
  std::vector<double> thresholds;
  LabelMatrix labels;
  Eigen::ArrayXd region_values;  // mean gray per region, k + 1 entries
  CountVector region_counts;

  Eigen::Index region_count() const noexcept { return region_values.size(); }
};

/// Region index of a unit-interval gray value.
int region_of(double gray, const std::vector<double>& thresholds);

Segmentation segment(const GrayImage& image, const std::vector<double>& thresholds);

/// Paints every pixel with its region mean, rounded half away from zero onto
/// the image's level grid.
GrayImage render(const Segmentation& seg, const GrayImage& image);

}  // namespace neutro

#endif  // NEUTRO_SEGMENTER_HPP
