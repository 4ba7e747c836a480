#ifndef NEUTRO_IMAGE_HPP
#define NEUTRO_IMAGE_HPP

#include <cstdint>

#include <Eigen/Core>

#include "neutro/error.hpp"

namespace neutro {

using LevelMatrix =
    Eigen::Matrix<std::uint16_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Integer gray-level raster. Rows are image rows, so the underlying storage
/// is the usual row-major pixel order. `depth` is the number of source
/// quantization levels (256 for 8-bit); gray value of level l is l/(depth-1).
class GrayImage {
 public:
  GrayImage() = default;

  GrayImage(LevelMatrix levels, int depth) : levels_(std::move(levels)), depth_(depth) {
    if (depth_ < 2) throw Error(Errc::InvalidImage, "image depth must be at least 2");
    if (levels_.size() > 0 && int(levels_.maxCoeff()) >= depth_)
      throw Error(Errc::InvalidImage, "pixel level exceeds image depth");
  }

  Eigen::Index width() const noexcept { return levels_.cols(); }
  Eigen::Index height() const noexcept { return levels_.rows(); }
  Eigen::Index pixel_count() const noexcept { return levels_.size(); }
  bool empty() const noexcept { return levels_.size() == 0; }
  int depth() const noexcept { return depth_; }

  const LevelMatrix& levels() const noexcept { return levels_; }

  /// Row-major flat view.
  auto flat() const noexcept { return Eigen::Map<const Eigen::Array<std::uint16_t, Eigen::Dynamic, 1>>(levels_.data(), levels_.size()); }

  double gray(Eigen::Index flat_index) const noexcept {
    return double(levels_.data()[flat_index]) / double(depth_ - 1);
  }

  friend bool operator==(const GrayImage& a, const GrayImage& b) {
    return a.depth_ == b.depth_ && a.levels_.rows() == b.levels_.rows() &&
           a.levels_.cols() == b.levels_.cols() && a.levels_ == b.levels_;
  }

 private:
  LevelMatrix levels_;
  int depth_ = 256;
};

}  // namespace neutro

#endif  // NEUTRO_IMAGE_HPP
