#ifndef NEUTRO_IMGIO_HPP
#define NEUTRO_IMGIO_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "neutro/image.hpp"
#include "neutro/sweep.hpp"

namespace neutro {

/// Header line of the curve CSV.
inline constexpr std::string_view kCurveHeader = "t,e_T,e_I,e_F,E";

/// Parses an 8-bit PGM, ASCII (P2) or binary (P5). The image depth is
/// maxval + 1.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

/// Always emits binary P5 with maxval = depth - 1.
std::vector<std::uint8_t> write_pgm(const GrayImage& image);

/// Curve as CSV: header plus one row per threshold, fixed notation with 11
/// fractional digits, LF line endings. Independent of the global locale.
std::string write_curve(const EntropyCurve& curve);

/// Inverse of write_curve. The quantization is not stored, so `q` is left 0.
EntropyCurve read_curve(std::string_view text);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_file(const std::filesystem::path& path, std::string_view text);

inline GrayImage read_pgm_file(const std::filesystem::path& path) {
  return read_pgm(read_file(path));
}

}  // namespace neutro

#endif  // NEUTRO_IMGIO_HPP
