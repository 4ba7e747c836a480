#ifndef NEUTRO_ERROR_HPP
#define NEUTRO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace neutro {

enum class Errc {
  EmptyImage,
  InvalidImage,
  InvalidArgument,
  ThresholdOutOfRange,
  ConstantImage,
  NoCandidates,
  UnsortedThresholds,
  DimensionMismatch,
  BadMagic,
  MalformedHeader,
  TruncatedData,
  MaxvalOutOfRange,
  SampleOutOfRange,
  MalformedCurve,
  Io,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace neutro

#endif  // NEUTRO_ERROR_HPP
