#include "neutro/error.hpp"

namespace neutro {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyImage: return "empty image";
    case Errc::InvalidImage: return "invalid image";
    case Errc::InvalidArgument: return "invalid argument";
    case Errc::ThresholdOutOfRange: return "threshold out of range";
    case Errc::ConstantImage: return "constant image";
    case Errc::NoCandidates: return "no candidate thresholds";
    case Errc::UnsortedThresholds: return "unsorted thresholds";
    case Errc::DimensionMismatch: return "dimension mismatch";
    case Errc::BadMagic: return "bad magic";
    case Errc::MalformedHeader: return "malformed header";
    case Errc::TruncatedData: return "truncated data";
    case Errc::MaxvalOutOfRange: return "maxval out of range";
    case Errc::SampleOutOfRange: return "sample out of range";
    case Errc::MalformedCurve: return "malformed curve";
    case Errc::Io: return "i/o error";
  }
  return "unknown error";
}

}  // namespace neutro
