#include "neutro/imgio.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>

#include "neutro/error.hpp"

namespace neutro {

namespace {

class PgmCursor {
 public:
  explicit PgmCursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments.
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  // Returns false at end of input; throws on a non-numeric token.
  bool next_uint(unsigned long& value, Errc on_error) {
    skip_separators();
    if (pos_ >= bytes_.size()) return false;
    const auto* begin = reinterpret_cast<const char*>(bytes_.data() + pos_);
    const auto* end = reinterpret_cast<const char*>(bytes_.data() + bytes_.size());
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || (ptr != end && !std::isspace(static_cast<unsigned char>(*ptr)) && *ptr != '#'))
      throw Error(on_error, "expected an unsigned integer in PGM data");
    pos_ += std::size_t(ptr - begin);
    return true;
  }

  unsigned long header_field(const char* name) {
    unsigned long value = 0;
    if (!next_uint(value, Errc::MalformedHeader))
      throw Error(Errc::TruncatedData, std::string("PGM header ends before ") + name);
    return value;
  }

  std::size_t pos() const noexcept { return pos_; }
  void advance(std::size_t n) noexcept { pos_ += n; }
  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }
  std::uint8_t at(std::size_t i) const { return bytes_[i]; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void append(std::string& out, double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                       std::chars_format::fixed, 11);
  out.append(buf.data(), ptr);
}

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
    throw Error(Errc::BadMagic, "not a P2/P5 PGM file");
  const bool binary = bytes[1] == '5';

  PgmCursor cur(bytes);
  cur.advance(2);
  if (cur.remaining() > 0 && !std::isspace(cur.at(cur.pos())))
    throw Error(Errc::BadMagic, "not a P2/P5 PGM file");

  const unsigned long width = cur.header_field("width");
  const unsigned long height = cur.header_field("height");
  const unsigned long maxval = cur.header_field("maxval");
  if (maxval < 1 || maxval > 255)
    throw Error(Errc::MaxvalOutOfRange, "maxval " + std::to_string(maxval) + " outside 1..255");
  if (width == 0 || height == 0) throw Error(Errc::EmptyImage, "PGM has zero width or height");

  const std::size_t n = std::size_t(width) * std::size_t(height);
  LevelMatrix levels(static_cast<Eigen::Index>(height), static_cast<Eigen::Index>(width));
  std::uint16_t* out = levels.data();

  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (cur.remaining() == 0 || !std::isspace(cur.at(cur.pos())))
      throw Error(Errc::TruncatedData, "missing raster after PGM header");
    cur.advance(1);
    if (cur.remaining() < n)
      throw Error(Errc::TruncatedData, "PGM raster holds fewer than width*height samples");
    for (std::size_t i = 0; i < n; ++i) out[i] = cur.at(cur.pos() + i);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      unsigned long v = 0;
      if (!cur.next_uint(v, Errc::SampleOutOfRange))
        throw Error(Errc::TruncatedData, "PGM raster holds fewer than width*height samples");
      if (v > maxval) throw Error(Errc::SampleOutOfRange, "PGM sample exceeds maxval");
      out[i] = std::uint16_t(v);
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    if (out[i] > maxval) throw Error(Errc::SampleOutOfRange, "PGM sample exceeds maxval");

  return GrayImage(std::move(levels), int(maxval) + 1);
}

std::vector<std::uint8_t> write_pgm(const GrayImage& image) {
  if (image.depth() > 256) throw Error(Errc::MaxvalOutOfRange, "only 8-bit images can be written");

  const std::string header = "P5\n" + std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n" +
                             std::to_string(image.depth() - 1) + "\n";
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  bytes.reserve(bytes.size() + std::size_t(image.pixel_count()));
  for (const std::uint16_t level : image.flat()) bytes.push_back(std::uint8_t(level));
  return bytes;
}

std::string write_curve(const EntropyCurve& curve) {
  std::string out(kCurveHeader);
  out += '\n';
  for (Eigen::Index r = 0; r < curve.size(); ++r) {
    append(out, curve.t[r]);
    out += ',';
    append(out, curve.e_truth[r]);
    out += ',';
    append(out, curve.e_neutrality[r]);
    out += ',';
    append(out, curve.e_falsity[r]);
    out += ',';
    append(out, curve.total[r]);
    out += '\n';
  }
  return out;
}

EntropyCurve read_curve(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    lines.push_back(text.substr(0, eol));
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  if (lines.empty() || lines.front() != kCurveHeader)
    throw Error(Errc::MalformedCurve, "missing curve header");

  EntropyCurve curve;
  curve.resize(Eigen::Index(lines.size() - 1));
  Eigen::ArrayXd* columns[] = {&curve.t, &curve.e_truth, &curve.e_neutrality, &curve.e_falsity,
                               &curve.total};
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const char* p = lines[r].data();
    const char* end = p + lines[r].size();
    for (std::size_t c = 0; c < 5; ++c) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(p, end, v);
      if (ec != std::errc{}) throw Error(Errc::MalformedCurve, "bad number in curve row");
      (*columns[c])[Eigen::Index(r - 1)] = v;
      p = ptr;
      if (c < 4) {
        if (p == end || *p != ',') throw Error(Errc::MalformedCurve, "curve row needs 5 fields");
        ++p;
      }
    }
    if (p != end) throw Error(Errc::MalformedCurve, "trailing data in curve row");
  }
  return curve;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
  if (!out) throw Error(Errc::Io, "write failed for " + path.string());
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

}  // namespace neutro
