#include "fmm/netpbm.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

#include "fmm/error.hpp"

namespace fmm {

namespace {

class HeaderScanner {
 public:
  explicit HeaderScanner(std::span<const std::uint8_t> data) : data_(data) {}

  std::size_t position() const noexcept { return pos_; }

  void skip_separators() {
    while (pos_ < data_.size()) {
      const auto c = data_[pos_];
      if (c == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n' && data_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::size_t number(const char* field) {
    skip_separators();
    if (pos_ >= data_.size()) {
      throw Error(ErrorKind::Parse, std::string("netpbm ") + field + ": unexpected end of header");
    }
    if (!std::isdigit(data_[pos_])) {
      throw Error(ErrorKind::Parse, std::string("netpbm ") + field + ": expected a decimal number");
    }
    std::size_t v = 0;
    while (pos_ < data_.size() && std::isdigit(data_[pos_])) {
      v = v * 10 + (data_[pos_++] - '0');
      if (v > 0xFFFFFFFFu) throw Error(ErrorKind::Parse, std::string("netpbm ") + field + ": value too large");
    }
    return v;
  }

  // Exactly one whitespace byte separates maxval from the payload.
  void single_whitespace(const char* field) {
    if (pos_ >= data_.size() || !std::isspace(data_[pos_])) {
      throw Error(ErrorKind::Parse, std::string("netpbm ") + field + ": missing whitespace before payload");
    }
    ++pos_;
  }

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

}  // namespace

RasterImage read_netpbm(std::span<const std::uint8_t> data) {
  if (data.size() < 2 || data[0] != 'P' || (data[1] != '5' && data[1] != '6')) {
    throw Error(ErrorKind::Parse, "netpbm magic: expected P5 or P6");
  }
  const std::size_t channels = data[1] == '5' ? 1 : 3;
  HeaderScanner scan(data.subspan(2));
  const std::size_t width = scan.number("width");
  const std::size_t height = scan.number("height");
  const std::size_t maxval = scan.number("maxval");
  if (width == 0 || height == 0) throw Error(ErrorKind::Parse, "netpbm width/height: must be >= 1");
  if (maxval != 255) {
    throw Error(ErrorKind::Parse, "netpbm maxval: " + std::to_string(maxval) + " unsupported, need 255");
  }
  scan.single_whitespace("maxval");

  const std::size_t offset = 2 + scan.position();
  const std::size_t available = data.size() - offset;
  if (available / channels / width < height) {
    throw Error(ErrorKind::Parse, "netpbm payload: short payload, expected " +
                                      std::to_string(width * height * channels) + " bytes, got " +
                                      std::to_string(available));
  }
  const std::size_t n = width * height * channels;
  const auto payload = data.subspan(offset, n);
  return RasterImage(width, height, channels, std::vector<std::uint8_t>(payload.begin(), payload.end()));
}

std::vector<std::uint8_t> write_netpbm(const RasterImage& image) {
  const std::string header = std::string(image.channels() == 1 ? "P5" : "P6") + "\n" +
                             std::to_string(image.width()) + " " + std::to_string(image.height()) +
                             "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), image.samples().begin(), image.samples().end());
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) throw Error(ErrorKind::Io, path.string() + " is a directory");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorKind::Io, "read failed: " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::Io, "write failed: " + path.string());
}

}  // namespace fmm
