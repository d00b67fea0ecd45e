#include "fmm/error.hpp"

namespace fmm {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Modulus: return "modulus";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Truncated: return "truncated";
    case ErrorKind::Range: return "range";
    case ErrorKind::Format: return "format";
    case ErrorKind::Corrupt: return "corrupt";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace fmm
