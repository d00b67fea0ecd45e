#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fmm {

enum class ErrorKind {
  Modulus,    // modulus even or outside [3, 127]
  Domain,     // argument violates an operation's precondition
  Truncated,  // bit or byte stream ended early
  Range,      // decoded value outside the index space
  Format,     // bad magic, version or header field
  Corrupt,    // stream geometry does not match the header
  Parse,      // malformed netpbm input
  Io,         // file system failure
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the codec; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fmm
