#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace horton {

// Malformed textual or binary input. Carries the byte offset at which
// parsing gave up, when one is meaningful.
class format_error : public std::runtime_error {
 public:
  enum class kind {
    bad_char,    // unexpected character in text input
    bad_number,  // numeric field empty, overlong, or out of range
    truncated,   // input ended before the structure was complete
    trailing,    // complete value followed by extra input
    bad_header,  // wire header is not an admissible sequence
    index_range, // wire payload index >= space size
    padding,     // nonzero bits in final-byte padding
  };

  format_error(kind k, std::size_t offset, const std::string& what)
      : std::runtime_error(what), kind_(k), offset_(offset) {}

  kind error_kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  kind kind_;
  std::size_t offset_;
};

}  // namespace horton
