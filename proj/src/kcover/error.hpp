#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace kcover {

enum class Errc {
  invalid_argument = 1,
  invalid_edge,
  parse_error,
  unsupported_size,
  no_such_graph,
  domain_error,
  spec_error,
  precondition_failed,
  theorem_violation,
  cap_exceeded,
};

const char* errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above; the C
// layer maps them one-to-one onto kc_status values.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what,
        std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(what), code_(code), offset_(offset) {}

  Errc code() const noexcept { return code_; }
  // Byte offset into the parsed text, for parse errors.
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  Errc code_;
  std::optional<std::size_t> offset_;
};

}  // namespace kcover
