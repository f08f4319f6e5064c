#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rca {

enum class ErrorKind {
  invalid_set,        // index outside the owning universe
  universe_mismatch,  // contexts/spaces over different objects or attributes
  unknown_name,
  duplicate_name,
  lattice_mismatch,   // concept used with a lattice it does not belong to
  resource_limit,
  parse,
  undefined_measure,  // rough measure with an empty premise extent
  usage,
  internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Input-format error carrying a 1-based line (and column when known, else 0).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace rca
