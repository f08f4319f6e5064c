#include "rca/errors.hpp"

namespace rca {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_set: return "invalid-set";
    case ErrorKind::universe_mismatch: return "universe-mismatch";
    case ErrorKind::unknown_name: return "unknown-name";
    case ErrorKind::duplicate_name: return "duplicate-name";
    case ErrorKind::lattice_mismatch: return "lattice-mismatch";
    case ErrorKind::resource_limit: return "resource-limit";
    case ErrorKind::parse: return "parse";
    case ErrorKind::undefined_measure: return "undefined-measure";
    case ErrorKind::usage: return "usage";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

namespace {

std::string located(std::size_t line, std::size_t column, const std::string& message) {
  std::string out = "line " + std::to_string(line);
  if (column != 0) out += ", column " + std::to_string(column);
  return out + ": " + message;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorKind::parse, located(line, column, message)), line_(line), column_(column) {}

}  // namespace rca
