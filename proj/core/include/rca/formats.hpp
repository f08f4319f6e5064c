#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rca/approximation_space.hpp"
#include "rca/context.hpp"

namespace rca::io {

enum class ContextFormat { cxt, csv, json };

std::string_view to_string(ContextFormat format) noexcept;

/// "cxt" | "csv" | "json"; anything else is ErrorKind::usage.
ContextFormat parse_format_name(std::string_view name);

/// Guess from a file extension (.cxt, .csv, .json).
std::optional<ContextFormat> format_from_path(std::string_view path);

/// A parsed context file. Only the JSON format carries a partition.
struct ContextDocument {
  ContextFormat format = ContextFormat::json;
  FormalContext context;
  std::optional<ApproximationSpace> partition;

  friend bool operator==(const ContextDocument&, const ContextDocument&) = default;
};

/// Throws ParseError with the 1-based line of the offending input.
///
/// Burmeister .cxt:  "B", a name line (normally blank), object count,
///   attribute count, a blank line, object names, attribute names, then one
///   row of 'X'/'.' per object.
/// CSV:  header = corner cell then attribute names; each further row is an
///   object name followed by cells "X"/"x" (incident) or empty.
/// JSON: {"objects": [...], "attributes": [...], "incidence": [[names of the
///   attributes of object 0], ...], "partition": [[object names], ...]?}
ContextDocument parse_context(std::string_view text, ContextFormat format);

std::string render_context(const ContextDocument& doc);
std::string render_context(const FormalContext& ctx, ContextFormat format);

/// One block per line as comma-separated object names, or a single line of
/// brace groups "{a,b},{c}". '#' starts a comment. Every object of
/// `objects` must occur exactly once.
ApproximationSpace parse_partition(std::string_view text, const std::vector<std::string>& objects);

std::string render_partition(const ApproximationSpace& space);

}  // namespace rca::io
