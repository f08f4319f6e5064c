#include "rca/formats.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace rca::io {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Validates blocks of object names against the object list.
class PartitionBuilder {
 public:
  explicit PartitionBuilder(const std::vector<std::string>& objects)
      : objects_(objects), seen_at_(objects.size(), 0) {
    for (std::size_t g = 0; g < objects.size(); ++g) index_.emplace(objects[g], g);
  }

  template <class Names>
  void add_block(const Names& names, std::size_t lineno) {
    std::vector<std::size_t> block;
    for (const auto& raw : names) {
      std::string_view name = raw;
      if (name.empty()) throw ParseError(lineno, 0, "empty object name in block");
      auto it = index_.find(name);
      if (it == index_.end())
        throw ParseError(lineno, 0, "unknown object '" + std::string(name) + "'");
      if (seen_at_[it->second] != 0)
        throw ParseError(lineno, 0, "object '" + std::string(name) +
                                        "' duplicated (first seen on line " +
                                        std::to_string(seen_at_[it->second]) + ")");
      seen_at_[it->second] = lineno;
      block.push_back(it->second);
    }
    if (block.empty()) throw ParseError(lineno, 0, "empty block");
    blocks_.push_back(std::move(block));
  }

  ApproximationSpace finish(std::size_t end_line) const {
    for (std::size_t g = 0; g < objects_.size(); ++g)
      if (seen_at_[g] == 0)
        throw ParseError(end_line, 0, "object not covered: '" + objects_[g] + "'");
    return ApproximationSpace(objects_, blocks_);
  }

 private:
  const std::vector<std::string>& objects_;
  std::unordered_map<std::string_view, std::size_t> index_;
  std::vector<std::size_t> seen_at_;
  std::vector<std::vector<std::size_t>> blocks_;
};

template <class Names>
void require_unique_names(const Names& names, std::size_t lineno_base, bool per_line,
                          std::string_view what) {
  std::unordered_map<std::string_view, std::size_t> seen;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!seen.emplace(names[i], i).second)
      throw ParseError(per_line ? lineno_base + i : lineno_base, per_line ? 0 : i + 2,
                       "duplicate " + std::string(what) + " name '" + std::string(names[i]) + "'");
}

// ---- Burmeister ----------------------------------------------------------

std::size_t parse_count(std::string_view line, std::size_t lineno, std::string_view what) {
  auto t = trim(line);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw ParseError(lineno, 0, "expected " + std::string(what) + " count, got '" +
                                    std::string(line) + "'");
  return value;
}

FormalContext parse_cxt(std::string_view text) {
  const auto lines = split_lines(text);
  auto line_at = [&](std::size_t i, std::string_view expect) -> std::string_view {
    if (i >= lines.size())
      throw ParseError(i + 1, 0, "unexpected end of input, expected " + std::string(expect));
    return lines[i];
  };

  if (trim(line_at(0, "'B'")) != "B") throw ParseError(1, 1, "missing 'B' header");
  line_at(1, "name line");
  const auto n_objects = parse_count(line_at(2, "object count"), 3, "object");
  const auto n_attributes = parse_count(line_at(3, "attribute count"), 4, "attribute");
  if (!trim(line_at(4, "blank line")).empty())
    throw ParseError(5, 1, "expected blank line after the counts");

  std::size_t cursor = 5;
  std::vector<std::string> objects, attributes;
  for (std::size_t i = 0; i < n_objects; ++i, ++cursor)
    objects.emplace_back(trim(line_at(cursor, "object name")));
  for (std::size_t i = 0; i < n_attributes; ++i, ++cursor)
    attributes.emplace_back(trim(line_at(cursor, "attribute name")));

  require_unique_names(objects, 6, true, "object");
  require_unique_names(attributes, 6 + n_objects, true, "attribute");

  std::vector<AttributeSet> rows;
  for (std::size_t g = 0; g < n_objects; ++g, ++cursor) {
    auto line = trim(line_at(cursor, "incidence row " + std::to_string(g + 1)));
    if (line.size() != n_attributes)
      throw ParseError(cursor + 1, 0, "row " + std::to_string(g + 1) + " has " +
                                          std::to_string(line.size()) + " cells, expected " +
                                          std::to_string(n_attributes));
    AttributeSet row(n_attributes);
    for (std::size_t m = 0; m < n_attributes; ++m) {
      const char c = line[m];
      if (c == 'X' || c == 'x')
        row.insert(m);
      else if (c != '.')
        throw ParseError(cursor + 1, m + 1, std::string("unknown symbol '") + c + "'");
    }
    rows.push_back(std::move(row));
  }
  for (std::size_t extra = 1; cursor < lines.size(); ++cursor) {
    if (trim(lines[cursor]).empty()) continue;
    throw ParseError(cursor + 1, 0, "row " + std::to_string(n_objects + extra) +
                                        ": more incidence rows than the " +
                                        std::to_string(n_objects) + " declared objects");
  }

  return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

std::string render_cxt(const FormalContext& ctx) {
  std::string out = "B\n\n" + std::to_string(ctx.object_count()) + "\n" +
                    std::to_string(ctx.attribute_count()) + "\n\n";
  for (const auto& g : ctx.objects()) out += g + "\n";
  for (const auto& m : ctx.attributes()) out += m + "\n";
  for (const auto& row : ctx.rows()) {
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) out += row.contains(m) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

// ---- CSV -----------------------------------------------------------------

std::vector<std::string> split_csv(std::string_view line, std::size_t lineno) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false, was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"' && trim(field).empty()) {
      quoted = was_quoted = true;
      field.clear();
    } else if (c == ',') {
      fields.push_back(was_quoted ? field : std::string(trim(field)));
      field.clear();
      was_quoted = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw ParseError(lineno, line.size(), "unterminated quoted field");
  fields.push_back(was_quoted ? field : std::string(trim(field)));
  return fields;
}

std::string quote_csv(const std::string& s) {
  const bool needs = s.find_first_of(",\"") != std::string::npos || trim(s) != s;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

FormalContext parse_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, 0, "missing header row");
  auto header = split_csv(lines[0], 1);
  std::vector<std::string> attributes(header.begin() + 1, header.end());
  for (std::size_t m = 0; m < attributes.size(); ++m)
    if (attributes[m].empty()) throw ParseError(1, m + 2, "empty attribute name");
  require_unique_names(attributes, 1, false, "attribute");
  std::unordered_map<std::string, std::size_t> object_lines;

  std::vector<std::string> objects;
  std::vector<AttributeSet> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    auto fields = split_csv(lines[i], i + 1);
    if (fields.size() != attributes.size() + 1)
      throw ParseError(i + 1, 0, "ragged row: " + std::to_string(fields.size() - 1) +
                                     " cells, expected " + std::to_string(attributes.size()));
    if (fields[0].empty()) throw ParseError(i + 1, 1, "empty object name");
    if (!object_lines.emplace(fields[0], i + 1).second)
      throw ParseError(i + 1, 1, "duplicate object name '" + fields[0] + "'");
    AttributeSet row(attributes.size());
    for (std::size_t m = 0; m < attributes.size(); ++m) {
      const auto& cell = fields[m + 1];
      if (cell == "X" || cell == "x")
        row.insert(m);
      else if (!cell.empty())
        throw ParseError(i + 1, m + 2, "unknown symbol '" + cell + "'");
    }
    objects.push_back(std::move(fields[0]));
    rows.push_back(std::move(row));
  }
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

std::string render_csv(const FormalContext& ctx) {
  std::string out;
  for (const auto& m : ctx.attributes()) out += "," + quote_csv(m);
  out += '\n';
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    out += quote_csv(ctx.objects()[g]);
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) out += ctx.incident(g, m) ? ",X" : ",";
    out += '\n';
  }
  return out;
}

// ---- JSON ----------------------------------------------------------------

using ojson = nlohmann::ordered_json;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

std::vector<std::string> string_array(const ojson& j, std::string_view key) {
  if (!j.contains(std::string(key)) || !j.at(std::string(key)).is_array())
    throw ParseError(1, 0, "missing array '" + std::string(key) + "'");
  std::vector<std::string> out;
  for (const auto& v : j.at(std::string(key))) {
    if (!v.is_string()) throw ParseError(1, 0, "'" + std::string(key) + "' must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

ContextDocument parse_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte), 0, "malformed JSON");
  }
  if (!j.is_object()) throw ParseError(1, 0, "top-level value must be an object");

  auto objects = string_array(j, "objects");
  auto attributes = string_array(j, "attributes");
  if (!j.contains("incidence") || !j["incidence"].is_array())
    throw ParseError(1, 0, "missing array 'incidence'");
  const auto& incidence = j["incidence"];
  if (incidence.size() != objects.size())
    throw ParseError(1, 0, "ragged incidence: " + std::to_string(incidence.size()) +
                               " rows for " + std::to_string(objects.size()) + " objects");

  std::unordered_map<std::string, std::size_t> attr_index;
  for (std::size_t m = 0; m < attributes.size(); ++m) attr_index.emplace(attributes[m], m);

  std::vector<AttributeSet> rows;
  for (std::size_t g = 0; g < objects.size(); ++g) {
    if (!incidence[g].is_array())
      throw ParseError(1, 0, "incidence row " + std::to_string(g + 1) + " must be an array");
    AttributeSet row(attributes.size());
    for (const auto& v : incidence[g]) {
      auto name = v.is_string() ? v.get<std::string>() : v.dump();
      auto it = attr_index.find(name);
      if (it == attr_index.end())
        throw ParseError(1, 0, "unknown symbol '" + name + "' in incidence row of '" +
                                   objects[g] + "'");
      row.insert(it->second);
    }
    rows.push_back(std::move(row));
  }

  ContextDocument doc;
  doc.format = ContextFormat::json;
  try {
    doc.context = FormalContext(std::move(objects), std::move(attributes), std::move(rows));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::duplicate_name) throw ParseError(1, 0, e.what());
    throw;
  }

  if (j.contains("partition")) {
    if (!j["partition"].is_array()) throw ParseError(1, 0, "'partition' must be an array");
    PartitionBuilder builder(doc.context.objects());
    for (const auto& block : j["partition"]) {
      if (!block.is_array()) throw ParseError(1, 0, "partition blocks must be arrays");
      std::vector<std::string> names;
      for (const auto& name : block) {
        if (!name.is_string()) throw ParseError(1, 0, "partition entries must be strings");
        names.push_back(name.get<std::string>());
      }
      builder.add_block(names, 1);
    }
    doc.partition = builder.finish(1);
  }
  return doc;
}

ojson rows_as_names(const FormalContext& ctx) {
  ojson rows = ojson::array();
  for (const auto& row : ctx.rows()) rows.push_back(ctx.attribute_names(row));
  return rows;
}

std::string render_json(const ContextDocument& doc) {
  ojson j;
  j["objects"] = doc.context.objects();
  j["attributes"] = doc.context.attributes();
  j["incidence"] = rows_as_names(doc.context);
  if (doc.partition) {
    ojson blocks = ojson::array();
    for (const auto& b : doc.partition->blocks()) {
      ojson names = ojson::array();
      b.for_each([&](std::size_t g) { names.push_back(doc.partition->objects()[g]); });
      blocks.push_back(std::move(names));
    }
    j["partition"] = std::move(blocks);
  }
  return j.dump(2) + "\n";
}

// ---- Partition -----------------------------------------------------------

std::vector<std::string_view> split_names(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto end = s.find(',', start);
    out.push_back(trim(s.substr(start, end == std::string_view::npos ? end : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

std::string_view to_string(ContextFormat format) noexcept {
  switch (format) {
    case ContextFormat::cxt: return "cxt";
    case ContextFormat::csv: return "csv";
    case ContextFormat::json: return "json";
  }
  return "json";
}

ContextFormat parse_format_name(std::string_view name) {
  if (name == "cxt") return ContextFormat::cxt;
  if (name == "csv") return ContextFormat::csv;
  if (name == "json") return ContextFormat::json;
  throw Error(ErrorKind::usage, "unknown format '" + std::string(name) + "'");
}

std::optional<ContextFormat> format_from_path(std::string_view path) {
  auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  auto ext = path.substr(dot + 1);
  if (ext == "cxt") return ContextFormat::cxt;
  if (ext == "csv") return ContextFormat::csv;
  if (ext == "json") return ContextFormat::json;
  return std::nullopt;
}

ContextDocument parse_context(std::string_view text, ContextFormat format) {
  switch (format) {
    case ContextFormat::cxt: return {format, parse_cxt(text), std::nullopt};
    case ContextFormat::csv: return {format, parse_csv(text), std::nullopt};
    case ContextFormat::json: return parse_json(text);
  }
  throw Error(ErrorKind::internal, "unhandled context format");
}

std::string render_context(const ContextDocument& doc) {
  switch (doc.format) {
    case ContextFormat::cxt: return render_cxt(doc.context);
    case ContextFormat::csv: return render_csv(doc.context);
    case ContextFormat::json: return render_json(doc);
  }
  throw Error(ErrorKind::internal, "unhandled context format");
}

std::string render_context(const FormalContext& ctx, ContextFormat format) {
  return render_context(ContextDocument{format, ctx, std::nullopt});
}

ApproximationSpace parse_partition(std::string_view text, const std::vector<std::string>& objects) {
  PartitionBuilder builder(objects);
  const auto lines = split_lines(text);

  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = lines[i];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() != '{') {
      builder.add_block(split_names(line), i + 1);
      continue;
    }
    // Brace-group form: {a,b},{c}
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (line[pos] != '{') throw ParseError(i + 1, pos + 1, "expected '{'");
      auto close = line.find('}', pos);
      if (close == std::string_view::npos) throw ParseError(i + 1, pos + 1, "unclosed '{'");
      auto body = trim(line.substr(pos + 1, close - pos - 1));
      if (body.empty()) throw ParseError(i + 1, pos + 1, "empty block");
      builder.add_block(split_names(body), i + 1);
      pos = close + 1;
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      if (pos < line.size()) {
        if (line[pos] != ',') throw ParseError(i + 1, pos + 1, "expected ',' between blocks");
        ++pos;
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      }
    }
  }
  return builder.finish(lines.size() + 1);
}

std::string render_partition(const ApproximationSpace& space) {
  std::string out;
  for (const auto& b : space.blocks()) {
    bool first = true;
    b.for_each([&](std::size_t g) {
      if (!first) out += ',';
      out += space.objects()[g];
      first = false;
    });
    out += '\n';
  }
  return out;
}

}  // namespace rca::io
