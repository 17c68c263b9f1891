#include "declcmp/relation.hpp"

#include <optional>
#include <string>

#include "declcmp/error.hpp"

namespace declcmp {

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Splits one logical CSV record. Quoted fields may contain commas, doubled
// quotes and newlines; `next_line` supplies continuation lines.
template <class NextLine>
std::vector<std::string> split_record(std::string line, NextLine&& next_line, std::size_t lineno) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  std::size_t i = 0;
  while (true) {
    if (i == line.size()) {
      if (!quoted) break;
      auto more = next_line();
      if (!more)
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(lineno) + ": unterminated quoted field");
      cur.push_back('\n');
      line = *more;
      i = 0;
      continue;
    }
    char c = line[i++];
    if (quoted) {
      if (c == '"') {
        if (i < line.size() && line[i] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"' && trim(cur).empty()) {
      cur.clear();
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? cur : std::string(trim(cur)));
      cur.clear();
      was_quoted = false;
    } else if (!(was_quoted && (c == ' ' || c == '\t' || c == '\r'))) {
      cur.push_back(c);
    }
  }
  fields.push_back(was_quoted ? cur : std::string(trim(cur)));
  return fields;
}

bool needs_quotes(const std::string& s) {
  if (s.empty()) return false;
  if (s.find_first_of(",\"\n\r") != std::string::npos) return true;
  return s.front() == ' ' || s.front() == '\t' || s.back() == ' ' || s.back() == '\t';
}

} // namespace

Relation::Relation(std::shared_ptr<const SchemaContext> schema, std::vector<Tuple> tuples)
    : schema_(std::move(schema)), tuples_(std::move(tuples)) {
  for (const auto& t : tuples_)
    if (t.values.size() != schema_->size())
      throw Error(ErrorCode::ArityMismatch,
                  "tuple " + std::to_string(t.row_id) + " does not match the schema arity");
}

Relation load_relation(std::shared_ptr<const SchemaContext> schema, std::istream& in) {
  std::size_t lineno = 0;
  auto next_line = [&]() -> std::optional<std::string> {
    std::string line;
    if (!std::getline(in, line)) return std::nullopt;
    ++lineno;
    return line;
  };

  auto header_line = next_line();
  if (!header_line) throw Error(ErrorCode::HeaderMismatch, "missing header row");
  if (header_line->rfind("\xEF\xBB\xBF", 0) == 0) header_line->erase(0, 3);
  auto header = split_record(*header_line, next_line, lineno);

  const auto n = schema->size();
  if (header.size() != n)
    throw Error(ErrorCode::HeaderMismatch, "header has " + std::to_string(header.size()) +
                                               " columns, schema has " + std::to_string(n));
  std::vector<std::size_t> column_to_attr(n);
  std::vector<bool> seen(n, false);
  for (std::size_t c = 0; c < n; ++c) {
    auto a = schema->find(header[c]);
    if (!a) throw Error(ErrorCode::HeaderMismatch, "unknown column '" + header[c] + "'");
    if (seen[*a]) throw Error(ErrorCode::HeaderMismatch, "duplicate column '" + header[c] + "'");
    seen[*a] = true;
    column_to_attr[c] = *a;
  }

  std::vector<Tuple> tuples;
  while (auto line = next_line()) {
    if (trim(*line).empty()) continue;
    auto start = lineno;
    auto cells = split_record(*line, next_line, start);
    if (cells.size() != n)
      throw Error(ErrorCode::RaggedRow, "line " + std::to_string(start) + ": expected " +
                                            std::to_string(n) + " cells, got " +
                                            std::to_string(cells.size()));
    Tuple t;
    t.row_id = tuples.size();
    t.values.resize(n);
    for (std::size_t c = 0; c < n; ++c) t.values[column_to_attr[c]] = Value::parse_cell(cells[c]);
    tuples.push_back(std::move(t));
  }
  return Relation(std::move(schema), std::move(tuples));
}

void write_relation(const Relation& r, std::ostream& out) {
  auto emit = [&](const std::string& s) {
    if (!needs_quotes(s)) {
      out << s;
      return;
    }
    out << '"';
    for (char c : s) {
      if (c == '"') out << '"';
      out << c;
    }
    out << '"';
  };
  const auto& schema = r.schema();
  for (std::size_t a = 0; a < schema.size(); ++a) {
    if (a) out << ',';
    emit(schema.name(a));
  }
  out << '\n';
  for (const auto& t : r.tuples()) {
    for (std::size_t a = 0; a < t.values.size(); ++a) {
      if (a) out << ',';
      emit(t.values[a].to_string());
    }
    out << '\n';
  }
}

} // namespace declcmp
