#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "weblens/domain.hpp"
#include "weblens/error.hpp"

namespace weblens::csv {

/// Splits one CSV record. Supports RFC 4180 quoting within a single line
/// (no embedded newlines). Returns nullopt on an unterminated quote.
inline std::optional<std::vector<std::string>> split_record(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  if (quoted) return std::nullopt;
  fields.push_back(std::move(field));
  return fields;
}

/// Line-oriented reader that checks the header and yields data rows with
/// their 1-based line numbers. Blank lines are skipped.
class Reader {
 public:
  Reader(std::istream& in, std::string source, std::vector<std::string> header)
      : in_(in), source_(std::move(source)), header_(std::move(header)) {
    std::vector<std::string> got;
    if (!next(got)) throw ParseError(source_, "missing header");
    for (auto& f : got) f = std::string(detail::trim(f));
    if (got != header_) throw ParseError(where(), "unexpected header, expected " + joined_header());
  }

  /// Reads the next row into `fields`; false at end of input.
  bool next(std::vector<std::string>& fields) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (detail::trim(line).empty()) continue;
      auto split = split_record(line);
      if (!split) throw ParseError(where(), "unterminated quoted field");
      fields = std::move(*split);
      if (!header_.empty() && line_no_ > header_line_ && fields.size() != header_.size()) {
        throw ParseError(where(), "expected " + std::to_string(header_.size()) + " fields, got " +
                                      std::to_string(fields.size()));
      }
      if (header_line_ == 0) header_line_ = line_no_;
      return true;
    }
    return false;
  }

  std::string where() const { return source_ + ":" + std::to_string(line_no_); }

 private:
  std::string joined_header() const {
    std::string out;
    for (const auto& h : header_) out += (out.empty() ? "" : ",") + h;
    return out;
  }

  std::istream& in_;
  std::string source_;
  std::vector<std::string> header_;
  std::size_t line_no_ = 0;
  std::size_t header_line_ = 0;
};

}  // namespace weblens::csv
