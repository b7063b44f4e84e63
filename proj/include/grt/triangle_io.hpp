#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "grt/core.hpp"

namespace grt {

/// Malformed triangle input; line() is 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Parses a base-10 integer with an optional leading '-'.
/// Throws std::invalid_argument for anything else.
Integer parse_integer(std::string_view text);

/// One row per line, entries separated by spaces or tabs. Blank lines and
/// lines starting with '#' are skipped.
TriangleGrid parse_plain_rows(std::istream& in);

/// {"rows": [[...], ...]}; entries are JSON integers or decimal strings.
TriangleGrid parse_json_rows(const std::string& text);

/// JSON when the first non-blank character is '{', plain rows otherwise.
TriangleGrid parse_triangle(std::istream& in);

/// A JSON number when the value fits in 64 bits, else its decimal string.
nlohmann::json json_integer(const Integer& value);

nlohmann::json to_json(const TriangleGrid& grid);

void write_text(std::ostream& out, const TriangleGrid& grid);
void write_json(std::ostream& out, const TriangleGrid& grid);

/// Header "n,r,k,value", then one line per entry in row-major order.
void write_csv(std::ostream& out, const TriangleGrid& grid);

}  // namespace grt
