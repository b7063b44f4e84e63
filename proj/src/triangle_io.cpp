#include "grt/triangle_io.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <sstream>
#include <vector>

namespace grt {

using nlohmann::json;

namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  return !text.empty() &&
         std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

std::string parse_error_message(std::size_t line, const std::string& what) {
  std::ostringstream out;
  out << "line " << line << ": " << what;
  return out.str();
}

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Builds a DOM like nlohmann's own parser, except that integer literals too
// large for 64 bits are kept as their decimal string instead of a double.
class ExactIntegerSax : public nlohmann::json_sax<json> {
public:
  json root;
  std::size_t error_position = 0;
  std::string error_message;

  bool null() override { return add(nullptr); }
  bool boolean(bool value) override { return add(value); }
  bool number_integer(number_integer_t value) override { return add(value); }
  bool number_unsigned(number_unsigned_t value) override { return add(value); }
  bool number_float(number_float_t value, const string_t& raw) override {
    return is_integer_literal(raw) ? add(raw) : add(value);
  }
  bool string(string_t& value) override { return add(value); }
  bool binary(binary_t&) override { return add(nullptr); }
  bool start_object(std::size_t) override {
    stack_.push_back(place(json::object()));
    return true;
  }
  bool key(string_t& value) override {
    key_ = value;
    return true;
  }
  bool end_object() override {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) override {
    stack_.push_back(place(json::array()));
    return true;
  }
  bool end_array() override {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    error_position = position;
    error_message = ex.what();
    return false;
  }

private:
  std::vector<json*> stack_;
  std::string key_;

  json* place(json value) {
    if (stack_.empty()) {
      root = std::move(value);
      return &root;
    }
    json& parent = *stack_.back();
    if (parent.is_array()) {
      parent.push_back(std::move(value));
      return &parent.back();
    }
    parent[key_] = std::move(value);
    return &parent[key_];
  }

  bool add(json value) {
    place(std::move(value));
    return true;
  }
};

Integer json_entry(const json& value, std::size_t row, std::size_t position) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Integer(value.get<std::uint64_t>())
                                      : Integer(value.get<std::int64_t>());
  }
  if (value.is_string() && is_integer_literal(value.get_ref<const std::string&>())) {
    return Integer(value.get_ref<const std::string&>());
  }
  std::ostringstream out;
  out << "row " << row << " entry " << position << " is not an integer: " << value.dump();
  throw ParseError(1, out.str());
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(parse_error_message(line, what)), line_(line) {}

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw std::invalid_argument("not a base-10 integer: '" + std::string(text) + "'");
  }
  return Integer(std::string(text));
}

TriangleGrid parse_plain_rows(std::istream& in) {
  std::vector<TriangleGrid::Row> rows;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    TriangleGrid::Row row;
    std::size_t pos = first;
    while (pos != std::string::npos && pos < line.size()) {
      const auto end = line.find_first_of(" \t", pos);
      const std::string_view token(line.data() + pos,
                                   (end == std::string::npos ? line.size() : end) - pos);
      if (!is_integer_literal(token)) {
        throw ParseError(line_number, "not an integer: '" + std::string(token) + "'");
      }
      row.emplace_back(std::string(token));
      pos = line.find_first_not_of(" \t", end);
    }
    const std::size_t n = rows.size();
    if (row.size() != n + 1) {
      std::ostringstream out;
      out << "row " << n << " needs " << n + 1 << " entries, found " << row.size();
      throw ParseError(line_number, out.str());
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(line_number + 1, "no rows found");
  return TriangleGrid(std::move(rows));
}

TriangleGrid parse_json_rows(const std::string& text) {
  ExactIntegerSax sax;
  if (!json::sax_parse(text, &sax)) {
    throw ParseError(line_of_offset(text, sax.error_position), sax.error_message);
  }
  const json& doc = sax.root;
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw ParseError(1, "expected an object with a \"rows\" array");
  }
  std::vector<TriangleGrid::Row> rows;
  for (const json& entries : doc["rows"]) {
    const std::size_t n = rows.size();
    if (!entries.is_array() || entries.size() != n + 1) {
      std::ostringstream out;
      out << "row " << n << " must be an array of " << n + 1 << " integers";
      throw ParseError(1, out.str());
    }
    TriangleGrid::Row row;
    row.reserve(n + 1);
    for (std::size_t j = 0; j < entries.size(); ++j) row.push_back(json_entry(entries[j], n, j));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(1, "no rows found");
  return TriangleGrid(std::move(rows));
}

TriangleGrid parse_triangle(std::istream& in) {
  const std::string text(std::istreambuf_iterator<char>(in), {});
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json_rows(text);
  std::istringstream stream(text);
  return parse_plain_rows(stream);
}

json json_integer(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

json to_json(const TriangleGrid& grid) {
  json rows = json::array();
  for (const auto& row : grid.rows()) {
    json entries = json::array();
    for (const auto& value : row) entries.push_back(json_integer(value));
    rows.push_back(std::move(entries));
  }
  return json{{"rows", std::move(rows)}};
}

void write_text(std::ostream& out, const TriangleGrid& grid) {
  for (const auto& row : grid.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j != 0) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const TriangleGrid& grid) { out << to_json(grid).dump() << '\n'; }

void write_csv(std::ostream& out, const TriangleGrid& grid) {
  out << "n,r,k,value\n";
  for (std::size_t n = 0; n < grid.row_count(); ++n) {
    const auto& row = grid.row(n);
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << n << ',' << j << ',' << n - j << ',' << row[j] << '\n';
    }
  }
}

}  // namespace grt
