#include "grt/core.hpp"

#include <sstream>

namespace grt {

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(value);
  if (boost::multiprecision::denominator(value) != 1) {
    out << '/' << boost::multiprecision::denominator(value);
  }
  return out.str();
}

std::string to_string(const GrtParams& params) {
  std::ostringstream out;
  out << "(c=" << params.c << ", d=" << params.d << ", d1=" << params.d1
      << ", d2=" << params.d2 << ')';
  return out.str();
}

namespace {

std::string range_message(Index r, Index k, std::size_t rows) {
  std::ostringstream out;
  out << "entry (r=" << r << ", k=" << k << ") is outside a triangle of " << rows
      << " rows";
  return out.str();
}

}  // namespace

RangeError::RangeError(Index r, Index k, std::size_t rows)
    : std::out_of_range(range_message(r, k, rows)), r_(r), k_(k), rows_(rows) {}

TriangleGrid::TriangleGrid(std::vector<Row> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) {
    throw std::invalid_argument("a triangle needs at least one row");
  }
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (rows_[n].size() != n + 1) {
      std::ostringstream out;
      out << "row " << n << " has " << rows_[n].size() << " entries, expected "
          << n + 1;
      throw std::invalid_argument(out.str());
    }
  }
}

bool TriangleGrid::contains(Index r, Index k) const noexcept {
  return r >= 0 && k >= 0 && static_cast<std::size_t>(r + k) < rows_.size();
}

TriangleGrid TriangleGrid::with_entry(Index r, Index k, Integer value) const {
  if (!contains(r, k)) {
    throw RangeError(r, k, rows_.size());
  }
  TriangleGrid copy = *this;
  copy.rows_[static_cast<std::size_t>(r + k)][static_cast<std::size_t>(r)] =
      std::move(value);
  return copy;
}

std::vector<std::pair<Index, Index>> Diamond::boundary() const {
  std::vector<std::pair<Index, Index>> cells;
  const Index last = side - 1;
  cells.reserve(static_cast<std::size_t>(4 * last));
  for (Index i = 0; i < last; ++i) cells.emplace_back(top_r + i, top_k);
  for (Index j = 0; j < last; ++j) cells.emplace_back(top_r + last, top_k + j);
  for (Index i = last; i > 0; --i) cells.emplace_back(top_r + i, top_k + last);
  for (Index j = last; j > 0; --j) cells.emplace_back(top_r, top_k + j);
  return cells;
}

bool Diamond::fits_in(std::size_t rows) const noexcept {
  return top_r >= 0 && top_k >= 0 && side >= 2 &&
         top_r + top_k + 2 * (side - 1) <= static_cast<Index>(rows) - 1;
}

Integer closed_form_entry(const GrtParams& params, Index r, Index k) {
  return params.c + k * params.d1 + r * params.d2 + Integer(r) * k * params.d;
}

std::vector<Integer> major_diagonal(const GrtParams& params, Index r, std::size_t count) {
  std::vector<Integer> terms;
  terms.reserve(count);
  const Integer first = params.c + r * params.d2;
  const Integer step = params.d1 + r * params.d;
  for (std::size_t k = 0; k < count; ++k) {
    terms.push_back(first + static_cast<Index>(k) * step);
  }
  return terms;
}

std::vector<Integer> minor_diagonal(const GrtParams& params, Index k, std::size_t count) {
  std::vector<Integer> terms;
  terms.reserve(count);
  const Integer first = params.c + k * params.d1;
  const Integer step = params.d2 + k * params.d;
  for (std::size_t r = 0; r < count; ++r) {
    terms.push_back(first + static_cast<Index>(r) * step);
  }
  return terms;
}

const Integer& entry_at(const TriangleGrid& grid, Index r, Index k) {
  if (!grid.contains(r, k)) {
    throw RangeError(r, k, grid.row_count());
  }
  return grid.rows()[static_cast<std::size_t>(r + k)][static_cast<std::size_t>(r)];
}

}  // namespace grt
