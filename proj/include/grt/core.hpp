#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace grt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Diagonal coordinate. Always non-negative in valid use; signed so that
/// offsets such as r - 2 can be formed and checked without wrap-around.
using Index = std::int64_t;

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Thrown for (r, k) lookups outside a grid.
class RangeError : public std::out_of_range {
public:
  RangeError(Index r, Index k, std::size_t rows);

  Index r() const noexcept { return r_; }
  Index k() const noexcept { return k_; }
  std::size_t rows() const noexcept { return rows_; }

private:
  Index r_;
  Index k_;
  std::size_t rows_;
};

/// Thrown when a caller violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The four integers defining T(r,k) = c + k*d1 + r*d2 + r*k*d.
struct GrtParams {
  Integer c;
  Integer d;
  Integer d1;
  Integer d2;

  friend bool operator==(const GrtParams&, const GrtParams&) = default;
};

std::string to_string(const GrtParams& params);

/// Jagged triangle of exact integers; row n holds n + 1 entries.
///
/// Position j (from the left) of row n is T(r, k) with r = j and k = n - j,
/// so the left edge is the r = 0 major diagonal and the right edge is the
/// k = 0 minor diagonal.
class TriangleGrid {
public:
  using Row = std::vector<Integer>;

  /// Throws std::invalid_argument unless rows is non-empty and row n has
  /// exactly n + 1 entries.
  explicit TriangleGrid(std::vector<Row> rows);

  std::size_t row_count() const noexcept { return rows_.size(); }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  const Row& row(std::size_t n) const { return rows_.at(n); }

  bool contains(Index r, Index k) const noexcept;

  /// Copy with a single entry replaced; throws RangeError if (r, k) is absent.
  TriangleGrid with_entry(Index r, Index k, Integer value) const;

  friend bool operator==(const TriangleGrid&, const TriangleGrid&) = default;

private:
  std::vector<Row> rows_;
};

/// Square block {(top_r + i, top_k + j) : 0 <= i, j < side} of cells.
struct Diamond {
  Index top_r = 0;
  Index top_k = 0;
  Index side = 2;

  /// Boundary cells, clockwise from the top along the k = top_k minor
  /// diagonal. Each cell appears once; there are 4 * (side - 1) of them.
  std::vector<std::pair<Index, Index>> boundary() const;

  bool fits_in(std::size_t rows) const noexcept;
};

Integer closed_form_entry(const GrtParams& params, Index r, Index k);

/// First `count` terms of major diagonal r: (c + r*d2) + k*(d1 + r*d).
std::vector<Integer> major_diagonal(const GrtParams& params, Index r, std::size_t count);

/// First `count` terms of minor diagonal k: (c + k*d1) + r*(d2 + k*d).
std::vector<Integer> minor_diagonal(const GrtParams& params, Index k, std::size_t count);

/// Stored value at row r + k, left position r.
const Integer& entry_at(const TriangleGrid& grid, Index r, Index k);

}  // namespace grt
