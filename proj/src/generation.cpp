#include "grt/generation.hpp"

#include <sstream>

namespace grt {

namespace {

std::string multiplication_message(MultiplicationRuleError::Kind kind, Index r, Index k,
                                   const Integer& numerator, const Integer& divisor) {
  std::ostringstream out;
  if (kind == MultiplicationRuleError::Kind::ZeroNorth) {
    out << "multiplication rule divides by a zero North entry at (r=" << r << ", k=" << k
        << ')';
  } else {
    out << "multiplication rule is inexact at (r=" << r << ", k=" << k
        << "): " << numerator << " is not divisible by " << divisor;
  }
  return out.str();
}

// Seeds a grid of the boundary's size with its edges; interior entries are 0.
std::vector<TriangleGrid::Row> seeded_rows(const Boundary& boundary) {
  boundary.validate();
  const std::size_t n_rows = boundary.rows();
  std::vector<TriangleGrid::Row> rows(n_rows);
  for (std::size_t n = 0; n < n_rows; ++n) {
    rows[n].resize(n + 1);
    rows[n].front() = boundary.major_edge[n];
    rows[n].back() = boundary.minor_edge[n];
  }
  return rows;
}

}  // namespace

void Boundary::validate() const {
  if (major_edge.empty() || major_edge.size() != minor_edge.size()) {
    throw PreconditionError("boundary edges must be non-empty and of equal length");
  }
  if (major_edge.front() != apex || minor_edge.front() != apex) {
    throw PreconditionError("boundary edges must start at the apex");
  }
}

MultiplicationRuleError::MultiplicationRuleError(Kind kind, Index r, Index k,
                                                 Integer numerator, Integer divisor)
    : std::runtime_error(multiplication_message(kind, r, k, numerator, divisor)),
      kind_(kind),
      r_(r),
      k_(k),
      numerator_(std::move(numerator)),
      divisor_(std::move(divisor)) {}

TriangleGrid generate_closed_form(const GrtParams& params, std::size_t n_rows) {
  if (n_rows == 0) throw PreconditionError("a triangle needs at least one row");
  std::vector<TriangleGrid::Row> rows(n_rows);
  for (std::size_t n = 0; n < n_rows; ++n) {
    rows[n].reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      rows[n].push_back(
          closed_form_entry(params, static_cast<Index>(j), static_cast<Index>(n - j)));
    }
  }
  return TriangleGrid(std::move(rows));
}

Boundary boundary_from_params(const GrtParams& params, std::size_t n_rows) {
  if (n_rows == 0) throw PreconditionError("a triangle needs at least one row");
  Boundary boundary{params.c, {}, {}};
  boundary.major_edge.reserve(n_rows);
  boundary.minor_edge.reserve(n_rows);
  for (std::size_t i = 0; i < n_rows; ++i) {
    const auto step = static_cast<Index>(i);
    boundary.major_edge.push_back(params.c + step * params.d1);
    boundary.minor_edge.push_back(params.c + step * params.d2);
  }
  return boundary;
}

TriangleGrid generate_by_addition(const Boundary& boundary, const Integer& d) {
  auto rows = seeded_rows(boundary);
  // Row n, position j is T(j, n-j): West T(j-1, n-j) and East T(j, n-j-1) sit
  // at positions j-1 and j of row n-1; North T(j-1, n-j-1) is position j-1 of
  // row n-2.
  for (std::size_t n = 2; n < rows.size(); ++n) {
    for (std::size_t j = 1; j < n; ++j) {
      rows[n][j] = rows[n - 1][j - 1] + rows[n - 1][j] + d - rows[n - 2][j - 1];
    }
  }
  return TriangleGrid(std::move(rows));
}

TriangleGrid generate_by_multiplication(const Boundary& boundary, const Integer& D) {
  using Kind = MultiplicationRuleError::Kind;
  auto rows = seeded_rows(boundary);
  Integer quotient;
  Integer remainder;
  for (std::size_t n = 2; n < rows.size(); ++n) {
    for (std::size_t j = 1; j < n; ++j) {
      const auto r = static_cast<Index>(j);
      const auto k = static_cast<Index>(n - j);
      const Integer& north = rows[n - 2][j - 1];
      Integer numerator = rows[n - 1][j - 1] * rows[n - 1][j] + D;
      if (north == 0) {
        throw MultiplicationRuleError(Kind::ZeroNorth, r, k, std::move(numerator), north);
      }
      boost::multiprecision::divide_qr(numerator, north, quotient, remainder);
      if (remainder != 0) {
        throw MultiplicationRuleError(Kind::InexactDivision, r, k, std::move(numerator),
                                      north);
      }
      rows[n][j] = quotient;
    }
  }
  return TriangleGrid(std::move(rows));
}

Integer mult_constant(const GrtParams& params) {
  return params.c * params.d - params.d1 * params.d2;
}

}  // namespace grt
