#pragma once

#include <stdexcept>
#include <vector>

#include "grt/core.hpp"

namespace grt {

/// Outside diagonals of a triangle: major_edge[k] = T(0,k), minor_edge[r] = T(r,0).
struct Boundary {
  Integer apex;
  std::vector<Integer> major_edge;
  std::vector<Integer> minor_edge;

  /// Both edges must be non-empty, equally long, and start at the apex.
  /// Throws PreconditionError otherwise.
  void validate() const;
  std::size_t rows() const noexcept { return major_edge.size(); }

  friend bool operator==(const Boundary&, const Boundary&) = default;
};

/// Raised when the multiplication recurrence cannot produce an integer entry.
class MultiplicationRuleError : public std::runtime_error {
public:
  enum class Kind { ZeroNorth, InexactDivision };

  MultiplicationRuleError(Kind kind, Index r, Index k, Integer numerator, Integer divisor);

  Kind kind() const noexcept { return kind_; }
  Index r() const noexcept { return r_; }
  Index k() const noexcept { return k_; }
  const Integer& numerator() const noexcept { return numerator_; }
  const Integer& divisor() const noexcept { return divisor_; }

private:
  Kind kind_;
  Index r_;
  Index k_;
  Integer numerator_;
  Integer divisor_;
};

TriangleGrid generate_closed_form(const GrtParams& params, std::size_t n_rows);

Boundary boundary_from_params(const GrtParams& params, std::size_t n_rows);

/// Fills the interior with South = East + West + d - North. Total.
TriangleGrid generate_by_addition(const Boundary& boundary, const Integer& d);

/// Fills the interior with South = (East * West + D) / North, requiring every
/// division to be exact. Throws MultiplicationRuleError at the first cell
/// (row-major order) where that fails.
TriangleGrid generate_by_multiplication(const Boundary& boundary, const Integer& D);

/// D = c*d - d1*d2, the multiplicative constant of T(c, d, d1, d2).
Integer mult_constant(const GrtParams& params);

}  // namespace grt
