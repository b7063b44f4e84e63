#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grt/core.hpp"

namespace grt {

/// Where identity checks read entries from: a closed form, or a stored grid
/// (which lets tests perturb single cells).
using EntrySource = std::function<Integer(Index r, Index k)>;

EntrySource closed_form_source(const GrtParams& params);

/// Reads through entry_at; the grid must outlive the returned source.
EntrySource grid_source(const TriangleGrid& grid);

struct IdentityFailure {
  std::vector<Index> location;
  Rational lhs;
  Rational rhs;
};

struct IdentityCheck {
  std::string name;
  bool holds = true;
  std::optional<IdentityFailure> first_failure;
};

/// s_n = (d/6) n^3 + ((d1+d2)/2) n^2 + (c + (d1+d2)/2 - d/6) n + c, evaluated
/// over the rationals. Throws std::logic_error if the value is not integral.
Integer row_sum_formula(const GrtParams& params, Index n);

/// Formula row sum against the direct sum of row n.
IdentityCheck row_sum_check(const EntrySource& entries, const GrtParams& params, Index n);

/// The 8n boundary entries of the side-(2n+1) diamond topped at (top_r, top_k)
/// average to its centre T(top_r + n, top_k + n).
IdentityCheck odd_diamond_check(const GrtParams& params, Index top_r, Index top_k, Index half);
IdentityCheck odd_diamond_check(const EntrySource& entries, Index top_r, Index top_k, Index half);

/// (top_r, top_k) is the top of the inner 2-diamond D_1. The 8n - 4 boundary
/// entries of the side-2n diamond D_n, topped at (top_r - n + 1, top_k - n + 1),
/// average to the mean of D_1's four cells. Requires top_r, top_k >= n - 1.
IdentityCheck even_diamond_check(const GrtParams& params, Index top_r, Index top_k, Index n);
IdentityCheck even_diamond_check(const EntrySource& entries, Index top_r, Index top_k, Index n);

/// T(r,k) = T(r-1,k) + T(r,k-1) - T(r-2,k-1) + ((2-k)d - d2), for r >= 2, k >= 1.
IdentityCheck ashley_check(const GrtParams& params, Index r, Index k);
IdentityCheck ashley_check(const EntrySource& entries, const GrtParams& params, Index r, Index k);

/// The three five-term variants of Ashley's rule that need no diagonal factor.
/// Variant 1 requires r >= 3, k >= 2; variants 2 and 3 require r, k >= 3.
IdentityCheck ashley_mod_check(const GrtParams& params, int variant, Index r, Index k);
IdentityCheck ashley_mod_check(const EntrySource& entries, int variant, Index r, Index k);

/// T(r,k) - T(r-1,k+1) = T(r-1,k-1) - T(r-2,k) = d2 - d1 + (k-r+1)d, for r >= 2, k >= 1.
IdentityCheck column_diff_check(const GrtParams& params, Index r, Index k);
IdentityCheck column_diff_check(const EntrySource& entries, const GrtParams& params, Index r,
                                Index k);

/// T(r,k) = T(r-1,k-1) + T(0,r+k-2) + T(1,r+k-3) + 2(d-c) on T(c, d, 0, 0),
/// for r >= 1, k >= 2.
IdentityCheck t_meg_check(const Integer& c, const Integer& d, Index r, Index k);
/// Throws PreconditionError unless d1 = d2 = 0.
IdentityCheck t_meg_check(const GrtParams& params, Index r, Index k);
IdentityCheck t_meg_check(const EntrySource& entries, const Integer& c, const Integer& d, Index r,
                          Index k);

struct RascalOffset {
  Index r0 = 0;
  Index k0 = 0;

  friend bool operator==(const RascalOffset&, const RascalOffset&) = default;
};

/// Rows checked when confirming an embedding or a multiple.
inline constexpr Index kWindowSize = 10;

/// (d1, d2) when T(params) is the sub-triangle of the Rascal triangle starting
/// at R(d1, d2): requires d = 1, c - d1*d2 = 1 and d1, d2 >= 0.
std::optional<RascalOffset> embed_in_rascal(const GrtParams& params);

/// m when T(params) = m * R, i.e. d = c and d1 = d2 = 0.
std::optional<Integer> multiple_of_rascal(const GrtParams& params);

}  // namespace grt
