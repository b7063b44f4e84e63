#include "grt/identities.hpp"

#include <limits>
#include <sstream>
#include <utility>

namespace grt {

namespace {

IdentityCheck compare(std::string name, std::vector<Index> location, Rational lhs, Rational rhs) {
  IdentityCheck check{std::move(name), lhs == rhs, std::nullopt};
  if (!check.holds) {
    check.first_failure = IdentityFailure{std::move(location), std::move(lhs), std::move(rhs)};
  }
  return check;
}

void require(bool condition, const char* what) {
  if (!condition) throw PreconditionError(what);
}

Rational mean(const Integer& sum, Index count) { return Rational(sum, Integer(count)); }

std::optional<Index> to_index(const Integer& value) {
  if (value < 0 || value > std::numeric_limits<Index>::max()) return std::nullopt;
  return value.convert_to<Index>();
}

}  // namespace

EntrySource closed_form_source(const GrtParams& params) {
  return [params](Index r, Index k) { return closed_form_entry(params, r, k); };
}

EntrySource grid_source(const TriangleGrid& grid) {
  return [&grid](Index r, Index k) { return entry_at(grid, r, k); };
}

Integer row_sum_formula(const GrtParams& params, Index n) {
  require(n >= 0, "row index must be non-negative");
  const Rational cubic(params.d, 6);
  const Rational half_edges(params.d1 + params.d2, 2);
  const Rational x(n);
  const Rational value = cubic * x * x * x + half_edges * x * x +
                         (Rational(params.c) + half_edges - cubic) * x + Rational(params.c);
  if (boost::multiprecision::denominator(value) != 1) {
    std::ostringstream out;
    out << "row sum formula produced non-integer " << to_string(value) << " for "
        << to_string(params) << " at n=" << n;
    throw std::logic_error(out.str());
  }
  return boost::multiprecision::numerator(value);
}

IdentityCheck row_sum_check(const EntrySource& entries, const GrtParams& params, Index n) {
  require(n >= 0, "row index must be non-negative");
  Integer direct = 0;
  for (Index r = 0; r <= n; ++r) direct += entries(r, n - r);
  return compare("rowsums", {n}, Rational(row_sum_formula(params, n)), Rational(direct));
}

IdentityCheck odd_diamond_check(const GrtParams& params, Index top_r, Index top_k, Index half) {
  return odd_diamond_check(closed_form_source(params), top_r, top_k, half);
}

IdentityCheck odd_diamond_check(const EntrySource& entries, Index top_r, Index top_k, Index half) {
  require(top_r >= 0 && top_k >= 0 && half >= 1, "odd diamond needs a valid top and n >= 1");
  const Diamond diamond{top_r, top_k, 2 * half + 1};
  Integer sum = 0;
  for (const auto& [r, k] : diamond.boundary()) sum += entries(r, k);
  return compare("odd-diamond", {top_r, top_k, half}, mean(sum, 8 * half),
                 Rational(entries(top_r + half, top_k + half)));
}

IdentityCheck even_diamond_check(const GrtParams& params, Index top_r, Index top_k, Index n) {
  return even_diamond_check(closed_form_source(params), top_r, top_k, n);
}

IdentityCheck even_diamond_check(const EntrySource& entries, Index top_r, Index top_k, Index n) {
  require(n >= 1 && top_r >= n - 1 && top_k >= n - 1,
          "even diamond needs n >= 1 and an inner top with r, k >= n - 1");
  const Diamond outer{top_r - (n - 1), top_k - (n - 1), 2 * n};
  Integer outer_sum = 0;
  for (const auto& [r, k] : outer.boundary()) outer_sum += entries(r, k);
  const Integer inner_sum = entries(top_r, top_k) + entries(top_r + 1, top_k) +
                            entries(top_r + 1, top_k + 1) + entries(top_r, top_k + 1);
  return compare("even-diamond", {top_r, top_k, n}, mean(outer_sum, 8 * n - 4),
                 mean(inner_sum, 4));
}

IdentityCheck ashley_check(const GrtParams& params, Index r, Index k) {
  return ashley_check(closed_form_source(params), params, r, k);
}

IdentityCheck ashley_check(const EntrySource& entries, const GrtParams& params, Index r, Index k) {
  require(r >= 2 && k >= 1, "Ashley's rule needs r >= 2 and k >= 1");
  const Integer diagonal_factor = (2 - k) * params.d - params.d2;
  const Integer rhs =
      entries(r - 1, k) + entries(r, k - 1) - entries(r - 2, k - 1) + diagonal_factor;
  return compare("ashley", {r, k}, Rational(entries(r, k)), Rational(rhs));
}

IdentityCheck ashley_mod_check(const GrtParams& params, int variant, Index r, Index k) {
  return ashley_mod_check(closed_form_source(params), variant, r, k);
}

IdentityCheck ashley_mod_check(const EntrySource& entries, int variant, Index r, Index k) {
  const auto t = [&](Index dr, Index dk) { return entries(r - dr, k - dk); };
  Integer rhs;
  switch (variant) {
    case 1:
      require(r >= 3 && k >= 2, "modified Ashley rule 1 needs r >= 3 and k >= 2");
      rhs = t(1, 0) + t(0, 1) - t(2, 1) - t(2, 2) + t(3, 2);
      break;
    case 2:
      require(r >= 3 && k >= 3, "modified Ashley rule 2 needs r, k >= 3");
      rhs = t(0, 1) + t(1, 1) - t(2, 2) - t(2, 3) + t(3, 3);
      break;
    case 3:
      require(r >= 3 && k >= 3, "modified Ashley rule 3 needs r, k >= 3");
      rhs = t(1, 0) + t(1, 1) - t(2, 2) - t(3, 2) + t(3, 3);
      break;
    default:
      throw PreconditionError("modified Ashley rule variant must be 1, 2 or 3");
  }
  return compare("ashley-mod" + std::to_string(variant), {r, k}, Rational(t(0, 0)),
                 Rational(rhs));
}

IdentityCheck column_diff_check(const GrtParams& params, Index r, Index k) {
  return column_diff_check(closed_form_source(params), params, r, k);
}

IdentityCheck column_diff_check(const EntrySource& entries, const GrtParams& params, Index r,
                                Index k) {
  require(r >= 2 && k >= 1, "column difference needs r >= 2 and k >= 1");
  const Integer upper = entries(r, k) - entries(r - 1, k + 1);
  const Integer lower = entries(r - 1, k - 1) - entries(r - 2, k);
  auto check = compare("column-diff", {r, k}, Rational(upper), Rational(lower));
  if (!check.holds) return check;
  const Integer predicted = params.d2 - params.d1 + (k - r + 1) * params.d;
  return compare("column-diff", {r, k}, Rational(upper), Rational(predicted));
}

IdentityCheck t_meg_check(const Integer& c, const Integer& d, Index r, Index k) {
  return t_meg_check(closed_form_source(GrtParams{c, d, 0, 0}), c, d, r, k);
}

IdentityCheck t_meg_check(const GrtParams& params, Index r, Index k) {
  require(params.d1 == 0 && params.d2 == 0, "the T-Meg rule only applies when d1 = d2 = 0");
  return t_meg_check(params.c, params.d, r, k);
}

IdentityCheck t_meg_check(const EntrySource& entries, const Integer& c, const Integer& d, Index r,
                          Index k) {
  require(r >= 1 && k >= 2, "the T-Meg rule needs r >= 1 and k >= 2");
  const Integer rhs =
      entries(r - 1, k - 1) + entries(0, r + k - 2) + entries(1, r + k - 3) + 2 * (d - c);
  return compare("tmeg", {r, k}, Rational(entries(r, k)), Rational(rhs));
}

std::optional<RascalOffset> embed_in_rascal(const GrtParams& params) {
  if (params.d != 1 || params.c - params.d1 * params.d2 != 1) return std::nullopt;
  const auto r0 = to_index(params.d1);
  const auto k0 = to_index(params.d2);
  if (!r0 || !k0) return std::nullopt;
  for (Index r = 0; r < kWindowSize; ++r) {
    for (Index k = 0; k < kWindowSize; ++k) {
      if (closed_form_entry(params, r, k) != 1 + (params.d1 + r) * (params.d2 + k)) {
        throw std::logic_error("embedding window disagrees with the Rascal triangle");
      }
    }
  }
  return RascalOffset{*r0, *k0};
}

std::optional<Integer> multiple_of_rascal(const GrtParams& params) {
  if (params.d != params.c || params.d1 != 0 || params.d2 != 0) return std::nullopt;
  for (Index r = 0; r < kWindowSize; ++r) {
    for (Index k = 0; k < kWindowSize; ++k) {
      if (closed_form_entry(params, r, k) != params.c * (1 + r * k)) {
        throw std::logic_error("multiple window disagrees with c * R");
      }
    }
  }
  return params.c;
}

}  // namespace grt
