#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "grt/core.hpp"

namespace grt {

enum class DiagonalKind { Major, Minor };

/// An entry that broke an expected value, located by its (r, k) cell.
struct Violation {
  Index r = 0;
  Index k = 0;
  Integer expected;
  Integer actual;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Arithmetic-sequence analysis of one diagonal. Exactly one of
/// common_difference / first_violation is set. Diagonals with at most two
/// entries are always arithmetic and flagged under_determined; a single-entry
/// diagonal reports a difference of 0.
struct DiagonalReport {
  DiagonalKind kind = DiagonalKind::Major;
  Index index = 0;
  std::size_t length = 0;
  Integer first_term;
  std::optional<Integer> common_difference;
  std::optional<Violation> first_violation;
  bool under_determined = false;
};

enum class RuleKind { Addition, Multiplication };

/// Implied constant at the diamond whose South cell is (r, k).
struct RuleWitness {
  Index r = 0;
  Index k = 0;
  Integer implied_constant;

  friend bool operator==(const RuleWitness&, const RuleWitness&) = default;
};

/// Either the constant shared by every interior diamond, or the first two
/// diamonds (scan order) whose implied constants differ.
struct RuleReport {
  RuleKind rule = RuleKind::Addition;
  std::optional<Integer> constant;
  std::optional<std::pair<RuleWitness, RuleWitness>> witnesses;
};

struct GrtVerdict {
  GrtParams params;
};
struct AdditionOnly {
  Integer d;
};
struct MultiplicationOnly {
  Integer D;
};
struct Neither {};

using Verdict = std::variant<GrtVerdict, AdditionOnly, MultiplicationOnly, Neither>;

struct Classification {
  Verdict verdict;
  std::vector<DiagonalReport> diagonal_reports;
  RuleReport addition;
  RuleReport multiplication;
  /// Set when fitting failed; the first entry disagreeing with the fitted form.
  std::optional<Violation> fit_violation;

  bool is_grt() const noexcept { return std::holds_alternative<GrtVerdict>(verdict); }
};

/// Fewer rows than the operation needs.
class UnderDetermined : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// No interior diamond exists (fewer than 3 rows).
class TooSmall : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The fitted closed form disagrees with the grid.
class NotGrt : public std::runtime_error {
public:
  NotGrt(GrtParams fitted, Violation violation);

  const GrtParams& fitted() const noexcept { return fitted_; }
  const Violation& violation() const noexcept { return violation_; }

private:
  GrtParams fitted_;
  Violation violation_;
};

/// Reports for major diagonals r = 0..N-1 followed by minor diagonals k = 0..N-1.
std::vector<DiagonalReport> diagonal_reports(const TriangleGrid& grid);

/// Reads (c, d, d1, d2) off rows 0-2 and verifies every entry in row-major
/// order. Throws UnderDetermined below 3 rows and NotGrt on the first mismatch.
GrtParams fit_grt(const TriangleGrid& grid);

RuleReport detect_addition_rule(const TriangleGrid& grid);

/// Uses D = South * North - East * West, so zero entries never divide.
RuleReport detect_multiplication_rule(const TriangleGrid& grid);

Classification classify(const TriangleGrid& grid);

std::string to_string(DiagonalKind kind);
std::string to_string(RuleKind kind);
std::string verdict_name(const Verdict& verdict);

}  // namespace grt
