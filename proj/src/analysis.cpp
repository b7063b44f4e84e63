#include "grt/analysis.hpp"

#include <functional>
#include <sstream>

#include "grt/generation.hpp"

namespace grt {

namespace {

std::string not_grt_message(const GrtParams& fitted, const Violation& v) {
  std::ostringstream out;
  out << "not a generalized Rascal triangle: fitted " << to_string(fitted)
      << " predicts " << v.expected << " at (r=" << v.r << ", k=" << v.k << ") but found "
      << v.actual;
  return out.str();
}

DiagonalReport analyse_diagonal(const TriangleGrid& grid, DiagonalKind kind, Index index) {
  const auto n_rows = static_cast<Index>(grid.row_count());
  const Index length = n_rows - index;
  auto cell = [&](Index pos) -> const Integer& {
    return kind == DiagonalKind::Major ? entry_at(grid, index, pos) : entry_at(grid, pos, index);
  };

  DiagonalReport report;
  report.kind = kind;
  report.index = index;
  report.length = static_cast<std::size_t>(length);
  report.first_term = cell(0);
  report.under_determined = length <= 2;

  const Integer difference = length >= 2 ? Integer(cell(1) - cell(0)) : Integer(0);
  for (Index pos = 2; pos < length; ++pos) {
    Integer expected = report.first_term + pos * difference;
    if (cell(pos) != expected) {
      const Index r = kind == DiagonalKind::Major ? index : pos;
      const Index k = kind == DiagonalKind::Major ? pos : index;
      report.first_violation = Violation{r, k, std::move(expected), cell(pos)};
      return report;
    }
  }
  report.common_difference = difference;
  return report;
}

using ImpliedConstant = std::function<Integer(const Integer& south, const Integer& west,
                                              const Integer& east, const Integer& north)>;

RuleReport detect_rule(const TriangleGrid& grid, RuleKind kind, const ImpliedConstant& implied) {
  if (grid.row_count() < 3) {
    throw TooSmall("rule detection needs at least 3 rows (one interior diamond)");
  }
  RuleReport report;
  report.rule = kind;
  std::optional<RuleWitness> first;
  const auto n_rows = static_cast<Index>(grid.row_count());
  for (Index n = 2; n < n_rows; ++n) {
    for (Index r = 1; r < n; ++r) {
      const Index k = n - r;
      Integer value = implied(entry_at(grid, r, k), entry_at(grid, r - 1, k),
                              entry_at(grid, r, k - 1), entry_at(grid, r - 1, k - 1));
      if (!first) {
        first = RuleWitness{r, k, std::move(value)};
      } else if (value != first->implied_constant) {
        report.witnesses = std::make_pair(*first, RuleWitness{r, k, std::move(value)});
        return report;
      }
    }
  }
  report.constant = first->implied_constant;
  return report;
}

}  // namespace

NotGrt::NotGrt(GrtParams fitted, Violation violation)
    : std::runtime_error(not_grt_message(fitted, violation)),
      fitted_(std::move(fitted)),
      violation_(std::move(violation)) {}

std::vector<DiagonalReport> diagonal_reports(const TriangleGrid& grid) {
  std::vector<DiagonalReport> reports;
  const auto n_rows = static_cast<Index>(grid.row_count());
  reports.reserve(2 * grid.row_count());
  for (Index r = 0; r < n_rows; ++r) reports.push_back(analyse_diagonal(grid, DiagonalKind::Major, r));
  for (Index k = 0; k < n_rows; ++k) reports.push_back(analyse_diagonal(grid, DiagonalKind::Minor, k));
  return reports;
}

GrtParams fit_grt(const TriangleGrid& grid) {
  if (grid.row_count() < 3) {
    throw UnderDetermined("fitting needs at least 3 rows");
  }
  const Integer& apex = entry_at(grid, 0, 0);
  const Integer& t01 = entry_at(grid, 0, 1);
  const Integer& t10 = entry_at(grid, 1, 0);
  const Integer& t11 = entry_at(grid, 1, 1);
  GrtParams params{apex, t11 - t01 - t10 + apex, t01 - apex, t10 - apex};

  const auto n_rows = static_cast<Index>(grid.row_count());
  for (Index n = 0; n < n_rows; ++n) {
    for (Index r = 0; r <= n; ++r) {
      const Index k = n - r;
      Integer expected = closed_form_entry(params, r, k);
      const Integer& actual = entry_at(grid, r, k);
      if (actual != expected) {
        throw NotGrt(params, Violation{r, k, std::move(expected), actual});
      }
    }
  }
  return params;
}

RuleReport detect_addition_rule(const TriangleGrid& grid) {
  return detect_rule(grid, RuleKind::Addition,
                     [](const Integer& south, const Integer& west, const Integer& east,
                        const Integer& north) -> Integer { return south - east - west + north; });
}

RuleReport detect_multiplication_rule(const TriangleGrid& grid) {
  return detect_rule(grid, RuleKind::Multiplication,
                     [](const Integer& south, const Integer& west, const Integer& east,
                        const Integer& north) -> Integer { return south * north - east * west; });
}

Classification classify(const TriangleGrid& grid) {
  Classification result{Neither{}, diagonal_reports(grid), detect_addition_rule(grid),
                        detect_multiplication_rule(grid), std::nullopt};
  try {
    GrtParams params = fit_grt(grid);
    // Every GRT obeys both rules with d and c*d - d1*d2.
    if (result.addition.constant != params.d ||
        result.multiplication.constant != mult_constant(params)) {
      throw std::logic_error("fitted triangle disagrees with its detected rule constants");
    }
    result.verdict = GrtVerdict{std::move(params)};
  } catch (const NotGrt& failure) {
    result.fit_violation = failure.violation();
    const bool additive = result.addition.constant.has_value();
    const bool multiplicative = result.multiplication.constant.has_value();
    if (additive && !multiplicative) {
      result.verdict = AdditionOnly{*result.addition.constant};
    } else if (multiplicative && !additive) {
      result.verdict = MultiplicationOnly{*result.multiplication.constant};
    }
  }
  return result;
}

std::string to_string(DiagonalKind kind) {
  return kind == DiagonalKind::Major ? "major" : "minor";
}

std::string to_string(RuleKind kind) {
  return kind == RuleKind::Addition ? "addition" : "multiplication";
}

std::string verdict_name(const Verdict& verdict) {
  struct Namer {
    std::string operator()(const GrtVerdict&) const { return "Grt"; }
    std::string operator()(const AdditionOnly&) const { return "AdditionOnly"; }
    std::string operator()(const MultiplicationOnly&) const { return "MultiplicationOnly"; }
    std::string operator()(const Neither&) const { return "Neither"; }
  };
  return std::visit(Namer{}, verdict);
}

}  // namespace grt
