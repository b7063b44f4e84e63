#include "grt/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "grt/analysis.hpp"
#include "grt/generation.hpp"
#include "grt/identities.hpp"
#include "grt/triangle_io.hpp"

namespace grt::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> kAllChecks = {
    "rowsums",     "odd-diamond", "even-diamond", "ashley", "ashley-mod1", "ashley-mod2",
    "ashley-mod3", "column-diff", "tmeg",         "embed",  "multiple"};

const CLI::Validator kIntegerText(
    [](std::string& text) -> std::string {
      try {
        parse_integer(text);
        return {};
      } catch (const std::invalid_argument& ex) {
        return ex.what();
      }
    },
    "INTEGER");

struct ParamOptions {
  std::string c = "0";
  std::string d = "0";
  std::string d1 = "0";
  std::string d2 = "0";
  std::vector<CLI::Option*> options;

  void attach(CLI::App& app) {
    options = {app.add_option("--c", c, "apex entry T(0,0)")->check(kIntegerText),
               app.add_option("--d", d, "additive constant (rk coefficient)")->check(kIntegerText),
               app.add_option("--d1", d1, "difference along the r = 0 edge")->check(kIntegerText),
               app.add_option("--d2", d2, "difference along the k = 0 edge")->check(kIntegerText)};
  }

  bool any_given() const {
    return std::any_of(options.begin(), options.end(),
                       [](const CLI::Option* opt) { return opt->count() > 0; });
  }

  GrtParams params() const {
    return {parse_integer(c), parse_integer(d), parse_integer(d1), parse_integer(d2)};
  }
};

json params_json(const GrtParams& params) {
  return json{{"c", json_integer(params.c)},
              {"d", json_integer(params.d)},
              {"d1", json_integer(params.d1)},
              {"d2", json_integer(params.d2)}};
}

json violation_json(const Violation& v) {
  return json{{"r", v.r}, {"k", v.k}, {"expected", json_integer(v.expected)},
              {"actual", json_integer(v.actual)}};
}

std::string cell(Index r, Index k) {
  std::ostringstream out;
  out << "(r=" << r << ", k=" << k << ')';
  return out.str();
}

// Reads the triangle named by --input, "-" meaning `in`.
TriangleGrid read_input(const std::string& path, std::istream& in) {
  if (path == "-") return parse_triangle(in);
  std::ifstream file(path);
  if (!file) throw CLI::ValidationError("--input", "cannot open '" + path + "'");
  return parse_triangle(file);
}

// ---------------------------------------------------------------- generate

struct GenerateOptions {
  ParamOptions params;
  std::size_t rows = 0;
  std::string rule = "closed";
  std::string format = "text";
};

int cmd_generate(const GenerateOptions& opts, std::ostream& out, std::ostream& err) {
  const GrtParams params = opts.params.params();
  std::optional<TriangleGrid> grid;
  try {
    if (opts.rule == "closed") {
      grid = generate_closed_form(params, opts.rows);
    } else if (opts.rule == "add") {
      grid = generate_by_addition(boundary_from_params(params, opts.rows), params.d);
    } else {
      grid = generate_by_multiplication(boundary_from_params(params, opts.rows),
                                        mult_constant(params));
    }
  } catch (const MultiplicationRuleError& ex) {
    err << "generate: " << ex.what() << '\n';
    return kArithmeticFailure;
  }

  std::ostringstream buffer;
  if (opts.format == "json") {
    write_json(buffer, *grid);
  } else if (opts.format == "csv") {
    write_csv(buffer, *grid);
  } else {
    write_text(buffer, *grid);
  }
  out << buffer.str();
  return kSuccess;
}

// ---------------------------------------------------------------- classify

struct ClassifyOptions {
  std::string input;
  std::string format = "text";
};

std::string rule_summary(const RuleReport& report) {
  std::ostringstream out;
  out << to_string(report.rule) << " rule: ";
  if (report.constant) {
    out << "constant " << *report.constant;
  } else {
    const auto& [a, b] = *report.witnesses;
    out << "no common constant; diamond at " << cell(a.r, a.k) << " implies "
        << a.implied_constant << ", diamond at " << cell(b.r, b.k) << " implies "
        << b.implied_constant;
  }
  return out.str();
}

json rule_json(const RuleReport& report) {
  json result{{"rule", to_string(report.rule)}};
  if (report.constant) {
    result["constant"] = json_integer(*report.constant);
  } else {
    json witnesses = json::array();
    for (const RuleWitness* w : {&report.witnesses->first, &report.witnesses->second}) {
      witnesses.push_back({{"r", w->r}, {"k", w->k}, {"implied", json_integer(w->implied_constant)}});
    }
    result["witnesses"] = std::move(witnesses);
  }
  return result;
}

void write_classification_text(std::ostream& out, const Classification& result) {
  out << "verdict: " << verdict_name(result.verdict) << '\n';
  if (const auto* grt = std::get_if<GrtVerdict>(&result.verdict)) {
    out << "params: " << to_string(grt->params) << '\n';
  }
  if (result.fit_violation) {
    const auto& v = *result.fit_violation;
    out << "fit: first mismatch at " << cell(v.r, v.k) << ": expected " << v.expected
        << ", found " << v.actual << '\n';
  }
  out << rule_summary(result.addition) << '\n';
  out << rule_summary(result.multiplication) << '\n';
  for (const auto& report : result.diagonal_reports) {
    out << to_string(report.kind) << " diagonal " << (report.kind == DiagonalKind::Major ? "r=" : "k=")
        << report.index << ": first " << report.first_term;
    if (report.common_difference) {
      out << ", difference " << *report.common_difference;
      if (report.under_determined) out << " (under-determined)";
    } else {
      const auto& v = *report.first_violation;
      out << ", not arithmetic at " << cell(v.r, v.k) << ": expected " << v.expected
          << ", found " << v.actual;
    }
    out << '\n';
  }
}

json classification_json(const Classification& result) {
  json doc{{"verdict", verdict_name(result.verdict)}};
  std::visit(
      [&doc](const auto& verdict) {
        using V = std::decay_t<decltype(verdict)>;
        if constexpr (std::is_same_v<V, GrtVerdict>) {
          doc["params"] = params_json(verdict.params);
        } else if constexpr (std::is_same_v<V, AdditionOnly>) {
          doc["d"] = json_integer(verdict.d);
        } else if constexpr (std::is_same_v<V, MultiplicationOnly>) {
          doc["D"] = json_integer(verdict.D);
        }
      },
      result.verdict);
  doc["fit_violation"] = result.fit_violation ? violation_json(*result.fit_violation) : json();
  doc["rules"] = json::array({rule_json(result.addition), rule_json(result.multiplication)});
  json diagonals = json::array();
  for (const auto& report : result.diagonal_reports) {
    json entry{{"kind", to_string(report.kind)},
               {"index", report.index},
               {"length", report.length},
               {"first_term", json_integer(report.first_term)},
               {"under_determined", report.under_determined}};
    entry["common_difference"] =
        report.common_difference ? json_integer(*report.common_difference) : json();
    entry["violation"] = report.first_violation ? violation_json(*report.first_violation) : json();
    diagonals.push_back(std::move(entry));
  }
  doc["diagonals"] = std::move(diagonals);
  return doc;
}

void write_classification_csv(std::ostream& out, const Classification& result) {
  out << "kind,index,length,first_term,common_difference,under_determined,violation_r,"
         "violation_k,expected,actual\n";
  for (const auto& report : result.diagonal_reports) {
    out << to_string(report.kind) << ',' << report.index << ',' << report.length << ','
        << report.first_term << ',';
    if (report.common_difference) out << *report.common_difference;
    out << ',' << (report.under_determined ? "true" : "false") << ',';
    if (report.first_violation) {
      const auto& v = *report.first_violation;
      out << v.r << ',' << v.k << ',' << v.expected << ',' << v.actual;
    } else {
      out << ",,,";
    }
    out << '\n';
  }
}

int cmd_classify(const ClassifyOptions& opts, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  const TriangleGrid grid = read_input(opts.input, in);
  if (grid.row_count() < 3) {
    err << "classify: need at least 3 rows, found " << grid.row_count() << '\n';
    return kMalformedInput;
  }
  const Classification result = classify(grid);

  std::ostringstream buffer;
  if (opts.format == "json") {
    buffer << classification_json(result).dump(2) << '\n';
  } else if (opts.format == "csv") {
    write_classification_csv(buffer, result);
  } else {
    write_classification_text(buffer, result);
  }
  out << buffer.str();
  return result.is_grt() ? kSuccess : kNegative;
}

// ---------------------------------------------------------------- props

struct PropsOptions {
  ParamOptions params;
  std::string input;
  std::vector<std::string> checks;
  std::optional<std::size_t> depth;
  std::string format = "text";
};

enum class Status { Holds, Fails, Inapplicable, Reported };

struct CheckOutcome {
  std::string name;
  Status status = Status::Holds;
  std::size_t cases = 0;
  std::optional<IdentityFailure> failure{};
  std::string note{};
  std::vector<std::string> details{};
  json extra = json::object();
};

struct PropsContext {
  GrtParams params;
  EntrySource entries;
  Index max_row = 0;  // largest row index any referenced entry may use
};

using CaseVisitor = std::function<IdentityCheck()>;

// Runs `check` on each case produced by `enumerate`, stopping at the first failure.
CheckOutcome run_cases(const std::string& name,
                       const std::function<void(const std::function<bool(const CaseVisitor&)>&)>& enumerate) {
  CheckOutcome outcome{name};
  enumerate([&outcome](const CaseVisitor& visit) {
    IdentityCheck check = visit();
    ++outcome.cases;
    if (!check.holds) {
      outcome.status = Status::Fails;
      outcome.failure = std::move(check.first_failure);
      return false;
    }
    return true;
  });
  return outcome;
}

using Emit = std::function<bool(const CaseVisitor&)>;

// Visits (r, k) with r >= min_r, k >= min_k and r + k <= max_row.
void for_cells(Index min_r, Index min_k, Index max_row, const Emit& emit,
               const std::function<IdentityCheck(Index, Index)>& check) {
  for (Index n = min_r + min_k; n <= max_row; ++n) {
    for (Index r = min_r; r <= n - min_k; ++r) {
      if (!emit([&] { return check(r, n - r); })) return;
    }
  }
}

CheckOutcome run_check(const std::string& name, const PropsContext& ctx) {
  const auto& p = ctx.params;
  const auto& entries = ctx.entries;
  const Index max_row = ctx.max_row;

  if (name == "rowsums") {
    auto outcome = run_cases(name, [&](const Emit& emit) {
      for (Index n = 0; n <= max_row; ++n) {
        if (!emit([&] { return row_sum_check(entries, p, n); })) return;
      }
    });
    if (outcome.status == Status::Holds) {
      json sums = json::array();
      for (Index n = 0; n <= max_row; ++n) {
        const Integer s = row_sum_formula(p, n);
        outcome.details.push_back("s_" + std::to_string(n) + " = " + to_string(s));
        sums.push_back(json_integer(s));
      }
      outcome.extra["row_sums"] = std::move(sums);
    }
    return outcome;
  }
  if (name == "odd-diamond") {
    return run_cases(name, [&](const Emit& emit) {
      for (Index half = 1; 4 * half <= max_row; ++half) {
        for (Index top = 0; top + 4 * half <= max_row; ++top) {
          for (Index top_r = 0; top_r <= top; ++top_r) {
            if (!emit([&] { return odd_diamond_check(entries, top_r, top - top_r, half); })) return;
          }
        }
      }
    });
  }
  if (name == "even-diamond") {
    return run_cases(name, [&](const Emit& emit) {
      for (Index n = 1; 4 * n - 2 <= max_row; ++n) {
        for (Index top = 2 * (n - 1); top + 2 * n <= max_row; ++top) {
          for (Index top_r = n - 1; top_r <= top - (n - 1); ++top_r) {
            if (!emit([&] { return even_diamond_check(entries, top_r, top - top_r, n); })) return;
          }
        }
      }
    });
  }
  if (name == "ashley") {
    return run_cases(name, [&](const Emit& emit) {
      for_cells(2, 1, max_row, emit, [&](Index r, Index k) { return ashley_check(entries, p, r, k); });
    });
  }
  if (name.rfind("ashley-mod", 0) == 0) {
    const int variant = name.back() - '0';
    return run_cases(name, [&](const Emit& emit) {
      for_cells(3, variant == 1 ? 2 : 3, max_row, emit,
                [&](Index r, Index k) { return ashley_mod_check(entries, variant, r, k); });
    });
  }
  if (name == "column-diff") {
    return run_cases(name, [&](const Emit& emit) {
      for_cells(2, 1, max_row, emit,
                [&](Index r, Index k) { return column_diff_check(entries, p, r, k); });
    });
  }
  if (name == "tmeg") {
    if (p.d1 != 0 || p.d2 != 0) {
      CheckOutcome outcome{name, Status::Inapplicable};
      outcome.note = "the T-Meg rule only applies when d1 = d2 = 0 (have d1=" + to_string(p.d1) +
                     ", d2=" + to_string(p.d2) + ")";
      return outcome;
    }
    return run_cases(name, [&](const Emit& emit) {
      for_cells(1, 2, max_row, emit,
                [&](Index r, Index k) { return t_meg_check(entries, p.c, p.d, r, k); });
    });
  }
  if (name == "embed") {
    CheckOutcome outcome{name, Status::Reported};
    if (const auto offset = embed_in_rascal(p)) {
      outcome.note = "embeds in the Rascal triangle at offset (r0=" + std::to_string(offset->r0) +
                     ", k0=" + std::to_string(offset->k0) + ")";
      outcome.extra["offset"] = {{"r0", offset->r0}, {"k0", offset->k0}};
    } else {
      outcome.note = "no embedding in the Rascal triangle";
      outcome.extra["offset"] = nullptr;
    }
    return outcome;
  }
  // multiple
  CheckOutcome outcome{name, Status::Reported};
  if (const auto m = multiple_of_rascal(p)) {
    outcome.note = to_string(*m) + " * R";
    outcome.extra["multiple"] = json_integer(*m);
  } else {
    outcome.note = "not a multiple of the Rascal triangle";
    outcome.extra["multiple"] = nullptr;
  }
  return outcome;
}

std::string location_text(const std::vector<Index>& location) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < location.size(); ++i) out << (i ? ", " : "") << location[i];
  out << ')';
  return out.str();
}

const char* status_name(Status status) {
  switch (status) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Inapplicable: return "inapplicable";
    case Status::Reported: return "reported";
  }
  return "";
}

int cmd_props(const PropsOptions& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  const bool from_input = !opts.input.empty();
  if (from_input == opts.params.any_given()) {
    throw CLI::ValidationError("props", "give either --input or the --c/--d/--d1/--d2 parameters");
  }
  std::optional<TriangleGrid> grid;
  PropsContext ctx;
  std::size_t depth = opts.depth.value_or(10);
  if (from_input) {
    grid = read_input(opts.input, in);
    if (grid->row_count() < 3) {
      err << "props: need at least 3 rows, found " << grid->row_count() << '\n';
      return kMalformedInput;
    }
    const Classification result = classify(*grid);
    if (!result.is_grt()) {
      err << "props: input is not a generalized Rascal triangle (verdict "
          << verdict_name(result.verdict) << "); identities are only checked on GRTs\n";
      return kNegative;
    }
    ctx.params = std::get<GrtVerdict>(result.verdict).params;
    ctx.entries = grid_source(*grid);
    depth = std::min(opts.depth.value_or(grid->row_count() - 1), grid->row_count() - 1);
  } else {
    ctx.params = opts.params.params();
    ctx.entries = closed_form_source(ctx.params);
  }
  ctx.max_row = static_cast<Index>(depth);

  const std::vector<std::string>& checks = opts.checks.empty() ? kAllChecks : opts.checks;
  std::vector<CheckOutcome> outcomes;
  outcomes.reserve(checks.size());
  for (const auto& name : checks) outcomes.push_back(run_check(name, ctx));

  const bool inapplicable = std::any_of(outcomes.begin(), outcomes.end(),
                                        [](const auto& o) { return o.status == Status::Inapplicable; });
  const bool failed = std::any_of(outcomes.begin(), outcomes.end(),
                                  [](const auto& o) { return o.status == Status::Fails; });
  const int code = inapplicable ? kInapplicable : failed ? kNegative : kSuccess;

  std::ostringstream buffer;
  if (opts.format == "json") {
    json doc{{"params", params_json(ctx.params)}, {"depth", depth}, {"exit_code", code}};
    json list = json::array();
    for (const auto& o : outcomes) {
      json entry{{"name", o.name}, {"status", status_name(o.status)}, {"cases", o.cases}};
      if (!o.note.empty()) entry["note"] = o.note;
      if (o.failure) {
        entry["first_failure"] = {{"location", o.failure->location},
                                  {"lhs", to_string(o.failure->lhs)},
                                  {"rhs", to_string(o.failure->rhs)}};
      }
      entry.update(o.extra);
      list.push_back(std::move(entry));
    }
    doc["checks"] = std::move(list);
    buffer << doc.dump(2) << '\n';
  } else {
    buffer << "params: " << to_string(ctx.params) << ", rows 0.." << depth << '\n';
    for (const auto& o : outcomes) {
      buffer << o.name << ": ";
      switch (o.status) {
        case Status::Holds:
          buffer << "holds (" << o.cases << " cases)\n";
          break;
        case Status::Fails:
          buffer << "fails at " << location_text(o.failure->location) << ": "
                 << to_string(o.failure->lhs) << " != " << to_string(o.failure->rhs) << '\n';
          break;
        case Status::Inapplicable:
          buffer << "inapplicable: " << o.note << '\n';
          break;
        case Status::Reported:
          buffer << o.note << '\n';
          break;
      }
      for (const auto& line : o.details) buffer << "  " << line << '\n';
    }
  }
  out << buffer.str();
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Generate, classify and verify generalized Rascal triangles", "grt"};
  app.require_subcommand(1);

  GenerateOptions gen_opts;
  auto* generate = app.add_subcommand("generate", "print T(c, d, d1, d2) built by a chosen rule");
  gen_opts.params.attach(*generate);
  generate->add_option("--rows", gen_opts.rows, "number of rows")->required()->check(CLI::PositiveNumber);
  generate->add_option("--rule", gen_opts.rule, "closed | add | mul")
      ->check(CLI::IsMember({"closed", "add", "mul"}));
  generate->add_option("--format", gen_opts.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  ClassifyOptions cls_opts;
  auto* classify_cmd = app.add_subcommand("classify", "classify a triangle file");
  classify_cmd->add_option("--input", cls_opts.input, "triangle file, - for stdin")->required();
  classify_cmd->add_option("--format", cls_opts.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  PropsOptions props_opts;
  auto* props = app.add_subcommand("props", "verify GRT identities");
  props_opts.params.attach(*props);
  props->add_option("--input", props_opts.input, "triangle file, - for stdin");
  props->add_option("--checks", props_opts.checks, "comma-separated checks (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember(kAllChecks));
  props->add_option("--depth", props_opts.depth, "largest row index to check (default 10)");
  props->add_option("--format", props_opts.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (generate->parsed()) return cmd_generate(gen_opts, out, err);
    if (classify_cmd->parsed()) return cmd_classify(cls_opts, in, out, err);
    return cmd_props(props_opts, in, out, err);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kSuccess : kUsage;
  } catch (const ParseError& ex) {
    err << "malformed input: " << ex.what() << '\n';
    return kMalformedInput;
  }
}

}  // namespace grt::cli
