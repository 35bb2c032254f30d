#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lp01/engine.hpp"
#include "lp01/model.hpp"
#include "lp01/oracle.hpp"
#include "lp01/rules.hpp"

namespace lp01 {

// Instance JSON:
//   {"name": str, "A": [[int]], "b": [int], "D": [[int]], "d": [int],
//    "c": [int], "start_vertex": [0/1] | null}

/// Throws Error(kParseError) naming the line or the offending field.
Lp01Instance parse_instance(const std::string& text);
std::string dump_instance(const Lp01Instance& inst);
Lp01Instance load_instance(const std::string& path);
void save_instance(const Lp01Instance& inst, const std::string& path);

/// One line of the trace CSV.
struct TraceRow {
  std::size_t iter = 0;
  std::size_t entering = 0;
  std::size_t leaving = 0;
  Rational ratio;
  bool degenerate = false;
  Rational objective;
  Vertex01 vertex;
};

inline constexpr const char* kTraceHeader = "iter,entering,leaving,ratio,degenerate,objective,vertex";

void write_trace_csv(std::ostream& out, const PivotTrace& trace);
/// Throws Error(kParseError) with the offending line number.
std::vector<TraceRow> read_trace_csv(std::istream& in);

struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The pivot-count bound that applies to a rule.
struct BoundCheck {
  std::string bound;  // "n", "d", "steepness" or "none"
  std::optional<std::size_t> limit;
  bool checked = false;
  bool held = true;
  std::string note;
};

struct RunReport {
  std::string instance;
  std::string rule;
  Vertex01 start_vertex;
  std::size_t nondegenerate = 0;
  std::size_t degenerate = 0;
  std::size_t preparation = 0;
  Rational optimal_value;
  Vertex01 optimal_vertex;
  BoundCheck bound_checked;
  std::vector<NamedCheck> oracle_checks;
  /// Enumeration was skipped; oracle checks did not run.
  bool too_large = false;
  std::optional<std::string> error;

  /// No error, the bound held where checked, and every check passed.
  [[nodiscard]] bool ok() const;
};

std::string report_json(const RunReport& report, int indent = 2);

/// Largest n the harness hands to the oracle.
inline constexpr std::size_t kHarnessEnumerationVars = 20;

struct RunOptions {
  /// Empty: the instance's own start vertex.
  std::optional<Vertex01> start;
  /// Overrides basis_from_vertex; must be feasible.
  std::optional<Basis> start_basis;
  /// Ordered-shadow coordinate order, a permutation of 1..n.
  std::vector<std::size_t> order;
  bool check_oracle = false;
  /// Replace c by generic_perturbation(c, seed).
  bool generic_c = false;
  std::uint64_t seed = 0;
  /// Reused across runs on the same constraints; built on demand when null.
  PolytopeOracle* oracle = nullptr;
  SolveOptions solve;
};

struct RunResult {
  RunReport report;
  PivotTrace trace;
  /// The instance actually solved (objective perturbed under generic_c).
  Lp01Instance instance;
};

/// Builds the start basis, runs the rule, checks its bound and, with
/// check_oracle, every named verification. Engine errors propagate.
RunResult run_solve(const Lp01Instance& inst, RuleKind rule, const RunOptions& options = {});

/// Named checks of a finished trace against the oracle:
/// replay, skeleton-walk, monotonicity, optimality, and per rule steepness,
/// coherence, length-law, slope-monotonicity, altchar.
std::vector<NamedCheck> verify_trace(PolytopeOracle& oracle, const Lp01Instance& inst,
                                     RuleKind rule, const PivotTrace& trace,
                                     const std::vector<std::size_t>& order = {},
                                     bool strict_slopes = false);

/// Rebuilds a trace from CSV rows by replaying the exchanges from `start`.
/// Recomputes scores for the shadow rules and adds a "trace-consistency"
/// check comparing the recorded columns with the replayed values.
PivotTrace rebuild_trace(const Lp01Instance& inst, RuleKind rule, const Basis& start,
                         const std::vector<TraceRow>& rows, const std::vector<std::size_t>& order,
                         NamedCheck& consistency);

/// Start basis for `options`, as run_solve builds it.
Basis start_basis(const Lp01Instance& inst, const StandardFormLp& lp, const RunOptions& options);

/// One report per rule from a shared start; rules run concurrently and a
/// failing rule records its error without stopping the others.
std::vector<RunReport> compare_rules(const Lp01Instance& inst, const std::vector<RuleKind>& rules,
                                     const RunOptions& options = {});

inline constexpr const char* kCompareHeader =
    "instance,rule,start,nondegenerate,degenerate,optimal_value,bound,limit,bound_held,checks_passed,error";
void write_compare_csv(std::ostream& out, const std::vector<RunReport>& reports);

}  // namespace lp01
