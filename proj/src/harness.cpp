#include "lp01/harness.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <limits>
#include <memory>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lp01/errors.hpp"
#include "lp01/generators.hpp"

namespace lp01 {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

const Json& field(const Json& root, const char* name) {
  auto it = root.find(name);
  if (it == root.end()) parse_fail(std::string("missing field \"") + name + "\"");
  return *it;
}

std::int64_t to_int(const Json& v, const std::string& where) {
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      parse_fail("field " + where + ": integer out of range");
    }
    return static_cast<std::int64_t>(u);
  }
  if (!v.is_number_integer()) parse_fail("field " + where + ": expected an integer, got " + v.dump());
  return v.get<std::int64_t>();
}

IntVector int_vector(const Json& v, const std::string& where) {
  if (!v.is_array()) parse_fail("field " + where + ": expected an array");
  IntVector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(to_int(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

IntMatrix int_matrix(const Json& v, const std::string& where) {
  if (!v.is_array()) parse_fail("field " + where + ": expected an array of rows");
  IntMatrix out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(int_vector(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::size_t to_size(const std::string& s, std::size_t line, const char* column) {
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    parse_fail("trace line " + std::to_string(line) + ": bad " + column + " \"" + s + "\"");
  }
}

Rational to_ratio(const std::string& s, std::size_t line, const char* column) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    parse_fail("trace line " + std::to_string(line) + ": bad " + column + " \"" + s + "\"");
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch == '\n' ? ' ' : ch;
  }
  return out + "\"";
}

NamedCheck make_check(std::string name, bool passed, std::string detail = {}) {
  return NamedCheck{std::move(name), passed, std::move(detail)};
}

std::int64_t max_value(const PolytopeOracle& oracle, const IntVector& c) {
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (const auto& u : oracle.vertices()) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < u.size(); ++k) s += u[k] ? c[k] : 0;
    best = std::max(best, s);
  }
  return best;
}

Rational edge_score(const Vertex01& from, const Vertex01& to, const IntVector& c) {
  std::int64_t gain = 0;
  std::int64_t norm = 0;
  for (std::size_t k = 0; k < from.size(); ++k) {
    const int g = static_cast<int>(to[k]) - static_cast<int>(from[k]);
    gain += c[k] * g;
    norm += g < 0 ? -g : g;
  }
  if (norm == 0) return 0;
  return make_rational(static_cast<long>(gain), static_cast<long>(norm));
}

NamedCheck steepness_check(PolytopeOracle& oracle, const IntVector& c, const PivotTrace& trace) {
  Vertex01 current = trace.start_vertex;
  for (const auto& s : trace.steps) {
    if (s.degenerate) continue;
    const auto best = steepest_edges(oracle, current, c);
    const auto got = edge_score(current, s.vertex_after, c);
    if (best.directions.empty() || got != best.value) {
      return make_check("steepness", false,
                        "step " + std::to_string(s.iter) + " from " + current.bitstring() + " scores " +
                            to_string(got) + ", oracle max " + to_string(best.value));
    }
    current = s.vertex_after;
  }
  return make_check("steepness", true);
}

}  // namespace

Lp01Instance parse_instance(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_fail("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!root.is_object()) parse_fail("top level must be an object");

  Lp01Instance inst;
  const auto& name = field(root, "name");
  if (!name.is_string()) parse_fail("field \"name\": expected a string");
  inst.name = name.get<std::string>();
  inst.eq_matrix = int_matrix(field(root, "A"), "\"A\"");
  inst.eq_rhs = int_vector(field(root, "b"), "\"b\"");
  inst.ineq_matrix = int_matrix(field(root, "D"), "\"D\"");
  inst.ineq_rhs = int_vector(field(root, "d"), "\"d\"");
  inst.objective = int_vector(field(root, "c"), "\"c\"");
  if (auto it = root.find("start_vertex"); it != root.end() && !it->is_null()) {
    const auto bits = int_vector(*it, "\"start_vertex\"");
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] != 0 && bits[i] != 1) {
        parse_fail("field \"start_vertex\"[" + std::to_string(i) + "]: expected 0 or 1");
      }
    }
    inst.start_vertex = Vertex01::from_integers(bits);
  }
  try {
    inst.check_shape();
  } catch (const Error& e) {
    parse_fail(e.what());
  }
  if (inst.start_vertex && inst.start_vertex->size() != inst.num_vars()) {
    parse_fail("field \"start_vertex\": length differs from \"c\"");
  }
  return inst;
}

std::string dump_instance(const Lp01Instance& inst) {
  Json root;
  root["name"] = inst.name;
  root["A"] = inst.eq_matrix;
  root["b"] = inst.eq_rhs;
  root["D"] = inst.ineq_matrix;
  root["d"] = inst.ineq_rhs;
  root["c"] = inst.objective;
  root["start_vertex"] = inst.start_vertex ? Json(inst.start_vertex->to_integers()) : Json(nullptr);
  return root.dump(2) + "\n";
}

Lp01Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_instance(const Lp01Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << dump_instance(inst);
}

void write_trace_csv(std::ostream& out, const PivotTrace& trace) {
  out << kTraceHeader << '\n';
  for (const auto& s : trace.steps) {
    out << s.iter << ',' << s.entering << ',' << s.leaving << ',' << to_string(s.ratio) << ','
        << (s.degenerate ? 1 : 0) << ',' << to_string(s.objective_after) << ','
        << s.vertex_after.bitstring() << '\n';
  }
}

std::vector<TraceRow> read_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTraceHeader) parse_fail("trace line 1: expected header " + std::string(kTraceHeader));
  std::vector<TraceRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 7) parse_fail("trace line " + std::to_string(lineno) + ": expected 7 columns");
    TraceRow r;
    r.iter = to_size(cells[0], lineno, "iter");
    r.entering = to_size(cells[1], lineno, "entering");
    r.leaving = to_size(cells[2], lineno, "leaving");
    r.ratio = to_ratio(cells[3], lineno, "ratio");
    if (cells[4] != "0" && cells[4] != "1") parse_fail("trace line " + std::to_string(lineno) + ": bad degenerate");
    r.degenerate = cells[4] == "1";
    r.objective = to_ratio(cells[5], lineno, "objective");
    try {
      r.vertex = Vertex01::from_bitstring(cells[6]);
    } catch (const std::exception&) {
      parse_fail("trace line " + std::to_string(lineno) + ": bad vertex \"" + cells[6] + "\"");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

bool RunReport::ok() const {
  if (error) return false;
  if (bound_checked.checked && !bound_checked.held) return false;
  return std::all_of(oracle_checks.begin(), oracle_checks.end(), [](const NamedCheck& c) { return c.passed; });
}

std::string report_json(const RunReport& r, int indent) {
  Json root;
  root["instance"] = r.instance;
  root["rule"] = r.rule;
  root["start_vertex"] = r.start_vertex.bitstring();
  root["nondegenerate"] = r.nondegenerate;
  root["degenerate"] = r.degenerate;
  root["preparation"] = r.preparation;
  root["optimal_value"] = to_string(r.optimal_value);
  root["optimal_vertex"] = r.optimal_vertex.bitstring();
  Json bound;
  bound["bound"] = r.bound_checked.bound;
  bound["limit"] = r.bound_checked.limit ? Json(*r.bound_checked.limit) : Json(nullptr);
  bound["checked"] = r.bound_checked.checked;
  bound["held"] = r.bound_checked.held;
  if (!r.bound_checked.note.empty()) bound["note"] = r.bound_checked.note;
  root["bound_checked"] = bound;
  Json checks = Json::array();
  for (const auto& c : r.oracle_checks) {
    Json item;
    item["name"] = c.name;
    item["passed"] = c.passed;
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(item);
  }
  root["oracle_checks"] = checks;
  root["too_large"] = r.too_large;
  root["error"] = r.error ? Json(*r.error) : Json(nullptr);
  root["ok"] = r.ok();
  return root.dump(indent);
}

Basis start_basis(const Lp01Instance& inst, const StandardFormLp& lp, const RunOptions& options) {
  if (options.start_basis) {
    Tableau t(lp, *options.start_basis);
    if (!t.feasible()) throw Error(ErrorCode::kInfeasible, "forced start basis is not primal feasible");
    if (options.start && t.vertex() != *options.start) {
      throw Error(ErrorCode::kInfeasible, "forced start basis does not lift the start vertex");
    }
    return *options.start_basis;
  }
  const auto start = options.start ? options.start : inst.start_vertex;
  if (!start) throw Error(ErrorCode::kInvalidInstance, inst.name + ": no start vertex");
  return basis_from_vertex(inst, lp, *start);
}

std::vector<NamedCheck> verify_trace(PolytopeOracle& oracle, const Lp01Instance& inst, RuleKind rule,
                                     const PivotTrace& trace, const std::vector<std::size_t>& order,
                                     bool strict_slopes) {
  std::vector<NamedCheck> checks;
  const auto& c = inst.objective;
  const auto lp = standardize(inst);

  try {
    const auto bases = replay(lp, trace.start_basis, trace.steps);
    bool same = true;
    for (std::size_t i = 0; i < bases.size() && same; ++i) same = bases[i] == trace.steps[i].basis_after;
    checks.push_back(make_check("replay", same, same ? "" : "replayed bases differ"));
  } catch (const Error& e) {
    checks.push_back(make_check("replay", false, e.what()));
  }

  {
    Vertex01 prev = trace.start_vertex;
    std::string detail;
    for (const auto& s : trace.steps) {
      const auto a = oracle.index_of(prev);
      const auto b = oracle.index_of(s.vertex_after);
      if (!a || !b) {
        detail = "step " + std::to_string(s.iter) + " leaves the vertex set";
      } else if (s.degenerate ? *a != *b : !oracle.adjacent(*a, *b)) {
        detail = "step " + std::to_string(s.iter) + ": " + prev.bitstring() + " -> " +
                 s.vertex_after.bitstring() + (s.degenerate ? " moved on a degenerate pivot" : " is not an edge");
      }
      if (!detail.empty()) break;
      prev = s.vertex_after;
    }
    checks.push_back(make_check("skeleton-walk", detail.empty(), detail));
  }

  {
    Rational prev = trace.start_objective;
    std::string detail;
    for (const auto& s : trace.steps) {
      const bool moved = sgn(s.ratio) > 0;
      if (moved == s.degenerate || s.objective_after < prev || (moved && !(s.objective_after > prev)) ||
          s.objective_after != Rational(static_cast<long>(inst.value(s.vertex_after)))) {
        detail = "step " + std::to_string(s.iter) + " objective " + to_string(s.objective_after) +
                 " after " + to_string(prev);
        break;
      }
      prev = s.objective_after;
    }
    checks.push_back(make_check("monotonicity", detail.empty(), detail));
  }

  {
    std::string detail;
    std::set<Basis> seen{trace.start_basis};
    for (const auto& s : trace.steps) {
      if (!s.degenerate) seen.clear();
      if (!seen.insert(s.basis_after).second) {
        detail = "basis repeats at step " + std::to_string(s.iter);
        break;
      }
    }
    checks.push_back(make_check("no-basis-repeat", detail.empty(), detail));
  }

  const auto best = max_value(oracle, c);
  const bool optimal = trace.optimal_value == Rational(static_cast<long>(best));
  checks.push_back(make_check("optimality", optimal,
                              optimal ? "" : "final " + to_string(trace.optimal_value) + ", max " + std::to_string(best)));

  if (rule == RuleKind::kTrueSteepest) checks.push_back(steepness_check(oracle, c, trace));

  if (is_shadow(rule)) {
    const auto path = trace.vertex_path();
    if (!trace.aux) {
      checks.push_back(make_check("coherence", false, "trace carries no auxiliary vector"));
    } else {
      const auto& v = *trace.aux;
      checks.push_back(make_check("coherence", is_coherent(path, v, c, oracle.vertices())));
      std::set<Rational> levels;
      for (const auto& u : oracle.vertices()) levels.insert(dot(v, u.to_integers()));
      const auto cap = levels.size() - 1;
      checks.push_back(make_check("length-law", trace.nondegenerate <= cap,
                                  std::to_string(trace.nondegenerate) + " <= " + std::to_string(cap)));
    }

    std::string detail;
    std::optional<Rational> prev;
    for (const auto& s : trace.steps) {
      if (s.phase != Phase::kMain) continue;
      if (!s.score) {
        detail = "step " + std::to_string(s.iter) + " has no score";
        break;
      }
      if (prev && (strict_slopes ? !(*s.score < *prev) : *s.score > *prev)) {
        detail = "step " + std::to_string(s.iter) + " slope " + to_string(*s.score) + " after " + to_string(*prev);
        break;
      }
      prev = s.score;
    }
    checks.push_back(make_check(strict_slopes ? "slope-strict" : "slope-monotonicity", detail.empty(), detail));

    const std::size_t limit = rule == RuleKind::kSlimShadow ? inst.num_vars() : oracle.dimension();
    checks.push_back(make_check(rule == RuleKind::kSlimShadow ? "bound-n" : "bound-d", trace.nondegenerate <= limit,
                                std::to_string(trace.nondegenerate) + " <= " + std::to_string(limit)));
  }

  if (rule == RuleKind::kOrderedShadow) {
    const auto expected = altchar_path(oracle, trace.start_vertex, c, coordinate_order(inst.num_vars(), order));
    const bool same = expected == trace.vertex_path();
    std::string detail;
    if (!same) {
      for (const auto& x : expected) detail += x.bitstring() + " ";
      detail = "altchar path " + detail;
    }
    checks.push_back(make_check("altchar", same, detail));
  }
  return checks;
}

RunResult run_solve(const Lp01Instance& inst, RuleKind kind, const RunOptions& options) {
  RunResult res;
  res.instance = inst;
  if (options.generic_c) res.instance.objective = generic_perturbation(inst.objective, options.seed);
  const auto& solved = res.instance;
  const auto lp = standardize(solved);
  const auto start = start_basis(solved, lp, options);
  const auto start_vertex = Tableau(lp, start).vertex();
  const auto order = coordinate_order(solved.num_vars(), options.order);

  auto rule = make_rule(kind, lp, start_vertex, solved.objective, RuleConfig{order});
  res.trace = solve(lp, *rule, start, options.solve);
  const auto& trace = res.trace;

  auto& r = res.report;
  r.instance = solved.name;
  r.rule = std::string(to_string(kind));
  r.start_vertex = start_vertex;
  r.nondegenerate = trace.nondegenerate;
  r.degenerate = trace.degenerate;
  r.preparation = static_cast<std::size_t>(std::count_if(
      trace.steps.begin(), trace.steps.end(), [](const PivotStep& s) { return s.phase == Phase::kPreparation; }));
  r.optimal_value = trace.optimal_value;
  r.optimal_vertex = trace.optimal;

  const bool enumerable = solved.num_vars() <= kHarnessEnumerationVars;
  const bool needs_oracle =
      options.check_oracle || kind == RuleKind::kOrderedShadow || kind == RuleKind::kTrueSteepest;
  std::unique_ptr<PolytopeOracle> own;
  PolytopeOracle* oracle = options.oracle;
  if (needs_oracle && enumerable && !oracle) {
    own = std::make_unique<PolytopeOracle>(solved, kHarnessEnumerationVars);
    oracle = own.get();
  }
  if (options.check_oracle && !enumerable) r.too_large = true;

  auto& bound = r.bound_checked;
  switch (kind) {
    case RuleKind::kSlimShadow:
      bound.bound = "n";
      bound.limit = solved.num_vars();
      bound.checked = true;
      bound.held = trace.nondegenerate <= *bound.limit;
      break;
    case RuleKind::kOrderedShadow:
      bound.bound = "d";
      if (oracle) {
        bound.limit = oracle->dimension();
        bound.checked = true;
        bound.held = trace.nondegenerate <= *bound.limit;
      } else {
        bound.note = "dimension unknown: enumeration too large";
      }
      break;
    case RuleKind::kTrueSteepest:
      bound.bound = "steepness";
      if (oracle) {
        const auto check = steepness_check(*oracle, solved.objective, trace);
        bound.checked = true;
        bound.held = check.passed;
        bound.note = check.detail;
      } else {
        bound.note = "steepness unchecked: enumeration too large";
      }
      break;
    default:
      bound.bound = "none";
      break;
  }

  if (options.check_oracle && oracle) {
    r.oracle_checks = verify_trace(*oracle, solved, kind, trace, order, options.generic_c);
  }
  return res;
}

PivotTrace rebuild_trace(const Lp01Instance& inst, RuleKind rule, const Basis& start,
                         const std::vector<TraceRow>& rows, const std::vector<std::size_t>& order,
                         NamedCheck& consistency) {
  consistency = make_check("trace-consistency", true);
  const auto lp = standardize(inst);
  Tableau t(lp, start);
  PivotTrace trace;
  trace.rule = std::string(to_string(rule));
  trace.start_basis = start;
  trace.start_vertex = t.vertex();
  trace.start_objective = t.objective();

  std::optional<AuxVector> aux;
  if (rule == RuleKind::kSlimShadow || rule == RuleKind::kTrueSteepest) {
    aux = unit_flip_aux(lp, trace.start_vertex, rule);
  } else if (rule == RuleKind::kOrderedShadow) {
    aux = ordered_aux(lp, trace.start_vertex, inst.objective, order);
  }
  bool preparing = is_shadow(rule);

  auto fail = [&](std::size_t iter, const std::string& what) {
    consistency = make_check("trace-consistency", false, "row " + std::to_string(iter) + ": " + what);
  };

  for (const auto& row : rows) {
    if (row.entering >= lp.cols() || t.is_basic(row.entering)) {
      fail(row.iter, "entering column is not nonbasic");
      break;
    }
    const auto& cols = t.basis().columns;
    const auto pos = std::find(cols.begin(), cols.end(), row.leaving);
    if (pos == cols.end()) {
      fail(row.iter, "leaving column is not basic");
      break;
    }
    const auto leaving_row = static_cast<std::size_t>(pos - cols.begin());
    RatioTest test;
    try {
      test = ratio_test(t.basic_values(), t.column(row.entering));
    } catch (const Error& e) {
      fail(row.iter, e.what());
      break;
    }
    if (std::find(test.tied_rows.begin(), test.tied_rows.end(), leaving_row) == test.tied_rows.end()) {
      fail(row.iter, "leaving column fails the ratio test");
      break;
    }

    PivotStep step;
    step.iter = row.iter;
    step.entering = row.entering;
    step.leaving = row.leaving;
    step.leaving_row = leaving_row;
    step.ratio = test.ratio;
    step.degenerate = sgn(test.ratio) == 0;
    if (aux) {
      const auto vz = t.direction_dot(aux->lifted, row.entering);
      if (preparing && sgn(vz) <= 0) {
        step.phase = Phase::kPreparation;
      } else {
        preparing = false;
        if (sgn(vz) > 0) step.score = t.reduced_cost(row.entering) / vz;
      }
    }

    Basis next = t.basis();
    next.columns[leaving_row] = row.entering;
    Tableau nt(lp, next);
    step.objective_after = nt.objective();
    step.vertex_after = nt.vertex();
    step.basis_after = next;
    if (step.ratio != row.ratio || step.degenerate != row.degenerate || step.objective_after != row.objective ||
        step.vertex_after != row.vertex || step.iter != trace.steps.size() + 1) {
      fail(row.iter, "recorded values differ from the replay");
    }
    if (step.degenerate) {
      ++trace.degenerate;
    } else {
      ++trace.nondegenerate;
      if (rule == RuleKind::kTrueSteepest) aux = unit_flip_aux(lp, nt.vertex(), rule);
    }
    trace.steps.push_back(std::move(step));
    t = std::move(nt);
    if (!consistency.passed) break;
  }
  trace.optimal = t.vertex();
  trace.optimal_value = t.objective();
  if (aux && is_shadow(rule)) trace.aux = aux->v;
  return trace;
}

std::vector<RunReport> compare_rules(const Lp01Instance& inst, const std::vector<RuleKind>& rules,
                                     const RunOptions& options) {
  RunOptions shared = options;
  shared.oracle = nullptr;  // oracles cache lazily and are not shared across threads
  std::vector<std::future<RunReport>> jobs;
  for (auto kind : rules) {
    jobs.push_back(std::async(std::launch::async, [&inst, kind, &options = shared]() {
      try {
        return run_solve(inst, kind, options).report;
      } catch (const std::exception& e) {
        RunReport r;
        r.instance = inst.name;
        r.rule = std::string(to_string(kind));
        if (options.start) r.start_vertex = *options.start;
        else if (inst.start_vertex) r.start_vertex = *inst.start_vertex;
        r.error = e.what();
        return r;
      }
    }));
  }
  std::vector<RunReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

void write_compare_csv(std::ostream& out, const std::vector<RunReport>& reports) {
  out << kCompareHeader << '\n';
  for (const auto& r : reports) {
    const bool checks = std::all_of(r.oracle_checks.begin(), r.oracle_checks.end(),
                                    [](const NamedCheck& c) { return c.passed; });
    out << csv_cell(r.instance) << ',' << r.rule << ',' << r.start_vertex.bitstring() << ',' << r.nondegenerate << ','
        << r.degenerate << ',' << to_string(r.optimal_value) << ',' << r.bound_checked.bound << ','
        << (r.bound_checked.limit ? std::to_string(*r.bound_checked.limit) : "") << ','
        << (r.bound_checked.checked ? (r.bound_checked.held ? "1" : "0") : "") << ',' << (checks ? 1 : 0) << ','
        << csv_cell(r.error.value_or("")) << '\n';
  }
}

}  // namespace lp01
