// lp01: generate 0/1 polytope instances, run pivot rules, verify traces.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lp01/errors.hpp"
#include "lp01/generators.hpp"
#include "lp01/harness.hpp"

namespace {

using namespace lp01;

struct Common {
  std::string instance_path;
  std::string family;
  std::string params;
  std::optional<std::uint64_t> seed;
  std::string start;
  std::string start_basis;
  std::string sigma;
  bool check_oracle = false;
  bool generic_c = false;
};

std::vector<std::size_t> parse_list(const std::string& text, const char* flag) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoull(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "expected comma-separated naturals, got \"" + text + "\"");
    }
  }
  return out;
}

void add_source(CLI::App* cmd, Common& o) {
  cmd->add_option("--instance", o.instance_path, "Instance JSON file");
  cmd->add_option("--family", o.family, "cube | pyramid | hypersimplex | birkhoff | matching | uniform-matroid");
  cmd->add_option("--params", o.params, "Family parameters, e.g. 4,2");
  cmd->add_option("--seed", o.seed, "Seed: random objective for --family, perturbation for --generic-c");
}

void add_run(CLI::App* cmd, Common& o) {
  cmd->add_option("--start", o.start, "Start vertex as a bitstring (default: the instance's)");
  cmd->add_option("--start-basis", o.start_basis, "Forced start basis: comma-separated columns of A'");
  cmd->add_option("--sigma", o.sigma, "Ordered-shadow coordinate order, a permutation of 1..n");
  cmd->add_flag("--generic-c", o.generic_c, "Perturb c so that slopes become strict");
}

Lp01Instance load_source(const Common& o) {
  if (!o.instance_path.empty() == !o.family.empty()) {
    throw CLI::ValidationError("--instance/--family", "give exactly one");
  }
  if (!o.instance_path.empty()) return load_instance(o.instance_path);
  auto inst = generate(GeneratorSpec{o.family, parse_list(o.params, "--params")});
  if (o.seed && !o.generic_c) inst = with_objective(std::move(inst), random_objective(inst.num_vars(), *o.seed));
  return inst;
}

RunOptions run_options(const Common& o) {
  RunOptions opt;
  if (!o.start.empty()) opt.start = Vertex01::from_bitstring(o.start);
  if (!o.start_basis.empty()) opt.start_basis = Basis{parse_list(o.start_basis, "--start-basis")};
  opt.order = parse_list(o.sigma, "--sigma");
  opt.check_oracle = o.check_oracle;
  opt.generic_c = o.generic_c;
  opt.seed = o.seed.value_or(0);
  return opt;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void print_checks(const RunReport& r) {
  std::cout << r.rule << ": " << r.nondegenerate << " nondegenerate, " << r.degenerate << " degenerate, optimum "
            << to_string(r.optimal_value) << " at " << r.optimal_vertex.bitstring() << '\n';
  if (r.bound_checked.checked) {
    std::cout << "  bound " << r.bound_checked.bound
              << (r.bound_checked.limit ? " <= " + std::to_string(*r.bound_checked.limit) : "") << ": "
              << (r.bound_checked.held ? "held" : "VIOLATED") << '\n';
  } else if (!r.bound_checked.note.empty()) {
    std::cout << "  bound " << r.bound_checked.bound << ": " << r.bound_checked.note << '\n';
  }
  if (r.too_large) std::cout << "  oracle checks skipped: enumeration too large\n";
  for (const auto& c : r.oracle_checks) {
    std::cout << "  " << (c.passed ? "pass " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail)
              << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact simplex over 0/1 polytopes"};
  app.require_subcommand(1);

  Common gen_o;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Write a generated instance as JSON");
  add_source(gen, gen_o);
  gen->add_option("--out", out_path, "Output file (default: stdout)");
  gen->add_flag("--generic-c", gen_o.generic_c, "Write the perturbed objective");

  Common solve_o;
  std::string rule_name;
  std::string trace_out;
  std::string report_out;
  auto* solve_cmd = app.add_subcommand("solve", "Run one pivot rule");
  add_source(solve_cmd, solve_o);
  add_run(solve_cmd, solve_o);
  solve_cmd->add_option("--rule", rule_name, "dantzig | steepest1 | true-steepest | slim-shadow | ordered-shadow")
      ->required();
  solve_cmd->add_option("--trace-out", trace_out, "Trace CSV");
  solve_cmd->add_option("--report-out", report_out, "Report JSON");
  solve_cmd->add_flag("--check-oracle", solve_o.check_oracle, "Verify the trace against the brute-force oracle");

  Common cmp_o;
  std::string rules_list = "all";
  std::string cmp_out;
  auto* compare = app.add_subcommand("compare", "Run several rules from a shared start; CSV to stdout");
  add_source(compare, cmp_o);
  add_run(compare, cmp_o);
  compare->add_option("--rule", rules_list, "Comma-separated rule names or \"all\"");
  compare->add_option("--report-out", cmp_out, "CSV file instead of stdout");
  compare->add_flag("--check-oracle", cmp_o.check_oracle, "Verify every trace against the oracle");

  Common ver_o;
  std::string ver_rule;
  std::string trace_in;
  std::string ver_report;
  auto* verify = app.add_subcommand("verify", "Check a trace (recorded or fresh) against the oracle");
  add_source(verify, ver_o);
  add_run(verify, ver_o);
  verify->add_option("--rule", ver_rule, "Rule that produced the trace")->required();
  verify->add_option("--trace-in", trace_in, "Trace CSV to verify (default: solve afresh)");
  verify->add_option("--report-out", ver_report, "Report JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      auto inst = load_source(gen_o);
      if (gen_o.generic_c) inst.objective = generic_perturbation(inst.objective, gen_o.seed.value_or(0));
      const auto text = dump_instance(inst);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        write_file(out_path, text);
      }
      return 0;
    }

    if (*solve_cmd) {
      const auto inst = load_source(solve_o);
      const auto result = run_solve(inst, parse_rule(rule_name), run_options(solve_o));
      if (!trace_out.empty()) {
        std::ofstream out(trace_out);
        write_trace_csv(out, result.trace);
      }
      if (!report_out.empty()) write_file(report_out, report_json(result.report) + "\n");
      print_checks(result.report);
      return result.report.ok() ? 0 : 1;
    }

    if (*compare) {
      const auto inst = load_source(cmp_o);
      std::vector<RuleKind> rules;
      if (rules_list == "all") {
        rules = all_rules();
      } else {
        std::stringstream ss(rules_list);
        std::string item;
        while (std::getline(ss, item, ',')) rules.push_back(parse_rule(item));
      }
      const auto reports = compare_rules(inst, rules, run_options(cmp_o));
      std::ostringstream csv;
      write_compare_csv(csv, reports);
      if (cmp_out.empty()) {
        std::cout << csv.str();
      } else {
        write_file(cmp_out, csv.str());
      }
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.ok();
      return ok ? 0 : 1;
    }

    if (*verify) {
      auto inst = load_source(ver_o);
      const auto rule = parse_rule(ver_rule);
      auto opt = run_options(ver_o);
      opt.check_oracle = true;
      if (trace_in.empty()) {
        const auto result = run_solve(inst, rule, opt);
        if (!ver_report.empty()) write_file(ver_report, report_json(result.report) + "\n");
        print_checks(result.report);
        return result.report.ok() ? 0 : 1;
      }
      if (opt.generic_c) inst.objective = generic_perturbation(inst.objective, opt.seed);
      std::ifstream in(trace_in);
      if (!in) throw std::runtime_error("cannot open " + trace_in);
      const auto rows = read_trace_csv(in);
      const auto lp = standardize(inst);
      NamedCheck consistency;
      const auto trace = rebuild_trace(inst, rule, start_basis(inst, lp, opt), rows,
                                       coordinate_order(inst.num_vars(), opt.order), consistency);
      RunReport r;
      r.instance = inst.name;
      r.rule = std::string(to_string(rule));
      r.start_vertex = trace.start_vertex;
      r.nondegenerate = trace.nondegenerate;
      r.degenerate = trace.degenerate;
      r.optimal_value = trace.optimal_value;
      r.optimal_vertex = trace.optimal;
      r.oracle_checks.push_back(consistency);
      if (inst.num_vars() > kHarnessEnumerationVars) {
        r.too_large = true;
      } else {
        PolytopeOracle oracle(inst, kHarnessEnumerationVars);
        for (auto& c : verify_trace(oracle, inst, rule, trace, opt.order, opt.generic_c)) {
          r.oracle_checks.push_back(std::move(c));
        }
      }
      if (!ver_report.empty()) write_file(ver_report, report_json(r) + "\n");
      print_checks(r);
      return r.ok() && !r.too_large ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
