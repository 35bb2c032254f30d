// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// Every run below goes through run_solve with the brute-force oracle, so the
// figures checked here come from enumeration, never from the solver itself.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <future>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lp01/errors.hpp"
#include "lp01/generators.hpp"
#include "lp01/harness.hpp"

using namespace lp01;

namespace {

constexpr std::uint64_t kObjectives = 25;

struct Case {
  std::string family;
  Lp01Instance inst;
  std::size_t sparsity = 0;  // support bound M for the slim rule, 0 if none
};

struct Run {
  const Case* cs = nullptr;
  RuleKind rule{};
  std::uint64_t seed = 0;
  bool generic = false;
  std::size_t dimension = 0;
  std::size_t levels = 0;  // |{v u : u vertex}| for the shadow rules
  RunResult result;
  std::string error;
};

std::vector<Case> suite() {
  std::vector<Case> out;
  for (std::size_t n = 3; n <= 12; ++n) out.push_back({"cube", cube(n), 0});
  out.push_back({"pyramid", pyramid(), 0});
  for (std::size_t n = 4; n <= 8; ++n) {
    for (std::size_t k = 1; k < n; ++k) out.push_back({"hypersimplex", hypersimplex(n, k), k});
  }
  for (std::size_t n = 3; n <= 4; ++n) out.push_back({"birkhoff", birkhoff(n), n});
  for (std::size_t n : {4, 6}) out.push_back({"matching", perfect_matching(n), n / 2});
  for (std::size_t n = 4; n <= 8; ++n) {
    for (std::size_t r = 1; r <= n; ++r) out.push_back({"uniform-matroid", uniform_matroid(n, r), r});
  }
  return out;
}

std::vector<Run> run_case(const Case& cs) {
  PolytopeOracle oracle(cs.inst, kHarnessEnumerationVars);
  const auto dim = oracle.dimension();
  std::vector<Run> runs;
  for (std::uint64_t seed = 1; seed <= kObjectives; ++seed) {
    const auto inst = with_objective(cs.inst, random_objective(cs.inst.num_vars(), seed));
    for (auto rule : all_rules()) {
      for (bool generic : {false, true}) {
        if (generic && !is_shadow(rule)) continue;
        Run r;
        r.cs = &cs;
        r.rule = rule;
        r.seed = seed;
        r.generic = generic;
        r.dimension = dim;
        RunOptions opt;
        opt.check_oracle = true;
        opt.generic_c = generic;
        opt.seed = seed;
        opt.oracle = &oracle;
        try {
          r.result = run_solve(inst, rule, opt);
          if (r.result.trace.aux) {
            std::set<Rational> levels;
            for (const auto& u : oracle.vertices()) levels.insert(dot(*r.result.trace.aux, u.to_integers()));
            r.levels = levels.size();
          }
        } catch (const std::exception& e) {
          r.error = e.what();
        }
        runs.push_back(std::move(r));
      }
    }
  }
  return runs;
}

std::string label(const Run& r) {
  return r.cs->inst.name + " " + std::string(to_string(r.rule)) + " seed " + std::to_string(r.seed) +
         (r.generic ? " generic" : "");
}

const NamedCheck* find_check(const Run& r, const std::string& name) {
  for (const auto& c : r.result.report.oracle_checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
};

int failures_total = 0;

void report(int id, const char* name, const Tally& t) {
  const bool ok = t.failures.empty() && t.checked > 0;
  if (!ok) ++failures_total;
  std::printf("%s  %2d %-28s %zu checked, %zu failed", ok ? "PASS" : "FAIL", id, name, t.checked,
              t.failures.size());
  if (!t.failures.empty()) std::printf("  first: %s", t.failures.front().c_str());
  std::printf("\n");
  for (std::size_t i = 1; i < t.failures.size() && i < 12; ++i) std::printf("      %s\n", t.failures[i].c_str());
}

// Suite runs of one rule with a plain (not perturbed) objective, in order.
template <typename F>
void for_runs(const std::vector<Run>& runs, RuleKind rule, bool generic, F&& f) {
  for (const auto& r : runs) {
    if (r.rule == rule && r.generic == generic) f(r);
  }
}

Tally pyramid_discrimination() {
  Tally t;
  const auto inst = pyramid();
  const auto lp = standardize(inst);
  const Basis bad{{1, 2}};  // x2, x3 basic at the apex
  Tableau tab(lp, bad);
  t.expect(tab.vertex() == Vertex01::from_bitstring("001"), "bad basis does not sit at the apex");

  const auto pick = steepest1_entering(tab);
  t.expect(pick && pick->column == 0, "steepest1 does not enter x1");
  if (pick) {
    const auto z = project_solution(lp, tab.direction(pick->column));
    t.expect(z == RatVector{1, 1, -1}, "steepest1 direction is not (1,1,-1)");
    t.expect(pick->score && *pick->score == make_rational(49, 3),
             "steepest1 score " + (pick->score ? to_string(*pick->score) : std::string("none")) + " != 49/3");
  }

  PolytopeOracle oracle(inst);
  const auto best = steepest_edges(oracle, Vertex01::from_bitstring("001"), inst.objective);
  t.expect(best.directions == std::vector<IntVector>{{1, 0, -1}}, "oracle steepest set is not {(1,0,-1)}");
  t.expect(best.value == 25, "oracle steepest value " + to_string(best.value) + " != 25");

  RunOptions opt;
  opt.start_basis = bad;
  opt.check_oracle = true;
  const auto ts = run_solve(inst, RuleKind::kTrueSteepest, opt);
  const auto path = ts.trace.vertex_path();
  t.expect(path.size() >= 2 && path[1] == Vertex01::from_bitstring("100"),
           "true-steepest first nondegenerate step is not along (1,0,-1)");
  t.expect(ts.report.ok(), "true-steepest report from the bad basis is not clean");

  const auto s1 = run_solve(inst, RuleKind::kSteepest1, opt);
  const auto p1 = s1.trace.vertex_path();
  t.expect(p1.size() >= 2 && p1[1] == Vertex01::from_bitstring("110"),
           "steepest1 first nondegenerate step is not along (1,1,-1)");
  return t;
}

Tally oracle_self_checks() {
  Tally t;
  for (std::size_t n = 1; n <= 6; ++n) {
    PolytopeOracle oracle(cube(n));
    const auto g = oracle.skeleton();
    bool same = g.vertices.size() == (std::size_t{1} << n);
    for (std::size_t a = 0; a < g.vertices.size() && same; ++a) {
      std::vector<std::size_t> hamming;
      for (std::size_t b = 0; b < g.vertices.size(); ++b) {
        std::size_t d = 0;
        for (std::size_t k = 0; k < n; ++k) d += g.vertices[a][k] != g.vertices[b][k];
        if (d == 1) hamming.push_back(b);
      }
      same = hamming == g.adjacency[a];
    }
    t.expect(same, "cube(" + std::to_string(n) + ") skeleton differs from Hamming-1 adjacency");
  }
  PolytopeOracle b3(birkhoff(3));
  t.expect(b3.vertices().size() == 6, "birkhoff(3) vertex count " + std::to_string(b3.vertices().size()));
  t.expect(b3.dimension() == 4, "birkhoff(3) dimension " + std::to_string(b3.dimension()));
  PolytopeOracle py(pyramid());
  t.expect(py.vertices().size() == 5, "pyramid vertex count " + std::to_string(py.vertices().size()));
  PolytopeOracle h42(hypersimplex(4, 2));
  t.expect(h42.vertices().size() == 6, "hypersimplex(4,2) vertex count " + std::to_string(h42.vertices().size()));
  return t;
}

Tally anti_cycling() {
  Tally t;
  const auto base = birkhoff(4);
  PolytopeOracle oracle(base);
  std::size_t total = 0;
  for (std::uint64_t seed = 1; seed <= kObjectives; ++seed) {
    const auto inst = with_objective(base, random_objective(base.num_vars(), seed));
    const auto lp = standardize(inst);
    for (auto rule : all_rules()) {
      const std::string tag = "birkhoff(4) " + std::string(to_string(rule)) + " seed " + std::to_string(seed);
      try {
        RunOptions opt;
        opt.check_oracle = true;
        opt.oracle = &oracle;
        const auto res = run_solve(inst, rule, opt);
        total += res.trace.steps.size();
        const auto final_basis = res.trace.steps.empty() ? res.trace.start_basis : res.trace.steps.back().basis_after;
        Tableau fin(lp, final_basis);
        bool optimal = true;
        for (auto j : fin.nonbasic()) optimal = optimal && sgn(fin.reduced_cost(j)) <= 0;
        t.expect(optimal, tag + ": a reduced cost is positive at termination");
        const auto* rep = find_check(Run{nullptr, rule, seed, false, 0, 0, res, {}}, "no-basis-repeat");
        t.expect(rep && rep->passed, tag + ": basis repeats within a degenerate run");
      } catch (const std::exception& e) {
        t.expect(false, tag + ": " + e.what());
      }
    }
  }
  t.expect(total < 100000, "total pivots " + std::to_string(total));
  return t;
}

Tally matroid_greedy() {
  Tally t;
  for (auto [n, r] : {std::pair<std::size_t, std::size_t>{6, 3}, {8, 4}}) {
    const auto base = uniform_matroid(n, r);
    PolytopeOracle oracle(base);
    for (std::uint64_t seed = 1; seed <= kObjectives; ++seed) {
      const auto c = random_positive_objective(n, seed);
      const std::string tag = base.name + " seed " + std::to_string(seed);
      try {
        RunOptions opt;
        opt.oracle = &oracle;
        const auto res = run_solve(with_objective(base, c), RuleKind::kSlimShadow, opt);
        t.expect(res.trace.vertex_path() == greedy_matroid_path(n, r, c), tag + ": path differs from greedy");
      } catch (const std::exception& e) {
        t.expect(false, tag + ": " + e.what());
      }
    }
  }
  return t;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto cases = suite();

  std::vector<std::future<std::vector<Run>>> jobs;
  for (const auto& cs : cases) jobs.push_back(std::async(std::launch::async, run_case, std::cref(cs)));
  std::vector<Run> runs;
  for (auto& j : jobs) {
    for (auto& r : j.get()) runs.push_back(std::move(r));
  }

  auto check_named = [&](Tally& t, const Run& r, const std::string& name) {
    if (!r.error.empty()) {
      t.expect(false, label(r) + ": " + r.error);
      return;
    }
    const auto* c = find_check(r, name);
    t.expect(c && c->passed, label(r) + ": " + name + (c ? " " + c->detail : " missing"));
  };

  report(1, "pyramid-discrimination", pyramid_discrimination());

  {
    Tally t;
    for_runs(runs, RuleKind::kTrueSteepest, false, [&](const Run& r) { check_named(t, r, "steepness"); });
    report(2, "true-steepest-steepness", t);
  }

  {
    Tally t;
    for_runs(runs, RuleKind::kSlimShadow, false, [&](const Run& r) {
      if (!r.error.empty()) return t.expect(false, label(r) + ": " + r.error);
      const auto n = r.cs->inst.num_vars();
      t.expect(r.result.trace.nondegenerate <= n,
               label(r) + ": " + std::to_string(r.result.trace.nondegenerate) + " > n = " + std::to_string(n));
    });
    report(3, "slim-shadow-bound-n", t);
  }

  {
    Tally t;
    for_runs(runs, RuleKind::kSlimShadow, false, [&](const Run& r) {
      if (r.cs->sparsity == 0) return;
      if (!r.error.empty()) return t.expect(false, label(r) + ": " + r.error);
      t.expect(r.result.trace.nondegenerate <= r.cs->sparsity,
               label(r) + ": " + std::to_string(r.result.trace.nondegenerate) + " > " +
                   std::to_string(r.cs->sparsity));
    });
    report(4, "slim-shadow-sparsity", t);
  }

  {
    Tally t;
    for_runs(runs, RuleKind::kOrderedShadow, false, [&](const Run& r) {
      if (!r.error.empty()) return t.expect(false, label(r) + ": " + r.error);
      t.expect(r.result.trace.nondegenerate <= r.dimension,
               label(r) + ": " + std::to_string(r.result.trace.nondegenerate) + " > d = " +
                   std::to_string(r.dimension));
    });
    RunOptions opt;
    opt.check_oracle = true;
    const auto fig = run_solve(with_objective(cube(3), {1, 2, 3}), RuleKind::kOrderedShadow, opt);
    std::vector<Vertex01> expected;
    for (const char* s : {"000", "100", "110", "111"}) expected.push_back(Vertex01::from_bitstring(s));
    t.expect(fig.trace.vertex_path() == expected, "cube(3) c=(1,2,3) path differs from 000,100,110,111");
    report(5, "ordered-shadow-bound-d", t);
  }

  {
    Tally t;
    for_runs(runs, RuleKind::kOrderedShadow, false, [&](const Run& r) { check_named(t, r, "altchar"); });
    report(6, "ordered-shadow-altchar", t);
  }

  {
    Tally t;
    for (auto rule : {RuleKind::kSlimShadow, RuleKind::kOrderedShadow}) {
      for_runs(runs, rule, false, [&](const Run& r) {
        check_named(t, r, "coherence");
        check_named(t, r, "optimality");
      });
    }
    report(7, "shadow-coherence", t);
  }

  {
    Tally t;
    for (auto rule : {RuleKind::kSlimShadow, RuleKind::kOrderedShadow}) {
      for_runs(runs, rule, false, [&](const Run& r) {
        if (!r.error.empty()) return t.expect(false, label(r) + ": " + r.error);
        t.expect(r.levels > 0 && r.result.trace.nondegenerate + 1 <= r.levels,
                 label(r) + ": " + std::to_string(r.result.trace.nondegenerate) + " steps, " +
                     std::to_string(r.levels) + " levels");
      });
    }
    report(8, "shadow-length-law", t);
  }

  {
    Tally t;
    for (auto rule : {RuleKind::kSlimShadow, RuleKind::kOrderedShadow}) {
      for_runs(runs, rule, false, [&](const Run& r) { check_named(t, r, "slope-monotonicity"); });
      for_runs(runs, rule, true, [&](const Run& r) { check_named(t, r, "slope-strict"); });
    }
    report(9, "slope-monotonicity", t);
  }

  report(10, "anti-cycling-birkhoff4", anti_cycling());
  report(11, "matroid-greedy", matroid_greedy());
  report(12, "oracle-self-checks", oracle_self_checks());

  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%zu instances, %zu runs, %.1f s\n", cases.size(), runs.size(), secs);
  return failures_total == 0 ? 0 : 1;
}
