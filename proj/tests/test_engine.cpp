#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lp01/engine.hpp"
#include "lp01/errors.hpp"
#include "lp01/generators.hpp"
#include "lp01/oracle.hpp"
#include "lp01/rules.hpp"

using namespace lp01;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no lp01::Error thrown");
  return ErrorCode::kInvariantViolation;
}

}  // namespace

TEST_CASE("bfs") {
  const auto lp = standardize(cube(2));
  CHECK(bfs(lp, Basis{{2, 3}}) == RatVector{0, 0, 1, 1});
  CHECK(bfs(lp, Basis{{0, 3}}) == RatVector{1, 0, 0, 1});

  const auto py = pyramid();
  const auto plp = standardize(py);
  for (const Basis& b : {Basis{{1, 2}}, Basis{{2, 0}}, basis_from_vertex(py, plp, Vertex01::from_bitstring("001"))}) {
    CHECK(project_solution(plp, bfs(plp, b)) == RatVector{0, 0, 1});
  }
  CHECK(code_of([&] { Tableau(plp, Basis{{0, 0}}); }) == ErrorCode::kSingular);
}

TEST_CASE("reduced costs") {
  const auto lp = standardize(with_objective(cube(1), {1}));
  CHECK(reduced_costs(lp, Basis{{1}})[0] == 1);
  CHECK(reduced_costs(lp, Basis{{0}})[1] == -1);

  // At the optimum every reduced cost is <= 0 and the value matches the oracle.
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto inst = with_objective(birkhoff(3), random_objective(9, seed));
    const auto lp3 = standardize(inst);
    DantzigRule rule;
    const auto trace = solve(lp3, rule, basis_from_vertex(inst, lp3, *inst.start_vertex));
    const auto final_basis = trace.steps.empty() ? trace.start_basis : trace.steps.back().basis_after;
    for (const auto& c : reduced_costs(lp3, final_basis)) CHECK(sgn(c) <= 0);
    std::int64_t best = INT64_MIN;
    for (const auto& v : enumerate_vertices(inst)) best = std::max(best, inst.value(v));
    CHECK(trace.optimal_value == best);
  }
}

TEST_CASE("directions") {
  const auto lp = standardize(cube(2));
  CHECK(direction(lp, Basis{{2, 3}}, 0) == RatVector{1, 0, -1, 0});

  const auto py = pyramid();
  const auto plp = standardize(py);
  for (const Basis& b : {Basis{{1, 2}}, Basis{{2, 0}}, Basis{{0, 1}}}) {
    Tableau t(plp, b);
    for (auto j : t.nonbasic()) {
      const auto z = t.direction(j);
      CHECK(plp.matrix * z == RatVector(plp.rows(), Rational(0)));
      CHECK(dot(plp.cost, z) == t.reduced_cost(j));
      CHECK(t.direction_dot(plp.cost, j) == t.reduced_cost(j));
    }
  }

  // The worked bad basis at the apex: x2, x3 basic.
  Tableau bad(plp, Basis{{1, 2}});
  std::set<RatVector> improving;
  for (auto j : bad.nonbasic()) {
    if (sgn(bad.reduced_cost(j)) > 0) improving.insert(project_solution(plp, bad.direction(j)));
  }
  CHECK(improving == std::set<RatVector>{{1, 1, -1}, {0, -1, 0}});
}

TEST_CASE("ratio test") {
  CHECK(ratio_test(RatVector{1}, RatVector{1}).ratio == 1);
  const auto r = ratio_test(RatVector{2, 1}, RatVector{1, 1});
  CHECK(r.ratio == 1);
  CHECK(r.tied_rows == std::vector<std::size_t>{1});
  CHECK(ratio_test(RatVector{2, 2, 5}, RatVector{2, 2, -1}).tied_rows == std::vector<std::size_t>{0, 1});
  CHECK(code_of([] { ratio_test(RatVector{1, 1}, RatVector{0, -1}); }) == ErrorCode::kUnbounded);

  // Entering s2 at the bad apex basis moves along (0,-1,0): x2 is already 0.
  const auto plp = standardize(pyramid());
  Tableau bad(plp, Basis{{1, 2}});
  CHECK(project_solution(plp, bad.direction(4)) == RatVector{0, -1, 0});
  CHECK(ratio_test(bad.basic_values(), bad.column(4)).ratio == 0);
}

TEST_CASE("lexicographic leaving") {
  // x1 <= 1, x1 + x2 <= 1, x2 <= 1 at the origin; x1 ties rows 0 and 1.
  Lp01Instance inst;
  inst.name = "tie";
  inst.ineq_matrix = {{1, 0}, {1, 1}, {0, 1}};
  inst.ineq_rhs = {1, 1, 1};
  inst.objective = {1, 1};
  const auto lp = standardize(inst);
  Tableau t(lp, Basis{{2, 3, 4}});
  const auto test = ratio_test(t.basic_values(), t.column(0));
  REQUIRE(test.tied_rows == std::vector<std::size_t>{0, 1});
  const std::vector<std::size_t> single{0};
  CHECK(lexicographic_leaving(t, 0, single) == 0);
  CHECK(lexicographic_leaving(t, 0, test.tied_rows) == 1);
}

TEST_CASE("basis from vertex") {
  const auto c2 = cube(2);
  const auto lp = standardize(c2);
  CHECK(basis_from_vertex(c2, lp, Vertex01::from_bitstring("11")).columns == std::vector<std::size_t>{0, 1});
  CHECK(bfs(lp, basis_from_vertex(c2, lp, Vertex01::from_bitstring("11"))) == RatVector{1, 1, 0, 0});
  CHECK(basis_from_vertex(c2, lp, Vertex01::from_bitstring("00")).columns == std::vector<std::size_t>{2, 3});

  const auto py = pyramid();
  const auto plp = standardize(py);
  CHECK(project_solution(plp, bfs(plp, basis_from_vertex(py, plp, Vertex01::from_bitstring("001")))) ==
        RatVector{0, 0, 1});
  CHECK(code_of([&] { basis_from_vertex(py, plp, Vertex01::from_bitstring("101")); }) == ErrorCode::kInfeasible);
}

TEST_CASE("solve") {
  const auto inst = with_objective(cube(3), {1, 2, 3});
  const auto lp = standardize(inst);
  DantzigRule rule;
  const auto trace = solve(lp, rule, Basis{{3, 4, 5}});
  CHECK(trace.optimal == Vertex01::from_bitstring("111"));
  CHECK(trace.optimal_value == 6);
  CHECK(trace.nondegenerate == 3);
  CHECK(trace.vertex_path().size() == 4);

  const auto bases = replay(lp, trace.start_basis, trace.steps);
  REQUIRE(bases.size() == trace.steps.size());
  for (std::size_t i = 0; i < bases.size(); ++i) CHECK(bases[i] == trace.steps[i].basis_after);

  SolveOptions capped;
  capped.step_cap = 1;
  CHECK(code_of([&] { solve(lp, rule, Basis{{3, 4, 5}}, capped); }) == ErrorCode::kCycleSuspected);

  // x1 <= 1, x1 + x2 <= 1, x2 <= 1 with x1, x2 and s2 basic puts s2 at -1.
  Lp01Instance tie;
  tie.name = "tie";
  tie.ineq_matrix = {{1, 0}, {1, 1}, {0, 1}};
  tie.ineq_rhs = {1, 1, 1};
  tie.objective = {1, 1};
  const auto tlp = standardize(tie);
  CHECK(code_of([&] { solve(tlp, rule, Basis{{0, 1, 3}}); }) == ErrorCode::kInfeasible);
}

TEST_CASE("unbounded direction") {
  Lp01Instance inst;
  inst.name = "ray";
  inst.eq_matrix = {{1, -1}};
  inst.eq_rhs = {0};
  inst.objective = {1, 0};
  const auto lp = standardize(inst);
  DantzigRule rule;
  CHECK(code_of([&] { solve(lp, rule, Basis{{0}}); }) == ErrorCode::kUnbounded);
}

TEST_CASE("degenerate pivots on birkhoff(3) never revisit a basis") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto inst = with_objective(birkhoff(3), random_objective(9, seed));
    const auto lp = standardize(inst);
    for (auto kind : all_rules()) {
      auto rule = make_rule(kind, lp, *inst.start_vertex, inst.objective);
      PivotTrace trace;
      try {
        trace = solve(lp, *rule, basis_from_vertex(inst, lp, *inst.start_vertex));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kConePropertyViolated) continue;
        throw;
      }
      std::set<Basis> seen{trace.start_basis};
      for (const auto& s : trace.steps) CHECK(seen.insert(s.basis_after).second);
    }
  }
}
