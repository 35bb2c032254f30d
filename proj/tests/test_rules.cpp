#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lp01/engine.hpp"
#include "lp01/errors.hpp"
#include "lp01/generators.hpp"
#include "lp01/oracle.hpp"
#include "lp01/rules.hpp"

using namespace lp01;

namespace {

AuxVector aux_of(const StandardFormLp& lp, RatVector v) {
  AuxVector a;
  a.lifted = lift_auxiliary(lp, v);
  a.v = std::move(v);
  return a;
}

std::vector<Vertex01> path_of(const Lp01Instance& inst, RuleKind kind, const Vertex01& start) {
  const auto lp = standardize(inst);
  auto rule = make_rule(kind, lp, start, inst.objective);
  return solve(lp, *rule, basis_from_vertex(inst, lp, start)).vertex_path();
}

std::vector<Vertex01> bits(std::initializer_list<const char*> list) {
  std::vector<Vertex01> out;
  for (const char* s : list) out.push_back(Vertex01::from_bitstring(s));
  return out;
}

}  // namespace

TEST_CASE("rule names") {
  for (auto k : all_rules()) CHECK(parse_rule(to_string(k)) == k);
  CHECK(all_rules().size() == 5);
  CHECK(is_shadow(RuleKind::kOrderedShadow));
  CHECK_FALSE(is_shadow(RuleKind::kTrueSteepest));
  CHECK_THROWS(parse_rule("bland"));
}

TEST_CASE("dantzig") {
  const auto lp = standardize(with_objective(cube(2), {1, 2}));
  CHECK(dantzig_entering(Tableau(lp, Basis{{2, 3}}))->column == 1);
  CHECK_FALSE(dantzig_entering(Tableau(lp, Basis{{0, 1}})));

  const auto tie = standardize(with_objective(cube(2), {1, 1}));
  CHECK(dantzig_entering(Tableau(tie, Basis{{2, 3}}))->column == 0);
}

TEST_CASE("steepest1") {
  const auto lp = standardize(with_objective(cube(2), {1, 2}));
  const auto pick = steepest1_entering(Tableau(lp, Basis{{2, 3}}));
  REQUIRE(pick);
  CHECK(pick->column == 1);
  CHECK(*pick->score == 2);
  CHECK_FALSE(steepest1_entering(Tableau(lp, Basis{{0, 1}})));

  const auto plp = standardize(pyramid());
  Tableau bad(plp, Basis{{1, 2}});
  const auto p = steepest1_entering(bad);
  REQUIRE(p);
  CHECK(project_solution(plp, bad.direction(p->column)) == RatVector{1, 1, -1});
  CHECK(*p->score == make_rational(49, 3));
}

TEST_CASE("true steepest on the worked pyramid basis") {
  const auto plp = standardize(pyramid());
  const auto aux = unit_flip_aux(plp, Vertex01::from_bitstring("001"), RuleKind::kTrueSteepest);
  CHECK(aux.v == RatVector{1, 1, -1});
  CHECK(aux.lifted == RatVector{1, 1, -1, 0, 0});

  Tableau bad(plp, Basis{{1, 2}});
  const auto first = true_steepest_entering(bad, aux);
  REQUIRE(first);
  CHECK(project_solution(plp, bad.direction(first->column)) == RatVector{0, -1, 0});
  CHECK(ratio_test(bad.basic_values(), bad.column(first->column)).ratio == 0);

  Tableau next(plp, Basis{{4, 2}});
  CHECK(next.vertex() == Vertex01::from_bitstring("001"));
  const auto second = true_steepest_entering(next, aux);
  REQUIRE(second);
  CHECK(project_solution(plp, next.direction(second->column)) == RatVector{1, 0, -1});
  CHECK(*second->score == 25);
  CHECK(ratio_test(next.basic_values(), next.column(second->column)).ratio == 1);

  const auto clp = standardize(with_objective(cube(3), {1, 2, 3}));
  const auto cube_aux = unit_flip_aux(clp, Vertex01::from_bitstring("000"), RuleKind::kTrueSteepest);
  CHECK(true_steepest_entering(Tableau(clp, Basis{{3, 4, 5}}), cube_aux)->column == 2);
}

TEST_CASE("shadow entering") {
  const auto lp = standardize(with_objective(cube(3), {1, 2, 3}));
  Tableau origin(lp, Basis{{3, 4, 5}});
  CHECK(shadow_entering(origin, aux_of(lp, {1, 1, 1}))->column == 2);

  const auto ordered = ordered_aux(lp, Vertex01::from_bitstring("000"), {1, 2, 3});
  CHECK(ordered.v == RatVector{8, 64, 512});
  const auto pick = shadow_entering(origin, ordered);
  REQUIRE(pick);
  CHECK(pick->column == 0);
  CHECK(*pick->score == make_rational(1, 8));
  CHECK_FALSE(shadow_entering(Tableau(lp, Basis{{0, 1, 2}}), ordered));

  const auto from_one = ordered_aux(lp, Vertex01::from_bitstring("101"), {1, 2, 3});
  CHECK(from_one.v == RatVector{-8, 64, -512});
  const auto permuted = ordered_aux(lp, Vertex01::from_bitstring("000"), {1, 2, 3}, {3, 1, 2});
  CHECK(permuted.v == RatVector{512, 8, 64});

  const auto plp = standardize(pyramid());
  try {
    shadow_entering(Tableau(plp, Basis{{1, 2}}), aux_of(plp, {1, 1, -1}));
    FAIL("cone violation not reported");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kConePropertyViolated);
  }
}

TEST_CASE("coordinate order") {
  CHECK(coordinate_order(3, {}) == std::vector<std::size_t>{1, 2, 3});
  CHECK(coordinate_order(3, {2, 3, 1}) == std::vector<std::size_t>{2, 3, 1});
  CHECK_THROWS(coordinate_order(3, {1, 1, 2}));
  CHECK_THROWS(coordinate_order(3, {1, 2}));
  CHECK_THROWS(coordinate_order(2, {0, 1}));
}

TEST_CASE("preparation") {
  const auto lp = standardize(with_objective(cube(3), {1, 2, 3}));
  const auto none = prepare_initial_basis(lp, Basis{{3, 4, 5}}, aux_of(lp, {1, 1, 1}));
  CHECK(none.steps.empty());
  CHECK(none.basis == Basis{{3, 4, 5}});

  const auto plp = standardize(pyramid());
  const auto aux = aux_of(plp, {1, 1, -1});
  const auto repaired = prepare_initial_basis(plp, Basis{{1, 2}}, aux);
  REQUIRE(repaired.steps.size() == 1);
  CHECK(repaired.steps[0].degenerate);
  CHECK(repaired.steps[0].entering == 4);
  CHECK(repaired.steps[0].phase == Phase::kPreparation);
  CHECK_FALSE(cone_repair_entering(Tableau(plp, repaired.basis), aux));

  // Birkhoff(3) at the identity: preparation stays at the vertex.
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto inst = with_objective(birkhoff(3), random_objective(9, seed));
    const auto blp = standardize(inst);
    const auto start = basis_from_vertex(inst, blp, *inst.start_vertex);
    const auto prep = prepare_initial_basis(blp, start, unit_flip_aux(blp, *inst.start_vertex, RuleKind::kSlimShadow));
    for (const auto& s : prep.steps) CHECK(s.degenerate);
    CHECK(Tableau(blp, prep.basis).vertex() == *inst.start_vertex);
  }
}

TEST_CASE("shadow paths on the cube") {
  const auto inst = with_objective(cube(3), {1, 2, 3});
  const auto zero = Vertex01::from_bitstring("000");
  CHECK(path_of(inst, RuleKind::kSlimShadow, zero) == bits({"000", "001", "011", "111"}));
  CHECK(path_of(inst, RuleKind::kOrderedShadow, zero) == bits({"000", "100", "110", "111"}));
}

TEST_CASE("slim shadow on hypersimplex(6,2) takes at most 2 steps") {
  const auto base = hypersimplex(6, 2);
  const auto vertices = enumerate_vertices(base);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto inst = with_objective(base, random_objective(6, seed));
    for (const auto& v : vertices) {
      const auto path = path_of(inst, RuleKind::kSlimShadow, v);
      CHECK_MESSAGE(path.size() <= 3, "seed ", seed, " from ", v.bitstring());
    }
  }
}
