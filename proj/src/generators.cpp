#include "lp01/generators.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace lp01 {

namespace {

IntMatrix identity_rows(std::size_t n) {
  IntMatrix rows(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return rows;
}

std::vector<std::uint8_t> zeros(std::size_t n) { return std::vector<std::uint8_t>(n, 0); }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Unbiased draw from [0, span) by rejection; std distributions are not
// reproducible across standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t span) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r = 0;
  do {
    r = rng();
  } while (r >= limit);
  return r % span;
}

}  // namespace

Lp01Instance cube(std::size_t n) {
  require(n >= 1 && n <= 22, "cube: need 1 <= n <= 22");
  Lp01Instance inst;
  inst.name = "cube(" + std::to_string(n) + ")";
  inst.ineq_matrix = identity_rows(n);
  inst.ineq_rhs.assign(n, 1);
  for (std::size_t k = 0; k < n; ++k) inst.objective.push_back(static_cast<std::int64_t>(k + 1));
  inst.start_vertex = Vertex01(zeros(n));
  return inst;
}

Lp01Instance pyramid() {
  Lp01Instance inst;
  inst.name = "pyramid";
  inst.ineq_matrix = {{1, 0, 1}, {0, 1, 1}};
  inst.ineq_rhs = {1, 1};
  inst.objective = {50, -1, 0};
  inst.start_vertex = Vertex01::from_bitstring("001");
  return inst;
}

Lp01Instance hypersimplex(std::size_t n, std::size_t k) {
  require(k >= 1 && k < n && n <= 20, "hypersimplex: need 1 <= k < n <= 20");
  Lp01Instance inst;
  inst.name = "hypersimplex(" + std::to_string(n) + "," + std::to_string(k) + ")";
  inst.eq_matrix = {IntVector(n, 1)};
  inst.eq_rhs = {static_cast<std::int64_t>(k)};
  inst.ineq_matrix = identity_rows(n);
  inst.ineq_rhs.assign(n, 1);
  for (std::size_t j = 0; j < n; ++j) inst.objective.push_back(static_cast<std::int64_t>(j + 1));
  auto bits = zeros(n);
  for (std::size_t j = 0; j < k; ++j) bits[j] = 1;
  inst.start_vertex = Vertex01(bits);
  return inst;
}

Lp01Instance birkhoff(std::size_t n) {
  require(n >= 2 && n <= 4, "birkhoff: need 2 <= n <= 4");
  const std::size_t vars = n * n;
  Lp01Instance inst;
  inst.name = "birkhoff(" + std::to_string(n) + ")";
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntVector row(vars, 0);
    for (std::size_t j = 0; j < n; ++j) row[i * n + j] = 1;
    inst.eq_matrix.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < n; ++j) {
    IntVector col(vars, 0);
    for (std::size_t i = 0; i < n; ++i) col[i * n + j] = 1;
    inst.eq_matrix.push_back(std::move(col));
  }
  inst.eq_rhs.assign(inst.eq_matrix.size(), 1);
  for (std::size_t v = 0; v < vars; ++v) inst.objective.push_back(static_cast<std::int64_t>(v + 1));
  auto bits = zeros(vars);
  for (std::size_t i = 0; i < n; ++i) bits[i * n + i] = 1;
  inst.start_vertex = Vertex01(bits);
  return inst;
}

Lp01Instance perfect_matching(std::size_t n) {
  require(n >= 2 && n <= 6 && n % 2 == 0, "matching: need even 2 <= n <= 6");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  const std::size_t m = edges.size();
  Lp01Instance inst;
  inst.name = "matching(" + std::to_string(n) + ")";
  for (std::size_t v = 0; v < n; ++v) {
    IntVector row(m, 0);
    for (std::size_t e = 0; e < m; ++e) {
      if (edges[e].first == v || edges[e].second == v) row[e] = 1;
    }
    inst.eq_matrix.push_back(std::move(row));
  }
  inst.eq_rhs.assign(n, 1);
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size % 2 == 0 || size < 3 || size + 3 > n) continue;
    IntVector row(m, 0);
    for (std::size_t e = 0; e < m; ++e) {
      const bool in_a = (s >> edges[e].first) & 1U;
      const bool in_b = (s >> edges[e].second) & 1U;
      if (in_a != in_b) row[e] = -1;
    }
    inst.ineq_matrix.push_back(std::move(row));
    inst.ineq_rhs.push_back(-1);
  }
  for (std::size_t e = 0; e < m; ++e) inst.objective.push_back(static_cast<std::int64_t>(e + 1));
  auto bits = zeros(m);
  for (std::size_t e = 0; e < m; ++e) {
    if (edges[e].first % 2 == 0 && edges[e].second == edges[e].first + 1) bits[e] = 1;
  }
  inst.start_vertex = Vertex01(bits);
  return inst;
}

Lp01Instance uniform_matroid(std::size_t n, std::size_t r) {
  require(r >= 1 && r <= n && n <= 20, "uniform-matroid: need 1 <= r <= n <= 20");
  Lp01Instance inst;
  inst.name = "uniform-matroid(" + std::to_string(n) + "," + std::to_string(r) + ")";
  inst.ineq_matrix.push_back(IntVector(n, 1));
  inst.ineq_rhs.push_back(static_cast<std::int64_t>(r));
  for (auto& row : identity_rows(n)) inst.ineq_matrix.push_back(std::move(row));
  inst.ineq_rhs.resize(n + 1, 1);
  for (std::size_t j = 0; j < n; ++j) inst.objective.push_back(static_cast<std::int64_t>(j + 1));
  inst.start_vertex = Vertex01(zeros(n));
  return inst;
}

Lp01Instance generate(const GeneratorSpec& spec) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t k) {
    require(p.size() == k, spec.family + ": expected " + std::to_string(k) + " parameter(s)");
  };
  if (spec.family == "cube") {
    arity(1);
    return cube(p[0]);
  }
  if (spec.family == "pyramid") {
    arity(0);
    return pyramid();
  }
  if (spec.family == "hypersimplex") {
    arity(2);
    return hypersimplex(p[0], p[1]);
  }
  if (spec.family == "birkhoff") {
    arity(1);
    return birkhoff(p[0]);
  }
  if (spec.family == "matching") {
    arity(1);
    return perfect_matching(p[0]);
  }
  if (spec.family == "uniform-matroid") {
    arity(2);
    return uniform_matroid(p[0], p[1]);
  }
  throw std::invalid_argument("unknown family: " + spec.family);
}

IntVector random_objective(std::size_t n, std::uint64_t seed, std::int64_t bound) {
  require(bound >= 0, "random_objective: negative bound");
  std::mt19937_64 rng(seed);
  IntVector c(n);
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  for (auto& x : c) x = static_cast<std::int64_t>(draw_below(rng, span)) - bound;
  return c;
}

IntVector random_positive_objective(std::size_t n, std::uint64_t seed, std::int64_t bound) {
  require(bound >= 1, "random_positive_objective: bound must be positive");
  std::mt19937_64 rng(seed);
  IntVector c(n);
  for (auto& x : c) x = static_cast<std::int64_t>(draw_below(rng, static_cast<std::uint64_t>(bound))) + 1;
  return c;
}

IntVector generic_perturbation(const IntVector& c, std::uint64_t seed, std::int64_t spread) {
  const auto r = random_objective(c.size(), seed ^ 0x9e3779b97f4a7c15ULL, spread);
  const std::int64_t k = 2 * static_cast<std::int64_t>(c.size()) * spread + 1;
  IntVector out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = k * c[i] + r[i];
  return out;
}

Lp01Instance with_objective(Lp01Instance inst, IntVector c) {
  if (c.size() != inst.num_vars()) throw std::invalid_argument("objective has wrong length");
  inst.objective = std::move(c);
  return inst;
}

}  // namespace lp01
