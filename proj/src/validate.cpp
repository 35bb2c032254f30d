#include <algorithm>
#include <string>

#include "lp01/errors.hpp"
#include "lp01/model.hpp"
#include "lp01/oracle.hpp"

namespace lp01 {

namespace {

// C(n, k), saturating at cap + 1.
std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > cap) return cap + 1;
  }
  return static_cast<std::size_t>(c);
}

// Rank of the instance's own constraints (A, D, x >= 0) tight at x.
std::size_t tight_rank(const Lp01Instance& inst, const Vertex01& x) {
  const std::size_t n = inst.num_vars();
  IntMatrix rows = inst.eq_matrix;
  for (std::size_t k = 0; k < inst.num_inequalities(); ++k) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s += x[j] ? inst.ineq_matrix[k][j] : 0;
    if (s == inst.ineq_rhs[k]) rows.push_back(inst.ineq_matrix[k]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j]) continue;
    IntVector e(n, 0);
    e[j] = -1;
    rows.push_back(std::move(e));
  }
  return rank(rows, n);
}

// Every feasible basis of A' must project to a 0/1 point.
bool scan_bases(const StandardFormLp& lp, std::string& witness) {
  const std::size_t m = lp.rows();
  const std::size_t cols = lp.cols();
  std::vector<std::size_t> pick(m);
  for (std::size_t i = 0; i < m; ++i) pick[i] = i;
  while (true) {
    const auto b = lp.matrix.select_columns(pick);
    if (rank(b) == m) {
      const auto xb = solve_square(b, lp.rhs);
      if (std::all_of(xb.begin(), xb.end(), [](const Rational& q) { return sgn(q) >= 0; })) {
        for (std::size_t i = 0; i < m; ++i) {
          if (pick[i] < lp.n_original && xb[i] != 0 && xb[i] != 1) {
            witness = "basis column " + std::to_string(pick[i]) + " takes value " + to_string(xb[i]);
            return false;
          }
        }
      }
    }
    std::size_t i = m;
    while (i > 0 && pick[i - 1] == cols - m + i - 1) --i;
    if (i == 0) return true;
    ++pick[i - 1];
    for (std::size_t k = i; k < m; ++k) pick[k] = pick[k - 1] + 1;
  }
}

}  // namespace

ValidationReport validate(const Lp01Instance& inst, const ValidationLimits& limits) {
  inst.check_shape();
  ValidationReport report;
  const std::size_t n = inst.num_vars();

  if (!inst.eq_matrix.empty()) {
    const auto kept = independent_rows(RatMatrix::from_integers(inst.eq_matrix, n));
    report.equality_rank = kept.size();
    for (std::size_t i = 0, k = 0; i < inst.num_equalities(); ++i) {
      if (k < kept.size() && kept[k] == i) {
        ++k;
      } else {
        report.redundant_equalities.push_back(i);
      }
    }
    IntMatrix augmented = inst.eq_matrix;
    for (std::size_t i = 0; i < augmented.size(); ++i) augmented[i].push_back(inst.eq_rhs[i]);
    report.equalities_consistent = rank(augmented, n + 1) == kept.size();
    if (!report.full_rank()) {
      report.messages.push_back("equality matrix has rank " + std::to_string(kept.size()) + " < " +
                                std::to_string(inst.num_equalities()) + " rows");
    }
    if (!report.equalities_consistent) report.messages.push_back("equality system is inconsistent");
  }

  if (inst.start_vertex) {
    report.start_is_01 = inst.start_vertex->size() == n;
    report.start_feasible = *report.start_is_01 && inst.is_feasible(*inst.start_vertex);
    if (!*report.start_feasible) {
      report.messages.push_back("start vertex " + inst.start_vertex->bitstring() + " is infeasible");
    }
  }

  if (n <= limits.max_enumeration_vars) {
    const auto points = enumerate_vertices(inst, limits.max_enumeration_vars);
    bool all = !points.empty();
    for (const auto& x : points) {
      if (tight_rank(inst, x) != n) {
        all = false;
        report.messages.push_back("feasible point " + x.bitstring() + " is not a vertex");
        break;
      }
    }
    if (points.empty()) report.messages.push_back("no feasible 0/1 point");
    report.points_are_vertices = all;
  }

  if (report.equalities_consistent) {
    const auto lp = standardize(inst);
    if (lp.rows() > 0 && binomial_capped(lp.cols(), lp.rows(), limits.max_basis_subsets) <=
                             limits.max_basis_subsets) {
      std::string witness;
      report.no_fractional_vertex = scan_bases(lp, witness);
      if (!*report.no_fractional_vertex) report.messages.push_back("fractional vertex: " + witness);
    }
  }
  return report;
}

}  // namespace lp01
