#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lp01/linalg.hpp"
#include "lp01/model.hpp"
#include "lp01/rational.hpp"

namespace lp01 {

/// Ordered list of basic columns of A'; position i is basis row i.
struct Basis {
  std::vector<std::size_t> columns;

  friend auto operator<=>(const Basis&, const Basis&) = default;
};

/// Everything the rules need at one basis: A'_B^{-1}, the basic values,
/// the tableau columns u_j = A'_B^{-1} A'_j and the reduced costs.
///
/// Pivot directions use z_j(B) = -u_j, z_j(j) = 1, so A' z_j = 0 and moving
/// along z_j decreases the basic variables with u_j(i) > 0.
class Tableau {
 public:
  /// Throws Error(kSingular) if the basis columns are dependent.
  Tableau(const StandardFormLp& lp, Basis basis);

  [[nodiscard]] const StandardFormLp& lp() const noexcept { return *lp_; }
  [[nodiscard]] const Basis& basis() const noexcept { return basis_; }
  [[nodiscard]] const RatMatrix& inverse() const noexcept { return inverse_; }
  /// x'(B(i)) for each basis row i.
  [[nodiscard]] const RatVector& basic_values() const noexcept { return basic_values_; }
  [[nodiscard]] const std::vector<std::size_t>& nonbasic() const noexcept { return nonbasic_; }
  [[nodiscard]] bool is_basic(std::size_t col) const { return row_of_[col].has_value(); }

  /// The full basic solution x' (length n').
  [[nodiscard]] RatVector solution() const;
  [[nodiscard]] bool feasible() const;
  [[nodiscard]] Rational objective() const;
  /// Original coordinates of the basic solution; must be 0/1.
  [[nodiscard]] Vertex01 vertex() const;

  /// u_j for a nonbasic column.
  [[nodiscard]] const RatVector& column(std::size_t j) const;
  /// c'_j - c'_B u_j; zero for basic columns.
  [[nodiscard]] const Rational& reduced_cost(std::size_t j) const { return reduced_costs_[j]; }
  [[nodiscard]] const RatVector& reduced_costs() const noexcept { return reduced_costs_; }

  /// The pivot direction z_j in R^{n'}.
  [[nodiscard]] RatVector direction(std::size_t j) const;
  /// w^T z_j for w in R^{n'}, without materializing z_j.
  [[nodiscard]] Rational direction_dot(const RatVector& w, std::size_t j) const;
  /// || pi(z_j) ||_1 with pi dropping slack coordinates.
  [[nodiscard]] Rational direction_l1_original(std::size_t j) const;

 private:
  const StandardFormLp* lp_;
  Basis basis_;
  RatMatrix inverse_;
  RatVector basic_values_;
  std::vector<std::size_t> nonbasic_;
  std::vector<std::optional<std::size_t>> row_of_;
  std::vector<RatVector> columns_;  // indexed by column; empty for basic ones
  RatVector reduced_costs_;
};

RatVector bfs(const StandardFormLp& lp, const Basis& basis);
/// Full-length vector; entries at basic positions are zero.
RatVector reduced_costs(const StandardFormLp& lp, const Basis& basis);
RatVector direction(const StandardFormLp& lp, const Basis& basis, std::size_t j);

struct RatioTest {
  Rational ratio;
  std::vector<std::size_t> tied_rows;
};

/// min over u(i) > 0 of x_B(i) / u(i). Throws Error(kUnbounded) if u <= 0.
RatioTest ratio_test(const RatVector& basic_values, const RatVector& u);
RatioTest ratio_test(const StandardFormLp& lp, const Basis& basis, const RatVector& u);

/// Among the tied rows, the one minimizing (1/u(i)) [x_B(i) | (A'_B^{-1} R)(i, :)]
/// lexicographically. R is the reference block; the identity when omitted.
std::size_t lexicographic_leaving(const Tableau& t, std::size_t entering,
                                  std::span<const std::size_t> tied_rows,
                                  const RatMatrix* reference = nullptr);

/// A feasible basis whose solution lifts `v`: positive coordinates first,
/// then lowest-index columns that raise the rank. Throws Error(kInfeasible).
Basis basis_from_vertex(const Lp01Instance& inst, const StandardFormLp& lp, const Vertex01& v);

enum class Phase { kPreparation, kMain };
std::string_view to_string(Phase phase);

struct PivotStep {
  std::size_t iter = 0;
  std::size_t entering = 0;
  std::size_t leaving = 0;
  std::size_t leaving_row = 0;
  Rational ratio;
  bool degenerate = false;
  Rational objective_after;
  Vertex01 vertex_after;
  Basis basis_after;
  /// Value the rule maximized to pick `entering`, when it has one.
  std::optional<Rational> score;
  Phase phase = Phase::kMain;
};

struct Selection {
  std::size_t column = 0;
  std::optional<Rational> score;
  Phase phase = Phase::kMain;
  /// The rule asserts the pivot cannot move the vertex.
  bool must_be_degenerate = false;
};

/// Entering-column strategy. The engine owns leaving-row choice.
class PivotRule {
 public:
  virtual ~PivotRule() = default;
  [[nodiscard]] virtual std::string_view name() const = 0;
  /// Empty exactly when no reduced cost is positive.
  virtual std::optional<Selection> select(const Tableau& t) = 0;
  virtual void after_pivot(const Tableau& /*t*/, const PivotStep& /*step*/) {}
  /// Auxiliary vector in original space, for rules that use one.
  [[nodiscard]] virtual std::optional<RatVector> aux() const { return std::nullopt; }
};

struct PivotTrace {
  std::string rule;
  Basis start_basis;
  Vertex01 start_vertex;
  Rational start_objective;
  std::vector<PivotStep> steps;
  std::size_t nondegenerate = 0;
  std::size_t degenerate = 0;
  Vertex01 optimal;
  Rational optimal_value;
  /// Original-space auxiliary vector the rule ran with (shadow rules).
  std::optional<RatVector> aux;

  /// Start vertex followed by the vertex after every nondegenerate step.
  [[nodiscard]] std::vector<Vertex01> vertex_path() const;
};

struct SolveOptions {
  std::size_t step_cap = 1'000'000;
  /// When false the rule may stop while improving columns remain.
  bool require_optimal = true;
};

/// Runs the simplex loop from a feasible basis. Leaving rows always come from
/// the ratio test with a lexicographic tie-break referenced to `start`.
PivotTrace solve(const StandardFormLp& lp, PivotRule& rule, const Basis& start,
                 const SolveOptions& options = {});

/// Re-applies recorded (entering, leaving) exchanges from `start` and
/// returns the basis after each one. Throws if an exchange is not a pivot.
std::vector<Basis> replay(const StandardFormLp& lp, const Basis& start,
                          std::span<const PivotStep> steps);

}  // namespace lp01
