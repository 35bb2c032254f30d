#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lp01/linalg.hpp"
#include "lp01/rational.hpp"

namespace lp01 {

/// A 0/1 point of the original variable space.
class Vertex01 {
 public:
  Vertex01() = default;
  explicit Vertex01(std::vector<std::uint8_t> bits);

  /// Accepts only exact 0/1 rationals; throws Error(kInvariantViolation).
  static Vertex01 from_rational(const RatVector& x);
  static Vertex01 from_integers(const IntVector& x);
  /// Parses "0110".
  static Vertex01 from_bitstring(const std::string& s);

  [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
  [[nodiscard]] std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  [[nodiscard]] const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  [[nodiscard]] std::string bitstring() const;
  [[nodiscard]] IntVector to_integers() const;
  [[nodiscard]] RatVector to_rational() const;
  [[nodiscard]] std::size_t support_size() const;

  friend auto operator<=>(const Vertex01&, const Vertex01&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Integer data of max{ c x : A x = b, D x <= d } with x >= 0 implicit.
struct Lp01Instance {
  std::string name;
  IntMatrix eq_matrix;    // A, m x n
  IntVector eq_rhs;       // b
  IntMatrix ineq_matrix;  // D, p x n; nonnegativity is not stored here
  IntVector ineq_rhs;     // d
  IntVector objective;    // c, maximized
  std::optional<Vertex01> start_vertex;

  [[nodiscard]] std::size_t num_vars() const noexcept { return objective.size(); }
  [[nodiscard]] std::size_t num_equalities() const noexcept { return eq_matrix.size(); }
  [[nodiscard]] std::size_t num_inequalities() const noexcept { return ineq_matrix.size(); }

  /// Shape checks only (row lengths, rhs lengths). Throws Error(kInvalidInstance).
  void check_shape() const;

  /// Exact feasibility of a 0/1 point, nonnegativity included.
  [[nodiscard]] bool is_feasible(const Vertex01& x) const;
  [[nodiscard]] std::int64_t value(const Vertex01& x) const;

  friend bool operator==(const Lp01Instance&, const Lp01Instance&) = default;
};

/// Equality form max{ c' x : A' x = b', x >= 0 } with A' = [A 0; D I].
struct StandardFormLp {
  RatMatrix matrix;   // A'
  RatVector rhs;      // b'
  RatVector cost;     // c'
  std::size_t n_original = 0;
  /// Inequality row k of D owns column slack_of_row[k] (always n + k).
  std::vector<std::size_t> slack_of_row;
  /// Equality rows of A that survived redundancy removal, in order.
  std::vector<std::size_t> kept_equalities;

  [[nodiscard]] std::size_t rows() const noexcept { return matrix.rows(); }
  [[nodiscard]] std::size_t cols() const noexcept { return matrix.cols(); }
  [[nodiscard]] bool is_slack(std::size_t col) const noexcept { return col >= n_original; }
};

struct ValidationReport {
  std::size_t equality_rank = 0;
  /// Equality rows not in the lex-first maximal independent subset.
  std::vector<std::size_t> redundant_equalities;
  bool equalities_consistent = true;
  std::optional<bool> start_feasible;
  std::optional<bool> start_is_01;
  /// Filled only when the 2^n scan is affordable.
  std::optional<bool> points_are_vertices;
  /// Filled only when the basis scan is affordable.
  std::optional<bool> no_fractional_vertex;
  std::vector<std::string> messages;

  [[nodiscard]] bool full_rank() const noexcept { return redundant_equalities.empty(); }
  /// No check that was run failed. Rank deficiency is repaired by
  /// standardize and is reported, not treated as a failure.
  [[nodiscard]] bool ok() const noexcept;
};

struct ValidationLimits {
  std::size_t max_enumeration_vars = 20;
  /// Upper bound on C(n', m') for the fractional-vertex basis scan.
  std::size_t max_basis_subsets = 200'000;
};

ValidationReport validate(const Lp01Instance& inst, const ValidationLimits& limits = {});

/// Adds one slack per row of D and drops redundant equality rows.
/// Throws Error(kInfeasible) if the equalities are inconsistent.
StandardFormLp standardize(const Lp01Instance& inst);

/// First n coordinates of a standard-form point.
RatVector project_solution(const StandardFormLp& lp, const RatVector& x_prime);

/// (x, d - D x): the standard-form point matching an original point.
RatVector lift_point(const Lp01Instance& inst, const RatVector& x);

/// Zero-pads a vector of the original space onto the slack coordinates.
RatVector lift_auxiliary(const StandardFormLp& lp, const RatVector& v);

}  // namespace lp01
