#include "lp01/model.hpp"

#include <stdexcept>

#include "lp01/errors.hpp"

namespace lp01 {

Vertex01::Vertex01(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("Vertex01 entries must be 0 or 1");
  }
}

Vertex01 Vertex01::from_rational(const RatVector& x) {
  std::vector<std::uint8_t> bits(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) {
      bits[i] = 0;
    } else if (x[i] == 1) {
      bits[i] = 1;
    } else {
      throw Error(ErrorCode::kInvariantViolation,
                  "coordinate " + std::to_string(i) + " = " + to_string(x[i]) + " is not 0/1");
    }
  }
  return Vertex01(std::move(bits));
}

Vertex01 Vertex01::from_integers(const IntVector& x) {
  std::vector<std::uint8_t> bits(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0 && x[i] != 1) throw std::invalid_argument("Vertex01 entries must be 0 or 1");
    bits[i] = static_cast<std::uint8_t>(x[i]);
  }
  return Vertex01(std::move(bits));
}

Vertex01 Vertex01::from_bitstring(const std::string& s) {
  std::vector<std::uint8_t> bits(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("bad bitstring: " + s);
    bits[i] = static_cast<std::uint8_t>(s[i] - '0');
  }
  return Vertex01(std::move(bits));
}

std::string Vertex01::bitstring() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

IntVector Vertex01::to_integers() const { return IntVector(bits_.begin(), bits_.end()); }

RatVector Vertex01::to_rational() const {
  RatVector out(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = bits_[i];
  return out;
}

std::size_t Vertex01::support_size() const {
  std::size_t k = 0;
  for (auto b : bits_) k += b;
  return k;
}

void Lp01Instance::check_shape() const {
  const std::size_t n = num_vars();
  auto fail = [&](const std::string& what) { throw Error(ErrorCode::kInvalidInstance, name + ": " + what); };
  if (n == 0) fail("no variables");
  if (eq_rhs.size() != eq_matrix.size()) fail("A and b row counts differ");
  if (ineq_rhs.size() != ineq_matrix.size()) fail("D and d row counts differ");
  for (const auto& row : eq_matrix) {
    if (row.size() != n) fail("row of A has wrong length");
  }
  for (const auto& row : ineq_matrix) {
    if (row.size() != n) fail("row of D has wrong length");
  }
  if (start_vertex && start_vertex->size() != n) fail("start_vertex has wrong length");
}

namespace {

std::int64_t row_dot(const IntVector& row, const Vertex01& x) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (x[j]) s += row[j];
  }
  return s;
}

}  // namespace

bool Lp01Instance::is_feasible(const Vertex01& x) const {
  if (x.size() != num_vars()) return false;
  for (std::size_t i = 0; i < eq_matrix.size(); ++i) {
    if (row_dot(eq_matrix[i], x) != eq_rhs[i]) return false;
  }
  for (std::size_t i = 0; i < ineq_matrix.size(); ++i) {
    if (row_dot(ineq_matrix[i], x) > ineq_rhs[i]) return false;
  }
  return true;
}

std::int64_t Lp01Instance::value(const Vertex01& x) const { return row_dot(objective, x); }

bool ValidationReport::ok() const noexcept {
  if (!equalities_consistent) return false;
  for (const auto& flag : {start_feasible, start_is_01, points_are_vertices, no_fractional_vertex}) {
    if (flag.has_value() && !*flag) return false;
  }
  return true;
}

StandardFormLp standardize(const Lp01Instance& inst) {
  inst.check_shape();
  const std::size_t n = inst.num_vars();
  const std::size_t p = inst.num_inequalities();

  StandardFormLp lp;
  lp.n_original = n;
  if (!inst.eq_matrix.empty()) {
    auto a = RatMatrix::from_integers(inst.eq_matrix, n);
    lp.kept_equalities = independent_rows(a);
    // Augmented rank check: a dropped row must be implied, rhs included.
    IntMatrix augmented = inst.eq_matrix;
    for (std::size_t i = 0; i < augmented.size(); ++i) augmented[i].push_back(inst.eq_rhs[i]);
    if (rank(augmented, n + 1) != lp.kept_equalities.size()) {
      throw Error(ErrorCode::kInfeasible, inst.name + ": equality system is inconsistent");
    }
  }
  const std::size_t m = lp.kept_equalities.size();

  lp.matrix = RatMatrix(m + p, n + p);
  lp.rhs.assign(m + p, Rational(0));
  lp.cost.assign(n + p, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    const auto src = lp.kept_equalities[r];
    for (std::size_t j = 0; j < n; ++j) lp.matrix(r, j) = static_cast<long>(inst.eq_matrix[src][j]);
    lp.rhs[r] = static_cast<long>(inst.eq_rhs[src]);
  }
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t j = 0; j < n; ++j) lp.matrix(m + k, j) = static_cast<long>(inst.ineq_matrix[k][j]);
    lp.matrix(m + k, n + k) = 1;
    lp.rhs[m + k] = static_cast<long>(inst.ineq_rhs[k]);
    lp.slack_of_row.push_back(n + k);
  }
  for (std::size_t j = 0; j < n; ++j) lp.cost[j] = static_cast<long>(inst.objective[j]);
  return lp;
}

RatVector project_solution(const StandardFormLp& lp, const RatVector& x_prime) {
  if (x_prime.size() != lp.cols()) throw std::invalid_argument("project_solution: wrong length");
  return RatVector(x_prime.begin(), x_prime.begin() + static_cast<std::ptrdiff_t>(lp.n_original));
}

RatVector lift_point(const Lp01Instance& inst, const RatVector& x) {
  if (x.size() != inst.num_vars()) throw std::invalid_argument("lift_point: wrong length");
  RatVector out = x;
  for (std::size_t k = 0; k < inst.num_inequalities(); ++k) {
    out.push_back(Rational(static_cast<long>(inst.ineq_rhs[k])) - dot(x, inst.ineq_matrix[k]));
  }
  return out;
}

RatVector lift_auxiliary(const StandardFormLp& lp, const RatVector& v) {
  if (v.size() != lp.n_original) throw std::invalid_argument("lift_auxiliary: wrong length");
  RatVector out = v;
  out.resize(lp.cols(), Rational(0));
  return out;
}

}  // namespace lp01
