#include "lp01/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lp01/errors.hpp"

namespace lp01 {

Tableau::Tableau(const StandardFormLp& lp, Basis basis)
    : lp_(&lp), basis_(std::move(basis)), row_of_(lp.cols()), columns_(lp.cols()),
      reduced_costs_(lp.cols(), Rational(0)) {
  const std::size_t m = lp.rows();
  if (basis_.columns.size() != m) {
    throw Error(ErrorCode::kSingular, "basis has " + std::to_string(basis_.columns.size()) +
                                          " columns, expected " + std::to_string(m));
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto col = basis_.columns[i];
    if (col >= lp.cols() || row_of_[col].has_value()) {
      throw Error(ErrorCode::kSingular, "basis column out of range or repeated");
    }
    row_of_[col] = i;
  }
  inverse_ = lp01::inverse(lp.matrix.select_columns(basis_.columns));
  basic_values_ = inverse_ * lp.rhs;

  for (std::size_t j = 0; j < lp.cols(); ++j) {
    if (row_of_[j]) continue;
    nonbasic_.push_back(j);
    RatVector u(m, Rational(0));
    for (std::size_t k = 0; k < m; ++k) {
      const Rational& a = lp.matrix(k, j);
      if (sgn(a) == 0) continue;
      for (std::size_t i = 0; i < m; ++i) {
        if (sgn(inverse_(i, k)) != 0) u[i] += inverse_(i, k) * a;
      }
    }
    Rational rc = lp.cost[j];
    for (std::size_t i = 0; i < m; ++i) {
      const Rational& cb = lp.cost[basis_.columns[i]];
      if (sgn(cb) != 0 && sgn(u[i]) != 0) rc -= cb * u[i];
    }
    reduced_costs_[j] = std::move(rc);
    columns_[j] = std::move(u);
  }
}

RatVector Tableau::solution() const {
  RatVector x(lp_->cols(), Rational(0));
  for (std::size_t i = 0; i < basis_.columns.size(); ++i) x[basis_.columns[i]] = basic_values_[i];
  return x;
}

bool Tableau::feasible() const {
  return std::all_of(basic_values_.begin(), basic_values_.end(),
                     [](const Rational& q) { return sgn(q) >= 0; });
}

Rational Tableau::objective() const {
  Rational s = 0;
  for (std::size_t i = 0; i < basis_.columns.size(); ++i) {
    s += lp_->cost[basis_.columns[i]] * basic_values_[i];
  }
  return s;
}

Vertex01 Tableau::vertex() const { return Vertex01::from_rational(project_solution(*lp_, solution())); }

const RatVector& Tableau::column(std::size_t j) const {
  if (j >= lp_->cols() || row_of_[j]) {
    throw std::invalid_argument("column " + std::to_string(j) + " is not nonbasic");
  }
  return columns_[j];
}

RatVector Tableau::direction(std::size_t j) const {
  const auto& u = column(j);
  RatVector z(lp_->cols(), Rational(0));
  z[j] = 1;
  for (std::size_t i = 0; i < u.size(); ++i) z[basis_.columns[i]] = -u[i];
  return z;
}

Rational Tableau::direction_dot(const RatVector& w, std::size_t j) const {
  const auto& u = column(j);
  Rational s = w[j];
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Rational& wb = w[basis_.columns[i]];
    if (sgn(wb) != 0 && sgn(u[i]) != 0) s -= wb * u[i];
  }
  return s;
}

Rational Tableau::direction_l1_original(std::size_t j) const {
  const auto& u = column(j);
  Rational s = lp_->is_slack(j) ? 0 : 1;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!lp_->is_slack(basis_.columns[i])) s += abs(u[i]);
  }
  return s;
}

RatVector bfs(const StandardFormLp& lp, const Basis& basis) { return Tableau(lp, basis).solution(); }

RatVector reduced_costs(const StandardFormLp& lp, const Basis& basis) {
  return Tableau(lp, basis).reduced_costs();
}

RatVector direction(const StandardFormLp& lp, const Basis& basis, std::size_t j) {
  return Tableau(lp, basis).direction(j);
}

RatioTest ratio_test(const RatVector& basic_values, const RatVector& u) {
  if (basic_values.size() != u.size()) throw std::invalid_argument("ratio_test: size mismatch");
  RatioTest out;
  bool found = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (sgn(u[i]) <= 0) continue;
    Rational r = basic_values[i] / u[i];
    if (!found || r < out.ratio) {
      out.ratio = std::move(r);
      out.tied_rows.assign(1, i);
      found = true;
    } else if (r == out.ratio) {
      out.tied_rows.push_back(i);
    }
  }
  if (!found) throw Error(ErrorCode::kUnbounded, "no positive entry in the pivot column");
  return out;
}

RatioTest ratio_test(const StandardFormLp& lp, const Basis& basis, const RatVector& u) {
  return ratio_test(Tableau(lp, basis).basic_values(), u);
}

std::size_t lexicographic_leaving(const Tableau& t, std::size_t entering,
                                  std::span<const std::size_t> tied_rows,
                                  const RatMatrix* reference) {
  if (tied_rows.empty()) throw std::invalid_argument("lexicographic_leaving: no tied rows");
  if (tied_rows.size() == 1) return tied_rows.front();
  const auto& u = t.column(entering);
  const auto& inv = t.inverse();
  const std::size_t m = inv.rows();
  const std::size_t width = reference ? reference->cols() : m;

  auto scaled_row = [&](std::size_t i) {
    RatVector row(width + 1);
    row[0] = t.basic_values()[i] / u[i];
    for (std::size_t c = 0; c < width; ++c) {
      Rational s = 0;
      if (reference) {
        for (std::size_t k = 0; k < m; ++k) {
          if (sgn(inv(i, k)) != 0 && sgn((*reference)(k, c)) != 0) s += inv(i, k) * (*reference)(k, c);
        }
      } else {
        s = inv(i, c);
      }
      row[c + 1] = s / u[i];
    }
    return row;
  };

  std::size_t best = tied_rows.front();
  RatVector best_row = scaled_row(best);
  for (std::size_t k = 1; k < tied_rows.size(); ++k) {
    RatVector row = scaled_row(tied_rows[k]);
    if (lex_compare(row, best_row) < 0) {
      best = tied_rows[k];
      best_row = std::move(row);
    }
  }
  return best;
}

Basis basis_from_vertex(const Lp01Instance& inst, const StandardFormLp& lp, const Vertex01& v) {
  if (!inst.is_feasible(v)) {
    throw Error(ErrorCode::kInfeasible, "start vertex " + v.bitstring() + " violates the constraints");
  }
  const RatVector lifted = lift_point(inst, v.to_rational());
  const std::size_t m = lp.rows();
  Basis basis;
  auto try_add = [&](std::size_t j) {
    basis.columns.push_back(j);
    if (rank(lp.matrix.select_columns(basis.columns)) < basis.columns.size()) {
      basis.columns.pop_back();
      return false;
    }
    return true;
  };
  for (std::size_t j = 0; j < lp.cols(); ++j) {
    if (sgn(lifted[j]) > 0 && !try_add(j)) {
      throw Error(ErrorCode::kInvariantViolation,
                  "support of " + v.bitstring() + " is dependent: not a vertex");
    }
  }
  for (std::size_t j = 0; j < lp.cols() && basis.columns.size() < m; ++j) {
    if (sgn(lifted[j]) == 0) try_add(j);
  }
  if (basis.columns.size() != m) throw Error(ErrorCode::kSingular, "A' does not have full row rank");
  return basis;
}

std::string_view to_string(Phase phase) {
  return phase == Phase::kPreparation ? "preparation" : "main";
}

std::vector<Vertex01> PivotTrace::vertex_path() const {
  std::vector<Vertex01> path{start_vertex};
  for (const auto& s : steps) {
    if (!s.degenerate) path.push_back(s.vertex_after);
  }
  return path;
}

PivotTrace solve(const StandardFormLp& lp, PivotRule& rule, const Basis& start,
                 const SolveOptions& options) {
  const RatMatrix reference = lp.matrix.select_columns(start.columns);
  Tableau t(lp, start);
  if (!t.feasible()) throw Error(ErrorCode::kInfeasible, "start basis is not primal feasible");

  PivotTrace trace;
  trace.rule = std::string(rule.name());
  trace.start_basis = start;
  trace.start_vertex = t.vertex();
  trace.start_objective = t.objective();

  while (true) {
    auto selection = rule.select(t);
    if (!selection) {
      if (!options.require_optimal) break;
      for (auto j : t.nonbasic()) {
        if (sgn(t.reduced_cost(j)) > 0) {
          throw Error(ErrorCode::kInvariantViolation,
                      std::string(rule.name()) + " stopped with a positive reduced cost");
        }
      }
      break;
    }
    const std::size_t j = selection->column;
    if (t.is_basic(j) || sgn(t.reduced_cost(j)) <= 0) {
      throw Error(ErrorCode::kInvariantViolation,
                  std::string(rule.name()) + " selected a non-improving column");
    }
    if (trace.steps.size() >= options.step_cap) {
      throw Error(ErrorCode::kCycleSuspected,
                  "step cap " + std::to_string(options.step_cap) + " reached");
    }
    const auto test = ratio_test(t.basic_values(), t.column(j));
    const std::size_t row = lexicographic_leaving(t, j, test.tied_rows, &reference);
    const bool degenerate = sgn(test.ratio) == 0;
    if (selection->must_be_degenerate && !degenerate) {
      throw Error(ErrorCode::kNondegenerateEscape,
                  "preparation pivot on column " + std::to_string(j) + " moved the vertex");
    }

    Basis next = t.basis();
    const std::size_t leaving = next.columns[row];
    next.columns[row] = j;
    Tableau nt(lp, next);

    PivotStep step;
    step.iter = trace.steps.size() + 1;
    step.entering = j;
    step.leaving = leaving;
    step.leaving_row = row;
    step.ratio = test.ratio;
    step.degenerate = degenerate;
    step.objective_after = nt.objective();
    step.vertex_after = nt.vertex();
    step.basis_after = nt.basis();
    step.score = selection->score;
    step.phase = selection->phase;
    if (degenerate) {
      ++trace.degenerate;
    } else {
      ++trace.nondegenerate;
    }
    rule.after_pivot(nt, step);
    trace.steps.push_back(std::move(step));
    t = std::move(nt);
  }
  trace.optimal = t.vertex();
  trace.optimal_value = t.objective();
  trace.aux = rule.aux();
  return trace;
}

std::vector<Basis> replay(const StandardFormLp& lp, const Basis& start,
                          std::span<const PivotStep> steps) {
  std::vector<Basis> out;
  Basis current = start;
  for (const auto& s : steps) {
    Tableau t(lp, current);
    auto pos = std::find(current.columns.begin(), current.columns.end(), s.leaving);
    if (t.is_basic(s.entering) || pos == current.columns.end()) {
      throw Error(ErrorCode::kInvariantViolation,
                  "step " + std::to_string(s.iter) + " is not a basis exchange");
    }
    const auto row = static_cast<std::size_t>(pos - current.columns.begin());
    if (sgn(t.column(s.entering)[row]) == 0) {
      throw Error(ErrorCode::kSingular, "step " + std::to_string(s.iter) + " pivots on a zero");
    }
    current.columns[row] = s.entering;
    out.push_back(current);
  }
  return out;
}

}  // namespace lp01
