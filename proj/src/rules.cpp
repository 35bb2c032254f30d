#include "lp01/rules.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "lp01/errors.hpp"

namespace lp01 {

std::string_view to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::kDantzig: return "dantzig";
    case RuleKind::kSteepest1: return "steepest1";
    case RuleKind::kTrueSteepest: return "true-steepest";
    case RuleKind::kSlimShadow: return "slim-shadow";
    case RuleKind::kOrderedShadow: return "ordered-shadow";
  }
  return "unknown";
}

RuleKind parse_rule(std::string_view name) {
  for (auto k : all_rules()) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown rule: " + std::string(name));
}

std::vector<RuleKind> all_rules() {
  return {RuleKind::kDantzig, RuleKind::kSteepest1, RuleKind::kTrueSteepest,
          RuleKind::kSlimShadow, RuleKind::kOrderedShadow};
}

bool is_shadow(RuleKind kind) {
  return kind == RuleKind::kSlimShadow || kind == RuleKind::kOrderedShadow;
}

AuxVector unit_flip_aux(const StandardFormLp& lp, const Vertex01& x, RuleKind provenance) {
  AuxVector aux;
  aux.v.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) aux.v[i] = x[i] ? -1 : 1;
  aux.lifted = lift_auxiliary(lp, aux.v);
  aux.provenance = provenance;
  aux.origin = x;
  return aux;
}

std::vector<std::size_t> coordinate_order(std::size_t n, const std::vector<std::size_t>& order) {
  if (order.empty()) {
    std::vector<std::size_t> id(n);
    for (std::size_t k = 0; k < n; ++k) id[k] = k + 1;
    return id;
  }
  if (order.size() != n) throw std::invalid_argument("coordinate order has wrong length");
  std::vector<bool> seen(n + 1, false);
  for (auto s : order) {
    if (s < 1 || s > n || seen[s]) throw std::invalid_argument("coordinate order is not a permutation of 1..n");
    seen[s] = true;
  }
  return order;
}

AuxVector ordered_aux(const StandardFormLp& lp, const Vertex01& x0, const IntVector& objective,
                      const std::vector<std::size_t>& order) {
  const std::size_t n = x0.size();
  const auto sigma = coordinate_order(n, order);
  Integer base = 2;
  for (auto c : objective) base += static_cast<unsigned long>(std::llabs(c));
  AuxVector aux;
  aux.v.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), sigma[k]);
    aux.v[k] = x0[k] ? Rational(-p) : Rational(p);
  }
  aux.lifted = lift_auxiliary(lp, aux.v);
  aux.provenance = RuleKind::kOrderedShadow;
  aux.origin = x0;
  return aux;
}

std::optional<Selection> dantzig_entering(const Tableau& t) {
  std::optional<Selection> best;
  for (auto j : t.nonbasic()) {
    const auto& rc = t.reduced_cost(j);
    if (sgn(rc) <= 0) continue;
    if (!best || rc > *best->score) best = Selection{j, rc};
  }
  return best;
}

std::optional<Selection> steepest1_entering(const Tableau& t) {
  std::optional<Selection> best;
  for (auto j : t.nonbasic()) {
    const auto& rc = t.reduced_cost(j);
    if (sgn(rc) <= 0) continue;
    Rational score = rc / t.direction_l1_original(j);
    if (!best || score > *best->score) best = Selection{j, std::move(score)};
  }
  return best;
}

std::optional<Selection> true_steepest_entering(const Tableau& t, const AuxVector& aux) {
  std::vector<std::pair<std::size_t, Rational>> improving;
  for (auto j : t.nonbasic()) {
    if (sgn(t.reduced_cost(j)) <= 0) continue;
    Rational vz = t.direction_dot(aux.lifted, j);
    // An improving generator with v'z <= 0 leaves the orthant of the
    // feasible cone, so it is a degenerate pivot.
    if (sgn(vz) <= 0) return Selection{j, std::nullopt};
    improving.emplace_back(j, std::move(vz));
  }
  std::optional<Selection> best;
  for (auto& [j, vz] : improving) {
    if (sgn(vz) <= 0) throw Error(ErrorCode::kInvariantViolation, "ratio branch met v'z <= 0");
    Rational score = t.reduced_cost(j) / vz;
    if (!best || score > *best->score) best = Selection{j, std::move(score)};
  }
  return best;
}

std::optional<Selection> shadow_entering(const Tableau& t, const AuxVector& aux) {
  std::optional<Selection> best;
  for (auto j : t.nonbasic()) {
    if (sgn(t.reduced_cost(j)) <= 0) continue;
    Rational vz = t.direction_dot(aux.lifted, j);
    if (sgn(vz) <= 0) {
      throw Error(ErrorCode::kConePropertyViolated,
                  "improving column " + std::to_string(j) + " has v'z = " + to_string(vz));
    }
    Rational score = t.reduced_cost(j) / vz;
    if (!best || score > *best->score) best = Selection{j, std::move(score)};
  }
  return best;
}

std::optional<Selection> cone_repair_entering(const Tableau& t, const AuxVector& aux) {
  for (auto j : t.nonbasic()) {
    if (sgn(t.reduced_cost(j)) > 0 && sgn(t.direction_dot(aux.lifted, j)) <= 0) {
      return Selection{j, std::nullopt, Phase::kPreparation, true};
    }
  }
  return std::nullopt;
}

namespace {

class ConeRepairRule final : public PivotRule {
 public:
  explicit ConeRepairRule(const AuxVector& aux) : aux_(&aux) {}
  std::string_view name() const override { return "cone-repair"; }
  std::optional<Selection> select(const Tableau& t) override { return cone_repair_entering(t, *aux_); }

 private:
  const AuxVector* aux_;
};

}  // namespace

PreparedBasis prepare_initial_basis(const StandardFormLp& lp, const Basis& start,
                                    const AuxVector& aux) {
  ConeRepairRule rule(aux);
  SolveOptions partial;
  partial.require_optimal = false;
  auto trace = solve(lp, rule, start, partial);
  PreparedBasis out;
  out.basis = trace.steps.empty() ? start : trace.steps.back().basis_after;
  out.steps = std::move(trace.steps);
  return out;
}

std::optional<Selection> TrueSteepestRule::select(const Tableau& t) {
  if (!aux_) aux_ = unit_flip_aux(*lp_, t.vertex(), RuleKind::kTrueSteepest);
  return true_steepest_entering(t, *aux_);
}

void TrueSteepestRule::after_pivot(const Tableau& t, const PivotStep& step) {
  if (!step.degenerate) aux_ = unit_flip_aux(*lp_, t.vertex(), RuleKind::kTrueSteepest);
}

std::optional<RatVector> TrueSteepestRule::aux() const {
  if (!aux_) return std::nullopt;
  return aux_->v;
}

std::optional<Selection> ShadowRule::select(const Tableau& t) {
  if (!prepared_) {
    if (auto repair = cone_repair_entering(t, aux_)) return repair;
    prepared_ = true;
  }
  return shadow_entering(t, aux_);
}

std::unique_ptr<PivotRule> make_rule(RuleKind kind, const StandardFormLp& lp,
                                     const Vertex01& start, const IntVector& objective,
                                     const RuleConfig& config) {
  switch (kind) {
    case RuleKind::kDantzig: return std::make_unique<DantzigRule>();
    case RuleKind::kSteepest1: return std::make_unique<Steepest1Rule>();
    case RuleKind::kTrueSteepest: return std::make_unique<TrueSteepestRule>(lp);
    case RuleKind::kSlimShadow:
      return std::make_unique<ShadowRule>(unit_flip_aux(lp, start, RuleKind::kSlimShadow));
    case RuleKind::kOrderedShadow:
      return std::make_unique<ShadowRule>(ordered_aux(lp, start, objective, config.order));
  }
  throw std::invalid_argument("unknown rule kind");
}

}  // namespace lp01
