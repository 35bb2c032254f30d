#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lp01/engine.hpp"
#include "lp01/model.hpp"

namespace lp01 {

enum class RuleKind { kDantzig, kSteepest1, kTrueSteepest, kSlimShadow, kOrderedShadow };

std::string_view to_string(RuleKind kind);
/// Accepts "dantzig", "steepest1", "true-steepest", "slim-shadow", "ordered-shadow".
RuleKind parse_rule(std::string_view name);
std::vector<RuleKind> all_rules();
bool is_shadow(RuleKind kind);

/// Auxiliary objective v of the steepest and shadow rules, with its lift.
struct AuxVector {
  RatVector v;       // original space
  RatVector lifted;  // zero on slack columns
  RuleKind provenance = RuleKind::kSlimShadow;
  Vertex01 origin;
};

/// v = 1 - 2 x, entries in {-1, +1}.
AuxVector unit_flip_aux(const StandardFormLp& lp, const Vertex01& x, RuleKind provenance);

/// v(k) = (-1)^{x0(k)} (c*)^{order[k]} with c* = ||c||_1 + 2. `order` is a
/// permutation of 1..n; empty means the identity.
AuxVector ordered_aux(const StandardFormLp& lp, const Vertex01& x0, const IntVector& objective,
                      const std::vector<std::size_t>& order = {});

/// Validates `order` as a permutation of 1..n, or returns the identity.
std::vector<std::size_t> coordinate_order(std::size_t n, const std::vector<std::size_t>& order);

// Entering rules as pure functions of a tableau. Ties go to the lowest column.

std::optional<Selection> dantzig_entering(const Tableau& t);
std::optional<Selection> steepest1_entering(const Tableau& t);
/// Throws Error(kInvariantViolation) if the ratio branch meets v'z <= 0.
std::optional<Selection> true_steepest_entering(const Tableau& t, const AuxVector& aux);
/// Throws Error(kConePropertyViolated) if an improving column has v'z <= 0.
std::optional<Selection> shadow_entering(const Tableau& t, const AuxVector& aux);
/// Lowest column with c_bar > 0 and v'z <= 0, marked as a preparation pivot.
std::optional<Selection> cone_repair_entering(const Tableau& t, const AuxVector& aux);

struct PreparedBasis {
  Basis basis;
  std::vector<PivotStep> steps;
};

/// Degenerate pivots until every improving direction has v'z > 0.
/// Throws Error(kNondegenerateEscape) if one of them moves the vertex.
PreparedBasis prepare_initial_basis(const StandardFormLp& lp, const Basis& start,
                                    const AuxVector& aux);

class DantzigRule final : public PivotRule {
 public:
  std::string_view name() const override { return "dantzig"; }
  std::optional<Selection> select(const Tableau& t) override { return dantzig_entering(t); }
};

class Steepest1Rule final : public PivotRule {
 public:
  std::string_view name() const override { return "steepest1"; }
  std::optional<Selection> select(const Tableau& t) override { return steepest1_entering(t); }
};

/// Carries v = 1 - 2x for the current vertex, refreshed after each
/// nondegenerate pivot.
class TrueSteepestRule final : public PivotRule {
 public:
  explicit TrueSteepestRule(const StandardFormLp& lp) : lp_(&lp) {}
  std::string_view name() const override { return "true-steepest"; }
  std::optional<Selection> select(const Tableau& t) override;
  void after_pivot(const Tableau& t, const PivotStep& step) override;
  std::optional<RatVector> aux() const override;

 private:
  const StandardFormLp* lp_;
  std::optional<AuxVector> aux_;
};

/// Fixed auxiliary vector; repairs the start basis with degenerate pivots,
/// then maximizes c_bar / v'z.
class ShadowRule final : public PivotRule {
 public:
  explicit ShadowRule(AuxVector aux) : aux_(std::move(aux)) {}
  std::string_view name() const override { return to_string(aux_.provenance); }
  std::optional<Selection> select(const Tableau& t) override;
  std::optional<RatVector> aux() const override { return aux_.v; }
  [[nodiscard]] bool prepared() const noexcept { return prepared_; }

 private:
  AuxVector aux_;
  bool prepared_ = false;
};

struct RuleConfig {
  /// Ordered-shadow coordinate order (permutation of 1..n); empty = identity.
  std::vector<std::size_t> order;
};

std::unique_ptr<PivotRule> make_rule(RuleKind kind, const StandardFormLp& lp,
                                     const Vertex01& start, const IntVector& objective,
                                     const RuleConfig& config = {});

}  // namespace lp01
