#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lp01/model.hpp"
#include "lp01/rational.hpp"

namespace lp01 {

/// Largest n for which the 2^n scan is attempted.
inline constexpr std::size_t kMaxEnumerationVars = 22;

/// All feasible 0/1 points, in increasing bitstring order (x(1) most
/// significant). Throws Error(kTooLarge) above `max_vars`.
std::vector<Vertex01> enumerate_vertices(const Lp01Instance& inst,
                                         std::size_t max_vars = kMaxEnumerationVars);

struct SkeletonGraph {
  std::vector<Vertex01> vertices;
  std::vector<std::vector<std::size_t>> adjacency;  // sorted, symmetric
};

/// Brute-force ground truth over the enumerated vertex set. Adjacency of
/// u and w: the constraints tight at both (A x = b, D x <= d, x >= 0 and the
/// valid bounds x <= 1) have rank n - 1. Neighbor lists are computed on
/// demand and cached, so one oracle must not be shared across threads.
class PolytopeOracle {
 public:
  explicit PolytopeOracle(const Lp01Instance& inst, std::size_t max_vars = kMaxEnumerationVars);

  [[nodiscard]] const Lp01Instance& instance() const noexcept { return inst_; }
  [[nodiscard]] const std::vector<Vertex01>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] std::optional<std::size_t> index_of(const Vertex01& x) const;
  [[nodiscard]] bool adjacent(std::size_t a, std::size_t b) const;
  const std::vector<std::size_t>& neighbors(std::size_t idx);
  const std::vector<std::size_t>& neighbors(const Vertex01& x);
  [[nodiscard]] std::size_t dimension() const;
  SkeletonGraph skeleton();

 private:
  struct Constraint {
    IntVector normal;
    std::int64_t rhs;
  };
  using Mask = std::vector<std::uint64_t>;

  Lp01Instance inst_;
  std::vector<Vertex01> vertices_;
  std::map<Vertex01, std::size_t> index_;
  std::vector<Constraint> constraints_;
  std::vector<Mask> tight_;
  std::vector<std::optional<std::vector<std::size_t>>> neighbor_cache_;
};

SkeletonGraph skeleton(const Lp01Instance& inst, const std::vector<Vertex01>& vertices);

/// { u ~ x : w u > w x }.
std::vector<Vertex01> improving_neighbors(PolytopeOracle& oracle, const Vertex01& x,
                                          const RatVector& w);

struct SteepestEdges {
  std::vector<IntVector> directions;
  Rational value;  // c g / ||g||_1 of every direction listed
};

/// Edge-directions u - x maximizing c g / ||g||_1. Empty when x has no
/// c-improving neighbor.
SteepestEdges steepest_edges(PolytopeOracle& oracle, const Vertex01& x, const IntVector& c);

struct Point2 {
  Rational x;
  Rational y;
  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

/// Projection of the vertex set under (v x, c x) with its convex hull and
/// upper path. `upper` runs from the top of the leftmost face to the top of
/// the rightmost face and keeps only strict hull vertices; collinear points
/// on it count as interior points of an upper edge.
struct ShadowPolygon {
  std::vector<Point2> points;  // distinct, sorted
  std::vector<Point2> hull;    // counterclockwise
  std::vector<Point2> upper;

  /// p equals an upper vertex or lies inside an upper edge.
  [[nodiscard]] bool on_upper_path(const Point2& p) const;
};

ShadowPolygon upper_path(const std::vector<Vertex01>& vertices, const RatVector& v,
                         const IntVector& c);

Point2 project(const Vertex01& x, const RatVector& v, const IntVector& c);

/// The path is strictly v-increasing, every projected vertex lies on the
/// upper path, and every upper vertex up to the first c-maximum is hit.
bool is_coherent(const std::vector<Vertex01>& path, const RatVector& v, const IntVector& c,
                 const std::vector<Vertex01>& vertices);

/// f(u) = max order[k] over coordinates where u differs from x0 (0 if none).
std::size_t f_value(const Vertex01& u, const Vertex01& x0, const std::vector<std::size_t>& order);

/// Walks to the c-best f-minimal c-improving neighbor until c-optimal.
/// Exact c ties go to the neighbor whose difference set from x0 is
/// smallest in colexicographic order under `order`.
std::vector<Vertex01> altchar_path(PolytopeOracle& oracle, const Vertex01& x0, const IntVector& c,
                                   const std::vector<std::size_t>& order = {});

/// Greedy independent sets of the uniform matroid U(n, r) as 0/1 vertices:
/// repeatedly add the heaviest remaining element (lowest index on ties)
/// while the weight is positive and fewer than r are chosen.
std::vector<Vertex01> greedy_matroid_path(std::size_t n, std::size_t r, const IntVector& c);

std::size_t affine_dimension(const std::vector<Vertex01>& vertices);

}  // namespace lp01
