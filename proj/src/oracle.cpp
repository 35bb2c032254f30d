#include "lp01/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lp01/errors.hpp"
#include "lp01/linalg.hpp"

namespace lp01 {

std::vector<Vertex01> enumerate_vertices(const Lp01Instance& inst, std::size_t max_vars) {
  inst.check_shape();
  const std::size_t n = inst.num_vars();
  if (n > max_vars) {
    throw Error(ErrorCode::kTooLarge, inst.name + ": " + std::to_string(n) +
                                          " variables exceed the enumeration limit " +
                                          std::to_string(max_vars));
  }
  std::vector<Vertex01> out;
  std::vector<std::uint8_t> bits(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t k = 0; k < n; ++k) bits[k] = (mask >> (n - 1 - k)) & 1U;
    Vertex01 x(bits);
    if (inst.is_feasible(x)) out.push_back(std::move(x));
  }
  return out;
}

PolytopeOracle::PolytopeOracle(const Lp01Instance& inst, std::size_t max_vars)
    : inst_(inst), vertices_(enumerate_vertices(inst, max_vars)) {
  const std::size_t n = inst.num_vars();
  for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);

  std::set<std::pair<IntVector, std::int64_t>> seen;
  auto add = [&](IntVector normal, std::int64_t rhs) {
    if (seen.emplace(normal, rhs).second) constraints_.push_back({std::move(normal), rhs});
  };
  for (std::size_t i = 0; i < inst.num_equalities(); ++i) add(inst.eq_matrix[i], inst.eq_rhs[i]);
  for (std::size_t i = 0; i < inst.num_inequalities(); ++i) add(inst.ineq_matrix[i], inst.ineq_rhs[i]);
  for (std::size_t k = 0; k < n; ++k) {
    IntVector lower(n, 0);
    lower[k] = -1;
    add(std::move(lower), 0);
    IntVector upper(n, 0);
    upper[k] = 1;
    add(std::move(upper), 1);
  }

  const std::size_t words = (constraints_.size() + 63) / 64;
  tight_.assign(vertices_.size(), Mask(words, 0));
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    for (std::size_t c = 0; c < constraints_.size(); ++c) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (vertices_[v][k]) s += constraints_[c].normal[k];
      }
      if (s == constraints_[c].rhs) tight_[v][c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  neighbor_cache_.resize(vertices_.size());
}

std::optional<std::size_t> PolytopeOracle::index_of(const Vertex01& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool PolytopeOracle::adjacent(std::size_t a, std::size_t b) const {
  if (a == b) return false;
  const std::size_t n = inst_.num_vars();
  Mask common(tight_[a].size());
  std::size_t count = 0;
  for (std::size_t w = 0; w < common.size(); ++w) {
    common[w] = tight_[a][w] & tight_[b][w];
    count += static_cast<std::size_t>(std::popcount(common[w]));
  }
  if (count + 1 < n) return false;
  IntMatrix rows;
  rows.reserve(count);
  for (std::size_t c = 0; c < constraints_.size(); ++c) {
    if ((common[c / 64] >> (c % 64)) & 1U) rows.push_back(constraints_[c].normal);
  }
  return rank(rows, n) + 1 == n;
}

const std::vector<std::size_t>& PolytopeOracle::neighbors(std::size_t idx) {
  auto& slot = neighbor_cache_.at(idx);
  if (!slot) {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < vertices_.size(); ++b) {
      if (adjacent(idx, b)) out.push_back(b);
    }
    slot = std::move(out);
  }
  return *slot;
}

const std::vector<std::size_t>& PolytopeOracle::neighbors(const Vertex01& x) {
  auto idx = index_of(x);
  if (!idx) throw std::invalid_argument("point " + x.bitstring() + " is not a vertex");
  return neighbors(*idx);
}

std::size_t PolytopeOracle::dimension() const { return affine_dimension(vertices_); }

SkeletonGraph PolytopeOracle::skeleton() {
  SkeletonGraph g;
  g.vertices = vertices_;
  g.adjacency.resize(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) g.adjacency[i] = neighbors(i);
  return g;
}

SkeletonGraph skeleton(const Lp01Instance& inst, const std::vector<Vertex01>& vertices) {
  PolytopeOracle oracle(inst);
  if (oracle.vertices() != vertices) {
    throw std::invalid_argument("skeleton: vertex list does not match the instance");
  }
  return oracle.skeleton();
}

std::vector<Vertex01> improving_neighbors(PolytopeOracle& oracle, const Vertex01& x,
                                          const RatVector& w) {
  const Rational base = dot(w, x.to_integers());
  std::vector<Vertex01> out;
  for (auto idx : oracle.neighbors(x)) {
    const auto& u = oracle.vertices()[idx];
    if (dot(w, u.to_integers()) > base) out.push_back(u);
  }
  return out;
}

SteepestEdges steepest_edges(PolytopeOracle& oracle, const Vertex01& x, const IntVector& c) {
  SteepestEdges out;
  bool any = false;
  for (auto idx : oracle.neighbors(x)) {
    const auto& u = oracle.vertices()[idx];
    IntVector g(x.size());
    std::int64_t gain = 0;
    std::int64_t norm = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      g[k] = static_cast<std::int64_t>(u[k]) - static_cast<std::int64_t>(x[k]);
      gain += c[k] * g[k];
      norm += g[k] < 0 ? -g[k] : g[k];
    }
    if (gain <= 0) continue;
    Rational value = make_rational(static_cast<long>(gain), static_cast<long>(norm));
    if (!any || value > out.value) {
      out.value = value;
      out.directions.assign(1, g);
      any = true;
    } else if (value == out.value) {
      out.directions.push_back(g);
    }
  }
  return out;
}

Point2 project(const Vertex01& x, const RatVector& v, const IntVector& c) {
  const auto xi = x.to_integers();
  std::int64_t cy = 0;
  for (std::size_t k = 0; k < xi.size(); ++k) cy += c[k] * xi[k];
  return {dot(v, xi), Rational(static_cast<long>(cy))};
}

namespace {

// Twice the signed area of (o, a, b); positive for a counterclockwise turn.
Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

bool ShadowPolygon::on_upper_path(const Point2& p) const {
  for (std::size_t i = 0; i < upper.size(); ++i) {
    if (upper[i] == p) return true;
    if (i + 1 < upper.size()) {
      const auto& a = upper[i];
      const auto& b = upper[i + 1];
      if (a.x < p.x && p.x < b.x && sgn(cross(a, b, p)) == 0) return true;
    }
  }
  return false;
}

ShadowPolygon upper_path(const std::vector<Vertex01>& vertices, const RatVector& v,
                         const IntVector& c) {
  ShadowPolygon poly;
  std::set<Point2> unique;
  for (const auto& x : vertices) unique.insert(project(x, v, c));
  poly.points.assign(unique.begin(), unique.end());
  const auto& pts = poly.points;
  if (pts.empty()) return poly;

  // Andrew's monotone chain; collinear points are dropped from the hull.
  if (pts.size() < 3) {
    poly.hull = pts;
  } else {
    std::vector<Point2> h;
    for (const auto& p : pts) {
      while (h.size() >= 2 && sgn(cross(h[h.size() - 2], h.back(), p)) <= 0) h.pop_back();
      h.push_back(p);
    }
    const std::size_t lower_size = h.size();
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
      while (h.size() > lower_size && sgn(cross(h[h.size() - 2], h.back(), *it)) <= 0) h.pop_back();
      h.push_back(*it);
    }
    h.pop_back();
    poly.hull = std::move(h);
  }

  // Highest point at each abscissa, then the upper chain left to right.
  std::vector<Point2> tops;
  for (const auto& p : pts) {
    if (!tops.empty() && tops.back().x == p.x) {
      tops.back() = p;  // sorted by (x, y): the later one is higher
    } else {
      tops.push_back(p);
    }
  }
  for (const auto& p : tops) {
    while (poly.upper.size() >= 2 &&
           sgn(cross(poly.upper[poly.upper.size() - 2], poly.upper.back(), p)) >= 0) {
      poly.upper.pop_back();
    }
    poly.upper.push_back(p);
  }
  return poly;
}

bool is_coherent(const std::vector<Vertex01>& path, const RatVector& v, const IntVector& c,
                 const std::vector<Vertex01>& vertices) {
  if (path.empty()) return false;
  const auto poly = upper_path(vertices, v, c);
  std::set<Point2> hit;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto p = project(path[i], v, c);
    if (i > 0 && !(project(path[i - 1], v, c).x < p.x)) return false;
    if (!poly.on_upper_path(p)) return false;
    hit.insert(p);
  }
  std::size_t top = 0;
  for (std::size_t i = 1; i < poly.upper.size(); ++i) {
    if (poly.upper[i].y > poly.upper[top].y) top = i;
  }
  for (std::size_t i = 0; i <= top; ++i) {
    if (!hit.contains(poly.upper[i])) return false;
  }
  return true;
}

std::size_t f_value(const Vertex01& u, const Vertex01& x0, const std::vector<std::size_t>& order) {
  std::size_t f = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] != x0[k]) f = std::max(f, order[k]);
  }
  return f;
}

std::vector<Vertex01> altchar_path(PolytopeOracle& oracle, const Vertex01& x0, const IntVector& c,
                                   const std::vector<std::size_t>& order_in) {
  const std::size_t n = x0.size();
  std::vector<std::size_t> order = order_in;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), std::size_t{1});
  }
  std::vector<std::size_t> coord_of_rank(n + 1);
  for (std::size_t k = 0; k < n; ++k) coord_of_rank[order[k]] = k;

  // true iff the difference set of a from x0 is colex-smaller than b's.
  auto colex_less = [&](const Vertex01& a, const Vertex01& b) {
    for (std::size_t t = n; t >= 1; --t) {
      const auto k = coord_of_rank[t];
      const bool da = a[k] != x0[k];
      const bool db = b[k] != x0[k];
      if (da != db) return !da;
    }
    return false;
  };

  auto value_of = [&](const Vertex01& u) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < n; ++k) s += u[k] ? c[k] : 0;
    return s;
  };

  std::vector<Vertex01> path{x0};
  while (true) {
    const auto& x = path.back();
    const auto base = value_of(x);
    std::optional<Vertex01> best;
    std::size_t best_f = 0;
    std::int64_t best_c = 0;
    for (auto idx : oracle.neighbors(x)) {
      const auto& u = oracle.vertices()[idx];
      const auto cu = value_of(u);
      if (cu <= base) continue;
      const auto fu = f_value(u, x0, order);
      const bool better = !best || fu < best_f || (fu == best_f && cu > best_c) ||
                          (fu == best_f && cu == best_c && colex_less(u, *best));
      if (better) {
        best = u;
        best_f = fu;
        best_c = cu;
      }
    }
    if (!best) break;
    path.push_back(*best);
  }
  return path;
}

std::vector<Vertex01> greedy_matroid_path(std::size_t n, std::size_t r, const IntVector& c) {
  if (c.size() != n) throw std::invalid_argument("greedy_matroid_path: weight length");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return c[a] > c[b]; });
  std::vector<std::uint8_t> bits(n, 0);
  std::vector<Vertex01> path{Vertex01(bits)};
  for (std::size_t i = 0; i < n && i < r; ++i) {
    if (c[order[i]] <= 0) break;
    bits[order[i]] = 1;
    path.emplace_back(bits);
  }
  return path;
}

std::size_t affine_dimension(const std::vector<Vertex01>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("affine_dimension of an empty set");
  const std::size_t n = vertices.front().size();
  IntMatrix rows;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    IntVector d(n);
    for (std::size_t k = 0; k < n; ++k) {
      d[k] = static_cast<std::int64_t>(vertices[i][k]) - static_cast<std::int64_t>(vertices[0][k]);
    }
    rows.push_back(std::move(d));
  }
  return rank(rows, n);
}

}  // namespace lp01
