#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lp01/model.hpp"

namespace lp01 {

/// [0,1]^n with x <= 1 stated in D. Start 0, default c = (1, ..., n).
Lp01Instance cube(std::size_t n);

/// 0/1 pyramid over a square: x1 + x3 <= 1, x2 + x3 <= 1. Start is the
/// apex (0,0,1), c = (50,-1,0).
Lp01Instance pyramid();

/// Delta(n, k): sum x = k, x <= 1. Start sets the first k coordinates.
Lp01Instance hypersimplex(std::size_t n, std::size_t k);

/// Doubly stochastic n x n matrices, x_{ij} at index i n + j. The last
/// row-sum equality is dropped. Start is the identity permutation.
Lp01Instance birkhoff(std::size_t n);

/// Perfect matchings of K_n, edges in lex order. Degree equalities and, for
/// n >= 6, -x(delta(S)) <= -1 for odd 3 <= |S| <= n - 3. Start {12, 34, ...}.
Lp01Instance perfect_matching(std::size_t n);

/// Independent sets of U(n, r): sum x <= r, x <= 1. Start 0.
Lp01Instance uniform_matroid(std::size_t n, std::size_t r);

struct GeneratorSpec {
  std::string family;  // cube | pyramid | hypersimplex | birkhoff | matching | uniform-matroid
  std::vector<std::size_t> params;
};

/// Throws std::invalid_argument on an unknown family or parameters out of range.
Lp01Instance generate(const GeneratorSpec& spec);

/// Seeded integers in [-bound, bound].
IntVector random_objective(std::size_t n, std::uint64_t seed, std::int64_t bound = 100);
/// Seeded integers in [1, bound].
IntVector random_positive_objective(std::size_t n, std::uint64_t seed, std::int64_t bound = 100);

/// c' = K c + r with r seeded in [-R, R] and K = 2 n R + 1, so every
/// strict c-order between 0/1 points is kept while ties are broken.
IntVector generic_perturbation(const IntVector& c, std::uint64_t seed, std::int64_t spread = 1000);

Lp01Instance with_objective(Lp01Instance inst, IntVector c);

}  // namespace lp01
