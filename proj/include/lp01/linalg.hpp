#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "lp01/rational.hpp"

namespace lp01 {

/// Dense row-major rational matrix. The shape is fixed at construction;
/// entries may be assigned but never resized.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t order);
  static RatMatrix from_integers(const IntMatrix& rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  [[nodiscard]] std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] RatVector column(std::size_t c) const;

  /// Submatrix built from the listed columns, in the given order.
  [[nodiscard]] RatMatrix select_columns(std::span<const std::size_t> cols) const;
  [[nodiscard]] RatMatrix select_rows(std::span<const std::size_t> rows) const;
  [[nodiscard]] RatMatrix transpose() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatVector operator*(const RatMatrix& m, const RatVector& x);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& m);

/// Rank of an integer matrix given as rows. Runs in 64-bit arithmetic and
/// falls back to arbitrary precision if an intermediate would overflow.
std::size_t rank(const IntMatrix& rows, std::size_t cols);

/// Indices of the lexicographically first maximal independent set of rows.
std::vector<std::size_t> independent_rows(const RatMatrix& m);

/// Solves M x = b exactly. Throws Error(kSingular) if M is not invertible.
RatVector solve_square(const RatMatrix& m, const RatVector& b);

/// Solves M X = B column by column with one elimination.
RatMatrix solve_square(const RatMatrix& m, const RatMatrix& rhs);

RatMatrix inverse(const RatMatrix& m);

/// True iff the first nonzero entry is positive.
bool lex_positive(std::span<const Rational> r);

/// Total order by first differing entry; shorter prefixes compare less.
std::strong_ordering lex_compare(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace lp01
