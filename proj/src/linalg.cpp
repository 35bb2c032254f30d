#include "lp01/linalg.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

#include "lp01/errors.hpp"

namespace lp01 {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t order) {
  RatMatrix m(order, order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_integers(const IntMatrix& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rows[r][c]);
  }
  return m;
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RatMatrix RatMatrix::select_columns(std::span<const std::size_t> cols) const {
  RatMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols.size(); ++k) out(r, k) = (*this)(r, cols[k]);
  }
  return out;
}

RatMatrix RatMatrix::select_rows(std::span<const std::size_t> rows) const {
  RatMatrix out(rows.size(), cols_);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t c = 0; c < cols_; ++c) out(k, c) = (*this)(rows[k], c);
  }
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

RatVector operator*(const RatMatrix& m, const RatVector& x) {
  if (m.cols() != x.size()) throw std::invalid_argument("matrix-vector size mismatch");
  RatVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(m(r, c)) != 0 && sgn(x[c]) != 0) s += m(r, c) * x[c];
    }
    out[r] = std::move(s);
  }
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix-matrix size mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(r, k)) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (sgn(b(k, c)) != 0) out(r, c) += a(r, k) * b(k, c);
      }
    }
  }
  return out;
}

namespace {

using IntegerMatrix = std::vector<std::vector<Integer>>;

// Scales each row by the lcm of its denominators. Row scaling changes
// neither rank nor the solution of the scaled system.
IntegerMatrix clear_denominators(const RatMatrix& m, const RatMatrix* rhs) {
  const std::size_t extra = rhs ? rhs->cols() : 0;
  IntegerMatrix out(m.rows(), std::vector<Integer>(m.cols() + extra));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < extra; ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*rhs)(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    for (std::size_t c = 0; c < extra; ++c) {
      const Rational& q = (*rhs)(r, c);
      out[r][m.cols() + c] = q.get_num() * (l / q.get_den());
    }
  }
  return out;
}

// Fraction-free forward elimination restricted to the first `pivot_cols`
// columns. Every stored entry is a minor of the input, so the division by the
// previous pivot is exact. Returns the pivot columns in row order.
template <typename T, typename MulSub>
std::vector<std::size_t> bareiss_forward(std::vector<std::vector<T>>& a, std::size_t pivot_cols,
                                         MulSub&& mul_sub) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  if (rows == 0) return pivots;
  const std::size_t cols = a.front().size();
  T prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < pivot_cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = mul_sub(a[r][col], a[i][j], a[i][col], a[r][j], prev);
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

Integer mpz_step(const Integer& piv, const Integer& x, const Integer& lead, const Integer& y,
                 const Integer& prev) {
  Integer t = piv * x - lead * y;
  mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
  return t;
}

struct Overflow {};

std::int64_t i64_step(std::int64_t piv, std::int64_t x, std::int64_t lead, std::int64_t y,
                      std::int64_t prev) {
  __int128 t = static_cast<__int128>(piv) * x - static_cast<__int128>(lead) * y;
  t /= prev;
  if (t > INT64_MAX || t < INT64_MIN) throw Overflow{};
  return static_cast<std::int64_t>(t);
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  auto a = clear_denominators(m, nullptr);
  return bareiss_forward(a, m.cols(), mpz_step).size();
}

std::size_t rank(const IntMatrix& rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ragged integer matrix");
  }
  try {
    auto a = rows;
    return bareiss_forward(a, cols, i64_step).size();
  } catch (const Overflow&) {
    std::vector<std::vector<Integer>> a(rows.size(), std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < cols; ++c) a[r][c] = static_cast<long>(rows[r][c]);
    }
    return bareiss_forward(a, cols, mpz_step).size();
  }
}

std::vector<std::size_t> independent_rows(const RatMatrix& m) {
  // Incremental reduction against an echelon basis of the rows kept so far.
  std::vector<RatVector> basis;
  std::vector<std::size_t> lead;
  std::vector<std::size_t> kept;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    RatVector row(m.row(r).begin(), m.row(r).end());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (sgn(row[lead[k]]) == 0) continue;
      Rational f = row[lead[k]] / basis[k][lead[k]];
      for (std::size_t c = 0; c < row.size(); ++c) row[c] -= f * basis[k][c];
    }
    auto nz = std::find_if(row.begin(), row.end(), [](const Rational& q) { return sgn(q) != 0; });
    if (nz == row.end()) continue;
    lead.push_back(static_cast<std::size_t>(nz - row.begin()));
    basis.push_back(std::move(row));
    kept.push_back(r);
  }
  return kept;
}

RatMatrix solve_square(const RatMatrix& m, const RatMatrix& rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("solve_square: matrix not square");
  if (rhs.rows() != n) throw std::invalid_argument("solve_square: rhs size mismatch");
  auto a = clear_denominators(m, &rhs);
  auto pivots = bareiss_forward(a, n, mpz_step);
  if (pivots.size() < n) {
    throw Error(ErrorCode::kSingular, "matrix of order " + std::to_string(n) + " has rank " +
                                          std::to_string(pivots.size()));
  }
  // Full rank with pivots restricted to the first n columns means the pivot
  // of row i sits in column i: back substitution over rationals.
  RatMatrix x(n, rhs.cols());
  for (std::size_t k = 0; k < rhs.cols(); ++k) {
    for (std::size_t ii = n; ii-- > 0;) {
      Rational s = Rational(a[ii][n + k]);
      for (std::size_t j = ii + 1; j < n; ++j) {
        if (a[ii][j] != 0) s -= Rational(a[ii][j]) * x(j, k);
      }
      x(ii, k) = s / Rational(a[ii][ii]);
    }
  }
  return x;
}

RatVector solve_square(const RatMatrix& m, const RatVector& b) {
  RatMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  return solve_square(m, rhs).column(0);
}

RatMatrix inverse(const RatMatrix& m) { return solve_square(m, RatMatrix::identity(m.rows())); }

bool lex_positive(std::span<const Rational> r) {
  for (const auto& q : r) {
    if (sgn(q) != 0) return sgn(q) > 0;
  }
  return false;
}

std::strong_ordering lex_compare(std::span<const Rational> a, std::span<const Rational> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

}  // namespace lp01
