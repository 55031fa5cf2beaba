#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "projgb/errors.hpp"
#include "projgb/rational.hpp"

namespace projgb {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw InputError("matrix entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw InputError("ragged matrix literal");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  std::vector<Rational> multiply(std::span<const Rational> x) const {
    if (x.size() != cols_) throw InputError("matrix-vector dimension mismatch");
    std::vector<Rational> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!is_zero((*this)(r, c)) && !is_zero(x[c])) y[r] += (*this)(r, c) * x[c];
    return y;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

namespace detail {

// In-place Gauss-Jordan elimination restricted to the first `limit` columns.
// The pivot is the first nonzero entry at or below the current row.
inline std::vector<std::size_t> gauss_jordan(Matrix& m, std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  Rational factor;
  for (std::size_t col = 0; col < limit && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);
    if (m(row, col) != 1) {
      const Rational inv = 1 / m(row, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!is_zero(m(row, c))) m(row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!is_zero(m(row, c))) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace detail

inline RowEchelon rref(Matrix m) {
  auto pivots = detail::gauss_jordan(m, m.cols());
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

struct Solution {
  std::vector<Rational> x;
  bool unique = false;
};

/// Solves a * x = b. Free variables are set to zero in the returned solution.
inline std::optional<Solution> solve(const Matrix& a, std::span<const Rational> b) {
  if (a.rows() != b.size()) throw InputError("solve: right-hand side length does not match row count");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto pivots = detail::gauss_jordan(aug, a.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (!is_zero(aug(r, a.cols()))) return std::nullopt;
  Solution sol;
  sol.x.assign(a.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.x[pivots[i]] = aug(i, a.cols());
  sol.unique = pivots.size() == a.cols();
  return sol;
}

} // namespace projgb
