#pragma once

// Dense elimination over a field. Small systems only (at most 6 columns);
// exact for Rational, partial pivoting for double.

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "haggelab/numeric.hpp"

namespace haggelab::linalg {

template <Field T>
using Matrix = std::vector<std::vector<T>>;

/// Reduces m in place to reduced row-echelon form; returns pivot columns.
template <Field T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (is_zero(m[i][c])) continue;
      if constexpr (field_traits<T>::exact) { best = i; break; }
      else if (best == rows || abs_value(m[i][c]) > abs_value(m[best][c])) best = i;
    }
    if (best == rows) continue;
    std::swap(m[r], m[best]);
    const T inv = T(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      const T f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Basis vector of a one-dimensional kernel, or nullopt when the kernel has
/// any other dimension.
template <Field T>
std::optional<std::vector<T>> kernel_vector(Matrix<T> m) {
  if (m.empty()) return std::nullopt;
  const std::size_t cols = m.front().size();
  const auto pivots = rref(m);
  if (pivots.size() + 1 != cols) return std::nullopt;
  std::size_t free_col = cols - 1;
  for (std::size_t c = 0, p = 0; c < cols; ++c) {
    if (p < pivots.size() && pivots[p] == c) { ++p; continue; }
    free_col = c;
    break;
  }
  std::vector<T> v(cols, T(0));
  v[free_col] = T(1);
  for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free_col];
  return v;
}

/// Unique solution of the square system [A | b], or nullopt when singular.
template <Field T>
std::optional<std::vector<T>> solve(Matrix<T> augmented) {
  const std::size_t n = augmented.size();
  const auto pivots = rref(augmented);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  std::vector<T> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = augmented[i][n];
  return x;
}

template <Field T>
T det3(const std::array<std::array<T, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace haggelab::linalg
