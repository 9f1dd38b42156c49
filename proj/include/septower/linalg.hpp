#pragma once

#include <optional>
#include <utility>
#include <vector>

// Exact linear algebra over any field type T providing + - * /, is_zero(T)
// and value semantics. Zero and one are passed in because the scalar types
// carry their field (characteristic, tower) at runtime.

namespace septower::linalg {

template <class T>
using Vec = std::vector<T>;
template <class T>
using Matrix = std::vector<Vec<T>>;

/// Incremental echelon basis. Remembers how every stored row is combined from
/// the accepted input vectors, so membership queries also return coordinates.
template <class T>
class SpanTracker {
 public:
  SpanTracker(T zero, T one) : zero_(std::move(zero)), one_(std::move(one)) {}

  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }

  /// Adds v when independent of the accepted vectors; returns whether it was.
  bool insert(Vec<T> v) {
    Vec<T> comb(rows_.size() + 1, zero_);
    comb.back() = one_;
    reduce(v, comb);
    const auto pivot = first_nonzero(v);
    if (!pivot) return false;
    const T inv = one_ / v[*pivot];
    for (auto& x : v) x = x * inv;
    for (auto& x : comb) x = x * inv;
    for (auto& c : combos_) c.push_back(zero_);
    rows_.push_back(std::move(v));
    pivots_.push_back(*pivot);
    combos_.push_back(std::move(comb));
    return true;
  }

  /// Coefficients c (one per accepted vector, in acceptance order) with
  /// sum c_i v_i = target, or nullopt when target is outside the span.
  [[nodiscard]] std::optional<Vec<T>> express(Vec<T> target) const {
    Vec<T> comb(rows_.size(), zero_);
    reduce(target, comb);
    if (first_nonzero(target)) return std::nullopt;
    for (auto& x : comb) x = zero_ - x;
    return comb;
  }

  [[nodiscard]] bool contains(Vec<T> target) const { return express(std::move(target)).has_value(); }

 private:
  // Eliminates the stored pivots from v, mirroring the operations on comb.
  void reduce(Vec<T>& v, Vec<T>& comb) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const T f = v[pivots_[k]];
      if (is_zero(f)) continue;
      const auto& row = rows_[k];
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (!is_zero(row[j])) v[j] = v[j] - f * row[j];
      }
      const auto& c = combos_[k];
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (!is_zero(c[j])) comb[j] = comb[j] - f * c[j];
      }
    }
  }

  static std::optional<std::size_t> first_nonzero(const Vec<T>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!is_zero(v[i])) return i;
    }
    return std::nullopt;
  }

  T zero_;
  T one_;
  Matrix<T> rows_;
  std::vector<std::size_t> pivots_;
  Matrix<T> combos_;
};

/// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m, const T& one) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.size() && is_zero(m[sel][c])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    const T inv = one / m[r][c];
    for (auto& x : m[r]) x = x * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      const T f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        if (!is_zero(m[r][j])) m[i][j] = m[i][j] - f * m[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m, const T& one) {
  return rref(m, one).size();
}

/// Basis of {v : m v = 0}; `cols` is needed when m has no rows.
template <class T>
Matrix<T> nullspace(Matrix<T> m, std::size_t cols, const T& zero, const T& one) {
  const auto pivots = rref(m, one);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix<T> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec<T> v(cols, zero);
    v[free] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = zero - m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Determinant by Gaussian elimination.
template <class T>
T determinant(Matrix<T> m, const T& zero, const T& one) {
  const std::size_t n = m.size();
  T det = one;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && is_zero(m[sel][c])) ++sel;
    if (sel == n) return zero;
    if (sel != c) {
      std::swap(m[c], m[sel]);
      det = zero - det;
    }
    det = det * m[c][c];
    const T inv = one / m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m[i][c])) continue;
      const T f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
    }
  }
  return det;
}

}  // namespace septower::linalg
