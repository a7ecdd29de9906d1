#pragma once

#include <cstddef>
#include <vector>

#include "matrix.hpp"

namespace disym {

template <class Field>
struct Echelon {
  Matrix<Field> m;                  // row canonical form (reduced row echelon)
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

// Row canonical form by Gauss-Jordan elimination.  Pivot choice: first row
// (from the top, among unprocessed rows) with a nonzero entry in the column.
template <class Field>
Echelon<Field> rcf(Matrix<Field> a) {
  const Field& F = a.ring();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && F.is_zero(a.at(pr, c))) ++pr;
    if (pr == rows) continue;
    a.swap_rows(r, pr);
    auto inv = F.inv(a.at(r, c));
    auto* prow = a.row_ptr(r);
    for (std::size_t j = c; j < cols; ++j) prow[j] = F.mul(prow[j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || F.is_zero(a.at(i, c))) continue;
      auto f = a.at(i, c);
      auto* irow = a.row_ptr(i);
      for (std::size_t j = c; j < cols; ++j)
        irow[j] = F.sub(irow[j], F.mul(f, prow[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

// Rank only: forward elimination without back-substitution.
template <class Field>
std::size_t rank_of(Matrix<Field> a) {
  const Field& F = a.ring();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && F.is_zero(a.at(pr, c))) ++pr;
    if (pr == rows) continue;
    a.swap_rows(r, pr);
    auto inv = F.inv(a.at(r, c));
    auto* prow = a.row_ptr(r);
    for (std::size_t j = c; j < cols; ++j) prow[j] = F.mul(prow[j], inv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (F.is_zero(a.at(i, c))) continue;
      auto f = a.at(i, c);
      auto* irow = a.row_ptr(i);
      for (std::size_t j = c; j < cols; ++j)
        irow[j] = F.sub(irow[j], F.mul(f, prow[j]));
    }
    ++r;
  }
  return r;
}

// Basis of the right nullspace {v : A v = 0} as the rows of a matrix in RCF.
// Built from the free columns of the RCF, then re-reduced so the result is
// itself in row canonical form (the unique RCF basis of the nullspace).
template <class Field>
Matrix<Field> nullspace_rcf(const Echelon<Field>& e) {
  const Field& F = e.m.ring();
  const std::size_t cols = e.m.cols();
  std::vector<char> is_pivot(cols, 0);
  for (auto c : e.pivots) is_pivot[c] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<Field> n(F, free_cols.size(), cols);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    n.at(k, f) = F.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      n.at(k, e.pivots[i]) = F.neg(e.m.at(i, f));
  }
  return rcf(std::move(n)).m;
}

// Indices (0-based) of the lexicographically first maximal independent set of
// rows: scan top to bottom, keep a row iff it increases the rank.
template <class Field>
std::vector<std::size_t> lex_first_row_basis(const Matrix<Field>& a) {
  const Field& F = a.ring();
  const std::size_t cols = a.cols();
  // reduced rows of the growing basis, with their pivot columns
  std::vector<std::vector<typename Field::Elem>> basis;
  std::vector<std::size_t> pivot_col, chosen;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<typename Field::Elem> v(a.row_ptr(i), a.row_ptr(i) + cols);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      auto f = v[pivot_col[b]];
      if (F.is_zero(f)) continue;
      for (std::size_t j = 0; j < cols; ++j)
        v[j] = F.sub(v[j], F.mul(f, basis[b][j]));
    }
    std::size_t pc = 0;
    while (pc < cols && F.is_zero(v[pc])) ++pc;
    if (pc == cols) continue;
    auto inv = F.inv(v[pc]);
    for (std::size_t j = 0; j < cols; ++j) v[j] = F.mul(v[j], inv);
    basis.push_back(std::move(v));
    pivot_col.push_back(pc);
    chosen.push_back(i);
  }
  return chosen;
}

// Fraction-free (Bareiss) elimination over Z: exact rank without rationals.
inline std::size_t bareiss_rank(Matrix<ZRing> a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && a.at(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    a.swap_rows(r, pr);
    const Int piv = a.at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Int f = a.at(i, c);
      for (std::size_t j = c; j < cols; ++j)
        a.at(i, j) = (a.at(i, j) * piv - f * a.at(r, j)) / prev;  // exact
    }
    prev = piv;
    ++r;
  }
  return r;
}

// Exact determinant of a square integer matrix by Bareiss elimination.
inline Int bareiss_det(Matrix<ZRing> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("bareiss_det: not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    std::size_t pr = c;
    while (pr < n && a.at(pr, c) == 0) ++pr;
    if (pr == n) return 0;
    if (pr != c) {
      a.swap_rows(c, pr);
      sign = -sign;
    }
    const Int piv = a.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      const Int f = a.at(i, c);
      for (std::size_t j = c; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * piv - f * a.at(c, j)) / prev;
    }
    prev = piv;
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

}  // namespace disym
