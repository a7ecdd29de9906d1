#pragma once

#include <cstddef>
#include <vector>

#include "elim.hpp"
#include "matrix.hpp"

namespace disym {

struct HnfResult {
  Matrix<ZRing> h;    // row-style Hermite normal form, U * A = H
  Matrix<ZRing> u;    // unimodular transform
  std::size_t rank;   // number of nonzero rows of H
};

// Row-style HNF by column-at-a-time Euclidean reduction with transform
// accumulation.  Pivots positive; entries above each pivot reduced into
// [0, pivot).  The last rows-rank rows of U form a Z-basis of the left
// integer nullspace {u : u A = 0} (the kernel lattice, saturated).
inline HnfResult hnf_with_transform(Matrix<ZRing> a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  ZRing Z;
  Matrix<ZRing> u = Matrix<ZRing>::identity(Z, rows);
  auto row_sub = [&](Matrix<ZRing>& m, std::size_t i, std::size_t k, const Int& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= q * m.at(k, j);
  };
  auto row_neg = [&](Matrix<ZRing>& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // reduce rows r.. until a single nonzero remains in column c
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a.at(i, c) != 0 &&
            (best == rows || abs(a.at(i, c)) < abs(a.at(best, c))))
          best = i;
      if (best == rows) break;  // column is zero below r
      if (best != r) {
        a.swap_rows(r, best);
        u.swap_rows(r, best);
      }
      bool others = false;
      const Int piv = a.at(r, c);
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a.at(i, c) == 0) continue;
        // floor division so the remainder lands in [0, |piv|)
        Int q, rem;
        boost::multiprecision::divide_qr(a.at(i, c), piv, q, rem);
        if (rem != 0 && ((rem < 0) != (piv < 0))) q -= 1;
        row_sub(a, i, r, q);
        row_sub(u, i, r, q);
        if (a.at(i, c) != 0) others = true;
      }
      if (!others) break;
    }
    if (a.at(r, c) == 0) continue;
    if (a.at(r, c) < 0) {
      row_neg(a, r);
      row_neg(u, r);
    }
    const Int piv = a.at(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      Int q, rem;
      boost::multiprecision::divide_qr(a.at(i, c), piv, q, rem);
      if (rem != 0 && rem < 0) q -= 1;
      if (q != 0) {
        row_sub(a, i, r, q);
        row_sub(u, i, r, q);
      }
    }
    ++r;
  }
  return {std::move(a), std::move(u), r};
}

// The tail rows of the transform: a lattice basis of {u : u A = 0}.
inline Matrix<ZRing> left_nullspace_basis(const HnfResult& h) {
  std::size_t tail = h.u.rows() - h.rank;
  Matrix<ZRing> n(ZRing{}, tail, h.u.cols());
  for (std::size_t i = 0; i < tail; ++i)
    for (std::size_t j = 0; j < h.u.cols(); ++j)
      n.at(i, j) = h.u.at(h.rank + i, j);
  return n;
}

// Membership of an integer vector in the row lattice spanned by basis
// (any basis; reduced internally to HNF).  Reduce v by each HNF row at its
// pivot column; membership iff every division is exact and the residue is 0.
inline bool in_row_lattice(const Matrix<ZRing>& basis, std::vector<Int> v) {
  if (v.size() != basis.cols()) throw std::invalid_argument("in_row_lattice: length mismatch");
  HnfResult h = hnf_with_transform(basis);
  for (std::size_t r = 0; r < h.rank; ++r) {
    std::size_t pc = 0;
    while (pc < h.h.cols() && h.h.at(r, pc) == 0) ++pc;
    Int q, rem;
    boost::multiprecision::divide_qr(v[pc], h.h.at(r, pc), q, rem);
    if (rem != 0) return false;
    if (q != 0)
      for (std::size_t j = pc; j < v.size(); ++j) v[j] -= q * h.h.at(r, j);
  }
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Two integer row bases span the same lattice iff their HNFs agree.
inline bool same_row_lattice(const Matrix<ZRing>& a, const Matrix<ZRing>& b) {
  if (a.cols() != b.cols()) return false;
  HnfResult ha = hnf_with_transform(a), hb = hnf_with_transform(b);
  if (ha.rank != hb.rank) return false;
  for (std::size_t i = 0; i < ha.rank; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (ha.h.at(i, j) != hb.h.at(i, j)) return false;
  return true;
}

}  // namespace disym
