#pragma once

#include <cstddef>
#include <vector>

#include "matrix.hpp"

namespace disym {

namespace detail {

// nearest integer to a rational, ties rounded away from zero
inline Int round_nearest(const Rat& q) {
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);  // den > 0
  bool neg = num < 0;
  if (neg) num = -num;
  Int r = (2 * num + den) / (2 * den);
  return neg ? -r : r;
}

struct Gso {
  std::vector<std::vector<Rat>> star;  // orthogonalized rows
  std::vector<std::vector<Rat>> mu;    // projection coefficients
  std::vector<Rat> norm;               // |b*_i|^2

  void compute(const Matrix<ZRing>& b) {
    const std::size_t k = b.rows(), n = b.cols();
    star.assign(k, std::vector<Rat>(n));
    mu.assign(k, std::vector<Rat>(k, Rat(0)));
    norm.assign(k, Rat(0));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < n; ++j) star[i][j] = Rat(b.at(i, j));
      for (std::size_t l = 0; l < i; ++l) {
        Rat dot(0);
        for (std::size_t j = 0; j < n; ++j) dot += Rat(b.at(i, j)) * star[l][j];
        mu[i][l] = dot / norm[l];
        for (std::size_t j = 0; j < n; ++j) star[i][j] -= mu[i][l] * star[l][j];
      }
      for (std::size_t j = 0; j < n; ++j) norm[i] += star[i][j] * star[i][j];
    }
  }
};

}  // namespace detail

// LLL lattice basis reduction with exact rational Gram-Schmidt.
// Input rows must be linearly independent; the returned rows span the same
// lattice and are delta-reduced (default delta = 3/4).
inline Matrix<ZRing> lll_reduce(Matrix<ZRing> b, const Rat& delta = Rat(3, 4)) {
  const std::size_t rows = b.rows();
  if (rows <= 1) return b;
  detail::Gso g;
  g.compute(b);
  std::size_t k = 1;
  while (k < rows) {
    // size-reduce row k against rows k-1 .. 0
    for (std::size_t l = k; l-- > 0;) {
      Int q = detail::round_nearest(g.mu[k][l]);
      if (q != 0) {
        for (std::size_t j = 0; j < b.cols(); ++j) b.at(k, j) -= q * b.at(l, j);
        g.compute(b);
      }
    }
    if (g.norm[k] >= (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.norm[k - 1]) {
      ++k;
    } else {
      b.swap_rows(k, k - 1);
      g.compute(b);
      k = k > 1 ? k - 1 : 1;
    }
  }
  return b;
}

}  // namespace disym
