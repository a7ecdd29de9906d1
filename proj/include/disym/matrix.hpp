#pragma once

#include <cstddef>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rings.hpp"

namespace disym {

// Dense row-major matrix over a ring object (ring instances carry runtime
// state, e.g. the prime of F_p, so they travel with the matrix).
template <class Ring>
class Matrix {
 public:
  using Elem = typename Ring::Elem;

  Matrix(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols, ring.zero()) {}

  static Matrix identity(Ring ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
    return m;
  }

  template <class T>
  static Matrix from_rows(Ring ring, const std::vector<std::vector<T>>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows[0].size();
    Matrix m(ring, rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != nc) throw std::invalid_argument("from_rows: ragged input");
      for (std::size_t j = 0; j < nc; ++j)
        m.at(i, j) = ring.from_int(static_cast<long long>(rows[i][j]));
    }
    return m;
  }

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Elem* row_ptr(std::size_t i) { return a_.data() + i * cols_; }
  const Elem* row_ptr(std::size_t i) const { return a_.data() + i * cols_; }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(i, j), at(k, j));
  }

  Matrix transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix mul(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("mul: shape mismatch");
    Matrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Elem& x = at(i, k);
        if (ring_.is_zero(x)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = ring_.add(r.at(i, j), ring_.mul(x, o.at(k, j)));
      }
    return r;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!ring_.eq(a_[i], o.a_[i])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  Ring ring_;
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

// Text format: one header line "rows cols ring-tag", then a whitespace-
// separated entry grid.  Lines starting with '#' before the header are
// comments and skipped.
template <class Ring>
void write_matrix(std::ostream& os, const Matrix<Ring>& m) {
  os << m.rows() << ' ' << m.cols() << ' ' << m.ring().tag() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << m.ring().str(m.at(i, j));
    os << '\n';
  }
}

inline std::string skip_comments(std::istream& is) {
  std::string line;
  while (std::getline(is, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return line;
  }
  throw std::runtime_error("matrix read: missing header");
}

template <class Ring>
Matrix<Ring> read_matrix(std::istream& is, Ring ring) {
  std::istringstream header(skip_comments(is));
  std::size_t rows, cols;
  std::string tag;
  if (!(header >> rows >> cols >> tag))
    throw std::runtime_error("matrix read: bad header");
  if (tag != ring.tag())
    throw std::runtime_error("matrix read: ring tag " + tag + " does not match " + ring.tag());
  Matrix<Ring> m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::string tok;
      if (!(is >> tok)) throw std::runtime_error("matrix read: truncated grid");
      m.at(i, j) = ring.parse(tok);
    }
  return m;
}

}  // namespace disym
