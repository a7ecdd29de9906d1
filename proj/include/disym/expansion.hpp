#pragma once

// Expansion of commutative magma monomials into the free diassociative
// algebra, and the matrices built from it.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "disym/dias.hpp"
#include "disym/magma.hpp"
#include "disym/matrix.hpp"

namespace disym {

// Jordan diproduct {p,q} = p -| q + q |- p, extended bilinearly.
inline DiasPoly diproduct(const DiasPoly& p, const DiasPoly& q) {
  DiasPoly out;
  for (const auto& [mu, a] : p.terms())
    for (const auto& [mv, b] : q.terms()) {
      out.add(dias_left(mu, mv), a * b);
      out.add(dias_right(mv, mu), a * b);
    }
  return out;
}

// Expansion map: a leaf goes to the corresponding letter; a product
// u v goes to {X(u),X(v)} + {X(v),X(u)}, i.e. the four-term sum
// u-|v + u|-v + v-|u + v|-u on monomials.
inline DiasPoly expand(const Tree& t) {
  if (t.is_leaf()) {
    if (t.label < 0) throw std::invalid_argument("cannot expand a bare shape");
    DiasPoly p;
    p.add(DiasMono{0, {t.label}}, 1);
    return p;
  }
  const DiasPoly l = expand(t.ch[0]);
  const DiasPoly r = expand(t.ch[1]);
  DiasPoly out = diproduct(l, r);
  out.add(diproduct(r, l));
  return out;
}

// Applies a letter substitution to every monomial of a polynomial.
inline DiasPoly relabel(const DiasPoly& p, const std::vector<int>& sigma) {
  DiasPoly out;
  for (const auto& [m, c] : p.terms()) {
    DiasMono t = m;
    for (int& letter : t.word) {
      if (letter < 0 || static_cast<std::size_t>(letter) >= sigma.size())
        throw std::invalid_argument("relabel: letter outside substitution");
      letter = sigma[static_cast<std::size_t>(letter)];
    }
    out.add(t, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Expansion matrices.

// Multilinear expansion matrix of degree n: column j holds the expansion
// of the j-th canonical monomial in the n * n! dimensional monomial basis
// (rows ordered center-major, then word-lexicographically).
template <class Ring>
Matrix<Ring> expansion_matrix(const Ring& R, int n) {
  const std::vector<Tree> basis = enum_multilinear(n);
  const std::int64_t rows = n * factorial(n);
  Matrix<Ring> m(R, static_cast<int>(rows), static_cast<int>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const DiasPoly p = expand(basis[j]);
    for (const auto& [mono, c] : p.terms())
      m.at(static_cast<int>(dias_index(mono, n)), static_cast<int>(j)) =
          R.from_int(c);
  }
  return m;
}

// Expansion matrix of a one- or two-variable monomial family.  Rows are
// indexed by the distinct monomials that occur across all expansions,
// ordered by (center, word).
template <class Ring>
struct CollapsedMatrix {
  Matrix<Ring> m;
  std::vector<DiasMono> row_keys;
  std::vector<Tree> cols;
};

template <class Ring>
CollapsedMatrix<Ring> collapsed_matrix(const Ring& R, int n, Pattern pat) {
  std::vector<Tree> basis = enum_nonlinear(n, pat);
  std::vector<DiasPoly> expansions;
  expansions.reserve(basis.size());
  std::map<DiasMono, int> row_of;
  for (const Tree& t : basis) {
    expansions.push_back(expand(t));
    for (const auto& [mono, c] : expansions.back().terms()) row_of[mono] = 0;
  }
  std::vector<DiasMono> keys;
  keys.reserve(row_of.size());
  for (auto& [mono, idx] : row_of) {
    idx = static_cast<int>(keys.size());
    keys.push_back(mono);
  }
  Matrix<Ring> m(R, static_cast<int>(keys.size()), static_cast<int>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [mono, c] : expansions[j].terms())
      m.at(row_of.at(mono), static_cast<int>(j)) = R.from_int(c);
  return CollapsedMatrix<Ring>{std::move(m), std::move(keys), std::move(basis)};
}

// ---------------------------------------------------------------------------
// Structural checks used by the test suite.

// The diproduct satisfies the defining identities of a (right) Jordan
// dialgebra: right commutativity, the right Jordan identity, and the
// associator identity  (y, x^2, z) = 2 (y, x, z) . x  with
// (a,b,c) = (a.b).c - a.(b.c).
inline bool check_jordan_identities() {
  const auto letter = [](int l) {
    DiasPoly p;
    p.add(DiasMono{0, {l}}, 1);
    return p;
  };
  const DiasPoly x = letter(kXLabel), y = letter(kYLabel), z = letter('z' - 'a');
  const auto minus = [](DiasPoly a, const DiasPoly& b) {
    a.add(b, -1);
    return a;
  };
  const auto associator = [&](const DiasPoly& a, const DiasPoly& b,
                              const DiasPoly& c) {
    return minus(diproduct(diproduct(a, b), c), diproduct(a, diproduct(b, c)));
  };
  const DiasPoly x2 = diproduct(x, x);
  if (!minus(diproduct(x, diproduct(y, z)), diproduct(x, diproduct(z, y)))
           .is_zero())
    return false;
  if (!minus(diproduct(diproduct(y, x), x2), diproduct(diproduct(y, x2), x))
           .is_zero())
    return false;
  DiasPoly rhs = diproduct(associator(y, x, z), x);
  DiasPoly lhs = associator(y, x2, z);
  lhs.add(rhs, -2);
  return lhs.is_zero();
}

// Expansion commutes with relabeling: X(sigma . t) = sigma . X(t).
inline bool check_expansion_equivariance(const Tree& t,
                                         const std::vector<int>& sigma) {
  const Tree tt = map_labels(t, [&](int l) {
    return sigma.at(static_cast<std::size_t>(l));
  });
  return expand(tt) == relabel(expand(t), sigma);
}

}  // namespace disym
