#pragma once

// Free diassociative algebra on letters.  A normal-form monomial is a
// word with one marked position (its center); the two products keep the
// center of the left or of the right factor.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "disym/magma.hpp"

namespace disym {

struct DiasMono {
  int center = 0;          // marked position within the word
  std::vector<int> word;   // letter indices

  auto operator<=>(const DiasMono&) const = default;
};

inline DiasMono dias_mono(std::vector<int> word, int center) {
  if (center < 0 || static_cast<std::size_t>(center) >= word.size())
    throw std::invalid_argument("center out of range");
  return DiasMono{center, std::move(word)};
}

// "a[b]c": the word with the center letter bracketed.
inline std::string mono_str(const DiasMono& m) {
  std::string s;
  for (std::size_t i = 0; i < m.word.size(); ++i) {
    const bool hat = static_cast<int>(i) == m.center;
    if (hat) s += '[';
    s += static_cast<char>('a' + m.word[i]);
    if (hat) s += ']';
  }
  return s;
}

namespace detail {

inline std::vector<int> concat(const std::vector<int>& a,
                               const std::vector<int>& b) {
  std::vector<int> w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

inline bool words_overlap(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    for (int y : b)
      if (x == y) return true;
  return false;
}

}  // namespace detail

// u -| v : concatenated word, center of u.
inline DiasMono dias_left(const DiasMono& u, const DiasMono& v) {
  return DiasMono{u.center, detail::concat(u.word, v.word)};
}

// u |- v : concatenated word, center of v (shifted past u).
inline DiasMono dias_right(const DiasMono& u, const DiasMono& v) {
  return DiasMono{static_cast<int>(u.word.size()) + v.center,
                  detail::concat(u.word, v.word)};
}

enum class DiasOp { Left, Right };

// Product of multilinear monomials; rejects operands sharing a letter,
// since the result would not be multilinear.
inline DiasMono dias_mul(const DiasMono& u, const DiasMono& v, DiasOp op,
                         bool check_disjoint = true) {
  if (check_disjoint && detail::words_overlap(u.word, v.word))
    throw std::invalid_argument("dias_mul: overlapping letters");
  return op == DiasOp::Left ? dias_left(u, v) : dias_right(u, v);
}

// ---------------------------------------------------------------------------
// Multilinear basis enumeration and ranking.

inline std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// All n * n! multilinear monomials of degree n: center-major, then words
// in lexicographic order.
inline std::vector<DiasMono> enum_dias(int n) {
  std::vector<DiasMono> out;
  out.reserve(static_cast<std::size_t>(n * factorial(n)));
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i;
    do {
      out.push_back(DiasMono{c, word});
    } while (std::next_permutation(word.begin(), word.end()));
  }
  return out;
}

// Lexicographic rank of a permutation of 0..n-1.
inline std::int64_t perm_lex_rank(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::int64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (word[static_cast<std::size_t>(j)] < word[static_cast<std::size_t>(i)])
        ++smaller;
    rank += smaller * factorial(n - 1 - i);
  }
  return rank;
}

// Index of a multilinear monomial within enum_dias(n).
inline std::int64_t dias_index(const DiasMono& m, int n) {
  if (static_cast<int>(m.word.size()) != n)
    throw std::invalid_argument("dias_index: degree mismatch");
  return m.center * factorial(n) + perm_lex_rank(m.word);
}

// ---------------------------------------------------------------------------
// Integer-coefficient polynomials, ordered by (center, word).

class DiasPoly {
 public:
  using Terms = std::map<DiasMono, std::int64_t>;

  DiasPoly() = default;

  void add(const DiasMono& m, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const DiasPoly& other, std::int64_t scale = 1) {
    if (scale == 0) return;
    for (const auto& [m, c] : other.terms_) add(m, c * scale);
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const DiasPoly&) const = default;

 private:
  Terms terms_;
};

inline std::string poly_str(const DiasPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a);
    s += mono_str(m);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Axiom check: both products are associative, the left product ignores
// the center of its right factor, the right product the center of its
// left factor, and the mixed products associate.  Verified over all
// monomial triples on disjoint letter blocks up to the given total degree.

inline bool check_dias_axioms(int max_degree = 4) {
  for (int d1 = 1; d1 < max_degree; ++d1)
    for (int d2 = 1; d1 + d2 < max_degree; ++d2)
      for (int d3 = 1; d1 + d2 + d3 <= max_degree; ++d3)
        for (int c1 = 0; c1 < d1; ++c1)
          for (int c2 = 0; c2 < d2; ++c2)
            for (int c3 = 0; c3 < d3; ++c3) {
              std::vector<int> w1, w2, w3;
              for (int i = 0; i < d1; ++i) w1.push_back(i);
              for (int i = 0; i < d2; ++i) w2.push_back(d1 + i);
              for (int i = 0; i < d3; ++i) w3.push_back(d1 + d2 + i);
              const DiasMono x{c1, w1}, y{c2, w2}, z{c3, w3};
              const auto L = [](const DiasMono& u, const DiasMono& v) {
                return dias_left(u, v);
              };
              const auto R = [](const DiasMono& u, const DiasMono& v) {
                return dias_right(u, v);
              };
              if (!(L(L(x, y), z) == L(x, L(y, z)))) return false;
              if (!(L(x, L(y, z)) == L(x, R(y, z)))) return false;
              if (!(L(R(x, y), z) == R(x, L(y, z)))) return false;
              if (!(R(L(x, y), z) == R(R(x, y), z))) return false;
              if (!(R(R(x, y), z) == R(x, R(y, z)))) return false;
            }
  return true;
}

}  // namespace disym
