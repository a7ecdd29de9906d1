#pragma once

// Free magma on letters: binary trees, canonical forms under the
// commutativity straightening order, association types, and monomial
// enumeration (multilinear and the x^n / x^{n-1}y specializations).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace disym {

// Letter indices are 0-based ('a' == 0).  The one- and two-variable
// enumerations use fixed letters so that mixed-degree products cannot
// collide with multilinear labels.
inline constexpr int kXLabel = 'x' - 'a';
inline constexpr int kYLabel = 'y' - 'a';

// A binary tree; leaves carry a letter index (or -1 for a bare shape).
// Value semantics: copying copies the whole subtree.
struct Tree {
  int label = -1;
  std::vector<Tree> ch;  // empty (leaf) or exactly two children

  bool is_leaf() const { return ch.empty(); }
};

inline Tree leaf(int label) {
  Tree t;
  t.label = label;
  return t;
}

inline Tree node(Tree l, Tree r) {
  Tree t;
  t.ch.reserve(2);
  t.ch.push_back(std::move(l));
  t.ch.push_back(std::move(r));
  return t;
}

inline int tree_size(const Tree& t) {
  if (t.is_leaf()) return 1;
  return tree_size(t.ch[0]) + tree_size(t.ch[1]);
}

// Total order used for straightening: larger subtree first, then
// recursively by left and right child, leaves by label.
inline int cmp_tree(const Tree& a, const Tree& b) {
  const int sa = tree_size(a), sb = tree_size(b);
  if (sa != sb) return sa > sb ? -1 : 1;
  if (a.is_leaf() && b.is_leaf())
    return a.label < b.label ? -1 : (a.label > b.label ? 1 : 0);
  if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? 1 : -1;
  if (int c = cmp_tree(a.ch[0], b.ch[0])) return c;
  return cmp_tree(a.ch[1], b.ch[1]);
}

inline bool tree_eq(const Tree& a, const Tree& b) { return cmp_tree(a, b) == 0; }

// Puts a tree into canonical form for a commutative product: at every
// internal node the two children are ordered by cmp_tree.
inline void straighten(Tree& t) {
  if (t.is_leaf()) return;
  straighten(t.ch[0]);
  straighten(t.ch[1]);
  if (cmp_tree(t.ch[0], t.ch[1]) > 0) std::swap(t.ch[0], t.ch[1]);
}

inline bool is_straightened(const Tree& t) {
  if (t.is_leaf()) return true;
  return cmp_tree(t.ch[0], t.ch[1]) <= 0 && is_straightened(t.ch[0]) &&
         is_straightened(t.ch[1]);
}

inline void leaf_word_into(const Tree& t, std::vector<int>& out) {
  if (t.is_leaf()) {
    out.push_back(t.label);
    return;
  }
  leaf_word_into(t.ch[0], out);
  leaf_word_into(t.ch[1], out);
}

inline std::vector<int> leaf_word(const Tree& t) {
  std::vector<int> w;
  w.reserve(8);
  leaf_word_into(t, w);
  return w;
}

// Attaches labels to a shape, consuming `word` left to right.
inline Tree labeled(const Tree& shape, const std::vector<int>& word) {
  std::size_t pos = 0;
  std::function<Tree(const Tree&)> go = [&](const Tree& s) -> Tree {
    if (s.is_leaf()) {
      if (pos >= word.size()) throw std::invalid_argument("label word too short");
      return leaf(word[pos++]);
    }
    Tree l = go(s.ch[0]);
    Tree r = go(s.ch[1]);
    return node(std::move(l), std::move(r));
  };
  Tree t = go(shape);
  if (pos != word.size()) throw std::invalid_argument("label word too long");
  return t;
}

// Applies `f` to every leaf label.
inline Tree map_labels(const Tree& t, const std::function<int(int)>& f) {
  if (t.is_leaf()) return leaf(f(t.label));
  return node(map_labels(t.ch[0], f), map_labels(t.ch[1], f));
}

// Renders a monomial: letters for leaves, parentheses around every
// internal node except the root ("((ab)c)d" prints as "((ab)c)d" minus
// the outermost parentheses: "((ab)c)d").
inline void tree_str_into(const Tree& t, bool outer, std::string& out) {
  if (t.is_leaf()) {
    out += t.label < 0 ? '-' : static_cast<char>('a' + t.label);
    return;
  }
  if (!outer) out += '(';
  tree_str_into(t.ch[0], false, out);
  tree_str_into(t.ch[1], false, out);
  if (!outer) out += ')';
}

inline std::string tree_str(const Tree& t) {
  std::string s;
  tree_str_into(t, true, s);
  return s;
}

// Shape string: same syntax with '-' for every leaf.
inline std::string shape_str(const Tree& t) {
  std::string s;
  tree_str_into(map_labels(t, [](int) { return -1; }), true, s);
  return s;
}

namespace detail {

// Grammar:  top := expr expr? ;  expr := letter | '-' | '(' expr expr ')'.
// The root product needs no parentheses, matching tree_str output.
struct MonomialParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit MonomialParser(const std::string& str) : s(str) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("monomial parse error at position " +
                                std::to_string(pos) + ": " + what);
  }

  bool at_end() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }

  Tree expr() {
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    if (c >= 'a' && c <= 'z') {
      ++pos;
      return leaf(c - 'a');
    }
    if (c == '-') {
      ++pos;
      return leaf(-1);
    }
    if (c == '(') {
      ++pos;
      Tree l = expr();
      Tree r = expr();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos;
      return node(std::move(l), std::move(r));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Tree top() {
    Tree l = expr();
    if (at_end()) return l;
    Tree r = expr();
    if (!at_end()) fail("trailing input");
    return node(std::move(l), std::move(r));
  }
};

}  // namespace detail

inline Tree parse_monomial(const std::string& s) {
  detail::MonomialParser p(s);
  return p.top();
}

// ---------------------------------------------------------------------------
// Association types: canonical shapes of each degree, in the order used
// throughout (larger left factor first, recursively).

namespace detail {

inline void gen_shapes(int n, std::vector<Tree>& out) {
  if (n == 1) {
    out.push_back(leaf(-1));
    return;
  }
  // Left factor at least as large as the right; equal-size pairs keep
  // left >= right in shape order.
  for (int k = n - 1; k >= n - k; --k) {
    std::vector<Tree> ls, rs;
    gen_shapes(k, ls);
    gen_shapes(n - k, rs);
    for (const Tree& l : ls)
      for (const Tree& r : rs) {
        if (k == n - k && cmp_tree(l, r) > 0) continue;
        Tree t = node(l, r);
        if (is_straightened(t)) out.push_back(t);
      }
  }
}

}  // namespace detail

// All association types of degree n (1 <= n <= 7), ordered with larger
// splits first: counts 1, 1, 1, 2, 3, 6, 11.
inline const std::vector<Tree>& association_types(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("degree out of range [1,7]");
  static const std::vector<std::vector<Tree>> cache = [] {
    std::vector<std::vector<Tree>> c(8);
    for (int m = 1; m <= 7; ++m) detail::gen_shapes(m, c[static_cast<std::size_t>(m)]);
    return c;
  }();
  return cache[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------
// Monomial enumeration.

// Multilinear monomials of degree n: for each association type, all
// straightened labelings by 0..n-1, ordered type-major then by label word.
inline std::vector<Tree> enum_multilinear(int n) {
  std::vector<Tree> out;
  std::vector<int> word(static_cast<std::size_t>(n));
  for (const Tree& shape : association_types(n)) {
    for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i;
    do {
      Tree t = labeled(shape, word);
      Tree c = t;
      straighten(c);
      if (tree_eq(t, c)) out.push_back(std::move(t));
    } while (std::next_permutation(word.begin(), word.end()));
  }
  return out;
}

enum class Pattern { XN, XN1Y };  // x^n and x^{n-1} y

// One- and two-variable monomials of degree n (letters x and y), ordered
// type-major then by label word.
inline std::vector<Tree> enum_nonlinear(int n, Pattern pat) {
  std::vector<Tree> out;
  for (const Tree& shape : association_types(n)) {
    std::vector<Tree> here;
    std::vector<int> word(static_cast<std::size_t>(n), kXLabel);
    auto try_word = [&] {
      Tree t = labeled(shape, word);
      straighten(t);
      for (const Tree& seen : here)
        if (tree_eq(seen, t)) return;
      here.push_back(std::move(t));
    };
    if (pat == Pattern::XN) {
      try_word();
    } else {
      for (int i = 0; i < n; ++i) {
        word.assign(static_cast<std::size_t>(n), kXLabel);
        word[static_cast<std::size_t>(i)] = kYLabel;
        try_word();
      }
    }
    std::sort(here.begin(), here.end(), [](const Tree& a, const Tree& b) {
      return leaf_word(a) < leaf_word(b);
    });
    for (Tree& t : here) out.push_back(std::move(t));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shape symmetries: permutations of leaf positions induced by swapping
// equal subtree pairs.  Each generator records the association type it
// belongs to and its action on leaf positions (0-based one-line form).

struct TypeSymmetry {
  int type_index = 0;
  std::vector<int> sigma;  // position i of the word moves to sigma[i]
};

namespace detail {

// Collects, for one shape, the transpositions-of-blocks coming from
// internal nodes whose two children are identical shapes.
inline void shape_swaps(const Tree& t, int offset, int n,
                        std::vector<std::vector<int>>& out) {
  if (t.is_leaf()) return;
  const int ls = tree_size(t.ch[0]);
  shape_swaps(t.ch[0], offset, n, out);
  shape_swaps(t.ch[1], offset + ls, n, out);
  if (tree_eq(t.ch[0], t.ch[1])) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < ls; ++i) {
      sigma[static_cast<std::size_t>(offset + i)] = offset + ls + i;
      sigma[static_cast<std::size_t>(offset + ls + i)] = offset + i;
    }
    out.push_back(std::move(sigma));
  }
}

}  // namespace detail

// All block-swap symmetry generators of the degree-n association types.
inline std::vector<TypeSymmetry> type_symmetries(int n) {
  std::vector<TypeSymmetry> out;
  const std::vector<Tree>& types = association_types(n);
  for (std::size_t ti = 0; ti < types.size(); ++ti) {
    Tree shape = map_labels(types[ti], [](int) { return -1; });
    std::vector<std::vector<int>> swaps;
    detail::shape_swaps(shape, 0, n, swaps);
    for (std::vector<int>& sg : swaps)
      out.push_back(TypeSymmetry{static_cast<int>(ti), std::move(sg)});
  }
  return out;
}

}  // namespace disym
