#pragma once

// Symmetric group machinery: permutations, partitions, standard Young
// tableaux, seminormal irreducible matrices, and characters.

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "disym/matrix.hpp"

namespace disym {

// Permutation of {0,..,n-1} in one-line form: i -> w[i].
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<int> w) : w_(std::move(w)) {
    std::vector<bool> seen(w_.size(), false);
    for (int v : w_) {
      if (v < 0 || static_cast<std::size_t>(v) >= w_.size() ||
          seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Perm identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    return Perm(std::move(w));
  }

  // Adjacent transposition swapping k and k+1 (0-based).
  static Perm transposition(int n, int k) {
    Perm p = identity(n);
    std::swap(p.w_[static_cast<std::size_t>(k)],
              p.w_[static_cast<std::size_t>(k + 1)]);
    return p;
  }

  // Cycles with 1-based entries: {{1,2,3},{4,5}}.
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Perm p = identity(n);
    for (const std::vector<int>& cyc : cycles)
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const int a = cyc[i] - 1;
        const int b = cyc[(i + 1) % cyc.size()] - 1;
        if (a < 0 || a >= n || b < 0 || b >= n)
          throw std::invalid_argument("cycle entry out of range");
        p.w_[static_cast<std::size_t>(a)] = b;
      }
    return Perm(std::move(p.w_));  // revalidate
  }

  int n() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& word() const { return w_; }

  // (a.compose(b))(i) = a(b(i)).
  Perm compose(const Perm& o) const {
    std::vector<int> w(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i)
      w[i] = w_[static_cast<std::size_t>(o.w_[i])];
    Perm p;
    p.w_ = std::move(w);
    return p;
  }

  Perm inverse() const {
    std::vector<int> w(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i)
      w[static_cast<std::size_t>(w_[i])] = static_cast<int>(i);
    Perm p;
    p.w_ = std::move(w);
    return p;
  }

  int inversions() const {
    int inv = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      for (std::size_t j = i + 1; j < w_.size(); ++j)
        if (w_[i] > w_[j]) ++inv;
    return inv;
  }

  // First k with w[k] > w[k+1], or -1 for the identity.
  int first_descent() const {
    for (int k = 0; k + 1 < n(); ++k)
      if (w_[static_cast<std::size_t>(k)] > w_[static_cast<std::size_t>(k + 1)])
        return k;
    return -1;
  }

  // Cycle lengths (fixed points included), descending.
  std::vector<int> cycle_type() const {
    std::vector<bool> seen(w_.size(), false);
    std::vector<int> type;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = static_cast<std::size_t>(w_[j]);
        ++len;
      }
      type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
  }

  // "(123)(45)" with 1-based entries; "e" for the identity.
  std::string cycles_str() const {
    std::vector<bool> seen(w_.size(), false);
    std::string out;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (seen[i]) continue;
      std::vector<std::size_t> cyc{i};
      seen[i] = true;
      std::size_t j = static_cast<std::size_t>(w_[i]);
      while (j != i) {
        cyc.push_back(j);
        seen[j] = true;
        j = static_cast<std::size_t>(w_[j]);
      }
      if (cyc.size() < 2) continue;
      out += '(';
      for (std::size_t v : cyc) out += std::to_string(v + 1);
      out += ')';
    }
    return out.empty() ? "e" : out;
  }

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> w_;
};

// ---------------------------------------------------------------------------
// Partitions.

using Partition = std::vector<int>;  // parts descending

// All partitions of n in descending lexicographic order:
// (n) first, (1,..,1) last.
inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rem, int mx) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rem, mx); k >= 1; --k) {
      cur.push_back(k);
      self(self, rem - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// Plain digit string: (5,1,1) -> "511".
inline std::string partition_digits(const Partition& lam) {
  std::string s;
  for (int p : lam) s += std::to_string(p);
  return s;
}

// Bracketed form used in module decompositions: (5,1) -> "[51]".
inline std::string partition_bracket(const Partition& lam) {
  return "[" + partition_digits(lam) + "]";
}

// Dimension of the irreducible labeled by lam (hook length formula).
inline std::int64_t hook_dim(const Partition& lam) {
  const int n = std::accumulate(lam.begin(), lam.end(), 0);
  std::vector<int> cols(lam.empty() ? 0 : static_cast<std::size_t>(lam[0]), 0);
  for (int r : lam)
    for (int c = 0; c < r; ++c) ++cols[static_cast<std::size_t>(c)];
  std::int64_t num = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  std::int64_t den = 1;
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j)
      den *= (lam[i] - j) + (cols[static_cast<std::size_t>(j)] -
                             static_cast<std::int64_t>(i)) - 1;
  return num / den;
}

// ---------------------------------------------------------------------------
// Standard Young tableaux.

using Tableau = std::vector<std::vector<int>>;  // entries 1..n row by row

inline std::vector<Tableau> standard_tableaux(const Partition& lam) {
  const int n = std::accumulate(lam.begin(), lam.end(), 0);
  std::vector<Tableau> out;
  Tableau rows(lam.size());
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      out.push_back(rows);
      return;
    }
    for (std::size_t i = 0; i < lam.size(); ++i) {
      if (static_cast<int>(rows[i].size()) >= lam[i]) continue;
      if (i > 0 && rows[i].size() >= rows[i - 1].size()) continue;
      rows[i].push_back(k);
      self(self, k + 1);
      rows[i].pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// ---------------------------------------------------------------------------
// Seminormal representation.  Basis: standard tableaux in the order
// produced above.  Convention: column j of a matrix holds the image of
// basis tableau j.

namespace detail {

inline std::vector<std::pair<int, int>> tableau_positions(const Tableau& T,
                                                          int n) {
  std::vector<std::pair<int, int>> pos(static_cast<std::size_t>(n + 1));
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = 0; j < T[i].size(); ++j)
      pos[static_cast<std::size_t>(T[i][j])] = {static_cast<int>(i),
                                                static_cast<int>(j)};
  return pos;
}

}  // namespace detail

// Matrices of the adjacent transpositions s_1..s_{n-1} (swapping k,k+1)
// in the seminormal form, over any field ring.
template <class Field>
std::vector<Matrix<Field>> seminormal_gens(const Field& F, const Partition& lam) {
  const int n = std::accumulate(lam.begin(), lam.end(), 0);
  const std::vector<Tableau> tabs = standard_tableaux(lam);
  std::map<Tableau, int> index;
  for (std::size_t i = 0; i < tabs.size(); ++i)
    index[tabs[i]] = static_cast<int>(i);
  const int d = static_cast<int>(tabs.size());
  std::vector<Matrix<Field>> gens;
  gens.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 1; k < n; ++k) {
    Matrix<Field> M(F, d, d);
    for (int j = 0; j < d; ++j) {
      const Tableau& T = tabs[static_cast<std::size_t>(j)];
      const auto pos = detail::tableau_positions(T, n);
      const auto [r1, c1] = pos[static_cast<std::size_t>(k)];
      const auto [r2, c2] = pos[static_cast<std::size_t>(k + 1)];
      if (r1 == r2) {
        M.at(j, j) = F.add(M.at(j, j), F.one());
      } else if (c1 == c2) {
        M.at(j, j) = F.sub(M.at(j, j), F.one());
      } else {
        // axial distance: content(k+1) - content(k)
        const int dist = (c2 - r2) - (c1 - r1);
        Tableau T2 = T;
        T2[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] = k + 1;
        T2[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c2)] = k;
        const int i2 = index.at(T2);
        const auto dF = F.from_int(dist);
        M.at(j, j) = F.add(M.at(j, j), F.inv(dF));
        const auto cross =
            dist < 0 ? F.one()
                     : F.div(F.from_int(static_cast<std::int64_t>(dist) * dist - 1),
                             F.from_int(static_cast<std::int64_t>(dist) * dist));
        M.at(i2, j) = F.add(M.at(i2, j), cross);
      }
    }
    gens.push_back(std::move(M));
  }
  return gens;
}

// Matrix of one permutation: factor through adjacent transpositions by
// repeatedly clearing the first descent (w = w' s_k with one fewer
// inversion, so R(w) = R(w') R(s_k)).
template <class Field>
Matrix<Field> irrep_matrix(const Field& F, const std::vector<Matrix<Field>>& gens,
                           const Perm& w) {
  const int d = gens.empty() ? 1 : gens[0].rows();
  Matrix<Field> M = Matrix<Field>::identity(F, d);
  Perm cur = w;
  int k;
  while ((k = cur.first_descent()) >= 0) {
    M = gens[static_cast<std::size_t>(k)].mul(M);
    cur = cur.compose(Perm::transposition(cur.n(), k));
  }
  return M;
}

// Lexicographic rank of a permutation's one-line word.
inline std::int64_t perm_lex_rank_of(const Perm& w) {
  std::int64_t rank = 0, f = 1;
  const int n = w.n();
  for (int i = n - 2; i >= 0; --i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (w(j) < w(i)) ++smaller;
    rank += smaller * f;
    f *= n - i;  // (n-1-i)! -> (n-i)! for the next (smaller) i
  }
  return rank;
}

// Matrices of all n! permutations, indexed by lexicographic rank of the
// one-line word.  Built by increasing inversion count so each matrix is
// one product away from a previously computed one.
template <class Field>
std::vector<Matrix<Field>> all_irrep_matrices(const Field& F,
                                              const std::vector<Matrix<Field>>& gens,
                                              int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 0);
  std::vector<Perm> perms;
  do {
    perms.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  // lex rank of perms[i] is i; process in order of inversion count
  std::vector<int> order(perms.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> inv(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) inv[i] = perms[i].inversions();
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return inv[static_cast<std::size_t>(a)] <
                                              inv[static_cast<std::size_t>(b)]; });
  const int d = gens.empty() ? 1 : gens[0].rows();
  std::vector<Matrix<Field>> R(perms.size(), Matrix<Field>(F, 0, 0));
  for (int idx : order) {
    const Perm& w = perms[static_cast<std::size_t>(idx)];
    const int k = w.first_descent();
    if (k < 0) {
      R[static_cast<std::size_t>(idx)] = Matrix<Field>::identity(F, d);
      continue;
    }
    const Perm w2 = w.compose(Perm::transposition(n, k));
    const std::int64_t r2 = perm_lex_rank_of(w2);
    R[static_cast<std::size_t>(idx)] =
        R[static_cast<std::size_t>(r2)].mul(gens[static_cast<std::size_t>(k)]);
  }
  return R;
}

// ---------------------------------------------------------------------------
// Characters.

// Irreducible character value chi_lam at cycle type mu, by recursive
// border-strip removal.
inline std::int64_t character_value(const Partition& lam, const Partition& mu) {
  static_assert(sizeof(std::int64_t) == 8);
  struct Key {
    Partition lam, mu;
    bool operator<(const Key& o) const {
      return lam != o.lam ? lam < o.lam : mu < o.mu;
    }
  };
  // thread-local: the degree-7 search may evaluate characters in parallel
  thread_local std::map<Key, std::int64_t> memo;
  auto rec = [&](auto&& self, Partition l, Partition m) -> std::int64_t {
    while (!l.empty() && l.back() == 0) l.pop_back();
    while (!m.empty() && m.back() == 0) m.pop_back();
    if (m.empty()) return l.empty() ? 1 : 0;
    if (l.empty()) return 0;
    const Key key{l, m};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int k = m[0];
    const Partition rest(m.begin() + 1, m.end());
    std::int64_t total = 0;
    const int rows = static_cast<int>(l.size());
    for (int r1 = 0; r1 < rows; ++r1)
      for (int r2 = r1; r2 < rows; ++r2) {
        // candidate border strip occupying rows r1..r2
        Partition sh = l;
        for (int i = r1; i < r2; ++i) sh[static_cast<std::size_t>(i)] =
            l[static_cast<std::size_t>(i + 1)] - 1;
        sh[static_cast<std::size_t>(r2)] = l[static_cast<std::size_t>(r1)] - k +
                                           (r2 - r1);
        bool ok = true;
        int removed = 0;
        for (std::size_t i = 0; i < sh.size(); ++i) {
          if (sh[i] < 0) { ok = false; break; }
          if (i + 1 < sh.size() && sh[i] < sh[i + 1]) { ok = false; break; }
          removed += l[i] - sh[i];
        }
        if (!ok || removed != k) continue;
        const std::int64_t sign = (r2 - r1) % 2 == 0 ? 1 : -1;
        total += sign * self(self, sh, rest);
      }
    memo[key] = total;
    return total;
  };
  return rec(rec, lam, mu);
}

// Conjugacy class representatives in ascending cycle-type order
// (identity first, the n-cycle last): consecutive cycles of each type.
inline std::vector<Perm> class_representatives(int n) {
  std::vector<Partition> parts = partitions(n);
  std::reverse(parts.begin(), parts.end());
  std::vector<Perm> reps;
  reps.reserve(parts.size());
  for (const Partition& mu : parts) {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int len : mu) {
      std::vector<int> cyc;
      for (int i = 0; i < len; ++i) cyc.push_back(next++);
      if (len > 1) cycles.push_back(std::move(cyc));
    }
    reps.push_back(Perm::from_cycles(n, cycles));
  }
  return reps;
}

// Size of the conjugacy class with cycle type mu in S_n.
inline std::int64_t class_size(int n, const Partition& mu) {
  std::int64_t z = 1;
  std::map<int, int> mult;
  for (int len : mu) {
    z *= len;
    ++mult[len];
  }
  for (const auto& [len, m] : mult)
    for (int i = 2; i <= m; ++i) z *= i;
  std::int64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  return fact / z;
}

// Decomposes a character given by its trace on each class representative
// (ascending cycle-type order) into irreducible multiplicities.  Throws
// if the result is not a nonneg integer combination.
inline std::vector<std::pair<Partition, std::int64_t>> decompose_character(
    int n, const std::vector<std::int64_t>& traces) {
  std::vector<Partition> classes = partitions(n);
  std::reverse(classes.begin(), classes.end());
  if (traces.size() != classes.size())
    throw std::invalid_argument("decompose_character: wrong trace count");
  std::int64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  std::vector<std::pair<Partition, std::int64_t>> out;
  for (const Partition& lam : partitions(n)) {
    std::int64_t dot = 0;
    for (std::size_t c = 0; c < classes.size(); ++c)
      dot += class_size(n, classes[c]) * character_value(lam, classes[c]) *
             traces[c];
    if (dot % fact != 0)
      throw std::runtime_error("decompose_character: non-integral multiplicity");
    const std::int64_t m = dot / fact;
    if (m < 0)
      throw std::runtime_error("decompose_character: negative multiplicity");
    if (m > 0) out.emplace_back(lam, m);
  }
  return out;
}

// "3[6] + [51]" rendering of a decomposition.
inline std::string decomposition_str(
    const std::vector<std::pair<Partition, std::int64_t>>& dec) {
  if (dec.empty()) return "0";
  std::string s;
  for (const auto& [lam, m] : dec) {
    if (!s.empty()) s += " + ";
    if (m != 1) s += std::to_string(m);
    s += partition_bracket(lam);
  }
  return s;
}

}  // namespace disym
