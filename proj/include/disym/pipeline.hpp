#pragma once

// End-to-end computations: expansion-matrix ranks, the degree-6 kernel
// and its module structure, the one- and two-variable identity searches,
// and the degree-7 multiplicity table.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <future>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "disym/dias.hpp"
#include "disym/elim.hpp"
#include "disym/expansion.hpp"
#include "disym/hnf.hpp"
#include "disym/lll.hpp"
#include "disym/magma.hpp"
#include "disym/matrix.hpp"
#include "disym/reconstruct.hpp"
#include "disym/rings.hpp"
#include "disym/symrep.hpp"

namespace disym {

// ---------------------------------------------------------------------------
// Multilinear expansion matrices.

struct RankResult {
  int degree = 0;
  std::size_t rows = 0, cols = 0, rank = 0, nullity = 0;
};

template <class Field>
RankResult multilinear_rank(const Field& F, int n) {
  Matrix<Field> m = expansion_matrix(F, n);
  RankResult r;
  r.degree = n;
  r.rows = m.rows();
  r.cols = m.cols();
  r.rank = rank_of(std::move(m));
  r.nullity = r.cols - r.rank;
  return r;
}

// Expansion matrix as plain machine integers (all coefficients are small).
inline std::vector<std::vector<long long>> expansion_rows_int(int n) {
  const std::vector<Tree> basis = enum_multilinear(n);
  const std::size_t rows = static_cast<std::size_t>(n * factorial(n));
  std::vector<std::vector<long long>> a(rows,
                                        std::vector<long long>(basis.size(), 0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const DiasPoly p = expand(basis[j]);
    for (const auto& [mono, c] : p.terms())
      a[static_cast<std::size_t>(dias_index(mono, n))][j] = c;
  }
  return a;
}

// Degree 4: the full-rank square submatrix on the lexicographically first
// independent rows, with the rows' 0-based indices.
struct Degree4Result {
  std::vector<std::size_t> row_indices;
  Matrix<ZRing> sub;
};

inline Degree4Result degree4_submatrix(const Fp& F) {
  Matrix<Fp> a = expansion_matrix(F, 4);
  std::vector<std::size_t> rows = lex_first_row_basis(a);
  Matrix<ZRing> az = expansion_matrix(ZRing{}, 4);
  Matrix<ZRing> sub(ZRing{}, rows.size(), az.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < az.cols(); ++j)
      sub.at(i, j) = az.at(rows[i], j);
  return {std::move(rows), std::move(sub)};
}

// Degree 5: row basis modulo p plus the exact characteristic-zero rank of
// the full matrix by fraction-free elimination.
struct Degree5Result {
  std::size_t rank_q = 0;
  std::vector<std::size_t> row_basis;  // 0-based
};

inline Degree5Result degree5_analyze(const Fp& F) {
  Matrix<Fp> a = expansion_matrix(F, 5);
  Degree5Result r;
  r.row_basis = lex_first_row_basis(a);
  r.rank_q = bareiss_rank(expansion_matrix(ZRing{}, 5));
  return r;
}

// ---------------------------------------------------------------------------
// Degree 6: kernel of the 945 x 945 expansion matrix, integer
// reconstruction, and the S_6-module structure of the kernel.

struct Degree6Result {
  std::size_t rank = 0, nullity = 0;
  std::uint64_t scale = 0;
  std::vector<std::size_t> pivots;            // kernel basis pivot columns
  std::vector<std::vector<long long>> basis;  // primitive integer rows
  std::vector<long long> contents;            // gcd removed after scaling
  std::vector<std::uint64_t> residues;        // distinct mod-p kernel entries
  std::vector<std::string> class_reps;        // "(12)(34)" style
  // action[r](i,j) = coefficient of basis row i in the image of row j
  std::vector<std::vector<std::vector<long long>>> action;
  std::vector<std::int64_t> traces;
  std::vector<std::pair<Partition, std::int64_t>> decomposition;
};

namespace detail {

// Index of each canonical multilinear monomial, keyed by rendered string.
inline std::map<std::string, std::size_t> monomial_index(
    const std::vector<Tree>& basis) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t j = 0; j < basis.size(); ++j) idx[tree_str(basis[j])] = j;
  return idx;
}

// Column permutation induced by a leaf relabeling: column j moves to the
// column of the straightened relabeled monomial.
inline std::vector<std::size_t> column_permutation(
    const std::vector<Tree>& basis, const std::map<std::string, std::size_t>& idx,
    const Perm& sigma) {
  std::vector<std::size_t> pi(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Tree t = map_labels(basis[j], [&](int l) { return sigma(l); });
    straighten(t);
    pi[j] = idx.at(tree_str(t));
  }
  return pi;
}

}  // namespace detail

inline Degree6Result degree6_analyze(const Fp& F) {
  Degree6Result R;
  const int n = 6;
  Echelon<Fp> ech = rcf(expansion_matrix(F, n));
  R.rank = ech.rank();
  const std::size_t cols = ech.m.cols();
  R.nullity = cols - R.rank;
  Matrix<Fp> ns = nullspace_rcf(ech);

  for (std::size_t i = 0; i < ns.rows(); ++i) {
    std::size_t pc = 0;
    while (pc < cols && F.is_zero(ns.at(i, pc))) ++pc;
    R.pivots.push_back(pc);
  }
  for (std::size_t i = 0; i < ns.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) R.residues.push_back(ns.at(i, j));
  std::sort(R.residues.begin(), R.residues.end());
  R.residues.erase(std::unique(R.residues.begin(), R.residues.end()),
                   R.residues.end());

  const auto scale = find_scale(F, ns);
  if (!scale) throw std::runtime_error("degree6: no reconstruction scale found");
  R.scale = *scale;
  for (std::size_t i = 0; i < ns.rows(); ++i) {
    std::vector<std::uint64_t> row(ns.row_ptr(i), ns.row_ptr(i) + cols);
    long long content = 0;
    R.basis.push_back(rational_reconstruct(F, row, R.scale, &content));
    R.contents.push_back(content);
  }

  // exact check: every reconstructed row lies in the kernel over Z
  const auto az = expansion_rows_int(n);
  for (const auto& v : R.basis)
    for (const auto& arow : az) {
      long long dot = 0;
      for (std::size_t j = 0; j < cols; ++j) dot += arow[j] * v[j];
      if (dot != 0) throw std::runtime_error("degree6: kernel row fails exact check");
    }

  // module structure: class representatives act by relabeling columns
  const std::vector<Tree> basis6 = enum_multilinear(n);
  const auto idx = detail::monomial_index(basis6);
  const std::vector<Perm> reps = class_representatives(n);
  const std::size_t k = R.basis.size();
  for (const Perm& sigma : reps) {
    R.class_reps.push_back(sigma.cycles_str());
    const auto pi = detail::column_permutation(basis6, idx, sigma);
    std::vector<std::vector<long long>> coeff_cols;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<long long> img(cols, 0);
      for (std::size_t c = 0; c < cols; ++c) img[pi[c]] = R.basis[j][c];
      std::vector<long long> coeffs(k, 0);
      for (std::size_t m = 0; m < k; ++m) {
        const long long num = img[R.pivots[m]] * R.contents[m];
        if (num % static_cast<long long>(R.scale) != 0)
          throw std::runtime_error("degree6: image not in kernel lattice");
        coeffs[m] = num / static_cast<long long>(R.scale);
      }
      std::vector<long long> rec(cols, 0);
      for (std::size_t m = 0; m < k; ++m)
        for (std::size_t c = 0; c < cols; ++c) rec[c] += coeffs[m] * R.basis[m][c];
      if (rec != img)
        throw std::runtime_error("degree6: image reconstruction mismatch");
      coeff_cols.push_back(std::move(coeffs));
    }
    // column convention: entry (i,j) = coefficient of basis i in image of j
    std::vector<std::vector<long long>> m(k, std::vector<long long>(k, 0));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i) m[i][j] = coeff_cols[j][i];
    long long tr = 0;
    for (std::size_t i = 0; i < k; ++i) tr += m[i][i];
    R.traces.push_back(tr);
    R.action.push_back(std::move(m));
  }
  R.decomposition = decompose_character(n, R.traces);
  return R;
}

// ---------------------------------------------------------------------------
// One- and two-variable identity search in degree 6.

struct NonlinearResult {
  Pattern pattern = Pattern::XN;
  std::vector<std::string> monomials;   // column labels
  Matrix<ZRing> e{ZRing{}, 0, 0};       // expansion matrix over Z
  std::size_t rank_q = 0, nullity = 0;  // column rank / kernel dimension
  Matrix<ZRing> hnf_h{ZRing{}, 0, 0};   // row-style HNF of e^T ...
  Matrix<ZRing> hnf_u{ZRing{}, 0, 0};   // ... with its transform
  std::size_t hnf_rank = 0;
  Matrix<ZRing> identities{ZRing{}, 0, 0};  // reduced kernel basis, normalized
};

namespace detail {

// Divide out the content and make the first nonzero entry positive.
inline void normalize_row(Matrix<ZRing>& m, std::size_t i) {
  Int g = 0;
  for (std::size_t j = 0; j < m.cols(); ++j)
    g = boost::multiprecision::gcd(g, m.at(i, j));
  if (g > 1)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) /= g;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m.at(i, j) == 0) continue;
    if (m.at(i, j) < 0)
      for (std::size_t jj = j; jj < m.cols(); ++jj) m.at(i, jj) = -m.at(i, jj);
    break;
  }
}

}  // namespace detail

inline NonlinearResult nonlinear_analyze(Pattern pat, int n = 6) {
  NonlinearResult R;
  R.pattern = pat;
  CollapsedMatrix<ZRing> cm = collapsed_matrix(ZRing{}, n, pat);
  for (const Tree& t : cm.cols) R.monomials.push_back(tree_str(t));
  R.e = std::move(cm.m);
  R.rank_q = bareiss_rank(R.e);
  R.nullity = R.e.cols() - R.rank_q;

  HnfResult h = hnf_with_transform(R.e.transpose());
  R.hnf_rank = h.rank;
  Matrix<ZRing> tail = left_nullspace_basis(h);
  R.hnf_h = std::move(h.h);
  R.hnf_u = std::move(h.u);

  Matrix<ZRing> red = lll_reduce(std::move(tail));
  for (std::size_t i = 0; i < red.rows(); ++i) detail::normalize_row(red, i);
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < red.rows(); ++i)
    rows.emplace_back(red.row_ptr(i), red.row_ptr(i) + red.cols());
  std::sort(rows.begin(), rows.end());
  R.identities = Matrix<ZRing>(ZRing{}, rows.size(), red.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < red.cols(); ++j)
      R.identities.at(i, j) = rows[i][j];
  return R;
}

// ---------------------------------------------------------------------------
// Degree 7.

struct Degree7Row {
  Partition lam;
  std::int64_t dim = 0;
  std::size_t rank_s = 0, rank_sc = 0, rank_n = 0, new_mult = 0;
};

struct Degree7Table {
  std::vector<Degree7Row> rows;
  std::int64_t total_new_dimension = 0;
};

namespace detail {

struct TreeLess {
  bool operator()(const Tree& a, const Tree& b) const {
    return cmp_tree(a, b) < 0;
  }
};

using TreePoly = std::map<Tree, long long, TreeLess>;

inline void tp_add(TreePoly& p, const Tree& t, long long c) {
  auto [it, inserted] = p.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

// Multilinearize a one-variable identity: monomial i is the all-x labeling
// of association type i; substitute all orderings of distinct letters.
inline TreePoly linearize_xn(const Matrix<ZRing>& ids, std::size_t row, int n) {
  const std::vector<Tree>& types = association_types(n);
  TreePoly out;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (std::size_t ti = 0; ti < types.size(); ++ti) {
    const long long c = ids.at(row, ti).convert_to<long long>();
    if (c == 0) continue;
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      Tree t = labeled(types[ti], sigma);
      straighten(t);
      tp_add(out, t, c);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return out;
}

// Multilinearize a two-variable identity: the k-th x (left to right) takes
// the k-th letter of each ordering of 0..n-2, y takes letter n-1.
inline TreePoly linearize_xn1y(const Matrix<ZRing>& ids, std::size_t row, int n,
                               const std::vector<Tree>& monomials) {
  TreePoly out;
  std::vector<int> sigma(static_cast<std::size_t>(n - 1));
  for (std::size_t mi = 0; mi < monomials.size(); ++mi) {
    const long long c = ids.at(row, mi).convert_to<long long>();
    if (c == 0) continue;
    const std::vector<int> w = leaf_word(monomials[mi]);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      std::size_t next = 0;
      std::vector<int> labels;
      labels.reserve(w.size());
      for (int l : w) labels.push_back(l == kXLabel ? sigma[next++] : n - 1);
      Tree t = labeled(monomials[mi], labels);
      straighten(t);
      tp_add(out, t, c);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return out;
}

// One term of a group-algebra element: association type, leaf word, coeff.
struct GaTerm {
  int type = 0;
  std::vector<int> word;
  long long c = 0;
};

// Everything degree-independent of the representation: shared, read-only.
struct Degree7Context {
  std::vector<TypeSymmetry> syms;                 // 30 generators
  std::vector<std::vector<GaTerm>> consequences;  // 49 lifted identities
  // expansion terms of the identity labeling of each type, split by center
  std::vector<std::array<std::vector<std::pair<std::vector<int>, long long>>, 7>>
      e_terms;
};

inline std::vector<GaTerm> to_group_algebra(const TreePoly& p,
                                            const std::map<std::string, int>& type_of) {
  std::vector<GaTerm> out;
  out.reserve(p.size());
  for (const auto& [t, c] : p)
    out.push_back(GaTerm{type_of.at(shape_str(t)), leaf_word(t), c});
  return out;
}

inline Degree7Context build_degree7_context(const NonlinearResult& xn,
                                            const NonlinearResult& xn1y) {
  Degree7Context ctx;
  ctx.syms = type_symmetries(7);

  std::map<std::string, int> type_of;
  const std::vector<Tree>& types7 = association_types(7);
  for (std::size_t i = 0; i < types7.size(); ++i)
    type_of[shape_str(types7[i])] = static_cast<int>(i);

  // linearized degree-6 identities
  std::vector<TreePoly> lins;
  for (std::size_t i = 0; i < xn.identities.rows(); ++i)
    lins.push_back(linearize_xn(xn.identities, i, 6));
  const std::vector<Tree> x5y = enum_nonlinear(6, Pattern::XN1Y);
  for (std::size_t i = 0; i < xn1y.identities.rows(); ++i)
    lins.push_back(linearize_xn1y(xn1y.identities, i, 6, x5y));

  // lift each multilinear identity into degree 7: substitute the product
  // (letter i . new letter) for each leaf, and multiply at the root
  const Tree extra = leaf(6);
  for (const TreePoly& f : lins) {
    for (int target = 0; target < 6; ++target) {
      TreePoly g;
      for (const auto& [t, c] : f) {
        Tree lifted = t;
        std::function<void(Tree&)> subst = [&](Tree& u) {
          if (u.is_leaf()) {
            if (u.label == target) u = node(leaf(target), leaf(6));
            return;
          }
          subst(u.ch[0]);
          subst(u.ch[1]);
        };
        subst(lifted);
        straighten(lifted);
        tp_add(g, lifted, c);
      }
      ctx.consequences.push_back(to_group_algebra(g, type_of));
    }
    TreePoly g;
    for (const auto& [t, c] : f) {
      Tree lifted = node(t, extra);
      straighten(lifted);
      tp_add(g, lifted, c);
    }
    ctx.consequences.push_back(to_group_algebra(g, type_of));
  }

  // expansion terms of each association type with identity labeling
  std::vector<int> word7(7);
  std::iota(word7.begin(), word7.end(), 0);
  for (const Tree& s : types7) {
    ctx.e_terms.emplace_back();
    auto& per_center = ctx.e_terms.back();
    const DiasPoly p = expand(labeled(s, word7));
    for (const auto& [mono, c] : p.terms())
      per_center[static_cast<std::size_t>(mono.center)].emplace_back(mono.word, c);
  }
  return ctx;
}

// Accumulate coeff * R(w) into the (block_row, block_col) block of m.
inline void add_block(Matrix<Fp>& m, std::size_t block_row, std::size_t block_col,
                      std::size_t d, const Matrix<Fp>& r, std::uint64_t coeff) {
  const Fp& F = m.ring();
  if (coeff == 0) return;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m.at(block_row * d + i, block_col * d + j) =
          F.add(m.at(block_row * d + i, block_col * d + j),
                F.mul(coeff, r.at(i, j)));
}

inline Degree7Row degree7_row(const Fp& F, const Partition& lam,
                              const Degree7Context& ctx) {
  Degree7Row out;
  out.lam = lam;
  out.dim = hook_dim(lam);
  const std::size_t d = static_cast<std::size_t>(out.dim);
  const auto gens = seminormal_gens(F, lam);
  const auto R = all_irrep_matrices(F, gens, 7);

  const std::size_t nt = 11;
  // symmetry block rows: I - R(sigma) at the type's block column
  Matrix<Fp> s(F, ctx.syms.size() * d, nt * d);
  const Matrix<Fp> eye = Matrix<Fp>::identity(F, d);
  for (std::size_t si = 0; si < ctx.syms.size(); ++si) {
    const TypeSymmetry& sym = ctx.syms[si];
    const auto& rw = R[static_cast<std::size_t>(
        perm_lex_rank_of(Perm(sym.sigma)))];
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        s.at(si * d + i, static_cast<std::size_t>(sym.type_index) * d + j) =
            F.sub(eye.at(i, j), rw.at(i, j));
  }
  out.rank_s = rank_of(s);

  // stack consequence block rows underneath
  Matrix<Fp> sc(F, (ctx.syms.size() + ctx.consequences.size()) * d, nt * d);
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) sc.at(i, j) = s.at(i, j);
  for (std::size_t ci = 0; ci < ctx.consequences.size(); ++ci)
    for (const GaTerm& term : ctx.consequences[ci])
      add_block(sc, ctx.syms.size() + ci, static_cast<std::size_t>(term.type), d,
                R[static_cast<std::size_t>(perm_lex_rank_of(Perm(term.word)))],
                F.from_int(term.c));
  out.rank_sc = rank_of(std::move(sc));

  // expansion block matrix: block (j, i) sums the center-i terms of type j
  Matrix<Fp> e(F, nt * d, 7 * d);
  for (std::size_t j = 0; j < nt; ++j)
    for (std::size_t i = 0; i < 7; ++i)
      for (const auto& [w, c] : ctx.e_terms[j][i])
        add_block(e, j, i, d,
                  R[static_cast<std::size_t>(perm_lex_rank_of(Perm(w)))],
                  F.from_int(c));
  const std::size_t rank_e = rank_of(std::move(e));
  out.rank_n = nt * d - rank_e;
  out.new_mult = out.rank_n - out.rank_sc;
  return out;
}

}  // namespace detail

// The full degree-7 table: one row per partition of 7 (descending
// lexicographic order), with the total dimension of new identities.
inline Degree7Table degree7_table(const Fp& F, int workers = 1) {
  const NonlinearResult xn = nonlinear_analyze(Pattern::XN);
  const NonlinearResult xn1y = nonlinear_analyze(Pattern::XN1Y);
  const detail::Degree7Context ctx = detail::build_degree7_context(xn, xn1y);

  const std::vector<Partition> parts = partitions(7);
  Degree7Table table;
  table.rows.resize(parts.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < parts.size(); ++i)
      table.rows[i] = detail::degree7_row(F, parts[i], ctx);
  } else {
    const int w = std::min<int>(workers, static_cast<int>(parts.size()));
    std::vector<std::future<void>> futs;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < w; ++t)
      futs.push_back(std::async(std::launch::async, [&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= parts.size()) return;
          table.rows[i] = detail::degree7_row(F, parts[i], ctx);
        }
      }));
    for (auto& f : futs) f.get();
  }
  for (const Degree7Row& r : table.rows)
    table.total_new_dimension += static_cast<std::int64_t>(r.new_mult) * r.dim;
  return table;
}

}  // namespace disym
