#include <random>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "disym/elim.hpp"
#include "disym/hnf.hpp"
#include "disym/lll.hpp"
#include "disym/matrix.hpp"
#include "disym/reconstruct.hpp"
#include "disym/rings.hpp"

using namespace disym;

namespace {

std::mt19937 rng(20240811);

int rnd(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Matrix<ZRing> random_int_matrix(std::size_t r, std::size_t c, int amp) {
  Matrix<ZRing> m(ZRing{}, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rnd(-amp, amp);
  return m;
}

Matrix<Fp> to_fp(const Fp& F, const Matrix<ZRing>& a) {
  Matrix<Fp> m(F, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m.at(i, j) = F.from_int(a.at(i, j).convert_to<long long>());
  return m;
}

}  // namespace

TEST_CASE("primality and modulus validation") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(101));
  CHECK(is_prime_u64(1000003));
  CHECK(is_prime_u64((1ull << 31) - 1));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(1000001));  // 101 * 9901
  CHECK_FALSE(is_prime_u64(1ull << 20));
  CHECK_THROWS_AS(Fp(4), std::invalid_argument);
  CHECK_THROWS_AS(Fp(1000001), std::invalid_argument);
  CHECK_THROWS_AS(Fp((1ull << 31) + 11), std::invalid_argument);
  CHECK_NOTHROW(Fp(3));
  CHECK_NOTHROW(Fp(2147483647));  // largest admissible modulus
}

TEST_CASE("prime field arithmetic matches wide reference") {
  for (std::uint64_t p : {3ull, 101ull, 1000003ull, 2147483647ull}) {
    Fp F(p);
    std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
    for (int t = 0; t < 200; ++t) {
      std::uint64_t a = d(rng), b = d(rng);
      CHECK(F.mul(a, b) == (unsigned __int128)a * b % p);
      CHECK(F.add(a, b) == (a + b) % p);
      CHECK(F.sub(a, b) == (a + p - b) % p);
      if (b != 0) CHECK(F.mul(F.inv(b), b) == 1);
    }
    CHECK(F.pow(0, 0) == 1);
    CHECK(F.from_int(-1) == p - 1);
    // symmetric lift is the inverse of reduction on small values
    const long long half = std::min<long long>(40, (long long)(p - 1) / 2);
    for (long long v = -half; v <= half; ++v) CHECK(F.lift(F.from_int(v)) == v);
    CHECK(F.from_rat(Rat(1, 2)) == F.div(1, 2));
  }
}

TEST_CASE("matrix text roundtrip and tag checking") {
  Fp F(101);
  Matrix<Fp> m(F, 2, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = F.from_int(10 * (int)i + (int)j);
  std::stringstream ss;
  ss << "# leading comment\n";
  write_matrix(ss, m);
  std::stringstream back(ss.str());
  CHECK(read_matrix(back, F) == m);
  std::stringstream wrong(ss.str());
  CHECK_THROWS(read_matrix(wrong, ZRing{}));
}

TEST_CASE("row canonical form properties") {
  Fp F(1000003);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = rnd(1, 8), c = rnd(1, 8);
    Matrix<Fp> a = to_fp(F, random_int_matrix(r, c, 9));
    Echelon<Fp> e = rcf(a);
    CHECK(e.rank() <= std::min(r, c));
    CHECK(e.rank() == rank_of(a));
    // pivot columns strictly increase and carry unit entries with zeros elsewhere
    for (std::size_t i = 0; i < e.rank(); ++i) {
      if (i) CHECK(e.pivots[i] > e.pivots[i - 1]);
      for (std::size_t k = 0; k < r; ++k)
        CHECK(e.m.at(k, e.pivots[i]) == (k == i ? 1u : 0u));
    }
    // reducing again changes nothing
    CHECK(rcf(e.m).m == e.m);
    // nullspace: dimension and membership
    Matrix<Fp> ns = nullspace_rcf(e);
    CHECK(ns.rows() == c - e.rank());
    for (std::size_t k = 0; k < ns.rows(); ++k)
      for (std::size_t i = 0; i < r; ++i) {
        std::uint64_t dot = 0;
        for (std::size_t j = 0; j < c; ++j)
          dot = F.add(dot, F.mul(a.at(i, j), ns.at(k, j)));
        CHECK(dot == 0);
      }
    // the nullspace basis is itself in row canonical form
    if (ns.rows()) CHECK(rcf(ns).m == ns);
  }
}

TEST_CASE("lex-first row basis is greedy and minimal") {
  Fp F(101);
  for (int t = 0; t < 20; ++t) {
    std::size_t r = rnd(2, 10), c = rnd(2, 6);
    Matrix<Fp> a = to_fp(F, random_int_matrix(r, c, 3));
    auto rows = lex_first_row_basis(a);
    CHECK(rows.size() == rank_of(a));
    // each chosen row increases the rank of the prefix; skipped rows do not
    auto prefix_rank = [&](std::size_t upto, bool include_skipped) {
      Matrix<Fp> s(F, upto + 1, c);
      std::size_t n = 0;
      for (std::size_t i = 0; i <= upto; ++i) {
        bool chosen = std::find(rows.begin(), rows.end(), i) != rows.end();
        if (chosen || (include_skipped && i == upto)) {
          for (std::size_t j = 0; j < c; ++j) s.at(n, j) = a.at(i, j);
          ++n;
        }
      }
      Matrix<Fp> cut(F, n, c);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < c; ++j) cut.at(i, j) = s.at(i, j);
      return rank_of(cut);
    };
    for (std::size_t i = 0; i < r; ++i) {
      bool chosen = std::find(rows.begin(), rows.end(), i) != rows.end();
      if (!chosen) {
        // adding a skipped row to the chosen rows before it gains nothing
        std::size_t with = prefix_rank(i, true), without = i == 0 ? 0 : prefix_rank(i - 1, false);
        CHECK(with == without);
      }
    }
  }
}

TEST_CASE("fraction-free rank agrees with modular rank") {
  Fp F(1000003);
  for (int t = 0; t < 25; ++t) {
    std::size_t r = rnd(1, 7), c = rnd(1, 7);
    Matrix<ZRing> a = random_int_matrix(r, c, 6);
    if (t % 3 == 0 && r >= 2) {
      // plant a dependency
      for (std::size_t j = 0; j < c; ++j) a.at(r - 1, j) = a.at(0, j) * 2 - a.at(r / 2, j);
    }
    CHECK(bareiss_rank(a) == rank_of(to_fp(F, a)));
  }
}

TEST_CASE("determinants by fraction-free elimination") {
  CHECK(bareiss_det(Matrix<ZRing>::identity(ZRing{}, 5)) == 1);
  // 2x2 and 3x3 against the closed forms
  for (int t = 0; t < 40; ++t) {
    Matrix<ZRing> a = random_int_matrix(2, 2, 9);
    CHECK(bareiss_det(a) == a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0));
    Matrix<ZRing> b = random_int_matrix(3, 3, 9);
    Int expect = b.at(0, 0) * (b.at(1, 1) * b.at(2, 2) - b.at(1, 2) * b.at(2, 1)) -
                 b.at(0, 1) * (b.at(1, 0) * b.at(2, 2) - b.at(1, 2) * b.at(2, 0)) +
                 b.at(0, 2) * (b.at(1, 0) * b.at(2, 1) - b.at(1, 1) * b.at(2, 0));
    CHECK(bareiss_det(b) == expect);
  }
  // singular
  Matrix<ZRing> s(ZRing{}, 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s.at(i, j) = Int(i) + Int(j);
  CHECK(bareiss_det(s) == 0);
}

TEST_CASE("rational reconstruction recovers scaled integer rows") {
  Fp F(1000003);
  for (int t = 0; t < 30; ++t) {
    // ground truth: primitive integer row divided by the scale
    std::uint64_t scale = (t % 4) + 1;
    std::vector<long long> truth(8);
    for (auto& x : truth) x = rnd(-50, 50);
    std::vector<std::uint64_t> residues(truth.size());
    for (std::size_t j = 0; j < truth.size(); ++j)
      residues[j] = F.div(F.from_int(truth[j]), F.from_int((long long)scale));
    long long content = 0;
    auto rec = rational_reconstruct(F, residues, scale, &content);
    long long g = 0;
    for (long long x : truth) g = std::gcd(g, std::llabs(x));
    if (g == 0) g = 1;
    CHECK(content == g);
    for (std::size_t j = 0; j < truth.size(); ++j) CHECK(rec[j] * g == truth[j]);
  }
}

TEST_CASE("scale search finds the denominator") {
  Fp F(1000003);
  Matrix<Fp> rows(F, 2, 4);
  // entries k/4 with odd k force scale 4
  int nums[2][4] = {{1, -3, 5, 2}, {7, 0, -1, 9}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      rows.at(i, j) = F.div(F.from_int(nums[i][j]), F.from_int(4));
  auto s = find_scale(F, rows);
  REQUIRE(s.has_value());
  CHECK(*s == 4);
  // a row of large random residues has no small description
  Matrix<Fp> junk(F, 1, 6);
  for (std::size_t j = 0; j < 6; ++j) junk.at(0, j) = 123457u + 777u * (std::uint64_t)j * j;
  CHECK_FALSE(find_scale(F, junk, 50).has_value());
}

TEST_CASE("hermite form: unimodular transform and canonical shape") {
  for (int t = 0; t < 60; ++t) {
    std::size_t r = rnd(1, 6), c = rnd(1, 6);
    Matrix<ZRing> a = random_int_matrix(r, c, 12);
    if (t % 4 == 1 && r >= 2)  // force rank deficiency
      for (std::size_t j = 0; j < c; ++j) a.at(r - 1, j) = a.at(0, j) * 3;
    HnfResult h = hnf_with_transform(a);
    Int du = bareiss_det(h.u);
    CHECK((du == 1 || du == -1));
    CHECK(h.u.mul(a) == h.h);
    // staircase with positive pivots, entries above reduced into [0, pivot)
    std::size_t prev_pc = 0;
    for (std::size_t i = 0; i < h.rank; ++i) {
      std::size_t pc = 0;
      while (pc < c && h.h.at(i, pc) == 0) ++pc;
      REQUIRE(pc < c);
      if (i) CHECK(pc > prev_pc);
      prev_pc = pc;
      CHECK(h.h.at(i, pc) > 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h.h.at(k, pc) >= 0);
        CHECK(h.h.at(k, pc) < h.h.at(i, pc));
      }
    }
    for (std::size_t i = h.rank; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) CHECK(h.h.at(i, j) == 0);
    // tail rows of the transform annihilate the matrix
    Matrix<ZRing> nb = left_nullspace_basis(h);
    Matrix<ZRing> prod = nb.mul(a);
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(prod.at(i, j) == 0);
  }
}

TEST_CASE("row lattice membership and equality") {
  Matrix<ZRing> basis(ZRing{}, 2, 3);
  basis.at(0, 0) = 2; basis.at(0, 1) = 0; basis.at(0, 2) = 4;
  basis.at(1, 0) = 0; basis.at(1, 1) = 3; basis.at(1, 2) = 1;
  CHECK(in_row_lattice(basis, {2, 3, 5}));
  CHECK(in_row_lattice(basis, {0, 0, 0}));
  CHECK(in_row_lattice(basis, {-2, 6, -2}));
  CHECK_FALSE(in_row_lattice(basis, {1, 0, 2}));
  CHECK_FALSE(in_row_lattice(basis, {0, 0, 1}));
  // unimodular row operations keep the lattice
  Matrix<ZRing> other = basis;
  for (std::size_t j = 0; j < 3; ++j) other.at(0, j) = other.at(0, j) - 5 * other.at(1, j);
  other.swap_rows(0, 1);
  CHECK(same_row_lattice(basis, other));
  other.at(0, 0) = other.at(0, 0) + 1;
  CHECK_FALSE(same_row_lattice(basis, other));
}

TEST_CASE("lattice reduction preserves the lattice and reduces the basis") {
  int cases = 0;
  while (cases < 100) {
    std::size_t r = rnd(2, 5), c = r + (std::size_t)rnd(0, 3);
    Matrix<ZRing> b = random_int_matrix(r, c, 15);
    if (bareiss_rank(b) != r) continue;  // LLL input must be independent
    ++cases;
    Matrix<ZRing> red = lll_reduce(b);
    CHECK(same_row_lattice(b, red));
    // verify the reduced conditions with exact rational Gram-Schmidt
    std::vector<std::vector<Rat>> star(r, std::vector<Rat>(c));
    std::vector<std::vector<Rat>> mu(r, std::vector<Rat>(r, Rat(0)));
    std::vector<Rat> norm(r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) star[i][j] = Rat(red.at(i, j));
      for (std::size_t l = 0; l < i; ++l) {
        Rat dot(0);
        for (std::size_t j = 0; j < c; ++j) dot += Rat(red.at(i, j)) * star[l][j];
        mu[i][l] = dot / norm[l];
        for (std::size_t j = 0; j < c; ++j) star[i][j] -= mu[i][l] * star[l][j];
      }
      norm[i] = Rat(0);
      for (std::size_t j = 0; j < c; ++j) norm[i] += star[i][j] * star[i][j];
      CHECK(norm[i] != 0);
      for (std::size_t l = 0; l < i; ++l) {
        CHECK(2 * boost::multiprecision::abs(boost::multiprecision::numerator(mu[i][l])) <=
              boost::multiprecision::denominator(mu[i][l]));
      }
      if (i)
        CHECK(norm[i] >= (Rat(3, 4) - mu[i][i - 1] * mu[i][i - 1]) * norm[i - 1]);
    }
  }
}
