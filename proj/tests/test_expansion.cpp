#include <numeric>

#include "catch_amalgamated.hpp"
#include "disym/expansion.hpp"
#include "test_util.hpp"

using namespace disym;

TEST_CASE("expansion of a single product") {
  DiasPoly p = expand(parse_monomial("ab"));
  CHECK(p.size() == 4);
  CHECK(poly_str(p) == "[a]b + [b]a + a[b] + b[a]");
  CHECK_THROWS(expand(parse_monomial("(--)")));
}

TEST_CASE("expansion size and coefficient mass per degree") {
  for (int n = 2; n <= 7; ++n) {
    std::vector<int> word((std::size_t)n);
    std::iota(word.begin(), word.end(), 0);
    for (const Tree& shape : association_types(n)) {
      DiasPoly p = expand(labeled(shape, word));
      // distinct terms and total coefficient mass are type-independent
      CHECK(p.size() == (std::size_t)n << (n - 1));
      std::int64_t mass = 0;
      for (const auto& [m, c] : p.terms()) {
        CHECK(c > 0);
        CHECK((int)m.word.size() == n);
        mass += c;
      }
      CHECK(mass == (std::int64_t)1 << (2 * (n - 1)));
    }
  }
}

TEST_CASE("expansions match the reference files") {
  for (const char* file :
       {"deg3_expansions.txt", "deg4_expansions.txt", "deg5_expansions.txt"}) {
    auto blocks = testutil::load_expansions(file);
    REQUIRE(blocks.size() > 0);
    const int degree =
        (int)leaf_word(parse_monomial(blocks[0].monomial)).size();
    // one block per association type, with identity labeling
    const auto& types = association_types(degree);
    REQUIRE(blocks.size() == types.size());
    std::vector<int> word((std::size_t)degree);
    std::iota(word.begin(), word.end(), 0);
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      const auto& b = blocks[bi];
      Tree t = parse_monomial(b.monomial);
      CHECK(tree_eq(t, labeled(types[bi], word)));
      DiasPoly p = expand(t);
      REQUIRE(p.size() == b.terms.size());
      std::size_t i = 0;
      for (const auto& [m, c] : p.terms()) {  // (center, word) order, as in the file
        CHECK(c == b.terms[i].first);
        CHECK(mono_str(m) == b.terms[i].second);
        ++i;
      }
    }
  }
}

TEST_CASE("degree-3 expansion matrix") {
  Matrix<ZRing> e = expansion_matrix(ZRing{}, 3);
  CHECK(e.rows() == 18);
  CHECK(e.cols() == 3);
  CHECK(e.transpose() == testutil::load_matrix(ZRing{}, "deg3_expansion_t.txt"));
}

TEST_CASE("expansion commutes with relabeling") {
  std::vector<std::vector<int>> perms = {
      {1, 0, 2, 3, 4}, {4, 3, 2, 1, 0}, {2, 0, 3, 4, 1}};
  for (const char* s : {"(ab)c", "((ab)c)d", "(ab)(cd)", "((ab)(cd))e", "((ab)c)(de)"})
    for (const auto& sigma : perms)
      CHECK(check_expansion_equivariance(parse_monomial(s), sigma));
}

TEST_CASE("diproduct satisfies the defining identities") {
  CHECK(check_jordan_identities());
}

TEST_CASE("collapsed matrices for one and two variables") {
  auto x6 = collapsed_matrix(ZRing{}, 6, Pattern::XN);
  CHECK(x6.m == testutil::load_matrix(ZRing{}, "deg6_x6_matrix.txt"));
  REQUIRE(x6.row_keys.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(x6.row_keys[i].center == (int)i);  // rows are the six center positions
    CHECK(x6.row_keys[i].word == std::vector<int>(6, kXLabel));
  }
  CHECK(x6.cols.size() == 6);

  auto x5y = collapsed_matrix(ZRing{}, 6, Pattern::XN1Y);
  CHECK(x5y.m == testutil::load_matrix(ZRing{}, "deg6_x5y_matrix.txt"));
  CHECK(x5y.row_keys.size() == 36);  // (center, y-position) pairs
  CHECK(x5y.cols.size() == 20);
  for (std::size_t i = 1; i < x5y.row_keys.size(); ++i)
    CHECK(x5y.row_keys[i - 1] < x5y.row_keys[i]);
}
