#include <set>

#include "catch_amalgamated.hpp"
#include "disym/pipeline.hpp"
#include "test_util.hpp"

using namespace disym;

namespace {
const std::uint64_t kPrime = 1000003;
}

TEST_CASE("multilinear expansion ranks") {
  Fp F(kPrime);
  struct Row { int n; std::size_t rows, cols, rank; };
  for (const Row& r : {Row{3, 18, 3, 3}, Row{4, 96, 15, 15}, Row{5, 600, 105, 105},
                       Row{6, 4320, 945, 937}}) {
    RankResult got = multilinear_rank(F, r.n);
    CHECK(got.rows == r.rows);
    CHECK(got.cols == r.cols);
    CHECK(got.rank == r.rank);
    CHECK(got.nullity == r.cols - r.rank);
  }
}

TEST_CASE("degree-4 full-rank submatrix") {
  Fp F(kPrime);
  Degree4Result r = degree4_submatrix(F);
  std::vector<std::size_t> expect = {0, 1, 2,  3,  4,  5,  6, 7,
                                     8, 9, 10, 11, 12, 13, 24};
  CHECK(r.row_indices == expect);
  CHECK(r.sub == testutil::load_matrix(ZRing{}, "deg4_submatrix.txt"));
  CHECK(bareiss_det(r.sub) != 0);
}

TEST_CASE("degree-5 rank and row basis") {
  Fp F(kPrime);
  Degree5Result r = degree5_analyze(F);
  CHECK(r.rank_q == 105);
  auto file = testutil::load_ints("deg5_row_basis.txt");  // 1-based
  REQUIRE(file.size() == r.row_basis.size());
  for (std::size_t i = 0; i < file.size(); ++i)
    CHECK(r.row_basis[i] == (std::size_t)file[i] - 1);
}

TEST_CASE("degree-6 kernel, reconstruction, and module structure") {
  Fp F(kPrime);
  Degree6Result r = degree6_analyze(F);
  CHECK(r.rank == 937);
  CHECK(r.nullity == 8);
  CHECK(r.scale == 4);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2, 6, 24, 120, 360, 450});
  CHECK(r.contents == std::vector<long long>{1, 1, 1, 1, 1, 1, 4, 4});

  // per-row profile: nonzero count, content, sorted distinct entries
  auto profile = testutil::load_lines("deg6_nullspace_profile.txt");
  REQUIRE(profile.size() == r.basis.size());
  for (std::size_t i = 0; i < r.basis.size(); ++i) {
    std::size_t nz = 0;
    std::set<long long> distinct;
    for (long long v : r.basis[i]) {
      if (v != 0) ++nz;
      distinct.insert(v);
    }
    std::string line = std::to_string(nz) + " " + std::to_string(r.contents[i]) + " :";
    for (long long v : distinct) line += " " + std::to_string(v);
    CHECK(line == profile[i]);
  }

  auto residues = testutil::load_ints("deg6_residue_classes.txt");
  REQUIRE(residues.size() == r.residues.size());
  for (std::size_t i = 0; i < residues.size(); ++i)
    CHECK(r.residues[i] == (std::uint64_t)residues[i]);

  auto module = testutil::load_lines("deg6_module.txt");
  CHECK(testutil::split_ws(module.at(0)) == r.class_reps);
  auto traces = testutil::split_ws(module.at(1));
  REQUIRE(traces.size() == r.traces.size());
  for (std::size_t i = 0; i < traces.size(); ++i)
    CHECK(r.traces[i] == std::stoll(traces[i]));
  CHECK(decomposition_str(r.decomposition) == module.at(2));

  // the stored character row really is the character of the second summand
  auto chi = testutil::split_ws(module.at(3));
  auto classes = partitions(6);
  std::reverse(classes.begin(), classes.end());
  REQUIRE(chi.size() == classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c)
    CHECK(std::stoll(chi[c]) == character_value({5, 1}, classes[c]));

  auto mats = testutil::load_labeled_matrices("deg6_action_matrices.txt");
  REQUIRE(mats.size() == r.action.size());
  for (std::size_t k = 0; k < mats.size(); ++k) {
    CHECK(mats[k].label == r.class_reps[k]);
    CHECK(mats[k].rows == r.action[k]);
  }
}

TEST_CASE("one-variable identity search in degree six") {
  NonlinearResult r = nonlinear_analyze(Pattern::XN);
  CHECK(r.monomials.size() == 6);
  CHECK(r.e == testutil::load_matrix(ZRing{}, "deg6_x6_matrix.txt"));
  CHECK(r.rank_q == 3);
  CHECK(r.nullity == 3);
  CHECK(r.hnf_rank == 3);
  // same identity vectors (the file keeps its own presentation order)
  CHECK(testutil::sorted_rows(r.identities) ==
        testutil::sorted_rows(testutil::load_matrix(ZRing{}, "deg6_x6_identities.txt")));

  // the published transform is also unimodular, puts e^T into the same
  // canonical form, and its tail spans the same integer kernel lattice
  Matrix<ZRing> u = testutil::load_matrix(ZRing{}, "deg6_x6_transform.txt");
  Int du = bareiss_det(u);
  CHECK((du == 1 || du == -1));
  CHECK(u.mul(r.e.transpose()) == r.hnf_h);
  Matrix<ZRing> tail(ZRing{}, 3, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 6; ++j) tail.at(i, j) = u.at(i + 3, j);
  CHECK(same_row_lattice(tail, r.identities));

  // every identity expands to zero: e * v^T = 0 exactly
  Matrix<ZRing> prod = r.e.mul(r.identities.transpose());
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(prod.at(i, j) == 0);
}

TEST_CASE("two-variable identity search in degree six") {
  NonlinearResult r = nonlinear_analyze(Pattern::XN1Y);
  auto names = testutil::load_lines("deg6_x5y_monomials.txt");
  CHECK(r.monomials == names);
  CHECK(r.e == testutil::load_matrix(ZRing{}, "deg6_x5y_matrix.txt"));
  CHECK(r.rank_q == 16);
  CHECK(r.nullity == 4);
  CHECK(testutil::sorted_rows(r.identities) ==
        testutil::sorted_rows(testutil::load_matrix(ZRing{}, "deg6_x5y_identities.txt")));
  Matrix<ZRing> prod = r.e.mul(r.identities.transpose());
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(prod.at(i, j) == 0);
}

TEST_CASE("linearized identities expand to zero") {
  NonlinearResult xn = nonlinear_analyze(Pattern::XN);
  NonlinearResult x5y = nonlinear_analyze(Pattern::XN1Y);
  const std::vector<Tree> monos = enum_nonlinear(6, Pattern::XN1Y);
  std::vector<detail::TreePoly> lins;
  for (std::size_t i = 0; i < xn.identities.rows(); ++i)
    lins.push_back(detail::linearize_xn(xn.identities, i, 6));
  for (std::size_t i = 0; i < x5y.identities.rows(); ++i)
    lins.push_back(detail::linearize_xn1y(x5y.identities, i, 6, monos));
  REQUIRE(lins.size() == 7);
  for (const auto& f : lins) {
    CHECK(f.size() > 0);
    DiasPoly total;
    for (const auto& [t, c] : f) total.add(expand(t), c);
    CHECK(total.is_zero());
  }
}

TEST_CASE("degree-7 consequences expand to zero") {
  NonlinearResult xn = nonlinear_analyze(Pattern::XN);
  NonlinearResult x5y = nonlinear_analyze(Pattern::XN1Y);
  detail::Degree7Context ctx = detail::build_degree7_context(xn, x5y);
  CHECK(ctx.syms.size() == 30);
  CHECK(ctx.consequences.size() == 49);
  REQUIRE(ctx.e_terms.size() == 11);
  for (const auto& per_center : ctx.e_terms) {
    std::size_t total = 0;
    for (const auto& terms : per_center) total += terms.size();
    CHECK(total == 448);
  }
  const std::vector<Tree>& types = association_types(7);
  for (std::size_t ci : {std::size_t(0), std::size_t(24), std::size_t(48)}) {
    DiasPoly total;
    for (const detail::GaTerm& term : ctx.consequences[ci])
      total.add(expand(labeled(types[(std::size_t)term.type], term.word)), term.c);
    CHECK(total.is_zero());
  }
}

TEST_CASE("degree-7 multiplicity rows (spot checks)") {
  Fp F(kPrime);
  NonlinearResult xn = nonlinear_analyze(Pattern::XN);
  NonlinearResult x5y = nonlinear_analyze(Pattern::XN1Y);
  detail::Degree7Context ctx = detail::build_degree7_context(xn, x5y);

  Degree7Row r61 = detail::degree7_row(F, {6, 1}, ctx);
  CHECK(r61.dim == 6);
  CHECK(r61.rank_s == 31);
  CHECK(r61.rank_sc == 40);
  CHECK(r61.rank_n == 47);
  CHECK(r61.new_mult == 7);

  Degree7Row r4111 = detail::degree7_row(F, {4, 1, 1, 1}, ctx);
  CHECK(r4111.dim == 20);
  CHECK(r4111.rank_s == 190);
  CHECK(r4111.rank_sc == 190);
  CHECK(r4111.rank_n == 191);
  CHECK(r4111.new_mult == 1);
}
