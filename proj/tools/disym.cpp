// Command-line front end: each reproduction as a subcommand with
// machine-readable output (text, csv, or json).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "disym/pipeline.hpp"
#include "json.hpp"

using namespace disym;
using nlohmann::json;

namespace {

enum class Format { Text, Csv, Json };

struct Common {
  std::uint64_t prime = 1000003;
  Format format = Format::Text;
  std::string data_dir = DISYM_DATA_DIR;
  bool no_golden = false;
};

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::Text},
                                        {"csv", Format::Csv},
                                        {"json", Format::Json}},
          CLI::ignore_case))
      ->default_str("text");
}

void add_prime(CLI::App* cmd, Common& c) {
  cmd->add_option("--prime", c.prime,
                  "Odd prime modulus (must exceed the degree)")
      ->envname("DISYM_PRIME")
      ->default_str("1000003");
}

void add_golden(CLI::App* cmd, Common& c) {
  cmd->add_option("--data-dir", c.data_dir, "Reference data directory")
      ->default_str(DISYM_DATA_DIR);
  cmd->add_flag("--no-golden", c.no_golden,
                "Skip comparison against the reference values");
}

Fp make_field(std::uint64_t prime, int degree) {
  if (prime <= static_cast<std::uint64_t>(degree))
    throw std::invalid_argument("prime must exceed the degree " +
                                std::to_string(degree));
  return Fp(prime);  // validates primality
}

std::vector<std::string> load_lines(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(is, line)) {
    auto a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    auto b = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(a, b - a + 1));
  }
  return out;
}

Matrix<ZRing> load_zmatrix(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return read_matrix(is, ZRing{});
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

int report_mismatch(const std::string& what, const std::string& expected,
                    const std::string& got) {
  std::cerr << "mismatch: " << what << ": expected " << expected << ", got "
            << got << "\n";
  return 1;
}

// ---------------------------------------------------------------------------

int run_expand(const std::string& monomial, bool nonlinear, const Common& c) {
  Tree t = parse_monomial(monomial);
  const std::vector<int> word = leaf_word(t);
  for (int l : word)
    if (l < 0) throw std::invalid_argument("monomial contains a placeholder leaf");
  if (!nonlinear) {
    std::set<int> seen;
    for (int l : word)
      if (!seen.insert(l).second)
        throw std::invalid_argument(
            std::string("duplicate variable '") + char('a' + l) +
            "' (pass --nonlinear to allow repeated variables)");
  }
  const DiasPoly p = expand(t);
  switch (c.format) {
    case Format::Text: {
      std::cout << "monomial " << tree_str(t) << "\n";
      std::cout << "terms " << p.size() << "\n";
      for (const auto& [m, coef] : p.terms())
        std::cout << coef << " " << mono_str(m) << "\n";
      break;
    }
    case Format::Csv: {
      std::cout << "coeff,monomial\n";
      for (const auto& [m, coef] : p.terms())
        std::cout << coef << "," << mono_str(m) << "\n";
      break;
    }
    case Format::Json: {
      json j;
      j["monomial"] = tree_str(t);
      j["terms"] = json::array();
      for (const auto& [m, coef] : p.terms())
        j["terms"].push_back({{"coeff", coef}, {"monomial", mono_str(m)}});
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  return 0;
}

int run_rank(int degree, const Common& c) {
  const Fp F = make_field(c.prime, degree);
  const RankResult r = multilinear_rank(F, degree);
  switch (c.format) {
    case Format::Text:
      std::cout << "rank " << r.rank << " / " << r.cols << " columns, nullity "
                << r.nullity << "\n";
      break;
    case Format::Csv:
      std::cout << "degree,rows,cols,rank,nullity\n"
                << r.degree << "," << r.rows << "," << r.cols << "," << r.rank
                << "," << r.nullity << "\n";
      break;
    case Format::Json: {
      json j{{"degree", r.degree}, {"rows", r.rows},       {"cols", r.cols},
             {"rank", r.rank},     {"nullity", r.nullity}, {"prime", c.prime}};
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  if (!c.no_golden) {
    static const std::map<int, std::pair<std::size_t, std::size_t>> golden = {
        {3, {3, 0}}, {4, {15, 0}}, {5, {105, 0}}, {6, {937, 8}}};
    const auto [rank, nullity] = golden.at(degree);
    if (r.rank != rank || r.nullity != nullity)
      return report_mismatch(
          "rank/nullity at degree " + std::to_string(degree),
          std::to_string(rank) + "/" + std::to_string(nullity),
          std::to_string(r.rank) + "/" + std::to_string(r.nullity));
  }
  return 0;
}

std::string join_ll(const std::vector<long long>& v, const char* sep) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : sep) + std::to_string(x);
  return s;
}

int run_degree6_full(const Common& c) {
  const Fp F = make_field(c.prime, 6);
  const Degree6Result r = degree6_analyze(F);
  std::vector<long long> pivots(r.pivots.begin(), r.pivots.end());
  std::vector<long long> traces(r.traces.begin(), r.traces.end());
  const std::string dec = decomposition_str(r.decomposition);
  switch (c.format) {
    case Format::Text: {
      std::cout << "rank " << r.rank << "\n";
      std::cout << "nullity " << r.nullity << "\n";
      std::cout << "scale " << r.scale << "\n";
      std::cout << "pivots " << join_ll(pivots, " ") << "\n";
      std::cout << "contents " << join_ll(r.contents, " ") << "\n";
      std::cout << "classes";
      for (const auto& s : r.class_reps) std::cout << " " << s;
      std::cout << "\n";
      std::cout << "traces " << join_ll(traces, " ") << "\n";
      std::cout << "decomposition " << dec << "\n";
      break;
    }
    case Format::Csv: {
      std::cout << "rank," << r.rank << "\n";
      std::cout << "nullity," << r.nullity << "\n";
      std::cout << "scale," << r.scale << "\n";
      std::cout << "pivots," << join_ll(pivots, ",") << "\n";
      std::cout << "contents," << join_ll(r.contents, ",") << "\n";
      std::cout << "classes";
      for (const auto& s : r.class_reps) std::cout << "," << s;
      std::cout << "\n";
      std::cout << "traces," << join_ll(traces, ",") << "\n";
      std::cout << "decomposition," << dec << "\n";
      break;
    }
    case Format::Json: {
      json j{{"prime", c.prime},        {"rank", r.rank},
             {"nullity", r.nullity},    {"scale", r.scale},
             {"pivots", pivots},        {"contents", r.contents},
             {"classes", r.class_reps}, {"traces", traces},
             {"decomposition", dec}};
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  if (!c.no_golden) {
    if (r.rank != 937 || r.nullity != 8)
      return report_mismatch("rank/nullity", "937/8",
                             std::to_string(r.rank) + "/" +
                                 std::to_string(r.nullity));
    if (traces != std::vector<long long>{8, 6, 4, 2, 5, 3, 2, 4, 2, 3, 2})
      return report_mismatch("traces", "8 6 4 2 5 3 2 4 2 3 2",
                             join_ll(traces, " "));
    if (dec != "3[6] + [51]")
      return report_mismatch("decomposition", "3[6] + [51]", dec);
  }
  return 0;
}

int run_degree6_pattern(Pattern pat, const Common& c) {
  const NonlinearResult r = nonlinear_analyze(pat);
  std::vector<std::vector<long long>> ids;
  for (std::size_t i = 0; i < r.identities.rows(); ++i) {
    std::vector<long long> row;
    for (std::size_t j = 0; j < r.identities.cols(); ++j)
      row.push_back(r.identities.at(i, j).convert_to<long long>());
    ids.push_back(std::move(row));
  }
  switch (c.format) {
    case Format::Text: {
      std::cout << "monomials " << r.monomials.size() << "\n";
      std::cout << "rank " << r.rank_q << "\n";
      std::cout << "nullity " << r.nullity << "\n";
      for (const auto& row : ids)
        std::cout << "identity " << join_ll(row, " ") << "\n";
      break;
    }
    case Format::Csv: {
      std::cout << "monomials," << r.monomials.size() << "\n";
      std::cout << "rank," << r.rank_q << "\n";
      std::cout << "nullity," << r.nullity << "\n";
      for (const auto& row : ids) std::cout << "identity," << join_ll(row, ",") << "\n";
      break;
    }
    case Format::Json: {
      json j{{"pattern", pat == Pattern::XN ? "x6" : "x5y"},
             {"monomials", r.monomials},
             {"rank", r.rank_q},
             {"nullity", r.nullity},
             {"identities", ids}};
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  if (!c.no_golden) {
    const bool xn = pat == Pattern::XN;
    const std::size_t rank = xn ? 3 : 16, nullity = xn ? 3 : 4;
    if (r.rank_q != rank || r.nullity != nullity)
      return report_mismatch(
          "rank/nullity", std::to_string(rank) + "/" + std::to_string(nullity),
          std::to_string(r.rank_q) + "/" + std::to_string(r.nullity));
    const std::string file =
        c.data_dir + (xn ? "/deg6_x6_identities.txt" : "/deg6_x5y_identities.txt");
    const auto rows_of = [](const Matrix<ZRing>& m) {
      std::vector<std::vector<Int>> rows;
      for (std::size_t i = 0; i < m.rows(); ++i)
        rows.emplace_back(m.row_ptr(i), m.row_ptr(i) + m.cols());
      std::sort(rows.begin(), rows.end());
      return rows;
    };
    if (rows_of(r.identities) != rows_of(load_zmatrix(file)))
      return report_mismatch("identities", "the rows of " + file,
                             "a different basis");
  }
  return 0;
}

int run_degree7(int workers, const Common& c) {
  const Fp F = make_field(c.prime, 7);
  const Degree7Table table = degree7_table(F, workers);
  switch (c.format) {
    case Format::Text: {
      std::cout << "partition dim rank_sym rank_con rank_ker new\n";
      for (const Degree7Row& r : table.rows)
        std::cout << partition_digits(r.lam) << " " << r.dim << " " << r.rank_s
                  << " " << r.rank_sc << " " << r.rank_n << " " << r.new_mult
                  << "\n";
      std::cout << "total_new_dimension " << table.total_new_dimension << "\n";
      break;
    }
    case Format::Csv: {
      std::cout << "partition,dim,rank_sym,rank_con,rank_ker,new\n";
      for (const Degree7Row& r : table.rows)
        std::cout << partition_digits(r.lam) << "," << r.dim << "," << r.rank_s
                  << "," << r.rank_sc << "," << r.rank_n << "," << r.new_mult
                  << "\n";
      std::cout << "total_new_dimension," << table.total_new_dimension << "\n";
      break;
    }
    case Format::Json: {
      json rows = json::array();
      for (const Degree7Row& r : table.rows)
        rows.push_back({{"partition", partition_digits(r.lam)},
                        {"dim", r.dim},
                        {"rank_sym", r.rank_s},
                        {"rank_con", r.rank_sc},
                        {"rank_ker", r.rank_n},
                        {"new", r.new_mult}});
      json j{{"prime", c.prime},
             {"rows", rows},
             {"total_new_dimension", table.total_new_dimension}};
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  if (!c.no_golden) {
    std::size_t i = 0;
    for (const std::string& line : load_lines(c.data_dir + "/deg7_table.txt")) {
      const auto tok = split_ws(line);
      if (tok[0] == "total_new_dimension") {
        if (table.total_new_dimension != std::stoll(tok.at(1)))
          return report_mismatch("total new dimension", tok.at(1),
                                 std::to_string(table.total_new_dimension));
        continue;
      }
      if (i >= table.rows.size()) return report_mismatch("row count", "15", ">15");
      const Degree7Row& r = table.rows[i++];
      const std::string got = partition_digits(r.lam) + " " + std::to_string(r.dim) +
                              " " + std::to_string(r.rank_s) + " " +
                              std::to_string(r.rank_sc) + " " +
                              std::to_string(r.rank_n) + " " +
                              std::to_string(r.new_mult);
      const std::string want = tok[0] + " " + tok[1] + " " + tok[2] + " " + tok[3] +
                               " " + tok[4] + " " + tok[5];
      if (got != want)
        return report_mismatch("row " + tok[0], want, got);
    }
  }
  return 0;
}

int run_selftest(const Common& c) {
  const Fp F = make_field(c.prime, 7);
  std::mt19937 rng(20240811);
  auto rnd = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  bool all_ok = true;
  const auto step = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    all_ok = all_ok && ok;
  };

  step("bilinear product axioms (degree <= 4)", check_dias_axioms(4));
  step("diproduct identities", check_jordan_identities());

  bool eq_ok = true;
  for (int t = 0; t < 10; ++t) {
    const int n = rnd(2, 6);
    const auto& types = association_types(n);
    std::vector<int> word((std::size_t)n), sigma((std::size_t)n);
    std::iota(word.begin(), word.end(), 0);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    Tree tree = labeled(types[(std::size_t)rnd(0, (int)types.size() - 1)], word);
    eq_ok = eq_ok && check_expansion_equivariance(tree, sigma);
  }
  step("expansion equivariance (sampled)", eq_ok);

  bool cox_ok = true;
  for (const Partition& lam : partitions(5)) {
    const auto gens = seminormal_gens(F, lam);
    const std::size_t d = gens.empty() ? 1 : gens[0].rows();
    const auto I = Matrix<Fp>::identity(F, d);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      cox_ok = cox_ok && gens[k].mul(gens[k]) == I;
      if (k + 1 < gens.size())
        cox_ok = cox_ok && gens[k].mul(gens[k + 1]).mul(gens[k]) ==
                               gens[k + 1].mul(gens[k]).mul(gens[k + 1]);
    }
  }
  step("representation generator relations (degree 5)", cox_ok);

  bool hnf_ok = true, lll_ok = true;
  for (int t = 0; t < 25; ++t) {
    const std::size_t rows = (std::size_t)rnd(1, 5), cols = (std::size_t)rnd(1, 5);
    Matrix<ZRing> a(ZRing{}, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = rnd(-12, 12);
    const HnfResult h = hnf_with_transform(a);
    const Int du = bareiss_det(h.u);
    hnf_ok = hnf_ok && (du == 1 || du == -1) && h.u.mul(a) == h.h;
  }
  int done = 0;
  while (done < 25) {
    const std::size_t rows = (std::size_t)rnd(2, 4);
    const std::size_t cols = rows + (std::size_t)rnd(0, 2);
    Matrix<ZRing> a(ZRing{}, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = rnd(-10, 10);
    if (bareiss_rank(a) != rows) continue;
    ++done;
    lll_ok = lll_ok && same_row_lattice(a, lll_reduce(a));
  }
  step("canonical form transforms unimodular (25 cases)", hnf_ok);
  step("lattice reduction preserves lattices (25 cases)", lll_ok);

  std::cout << (all_ok ? "selftest passed" : "selftest FAILED") << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact identity computations for the symmetrized diassociative product"};
  app.require_subcommand(1);

  Common c_expand, c_rank, c_d6, c_d7, c_self;
  std::string monomial;
  bool nonlinear = false;
  int degree = 5;
  std::string pattern;
  int workers = 1;

  CLI::App* expand_cmd =
      app.add_subcommand("expand", "Expand a parenthesized monomial");
  expand_cmd->add_option("monomial", monomial, "e.g. \"(ab)c\"")->required();
  expand_cmd->add_flag("--nonlinear", nonlinear, "Allow repeated variables");
  add_format(expand_cmd, c_expand);

  CLI::App* rank_cmd =
      app.add_subcommand("rank", "Rank of the multilinear expansion matrix");
  rank_cmd->add_option("--degree", degree, "Degree (3-6)")
      ->check(CLI::Range(3, 6))
      ->required();
  add_prime(rank_cmd, c_rank);
  add_format(rank_cmd, c_rank);
  add_golden(rank_cmd, c_rank);

  CLI::App* d6_cmd = app.add_subcommand(
      "degree6", "Degree-6 kernel: full multilinear analysis, or one "
                 "substitution pattern");
  d6_cmd->add_option("--pattern", pattern, "x6 or x5y (omit for multilinear)")
      ->check(CLI::IsMember({"x6", "x5y"}));
  add_prime(d6_cmd, c_d6);
  add_format(d6_cmd, c_d6);
  add_golden(d6_cmd, c_d6);

  CLI::App* d7_cmd =
      app.add_subcommand("degree7", "Degree-7 multiplicity table");
  d7_cmd->add_option("--workers", workers, "Parallel workers")
      ->check(CLI::PositiveNumber);
  add_prime(d7_cmd, c_d7);
  add_format(d7_cmd, c_d7);
  add_golden(d7_cmd, c_d7);

  CLI::App* self_cmd = app.add_subcommand("selftest", "Quick property checks");
  add_prime(self_cmd, c_self);

  CLI11_PARSE(app, argc, argv);

  try {
    if (expand_cmd->parsed()) return run_expand(monomial, nonlinear, c_expand);
    if (rank_cmd->parsed()) return run_rank(degree, c_rank);
    if (d6_cmd->parsed()) {
      if (pattern.empty()) return run_degree6_full(c_d6);
      return run_degree6_pattern(pattern == "x6" ? Pattern::XN : Pattern::XN1Y,
                                 c_d6);
    }
    if (d7_cmd->parsed()) return run_degree7(workers, c_d7);
    if (self_cmd->parsed()) return run_selftest(c_self);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
