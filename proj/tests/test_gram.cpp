#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oraclegram/gram.hpp"

using namespace oraclegram;
namespace t = oraclegram::testing;
using t::MatrixXll;

namespace {

const FunctionSet& all22() {
  static const FunctionSet s(enumerate_all_functions(2, 2));
  return s;
}

}  // namespace

TEST_CASE("coincidence matrix of the full two-bit family") {
  const CoincidenceMatrix g = coincidence_matrix(all22());
  MatrixXz expected(4, 4);
  expected << 2, 1, 1, 0,
              1, 2, 0, 1,
              1, 0, 2, 1,
              0, 1, 1, 2;
  CHECK(g.k == 4);
  CHECK(g.domain_size == 2);
  CHECK((g.entries.array() == expected.array()).all());
}

TEST_CASE("coincidence matrix is the sum of per-point indicators") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + trial % 3;
    const int n = 2 + (trial / 3) % 3;
    int total = 1;
    for (int i = 0; i < m; ++i) total *= n;
    const int k = std::min(2 + trial % 4, total);
    const FunctionSet s = t::random_function_set(rng, m, n, k);
    const CoincidenceMatrix g = coincidence_matrix(s);
    CHECK((g.entries.array() == g.entries.transpose().array()).all());
    for (int j = 0; j < k; ++j) CHECK(g.entries(j, j) == m);
    MatrixXz sum = MatrixXz::Zero(k, k);
    for (int x = 0; x < m; ++x) sum += per_point_matrix(s, x);
    CHECK((g.entries.array() == sum.array()).all());
  }
}

TEST_CASE("coincidence matrices are positive semidefinite") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const FunctionSet s = t::random_function_set(rng, 3, 3, 2 + trial % 5);
    const Eigen::MatrixXd g = to_double(coincidence_matrix(s).entries);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g);
    CHECK(solver.eigenvalues().minCoeff() >= -1e-9);
  }
}

TEST_CASE("determinant decides the standard-oracle verdict exhaustively") {
  // Over every subset with at most six members, the sign of det(Gamma) must
  // agree with brute-force linear independence of the vectorized oracles.
  for (const auto& [m, n] :
       {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const std::vector<FunctionTable> all = enumerate_all_functions(m, n);
    std::vector<const FunctionTable*> subset;
    long long checked = 0;
    t::for_each_subset(
        static_cast<int>(all.size()), 2, 6, [&](const std::vector<int>& pick) {
          subset.clear();
          for (int idx : pick) subset.push_back(&all[idx]);
          const bool by_det = exact_determinant(t::gamma_ll(subset)) > 0;
          const MatrixXll stacked = t::stacked_standard_ll(subset);
          const bool by_rank =
              exact_rank(stacked) == static_cast<Eigen::Index>(subset.size());
          REQUIRE(by_det == by_rank);
          ++checked;
        });
    CHECK(checked > 0);
  }
}

TEST_CASE("dimension bound check") {
  CHECK(dimension_bound_check(4, 4));
  CHECK(dimension_bound_check(3, 4));
  CHECK_FALSE(dimension_bound_check(5, 4));
}

TEST_CASE("the full function family is distinguishable only in trivial cases") {
  CHECK(all_functions_verdict(1, 2));
  CHECK(all_functions_verdict(1, 5));
  CHECK(all_functions_verdict(3, 1));
  CHECK(all_functions_verdict(1, 1));
  CHECK_FALSE(all_functions_verdict(2, 2));
  CHECK_FALSE(all_functions_verdict(2, 3));
  CHECK_FALSE(all_functions_verdict(3, 2));
  CHECK_FALSE(all_functions_verdict(3, 3));
  CHECK_FALSE(all_functions_verdict(5, 2));
  CHECK_FALSE(all_functions_verdict(2, 5));
  CHECK_FALSE(all_functions_verdict(64, 8));
}

TEST_CASE("marking set and its closed-form spectrum") {
  const FunctionSet g3 = grover_set(3);
  REQUIRE(g3.size() == 3);
  CHECK(g3[0].values() == std::vector<int>{1, 0, 0});
  CHECK(g3[1].values() == std::vector<int>{0, 1, 0});
  CHECK(g3[2].values() == std::vector<int>{0, 0, 1});

  MatrixXz expected(3, 3);
  expected << 3, 1, 1, 1, 3, 1, 1, 1, 3;
  CHECK((coincidence_matrix(g3).entries.array() == expected.array()).all());

  for (int m = 2; m <= 12; ++m) {
    const SpectrumReport closed = grover_gamma_closed_form(m);
    const mpz_class direct =
        exact_determinant(coincidence_matrix(grover_set(m)).entries);
    CHECK(closed.determinant == direct);
    CHECK(closed.determinant ==
          pow_z(2, static_cast<unsigned long>(m - 1)) *
              mpz_class((m - 1) * (m - 1) + 1));
    int total = 0;
    for (const auto& line : closed.eigenvalues) total += line.multiplicity;
    CHECK(total == m);
  }
}

TEST_CASE("phase-oracle determinant closed form") {
  // theta = pi reduces to 4^{m-1} (m-2)^2.
  for (int m = 2; m <= 6; ++m) {
    const double at_pi = grover_phase_gram_det(m, std::acos(-1.0));
    const double expected = std::pow(4.0, m - 1) * (m - 2) * (m - 2);
    CHECK(std::abs(at_pi - expected) <= 1e-9 * std::max(1.0, expected));
  }
  // theta = 0 and full turns give a singular Gram.
  CHECK(grover_phase_gram_det(4, 0.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(grover_phase_gram_det(4, 4.0 * std::acos(-1.0))) <= 1e-9);
}

TEST_CASE("spectrum report certifies integer eigenvalues exactly") {
  const SpectrumReport r = gamma_spectrum(coincidence_matrix(all22()));
  REQUIRE(r.eigenvalues.size() == 3);
  std::vector<std::pair<mpq_class, int>> lines;
  for (const auto& line : r.eigenvalues) {
    REQUIRE(std::holds_alternative<mpq_class>(line.value));
    lines.emplace_back(std::get<mpq_class>(line.value), line.multiplicity);
  }
  CHECK(lines[0] == std::pair{mpq_class(0), 1});
  CHECK(lines[1] == std::pair{mpq_class(2), 2});
  CHECK(lines[2] == std::pair{mpq_class(4), 1});
  CHECK(r.determinant == 0);
}

TEST_CASE("analysis record bundles the verdict data") {
  const AnalysisRecord rec = analyze(all22());
  CHECK(rec.k == 4);
  CHECK(rec.m == 2);
  CHECK(rec.n == 2);
  CHECK(rec.determinant == 0);
  CHECK_FALSE(rec.distinguishable);
  CHECK_FALSE(rec.classical_witness.has_value());
  CHECK(rec.totally_indistinguishable);

  const FunctionSet pair(
      {make_function(2, 2, {0, 1}), make_function(2, 2, {1, 0})});
  const AnalysisRecord good = analyze(pair);
  CHECK(good.determinant == 4);
  CHECK(good.distinguishable);
  CHECK(good.classical_witness == 0);
  CHECK_FALSE(good.totally_indistinguishable);

  const DistinguishabilityVerdict v = is_unambiguously_distinguishable(pair);
  CHECK(v.distinguishable);
  CHECK(v.determinant == 4);
}
