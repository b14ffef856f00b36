#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oraclegram/multicall.hpp"
#include "oraclegram/operators.hpp"

using namespace oraclegram;
namespace t = oraclegram::testing;

namespace {

const FunctionSet& all22() {
  static const FunctionSet s(enumerate_all_functions(2, 2));
  return s;
}

}  // namespace

TEST_CASE("entrywise powers of the coincidence matrix") {
  const CoincidenceMatrix gamma = coincidence_matrix(all22());
  CHECK((hadamard_power(gamma, 1).array() == gamma.entries.array()).all());
  MatrixXz squared(4, 4);
  squared << 4, 1, 1, 0,
             1, 4, 0, 1,
             1, 0, 4, 1,
             0, 1, 1, 4;
  CHECK((hadamard_power(gamma, 2).array() == squared.array()).all());
  CHECK_THROWS_AS(hadamard_power(gamma, 0), std::invalid_argument);
}

TEST_CASE("diagonal gap and sufficient call bound") {
  CHECK(delta_min(coincidence_matrix(all22())) == 1);
  CHECK(delta_min(coincidence_matrix(grover_set(5))) == 2);
  CHECK_THROWS_AS(
      delta_min(coincidence_matrix(FunctionSet({make_function(2, 2, {0, 1})}))),
      std::invalid_argument);

  CHECK(sufficient_calls_bound(4, 2, 1) == 2);  // 2^c > 3 first at c = 2
  CHECK(sufficient_calls_bound(2, 5, 5) == 1);  // gap equal to the diagonal
  CHECK(sufficient_calls_bound(1, 3, 1) == 1);
  CHECK(sufficient_calls_bound(10, 4, 1) == 8);  // (4/3)^c > 9 first at c = 8
  CHECK_THROWS_AS(sufficient_calls_bound(4, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(sufficient_calls_bound(4, 2, 3), std::invalid_argument);

  // Returned bound is tight with respect to its defining inequality.
  for (int k = 2; k <= 6; ++k)
    for (int m = 2; m <= 5; ++m)
      for (int delta = 1; delta <= m; ++delta) {
        const int c = sufficient_calls_bound(k, m, delta);
        const auto holds = [&](int calls) {
          return pow_z(m, static_cast<unsigned long>(calls)) >
                 (k - 1) * pow_z(m - delta, static_cast<unsigned long>(calls));
        };
        CHECK(holds(c));
        if (c > 1) CHECK_FALSE(holds(c - 1));
      }
}

TEST_CASE("strict column dominance") {
  MatrixXz dominant(2, 2);
  dominant << 3, -2, 1, 4;
  CHECK(is_strictly_diagonally_dominant(dominant));
  MatrixXz tied(2, 2);
  tied << 2, 1, 2, 3;
  CHECK_FALSE(is_strictly_diagonally_dominant(tied));
}

TEST_CASE("two parallel calls separate the full two-bit family") {
  const MultiCallReport one = distinguishable_with_calls(all22(), 1);
  CHECK(one.c == 1);
  CHECK(one.determinant == 0);
  CHECK_FALSE(one.distinguishable);
  CHECK_FALSE(one.strictly_dominant);
  CHECK(one.delta_min == 1);
  CHECK(one.sufficient_bound == 2);

  const MultiCallReport two = distinguishable_with_calls(all22(), 2);
  CHECK(two.determinant == 192);
  CHECK(two.distinguishable);
  CHECK(two.strictly_dominant);

  CHECK(minimal_calls_search(all22(), 8) == 2);
  CHECK_FALSE(minimal_calls_search(all22(), 1).has_value());
  CHECK(minimal_calls_search(grover_set(3), 4) == 1);
  CHECK_THROWS_AS(minimal_calls_search(all22(), 0), std::invalid_argument);
}

TEST_CASE("singleton families need one call") {
  const FunctionSet solo({make_function(3, 2, {0, 1, 0})});
  const MultiCallReport r = distinguishable_with_calls(solo, 1);
  CHECK(r.distinguishable);
  CHECK(r.delta_min == 3);
  CHECK(r.sufficient_bound == 1);
}

TEST_CASE("entrywise power matches the Gram of tensored oracles") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 2 + trial % 2;
    const int n = 2 + trial % 3;
    const FunctionSet s = t::random_function_set(rng, m, n, 2 + trial % 3);
    std::vector<MatrixXz> doubled;
    for (const FunctionTable& f : s) {
      const MatrixXz u = standard_oracle_matrix(f);
      doubled.push_back(kron(u, u));
    }
    // Tr((U' x U')^T (U x U)) = Tr(U'^T U)^2 = (n Gamma)^2 entrywise.
    const MatrixXz expected =
        (n * n) * hadamard_power(coincidence_matrix(s), 2);
    CHECK((gram_trace(doubled).array() == expected.array()).all());
  }
}

TEST_CASE("tensored brute force agrees with the squared-entry determinant") {
  std::vector<MatrixXz> doubled;
  for (const FunctionTable& f : all22()) {
    const MatrixXz u = standard_oracle_matrix(f);
    doubled.push_back(kron(u, u));
  }
  REQUIRE(doubled.front().rows() == 16);
  CHECK(brute_force_linear_independence(doubled));
  CHECK(exact_determinant(hadamard_power(coincidence_matrix(all22()), 2)) > 0);
}

TEST_CASE("distinguishability is monotone in the call count") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + trial % 3;
    const int n = 2 + (trial / 2) % 3;
    const FunctionSet s = t::random_function_set(rng, m, n, 2 + trial % 3);
    const CoincidenceMatrix gamma = coincidence_matrix(s);
    bool seen_positive = false;
    for (int c = 1; c <= 4; ++c) {
      const bool positive = exact_determinant(hadamard_power(gamma, c)) > 0;
      if (seen_positive) CHECK(positive);
      seen_positive = seen_positive || positive;
    }
    // The sufficient bound really is sufficient.
    const int bound =
        sufficient_calls_bound(s.size(), s.domain_size(), delta_min(gamma));
    const MatrixXz at_bound = hadamard_power(gamma, bound);
    CHECK(is_strictly_diagonally_dominant(at_bound));
    CHECK(exact_determinant(at_bound) > 0);
  }
}
