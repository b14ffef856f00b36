#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oraclegram/errors.hpp"
#include "oraclegram/functions.hpp"

using namespace oraclegram;
namespace t = oraclegram::testing;

TEST_CASE("function tables validate their values") {
  CHECK_NOTHROW(make_function(2, 3, {0, 2}));
  CHECK_THROWS_AS(make_function(2, 3, {0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(make_function(2, 3, {-1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_function(2, 3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(make_function(0, 3, {}), std::invalid_argument);
  const FunctionTable f = make_function(3, 4, {1, 0, 3});
  CHECK(f(0) == 1);
  CHECK(f(2) == 3);
  CHECK_THROWS_AS(f(3), std::out_of_range);
  CHECK_THROWS_AS(f(-1), std::out_of_range);
}

TEST_CASE("pointwise modular arithmetic forms a group") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 2 + trial % 3;
    const int n = 2 + (trial / 3) % 3;
    const FunctionTable f = t::random_function(rng, m, n);
    const FunctionTable g = t::random_function(rng, m, n);
    const FunctionTable h = t::random_function(rng, m, n);
    CHECK(add_mod(f, zero_function(m, n)) == f);
    CHECK(add_mod(f, negate_mod(f)) == zero_function(m, n));
    CHECK(add_mod(f, g) == add_mod(g, f));
    CHECK(add_mod(add_mod(f, g), h) == add_mod(f, add_mod(g, h)));
  }
  CHECK_THROWS_AS(add_mod(zero_function(2, 2), zero_function(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("permutation recognition") {
  CHECK(is_permutation(make_function(3, 3, {2, 0, 1})));
  CHECK_FALSE(is_permutation(make_function(3, 3, {2, 2, 1})));
  CHECK_THROWS_AS(is_permutation(make_function(2, 3, {0, 1})),
                  std::invalid_argument);
}

TEST_CASE("enumeration of all functions is lexicographic and complete") {
  const std::vector<FunctionTable> all = enumerate_all_functions(2, 3);
  REQUIRE(all.size() == 9);
  CHECK(all.front().values() == std::vector<int>{0, 0});
  CHECK(all[1].values() == std::vector<int>{0, 1});
  CHECK(all.back().values() == std::vector<int>{2, 2});
  for (std::size_t i = 1; i < all.size(); ++i)
    CHECK(all[i - 1].values() < all[i].values());
  CHECK(enumerate_all_functions(3, 4).size() == 64);
  CHECK_THROWS_AS(enumerate_all_functions(10, 10, 1000), BudgetExceeded);
}

TEST_CASE("enumeration of permutations") {
  const std::vector<FunctionTable> perms = enumerate_permutations(3);
  REQUIRE(perms.size() == 6);
  CHECK(perms.front().values() == std::vector<int>{0, 1, 2});
  CHECK(perms.back().values() == std::vector<int>{2, 1, 0});
  for (const FunctionTable& p : perms) CHECK(is_permutation(p));
  for (std::size_t i = 1; i < perms.size(); ++i)
    CHECK(perms[i - 1].values() < perms[i].values());
  CHECK(enumerate_permutations(4).size() == 24);
}

TEST_CASE("function sets enforce shape and distinctness") {
  CHECK_THROWS_AS(FunctionSet({}), std::invalid_argument);
  CHECK_THROWS_AS(
      FunctionSet({make_function(2, 2, {0, 1}), make_function(2, 3, {0, 1})}),
      std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      FunctionSet({make_function(2, 2, {0, 1}), make_function(2, 2, {0, 1})}),
      doctest::Contains("must be distinct"), std::invalid_argument);
  const FunctionSet s({make_function(2, 2, {0, 1}), make_function(2, 2, {1, 0})});
  CHECK(s.size() == 2);
  CHECK(s[1](0) == 1);
}

TEST_CASE("classical distinguishability witness is the smallest input") {
  const FunctionSet swap_pair(
      {make_function(2, 2, {0, 1}), make_function(2, 2, {1, 0})});
  CHECK(is_classically_distinguishable(swap_pair) == 0);

  const FunctionSet later(
      {make_function(3, 2, {0, 0, 0}), make_function(3, 2, {0, 1, 1})});
  CHECK(is_classically_distinguishable(later) == 1);

  const FunctionSet all22(enumerate_all_functions(2, 2));
  CHECK_FALSE(is_classically_distinguishable(all22).has_value());

  const FunctionSet singleton({make_function(2, 2, {0, 1})});
  CHECK(is_classically_distinguishable(singleton) == 0);
}

TEST_CASE("total indistinguishability requires every value to be shared") {
  const FunctionSet all22(enumerate_all_functions(2, 2));
  CHECK(is_totally_indistinguishable(all22));

  const FunctionSet pair(
      {make_function(2, 2, {0, 1}), make_function(2, 2, {1, 0})});
  CHECK_FALSE(is_totally_indistinguishable(pair));

  // Three of the four functions: [1,1] is alone at both inputs' values.
  const FunctionSet three({make_function(2, 2, {0, 0}),
                           make_function(2, 2, {0, 1}),
                           make_function(2, 2, {1, 0})});
  CHECK_FALSE(is_totally_indistinguishable(three));
}

TEST_CASE("frozen counts of totally indistinguishable subsets") {
  CHECK(enumerate_tif_sets(2, 2, 4).sets.size() == 1);
  CHECK(enumerate_tif_sets(2, 3, 4).sets.size() == 9);
  CHECK(enumerate_tif_sets(2, 3, 5).sets.size() == 0);
  CHECK(enumerate_tif_sets(2, 3, 6).sets.size() == 12);
  for (int k = 1; k <= 3; ++k) {
    const TifEnumeration e = enumerate_tif_sets(2, 3, k);
    CHECK(e.sets.empty());
    CHECK(e.complete);
  }
}

TEST_CASE("every enumerated subset is totally indistinguishable and ordered") {
  const TifEnumeration e = enumerate_tif_sets(2, 3, 4);
  REQUIRE(e.complete);
  CHECK(e.examined == 126);  // C(9, 4)
  for (const FunctionSet& s : e.sets) {
    CHECK(is_totally_indistinguishable(s));
    for (int j = 1; j < s.size(); ++j)
      CHECK(s[j - 1].values() < s[j].values());
  }
}

TEST_CASE("subset budget produces an honest partial result") {
  const TifEnumeration partial = enumerate_tif_sets(2, 3, 4, 50);
  CHECK_FALSE(partial.complete);
  CHECK(partial.examined <= 50);
  const TifEnumeration full = enumerate_tif_sets(2, 3, 4);
  CHECK(partial.sets.size() <= full.sets.size());
  for (std::size_t i = 0; i < partial.sets.size(); ++i)
    CHECK(partial.sets[i] == full.sets[i]);
}
