#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace oraclegram {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;
inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

/// A total function {0..m-1} -> {0..n-1} stored as its value list.
class FunctionTable {
 public:
  FunctionTable(int domain_size, int range_size, std::vector<int> values);

  int domain_size() const noexcept { return domain_size_; }
  int range_size() const noexcept { return range_size_; }
  int operator()(int x) const;
  const std::vector<int>& values() const noexcept { return values_; }

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;
  friend auto operator<=>(const FunctionTable&, const FunctionTable&) = default;

 private:
  int domain_size_;
  int range_size_;
  std::vector<int> values_;
};

FunctionTable make_function(int domain_size, int range_size, std::vector<int> values);
FunctionTable zero_function(int domain_size, int range_size);

/// Pointwise sum mod n. Both arguments must share (m, n).
FunctionTable add_mod(const FunctionTable& f, const FunctionTable& g);

/// Pointwise additive inverse mod n.
FunctionTable negate_mod(const FunctionTable& f);

/// True iff f is a bijection; requires m == n.
bool is_permutation(const FunctionTable& f);

/// All n^m functions in lexicographic order of their value lists.
/// Throws BudgetExceeded when n^m exceeds the cap.
std::vector<FunctionTable> enumerate_all_functions(
    int domain_size, int range_size, std::uint64_t cap = kDefaultEnumerationCap);

/// All m! permutations of {0..m-1} in lexicographic order.
std::vector<FunctionTable> enumerate_permutations(int m);

/// An ordered collection of distinct functions over a shared (m, n).
class FunctionSet {
 public:
  explicit FunctionSet(std::vector<FunctionTable> functions);

  int size() const noexcept { return static_cast<int>(functions_.size()); }
  int domain_size() const noexcept { return functions_.front().domain_size(); }
  int range_size() const noexcept { return functions_.front().range_size(); }
  const FunctionTable& operator[](int j) const { return functions_[static_cast<std::size_t>(j)]; }
  const std::vector<FunctionTable>& functions() const noexcept { return functions_; }
  auto begin() const noexcept { return functions_.begin(); }
  auto end() const noexcept { return functions_.end(); }

  friend bool operator==(const FunctionSet&, const FunctionSet&) = default;

 private:
  std::vector<FunctionTable> functions_;
};

/// Smallest input where all members take pairwise distinct values, if any.
std::optional<int> is_classically_distinguishable(const FunctionSet& s);

/// True iff for every input x and every member j some other member agrees
/// with f_j at x.
bool is_totally_indistinguishable(const FunctionSet& s);

struct TifEnumeration {
  std::vector<FunctionSet> sets;
  bool complete = true;
  std::uint64_t examined = 0;
};

/// Every totally indistinguishable k-subset of F_{mn}, in lexicographic order
/// of the member value lists. k < 4 yields nothing (no smaller set can be
/// totally indistinguishable). The budget caps candidate subsets examined;
/// exceeding it returns the partial result with complete = false.
TifEnumeration enumerate_tif_sets(int domain_size, int range_size, int k,
                                  std::uint64_t budget = kDefaultSubsetBudget);

}  // namespace oraclegram
