#include "oraclegram/functions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "oraclegram/errors.hpp"

namespace oraclegram {

FunctionTable::FunctionTable(int domain_size, int range_size, std::vector<int> values)
    : domain_size_(domain_size), range_size_(range_size), values_(std::move(values)) {
  if (domain_size_ < 1) throw std::invalid_argument("domain size must be positive");
  if (range_size_ < 1) throw std::invalid_argument("range size must be positive");
  if (values_.size() != static_cast<std::size_t>(domain_size_))
    throw std::invalid_argument("value list has length " +
                                std::to_string(values_.size()) + ", expected " +
                                std::to_string(domain_size_));
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (values_[x] < 0 || values_[x] >= range_size_)
      throw std::invalid_argument("value " + std::to_string(values_[x]) +
                                  " at index " + std::to_string(x) +
                                  " is outside [0, " + std::to_string(range_size_) + ")");
  }
}

int FunctionTable::operator()(int x) const {
  if (x < 0 || x >= domain_size_)
    throw std::out_of_range("input " + std::to_string(x) + " is outside [0, " +
                            std::to_string(domain_size_) + ")");
  return values_[static_cast<std::size_t>(x)];
}

FunctionTable make_function(int domain_size, int range_size, std::vector<int> values) {
  return FunctionTable(domain_size, range_size, std::move(values));
}

FunctionTable zero_function(int domain_size, int range_size) {
  return FunctionTable(domain_size, range_size,
                       std::vector<int>(static_cast<std::size_t>(domain_size), 0));
}

FunctionTable add_mod(const FunctionTable& f, const FunctionTable& g) {
  if (f.domain_size() != g.domain_size() || f.range_size() != g.range_size())
    throw std::invalid_argument("add_mod requires matching domain and range sizes");
  std::vector<int> values(static_cast<std::size_t>(f.domain_size()));
  for (int x = 0; x < f.domain_size(); ++x)
    values[static_cast<std::size_t>(x)] = (f(x) + g(x)) % f.range_size();
  return FunctionTable(f.domain_size(), f.range_size(), std::move(values));
}

FunctionTable negate_mod(const FunctionTable& f) {
  std::vector<int> values(static_cast<std::size_t>(f.domain_size()));
  for (int x = 0; x < f.domain_size(); ++x)
    values[static_cast<std::size_t>(x)] = (f.range_size() - f(x)) % f.range_size();
  return FunctionTable(f.domain_size(), f.range_size(), std::move(values));
}

bool is_permutation(const FunctionTable& f) {
  if (f.domain_size() != f.range_size())
    throw std::invalid_argument("is_permutation requires domain size == range size");
  std::vector<bool> seen(static_cast<std::size_t>(f.range_size()), false);
  for (int x = 0; x < f.domain_size(); ++x) {
    if (seen[static_cast<std::size_t>(f(x))]) return false;
    seen[static_cast<std::size_t>(f(x))] = true;
  }
  return true;
}

std::vector<FunctionTable> enumerate_all_functions(int domain_size, int range_size,
                                                   std::uint64_t cap) {
  if (domain_size < 1 || range_size < 1)
    throw std::invalid_argument("domain and range sizes must be positive");
  std::uint64_t count = 1;
  for (int i = 0; i < domain_size; ++i) {
    if (count > cap / static_cast<std::uint64_t>(range_size) &&
        !(range_size == 1)) {
      throw BudgetExceeded("function enumeration would exceed the cap of " +
                           std::to_string(cap) + " candidates");
    }
    count *= static_cast<std::uint64_t>(range_size);
  }
  if (count > cap)
    throw BudgetExceeded("function enumeration would exceed the cap of " +
                         std::to_string(cap) + " candidates");

  std::vector<FunctionTable> out;
  out.reserve(count);
  std::vector<int> values(static_cast<std::size_t>(domain_size), 0);
  while (true) {
    out.emplace_back(domain_size, range_size, values);
    int pos = domain_size - 1;
    while (pos >= 0 && values[static_cast<std::size_t>(pos)] == range_size - 1) {
      values[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++values[static_cast<std::size_t>(pos)];
  }
  return out;
}

std::vector<FunctionTable> enumerate_permutations(int m) {
  if (m < 1) throw std::invalid_argument("permutation degree must be positive");
  std::vector<int> values(static_cast<std::size_t>(m));
  std::iota(values.begin(), values.end(), 0);
  std::vector<FunctionTable> out;
  do {
    out.emplace_back(m, m, values);
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

FunctionSet::FunctionSet(std::vector<FunctionTable> functions)
    : functions_(std::move(functions)) {
  if (functions_.empty())
    throw std::invalid_argument("a function set must contain at least one function");
  for (std::size_t j = 1; j < functions_.size(); ++j) {
    if (functions_[j].domain_size() != functions_[0].domain_size() ||
        functions_[j].range_size() != functions_[0].range_size())
      throw std::invalid_argument("function " + std::to_string(j) +
                                  " has mismatched domain or range size");
  }
  for (std::size_t j = 0; j < functions_.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (functions_[i] == functions_[j])
        throw std::invalid_argument("functions must be distinct (rows " +
                                    std::to_string(i) + " and " + std::to_string(j) +
                                    " coincide)");
    }
  }
}

std::optional<int> is_classically_distinguishable(const FunctionSet& s) {
  const int k = s.size();
  for (int x = 0; x < s.domain_size(); ++x) {
    std::vector<bool> seen(static_cast<std::size_t>(s.range_size()), false);
    bool all_distinct = true;
    for (int j = 0; j < k; ++j) {
      const int v = s[j](x);
      if (seen[static_cast<std::size_t>(v)]) {
        all_distinct = false;
        break;
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
    if (all_distinct) return x;
  }
  return std::nullopt;
}

bool is_totally_indistinguishable(const FunctionSet& s) {
  const int k = s.size();
  std::vector<int> counts(static_cast<std::size_t>(s.range_size()));
  for (int x = 0; x < s.domain_size(); ++x) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int j = 0; j < k; ++j) ++counts[static_cast<std::size_t>(s[j](x))];
    for (int j = 0; j < k; ++j)
      if (counts[static_cast<std::size_t>(s[j](x))] < 2) return false;
  }
  return true;
}

TifEnumeration enumerate_tif_sets(int domain_size, int range_size, int k,
                                  std::uint64_t budget) {
  if (k < 1) throw std::invalid_argument("subset size must be positive");
  TifEnumeration result;
  if (k < 4) return result;

  const std::vector<FunctionTable> all =
      enumerate_all_functions(domain_size, range_size);
  const int total = static_cast<int>(all.size());
  if (k > total) return result;

  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (result.examined >= budget) {
      result.complete = false;
      return result;
    }
    ++result.examined;
    std::vector<FunctionTable> members;
    members.reserve(static_cast<std::size_t>(k));
    for (int i : idx) members.push_back(all[static_cast<std::size_t>(i)]);
    FunctionSet candidate(std::move(members));
    if (is_totally_indistinguishable(candidate))
      result.sets.push_back(std::move(candidate));

    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == total - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return result;
}

}  // namespace oraclegram
