#pragma once

#include <optional>

#include "oraclegram/gram.hpp"
#include "oraclegram/linalg.hpp"

namespace oraclegram {

struct MultiCallReport {
  int c = 1;
  mpz_class determinant;
  bool distinguishable = false;
  bool strictly_dominant = false;
  int delta_min = 0;
  int sufficient_bound = 1;

  bool operator==(const MultiCallReport&) const = default;
};

/// Entrywise c-th power of the coincidence matrix: the Gram data of c
/// parallel queries.
MatrixXz hadamard_power(const CoincidenceMatrix& gamma, int c);

/// Smallest gap m - max_{j' != j} Gamma_{j'j} between the diagonal and any
/// off-diagonal entry. Needs at least two functions.
int delta_min(const CoincidenceMatrix& gamma);

/// Least c with m^c > (k - 1)(m - delta)^c, by exact integer comparison.
/// Column-dominance makes that many parallel queries always sufficient.
int sufficient_calls_bound(int k, int m, int delta);

bool is_strictly_diagonally_dominant(const MatrixXz& a);

/// Verdict for c parallel queries: determinant of the entrywise power.
MultiCallReport distinguishable_with_calls(const FunctionSet& s, int c);

/// Smallest c <= c_max with a positive determinant, if any.
std::optional<int> minimal_calls_search(const FunctionSet& s, int c_max);

}  // namespace oraclegram
