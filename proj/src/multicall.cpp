#include "oraclegram/multicall.hpp"

#include <stdexcept>

namespace oraclegram {

MatrixXz hadamard_power(const CoincidenceMatrix& gamma, int c) {
  if (c < 1) throw std::invalid_argument("call count must be positive");
  MatrixXz out(gamma.k, gamma.k);
  for (int i = 0; i < gamma.k; ++i)
    for (int j = 0; j < gamma.k; ++j)
      out(i, j) = pow_z(gamma.entries(i, j), static_cast<unsigned long>(c));
  return out;
}

int delta_min(const CoincidenceMatrix& gamma) {
  if (gamma.k < 2)
    throw std::invalid_argument("the gap needs at least two functions");
  mpz_class max_off = 0;
  for (int i = 0; i < gamma.k; ++i)
    for (int j = 0; j < gamma.k; ++j)
      if (i != j && gamma.entries(i, j) > max_off) max_off = gamma.entries(i, j);
  return gamma.domain_size - static_cast<int>(max_off.get_si());
}

int sufficient_calls_bound(int k, int m, int delta) {
  if (k < 1 || m < 1) throw std::invalid_argument("sizes must be positive");
  if (delta < 1 || delta > m)
    throw std::invalid_argument("gap must lie in [1, m]");
  const mpz_class diag = m;
  const mpz_class off = m - delta;
  for (int c = 1;; ++c) {
    const unsigned long uc = static_cast<unsigned long>(c);
    if (pow_z(diag, uc) > (k - 1) * pow_z(off, uc)) return c;
  }
}

bool is_strictly_diagonally_dominant(const MatrixXz& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    mpz_class off_sum = 0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) off_sum += abs_value(a(i, j));
    if (a(j, j) <= off_sum) return false;
  }
  return true;
}

MultiCallReport distinguishable_with_calls(const FunctionSet& s, int c) {
  if (c < 1) throw std::invalid_argument("call count must be positive");
  const CoincidenceMatrix gamma = coincidence_matrix(s);
  MultiCallReport r;
  r.c = c;
  const MatrixXz powered = hadamard_power(gamma, c);
  r.determinant = exact_determinant(powered);
  r.distinguishable = r.determinant > 0;
  r.strictly_dominant = is_strictly_diagonally_dominant(powered);
  if (s.size() == 1) {
    // A singleton is trivially distinguishable; one call always suffices.
    r.delta_min = s.domain_size();
    r.sufficient_bound = 1;
  } else {
    r.delta_min = delta_min(gamma);
    r.sufficient_bound = sufficient_calls_bound(s.size(), s.domain_size(), r.delta_min);
  }
  return r;
}

std::optional<int> minimal_calls_search(const FunctionSet& s, int c_max) {
  if (c_max < 1) throw std::invalid_argument("call budget must be positive");
  const CoincidenceMatrix gamma = coincidence_matrix(s);
  for (int c = 1; c <= c_max; ++c)
    if (exact_determinant(MatrixXz(hadamard_power(gamma, c))) > 0) return c;
  return std::nullopt;
}

}  // namespace oraclegram
