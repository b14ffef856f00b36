#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "oraclegram/functions.hpp"
#include "oraclegram/linalg.hpp"

namespace oraclegram {

/// Normalized state over a tensor product of registers.
struct ProbeState {
  ProbeState(std::vector<int> dims, Eigen::VectorXcd amplitudes);

  std::vector<int> dims;
  Eigen::VectorXcd amplitudes;
};

/// The (m*n) x (m*n) permutation matrix sending |x>|y> to |x>|y + f(x) mod n>.
/// Basis index convention is x-major: index = x*n + y.
MatrixXz standard_oracle_matrix(const FunctionTable& f);

/// The m x m permutation matrix sending |x> to |f(x)>. Permutations only.
MatrixXz minimal_oracle_matrix(const FunctionTable& f);

/// minimal_oracle_matrix(f) tensored with an identity of equal dimension,
/// row-major tensor convention.
MatrixXz entanglement_assisted_minimal(const FunctionTable& f);

/// The phase-marking oracle G_j(theta) = I + (e^{i theta} - 1)|j><j|.
Eigen::MatrixXcd phase_marking_oracle(int m, int j, double theta);

/// Discrete-Fourier phase state |phi_{n,idx}> with amplitudes
/// e^{2 pi i idx y / n} / sqrt(n).
ProbeState pegg_barnett_state(int n, int idx);

/// The phase operator with eigenvalue 2 pi idx / n on |phi_{n,idx}>.
Eigen::MatrixXcd phase_operator(int n);

/// exp(-i * phase_operator(n)): the cyclic shift |y> -> |y + 1 mod n>.
Eigen::MatrixXcd number_shift_matrix(int n);

/// Checks that |x> tensor |phi_{n,idx}> is an eigenstate of the standard
/// oracle with eigenvalue e^{-2 pi i idx f(x) / n}.
bool verify_eigenrelation(const FunctionTable& f, int x, int idx,
                          double tol = kUnitaryTolerance);

/// Gram matrix of operators under the trace inner product:
/// entry (j', j) = Tr(A_{j'}^dag A_j).
MatrixXz gram_trace(const std::vector<MatrixXz>& ops);
Eigen::MatrixXcd gram_trace(const std::vector<Eigen::MatrixXcd>& ops);

/// Rows are the operators flattened row-major; rank of this stack decides
/// linear independence.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> stack_vectorized(
    const std::vector<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>>& ops) {
  if (ops.empty()) throw std::invalid_argument("no operators to vectorize");
  const Eigen::Index rows = ops.front().rows();
  const Eigen::Index cols = ops.front().cols();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      static_cast<Eigen::Index>(ops.size()), rows * cols);
  for (std::size_t j = 0; j < ops.size(); ++j) {
    if (ops[j].rows() != rows || ops[j].cols() != cols)
      throw std::invalid_argument("operator dimension mismatch at index " +
                                  std::to_string(j));
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < cols; ++c)
        out(static_cast<Eigen::Index>(j), r * cols + c) = ops[j](r, c);
  }
  return out;
}

/// Whether the operators are linearly independent as vectors. Exact
/// elimination on the integer path; singular-value rank with a relative
/// 1e-9 threshold on the complex path. More operators than the squared
/// dimension is dependence by counting and short-circuits to false.
bool brute_force_linear_independence(const std::vector<MatrixXz>& ops);
bool brute_force_linear_independence(const std::vector<Eigen::MatrixXcd>& ops,
                                     double rel_tol = kRankRelativeTolerance);

/// Exact check of the composition law U_f U_g = U_{f+g} and of
/// U_f^dag = U_{-f} on the integer path.
bool verify_group_law(const FunctionTable& f, const FunctionTable& g);

/// For a family of diagonal-phase unitaries U_j = sum_k e^{i omega_jk}|k><k|
/// and an entangled probe over Q tensor A, returns the Gram of the entangled
/// outputs and the Gram of the reduced product-probe outputs built from
/// p_k = sum_l |c_kl|^2. The two must coincide.
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> product_probe_reduction(
    const Eigen::MatrixXd& phases, const ProbeState& probe);

/// The fixed pair (S, T) of 4x4 unitaries with S * Qbar_f * T = U_f for both
/// two-element permutations.
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> bilateral_transform_m2();

struct CommutatorWitness {
  FunctionTable f;
  FunctionTable f_prime;
};

/// First permutation pair (lexicographic scan, f' outer) whose
/// entanglement-assisted minimal oracles fail to commute, while the matching
/// standard-oracle products commute exactly. Absent for m = 2.
std::optional<CommutatorWitness> commutator_obstruction(int m);

/// Grams of the states obtained by acting with each oracle on a maximally
/// entangled state of two register copies, for the standard and the
/// entanglement-assisted minimal family. Both equal Gamma / m.
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> choi_state_gram(const FunctionSet& s);

}  // namespace oraclegram
