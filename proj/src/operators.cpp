#include "oraclegram/operators.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "oraclegram/gram.hpp"

namespace oraclegram {

namespace {

using std::numbers::pi;

constexpr std::complex<double> kI{0.0, 1.0};

Eigen::VectorXcd basis_vector(int dim, int idx) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(idx) = 1.0;
  return v;
}

}  // namespace

ProbeState::ProbeState(std::vector<int> dims_in, Eigen::VectorXcd amplitudes_in)
    : dims(std::move(dims_in)), amplitudes(std::move(amplitudes_in)) {
  if (dims.empty()) throw std::invalid_argument("probe state needs at least one register");
  Eigen::Index total = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("register dimension must be positive");
    total *= d;
  }
  if (amplitudes.size() != total)
    throw std::invalid_argument("amplitude vector length " +
                                std::to_string(amplitudes.size()) +
                                " does not match register dimensions (product " +
                                std::to_string(total) + ")");
  if (std::abs(amplitudes.norm() - 1.0) > kUnitaryTolerance)
    throw std::invalid_argument("probe state is not normalized");
}

MatrixXz standard_oracle_matrix(const FunctionTable& f) {
  const int m = f.domain_size();
  const int n = f.range_size();
  MatrixXz u = MatrixXz::Zero(m * n, m * n);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < n; ++y) u(x * n + (y + f(x)) % n, x * n + y) = 1;
  return u;
}

MatrixXz minimal_oracle_matrix(const FunctionTable& f) {
  if (!is_permutation(f))
    throw std::invalid_argument("minimal oracle requires a permutation");
  const int m = f.domain_size();
  MatrixXz q = MatrixXz::Zero(m, m);
  for (int x = 0; x < m; ++x) q(f(x), x) = 1;
  return q;
}

MatrixXz entanglement_assisted_minimal(const FunctionTable& f) {
  const MatrixXz q = minimal_oracle_matrix(f);
  return kron(q, MatrixXz::Identity(q.rows(), q.cols()));
}

Eigen::MatrixXcd phase_marking_oracle(int m, int j, double theta) {
  if (m < 1) throw std::invalid_argument("dimension must be positive");
  if (j < 0 || j >= m) throw std::invalid_argument("marked index out of range");
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(m, m);
  g(j, j) = std::exp(kI * theta);
  return g;
}

ProbeState pegg_barnett_state(int n, int idx) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  if (idx < 0 || idx >= n) throw std::invalid_argument("phase index out of range");
  Eigen::VectorXcd v(n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (int y = 0; y < n; ++y)
    v(y) = norm * std::exp(kI * (2.0 * pi * idx * y / n));
  return ProbeState({n}, std::move(v));
}

Eigen::MatrixXcd phase_operator(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  Eigen::MatrixXcd phi = Eigen::MatrixXcd::Zero(n, n);
  for (int idx = 0; idx < n; ++idx) {
    const Eigen::VectorXcd v = pegg_barnett_state(n, idx).amplitudes;
    phi += (2.0 * pi * idx / n) * (v * v.adjoint());
  }
  return phi;
}

Eigen::MatrixXcd number_shift_matrix(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(n, n);
  for (int idx = 0; idx < n; ++idx) {
    const Eigen::VectorXcd v = pegg_barnett_state(n, idx).amplitudes;
    shift += std::exp(-kI * (2.0 * pi * idx / n)) * (v * v.adjoint());
  }
  return shift;
}

bool verify_eigenrelation(const FunctionTable& f, int x, int idx, double tol) {
  const int m = f.domain_size();
  const int n = f.range_size();
  if (x < 0 || x >= m) throw std::invalid_argument("domain point out of range");
  const Eigen::VectorXcd phi = pegg_barnett_state(n, idx).amplitudes;
  Eigen::VectorXcd state = Eigen::VectorXcd::Zero(m * n);
  for (int y = 0; y < n; ++y) state(x * n + y) = phi(y);
  const Eigen::VectorXcd applied = to_complex(standard_oracle_matrix(f)) * state;
  const std::complex<double> eigenvalue =
      std::exp(-kI * (2.0 * pi * idx * f(x) / n));
  return (applied - eigenvalue * state).norm() <= tol;
}

MatrixXz gram_trace(const std::vector<MatrixXz>& ops) {
  const int k = static_cast<int>(ops.size());
  MatrixXz g(k, k);
  for (int jp = 0; jp < k; ++jp)
    for (int j = 0; j < k; ++j)
      g(jp, j) = ops[jp].cwiseProduct(ops[j]).sum();
  return g;
}

Eigen::MatrixXcd gram_trace(const std::vector<Eigen::MatrixXcd>& ops) {
  const int k = static_cast<int>(ops.size());
  Eigen::MatrixXcd g(k, k);
  for (int jp = 0; jp < k; ++jp)
    for (int j = 0; j < k; ++j)
      g(jp, j) = ops[jp].conjugate().cwiseProduct(ops[j]).sum();
  return g;
}

bool brute_force_linear_independence(const std::vector<MatrixXz>& ops) {
  if (ops.empty()) return true;
  const Eigen::Index k = static_cast<Eigen::Index>(ops.size());
  if (k > ops.front().size()) return false;
  return exact_rank(stack_vectorized(ops)) == k;
}

bool brute_force_linear_independence(const std::vector<Eigen::MatrixXcd>& ops,
                                     double rel_tol) {
  if (ops.empty()) return true;
  const Eigen::Index k = static_cast<Eigen::Index>(ops.size());
  if (k > ops.front().size()) return false;
  return svd_rank(stack_vectorized(ops), rel_tol) == k;
}

bool verify_group_law(const FunctionTable& f, const FunctionTable& g) {
  if (f.domain_size() != g.domain_size() || f.range_size() != g.range_size())
    return false;
  const MatrixXz uf = standard_oracle_matrix(f);
  const MatrixXz ug = standard_oracle_matrix(g);
  if (MatrixXz(uf * ug) != standard_oracle_matrix(add_mod(f, g))) return false;
  return uf.transpose() == standard_oracle_matrix(negate_mod(f));
}

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> product_probe_reduction(
    const Eigen::MatrixXd& phases, const ProbeState& probe) {
  if (probe.dims.size() != 2)
    throw std::invalid_argument("probe must have a query and an ancilla register");
  const int dq = probe.dims[0];
  const int da = probe.dims[1];
  if (phases.cols() != dq)
    throw std::invalid_argument("phase table columns must match the query dimension");
  if (dq > da)
    throw std::invalid_argument("ancilla must be at least query-sized");
  const int k = static_cast<int>(phases.rows());

  std::vector<Eigen::VectorXcd> entangled(k);
  for (int j = 0; j < k; ++j) {
    Eigen::VectorXcd v(dq * da);
    for (int q = 0; q < dq; ++q) {
      const std::complex<double> phase = std::exp(kI * phases(j, q));
      for (int a = 0; a < da; ++a)
        v(q * da + a) = phase * probe.amplitudes(q * da + a);
    }
    entangled[j] = std::move(v);
  }

  Eigen::VectorXd weights(dq);
  for (int q = 0; q < dq; ++q)
    weights(q) = probe.amplitudes.segment(q * da, da).squaredNorm();

  std::vector<Eigen::VectorXcd> product(k);
  for (int j = 0; j < k; ++j) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dq * da);
    for (int q = 0; q < dq; ++q)
      v(q * da) = std::sqrt(weights(q)) * std::exp(kI * phases(j, q));
    product[j] = std::move(v);
  }

  auto gram_of = [k](const std::vector<Eigen::VectorXcd>& states) {
    Eigen::MatrixXcd g(k, k);
    for (int jp = 0; jp < k; ++jp)
      for (int j = 0; j < k; ++j) g(jp, j) = states[jp].dot(states[j]);
    return g;
  };
  return {gram_of(entangled), gram_of(product)};
}

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> bilateral_transform_m2() {
  Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;

  const Eigen::VectorXcd plus = (basis_vector(2, 0) + basis_vector(2, 1)) / std::sqrt(2.0);
  const Eigen::VectorXcd minus = (basis_vector(2, 0) - basis_vector(2, 1)) / std::sqrt(2.0);
  const Eigen::MatrixXcd p_plus = plus * plus.adjoint();
  const Eigen::MatrixXcd p_minus = minus * minus.adjoint();
  const Eigen::MatrixXcd id2 = Eigen::MatrixXcd::Identity(2, 2);
  Eigen::MatrixXcd sigma_z = Eigen::MatrixXcd::Zero(2, 2);
  sigma_z(0, 0) = 1.0;
  sigma_z(1, 1) = -1.0;

  const Eigen::MatrixXcd s =
      (kron(id2, p_plus) + kI * kron(sigma_z, p_minus)) * swap;
  const Eigen::MatrixXcd t = swap * kron(id2, Eigen::MatrixXcd(p_plus - kI * p_minus));
  return {s, t};
}

std::optional<CommutatorWitness> commutator_obstruction(int m) {
  const auto perms = enumerate_permutations(m);
  std::vector<int> id_values(m);
  for (int x = 0; x < m; ++x) id_values[x] = x;
  const MatrixXz u_id = standard_oracle_matrix(make_function(m, m, id_values));
  for (const FunctionTable& fp : perms) {
    const MatrixXz qp = minimal_oracle_matrix(fp);
    for (const FunctionTable& f : perms) {
      const MatrixXz q = minimal_oracle_matrix(f);
      if (MatrixXz(qp * q) == MatrixXz(q * qp)) continue;

      const MatrixXz qbar_p = entanglement_assisted_minimal(fp);
      const MatrixXz qbar = entanglement_assisted_minimal(f);
      if (MatrixXz(qbar_p * qbar) == MatrixXz(qbar * qbar_p))
        throw std::logic_error("tensoring with identity cannot restore commutation");

      const MatrixXz a = standard_oracle_matrix(fp) * u_id;
      const MatrixXz b = standard_oracle_matrix(f) * u_id;
      if (MatrixXz(a * b) != MatrixXz(b * a))
        throw std::logic_error("standard oracles of a commuting family must commute");
      return CommutatorWitness{f, fp};
    }
  }
  return std::nullopt;
}

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> choi_state_gram(const FunctionSet& s) {
  const int m = s.domain_size();
  if (s.range_size() != m)
    throw std::invalid_argument("register copies require matching dimensions");
  for (int j = 0; j < s.size(); ++j)
    if (!is_permutation(s[j]))
      throw std::invalid_argument("oracle output states require permutations");

  auto grams_for = [&](auto&& oracle) {
    const int d = static_cast<int>(oracle(s[0]).rows());
    std::vector<Eigen::VectorXcd> states(s.size());
    for (int j = 0; j < s.size(); ++j) {
      const Eigen::MatrixXcd v = to_complex(oracle(s[j]));
      // (V tensor I)|Phi> with |Phi> the maximally entangled pair of
      // d-dimensional registers has amplitudes V(a, i) / sqrt(d) at (a, i).
      Eigen::VectorXcd w(d * d);
      const double norm = 1.0 / std::sqrt(static_cast<double>(d));
      for (int a = 0; a < d; ++a)
        for (int i = 0; i < d; ++i) w(a * d + i) = norm * v(a, i);
      states[j] = std::move(w);
    }
    Eigen::MatrixXcd g(s.size(), s.size());
    for (int jp = 0; jp < s.size(); ++jp)
      for (int j = 0; j < s.size(); ++j) g(jp, j) = states[jp].dot(states[j]);
    return g;
  };

  return {grams_for([](const FunctionTable& f) { return standard_oracle_matrix(f); }),
          grams_for([](const FunctionTable& f) { return entanglement_assisted_minimal(f); })};
}

}  // namespace oraclegram
