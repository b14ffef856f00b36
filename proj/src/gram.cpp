#include "oraclegram/gram.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

namespace oraclegram {

CoincidenceMatrix coincidence_matrix(const FunctionSet& s) {
  const int k = s.size();
  const int m = s.domain_size();
  MatrixXz entries = MatrixXz::Zero(k, k);
  for (int jp = 0; jp < k; ++jp) {
    for (int j = jp; j < k; ++j) {
      int count = 0;
      for (int x = 0; x < m; ++x)
        if (s[jp](x) == s[j](x)) ++count;
      entries(jp, j) = count;
      entries(j, jp) = count;
    }
  }
  return CoincidenceMatrix{k, m, std::move(entries)};
}

MatrixXz per_point_matrix(const FunctionSet& s, int x) {
  if (x < 0 || x >= s.domain_size())
    throw std::invalid_argument("input " + std::to_string(x) + " is outside [0, " +
                                std::to_string(s.domain_size()) + ")");
  const int k = s.size();
  MatrixXz entries = MatrixXz::Zero(k, k);
  for (int jp = 0; jp < k; ++jp)
    for (int j = 0; j < k; ++j)
      entries(jp, j) = (s[jp](x) == s[j](x)) ? 1 : 0;
  return entries;
}

DistinguishabilityVerdict is_unambiguously_distinguishable(const FunctionSet& s) {
  mpz_class det = exact_determinant(coincidence_matrix(s).entries);
  return DistinguishabilityVerdict{det > 0, std::move(det)};
}

bool dimension_bound_check(const mpz_class& k, const mpz_class& d_q) {
  if (k < 1 || d_q < 1)
    throw std::invalid_argument("dimension_bound_check requires positive arguments");
  return k <= d_q;
}

bool all_functions_verdict(int m, int n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("domain and range sizes must be positive");
  if (m == 1 || n == 1) return true;
  // The n^m standard oracles commute, so distinguishability needs
  // K = n^m <= m*n, i.e. n^{m-1} <= m. Among m, n >= 2 only (2,2) passes
  // that filter; settle it by the exact determinant of the full set.
  if (mpz_class(m) < pow_z(n, static_cast<unsigned long>(m - 1))) return false;
  FunctionSet full(enumerate_all_functions(m, n));
  return is_unambiguously_distinguishable(full).distinguishable;
}

FunctionSet grover_set(int m) {
  if (m < 1) throw std::invalid_argument("marking-set size must be positive");
  std::vector<FunctionTable> members;
  members.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    std::vector<int> values(static_cast<std::size_t>(m), 0);
    values[static_cast<std::size_t>(j)] = 1;
    members.emplace_back(m, 2, std::move(values));
  }
  return FunctionSet(std::move(members));
}

SpectrumReport grover_gamma_closed_form(int m) {
  if (m < 2) throw std::invalid_argument("closed form requires m >= 2");
  SpectrumReport report;
  const mpz_class second = mpz_class(m - 1) * (m - 1) + 1;
  report.eigenvalues.push_back({mpq_class(2), m - 1});
  report.eigenvalues.push_back({mpq_class(second), 1});
  report.determinant = pow_z(2, static_cast<unsigned long>(m - 1)) * second;
  return report;
}

double grover_phase_gram_det(int m, double theta) {
  if (m < 2) throw std::invalid_argument("closed form requires m >= 2");
  if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double head = std::pow(2.0, m - 1) * std::pow(1.0 - c, m - 1);
  const double tail = (m - 1 + c) * (m - 1 + c) + s * s;
  return head * tail;
}

SpectrumReport gamma_spectrum(const CoincidenceMatrix& gamma) {
  SpectrumReport report;
  report.determinant = exact_determinant(gamma.entries);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_double(gamma.entries));
  const Eigen::VectorXd values = solver.eigenvalues();

  std::vector<mpz_class> poly;
  if (gamma.k <= 6) poly = characteristic_polynomial(gamma.entries);

  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  Eigen::Index i = 0;
  while (i < values.size()) {
    Eigen::Index j = i;
    while (j + 1 < values.size() && values(j + 1) - values(i) <= 1e-6 * scale) ++j;
    const int multiplicity = static_cast<int>(j - i + 1);
    const double representative = values.segment(i, j - i + 1).mean();
    const double rounded = std::round(representative);
    bool exact = false;
    if (!poly.empty() && std::abs(representative - rounded) <= 1e-6 * scale) {
      mpz_class z(static_cast<long>(rounded));
      mpz_class acc = 0;
      for (std::size_t d = poly.size(); d-- > 0;) acc = acc * z + poly[d];
      exact = (acc == 0);
      if (exact) report.eigenvalues.push_back({mpq_class(z), multiplicity});
    }
    if (!exact) report.eigenvalues.push_back({representative, multiplicity});
    i = j + 1;
  }
  return report;
}

AnalysisRecord analyze(const FunctionSet& s) {
  AnalysisRecord record;
  record.k = s.size();
  record.m = s.domain_size();
  record.n = s.range_size();
  CoincidenceMatrix gamma = coincidence_matrix(s);
  record.determinant = exact_determinant(gamma.entries);
  record.distinguishable = record.determinant > 0;
  record.gamma = std::move(gamma.entries);
  record.classical_witness = is_classically_distinguishable(s);
  record.totally_indistinguishable = is_totally_indistinguishable(s);
  return record;
}

}  // namespace oraclegram
