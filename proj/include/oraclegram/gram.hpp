#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "oraclegram/functions.hpp"
#include "oraclegram/linalg.hpp"

namespace oraclegram {

/// K x K matrix of coincidence counts: entry (j', j) is the number of inputs
/// where f_{j'} and f_j agree. Symmetric, positive semi-definite, diagonal m.
struct CoincidenceMatrix {
  int k = 0;
  int domain_size = 0;
  MatrixXz entries;

  friend bool operator==(const CoincidenceMatrix& a, const CoincidenceMatrix& b) {
    return a.k == b.k && a.domain_size == b.domain_size &&
           a.entries.rows() == b.entries.rows() &&
           a.entries.cols() == b.entries.cols() &&
           (a.entries.array() == b.entries.array()).all();
  }
};

CoincidenceMatrix coincidence_matrix(const FunctionSet& s);

/// 0/1 indicator matrix of agreement at a single input x; the coincidence
/// matrix is the sum of these over all x.
MatrixXz per_point_matrix(const FunctionSet& s, int x);

struct DistinguishabilityVerdict {
  bool distinguishable = false;
  mpz_class determinant;

  friend bool operator==(const DistinguishabilityVerdict&,
                         const DistinguishabilityVerdict&) = default;
};

/// det(Gamma) > 0 decides unambiguous distinguishability of the oracle
/// operator families (standard always, minimal/entanglement-assisted for
/// permutation sets). Exact integers end to end.
DistinguishabilityVerdict is_unambiguously_distinguishable(const FunctionSet& s);

/// Necessary cardinality condition k <= d_q for commuting-operator families.
bool dimension_bound_check(const mpz_class& k, const mpz_class& d_q);

/// Whether the full set of all n^m functions is unambiguously
/// distinguishable: true only in the trivial single-input or single-value
/// cases.
bool all_functions_verdict(int m, int n);

/// The m marking functions f_j(x) = 1 iff x == j, range {0,1}.
FunctionSet grover_set(int m);

struct SpectrumReport {
  struct Line {
    std::variant<mpq_class, double> value;
    int multiplicity = 0;

    friend bool operator==(const Line&, const Line&) = default;
  };
  std::vector<Line> eigenvalues;
  mpz_class determinant;

  friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

/// Closed-form spectrum of the marking-set coincidence matrix: eigenvalue 2
/// with multiplicity m-1 and (m-1)^2+1 once; determinant
/// 2^{m-1}((m-1)^2+1). Cross-checked against the exact determinant.
SpectrumReport grover_gamma_closed_form(int m);

/// Closed-form Gram determinant of the phase-marking oracles G_j(theta):
/// 2^{m-1}(1-cos theta)^{m-1}((m-1+cos theta)^2 + sin^2 theta).
double grover_phase_gram_det(int m, double theta);

/// Spectrum of an integer coincidence matrix. Integer eigenvalues are
/// certified exactly through the characteristic polynomial when k <= 6;
/// others are reported as floats. Only the determinant is decision-grade.
SpectrumReport gamma_spectrum(const CoincidenceMatrix& gamma);

struct AnalysisRecord {
  int k = 0;
  int m = 0;
  int n = 0;
  MatrixXz gamma;
  mpz_class determinant;
  bool distinguishable = false;
  std::optional<int> classical_witness;
  bool totally_indistinguishable = false;

  friend bool operator==(const AnalysisRecord& a, const AnalysisRecord& b) {
    return a.k == b.k && a.m == b.m && a.n == b.n &&
           a.gamma.rows() == b.gamma.rows() && a.gamma.cols() == b.gamma.cols() &&
           (a.gamma.array() == b.gamma.array()).all() &&
           a.determinant == b.determinant && a.distinguishable == b.distinguishable &&
           a.classical_witness == b.classical_witness &&
           a.totally_indistinguishable == b.totally_indistinguishable;
  }
};

AnalysisRecord analyze(const FunctionSet& s);

}  // namespace oraclegram
