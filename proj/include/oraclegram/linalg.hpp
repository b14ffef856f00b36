#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

// Exact integer and rational scalars inside Eigen dense types. GMP's class
// wrappers keep constructor overload resolution narrow, which is what lets
// Eigen's scalar-promotion probes resolve cleanly.
namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 100,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace oraclegram {

using MatrixXz = Eigen::Matrix<mpz_class, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXz = Eigen::Matrix<mpz_class, Eigen::Dynamic, 1>;
using MatrixXq = Eigen::Matrix<mpq_class, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr double kUnitaryTolerance = 1e-12;
inline constexpr double kRankRelativeTolerance = 1e-9;

template <typename Scalar>
Scalar abs_value(const Scalar& v) {
  return v < Scalar(0) ? Scalar(-v) : Scalar(v);
}

/// a^e for exact integers, e >= 0.
inline mpz_class pow_z(const mpz_class& a, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

/// Exact determinant by fraction-free (Bareiss) elimination. Every
/// intermediate entry is a minor of the input, so divisions are exact; with
/// an arbitrary-precision scalar there is no rounding anywhere.
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols())
    throw std::invalid_argument("exact_determinant: matrix must be square");
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = m;
  Scalar prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Eigen::Index pivot = -1;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (a(i, k) != Scalar(0)) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return Scalar(0);
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }
  Scalar det = a(n - 1, n - 1);
  return sign < 0 ? Scalar(-det) : det;
}

/// Exact rank by fraction-free row echelon with column pivoting. Same
/// minor-valued intermediates as exact_determinant, so results match exact
/// elimination over the rationals. Works for rectangular inputs.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = m;
  Scalar prev(1);
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = rank; i < rows; ++i) {
      if (a(i, c) != Scalar(0)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) a.row(pivot).swap(a.row(rank));
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        a(i, j) = (a(i, j) * a(rank, c) - a(i, c) * a(rank, j)) / prev;
      }
      a(i, c) = Scalar(0);
    }
    prev = a(rank, c);
    ++rank;
  }
  return rank;
}

/// Kronecker product under the row-major convention:
/// out((i*p + k), (j*q + l)) = a(i,j) * b(k,l) for b of shape p x q.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Coefficients c[0..n] of det(lambda*I - A) = sum_i c[i] * lambda^i, exact.
/// Faddeev-LeVerrier recursion; all divisions land on integers.
std::vector<mpz_class> characteristic_polynomial(const MatrixXz& a);

Eigen::MatrixXcd to_complex(const MatrixXz& a);
Eigen::MatrixXd to_double(const MatrixXz& a);
MatrixXz to_exact(const Eigen::MatrixXi& a);

bool approx_equal(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol);
bool is_unitary(const Eigen::MatrixXcd& u, double tol = kUnitaryTolerance);

/// Numeric rank: singular values above rel_tol times the largest one.
Eigen::Index svd_rank(const Eigen::MatrixXcd& a,
                      double rel_tol = kRankRelativeTolerance);

}  // namespace oraclegram
