#include "oraclegram/linalg.hpp"

#include <Eigen/SVD>

namespace oraclegram {

std::vector<mpz_class> characteristic_polynomial(const MatrixXz& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("characteristic_polynomial: matrix must be square");
  const Eigen::Index n = a.rows();
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[static_cast<std::size_t>(n)] = 1;
  MatrixXz m = MatrixXz::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    MatrixXz am = a * m;
    mpz_class ck = -am.trace() / k;
    coeffs[static_cast<std::size_t>(n - k)] = ck;
    m = am + ck * MatrixXz::Identity(n, n);
  }
  return coeffs;
}

Eigen::MatrixXcd to_complex(const MatrixXz& a) {
  Eigen::MatrixXcd out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out(i, j) = std::complex<double>(a(i, j).get_d(), 0.0);
  return out;
}

Eigen::MatrixXd to_double(const MatrixXz& a) {
  Eigen::MatrixXd out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).get_d();
  return out;
}

MatrixXz to_exact(const Eigen::MatrixXi& a) {
  MatrixXz out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

bool approx_equal(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.size() == 0) return true;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
  if (u.rows() != u.cols()) return false;
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return approx_equal(u.adjoint() * u, id, tol);
}

Eigen::Index svd_rank(const Eigen::MatrixXcd& a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double largest = sv(0);
  if (largest == 0.0) return 0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * largest) ++rank;
  return rank;
}

}  // namespace oraclegram
