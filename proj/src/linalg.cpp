#include "nnsdist/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace nnsdist::linalg {

namespace {

using EComplex = Eigen::Matrix<complex, Eigen::Dynamic, Eigen::Dynamic>;
using EReal = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic>;

EComplex to_eigen(const ComplexMatrix& a) {
  EComplex m(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
  return m;
}

EReal to_eigen(const RealMatrix& a) {
  EReal m(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
  return m;
}

template <class Derived>
ComplexMatrix from_eigen(const Eigen::MatrixBase<Derived>& m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return out;
}

std::size_t count_above(const Eigen::VectorXd& sv, double rel_tol) {
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cutoff = rel_tol * sv(0);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++k;
  return k;
}

}  // namespace

std::vector<double> singular_values(const ComplexMatrix& a) {
  if (a.empty()) return {};
  Eigen::JacobiSVD<EComplex> svd(to_eigen(a));
  const auto& sv = svd.singularValues();
  return {sv.data(), sv.data() + sv.size()};
}

std::size_t numerical_rank(const ComplexMatrix& a, double rel_tol) {
  if (a.empty()) return 0;
  Eigen::JacobiSVD<EComplex> svd(to_eigen(a));
  return count_above(svd.singularValues(), rel_tol);
}

double spectral_norm(const ComplexMatrix& a) {
  const auto sv = singular_values(a);
  return sv.empty() ? 0.0 : sv.front();
}

RankFactorization rank_factorize(const ComplexMatrix& a, double rel_tol) {
  Eigen::JacobiSVD<EComplex> svd(to_eigen(a), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const auto k = static_cast<Eigen::Index>(count_above(sv, rel_tol));
  const Eigen::VectorXd root = sv.head(k).cwiseSqrt();
  const EComplex left = svd.matrixU().leftCols(k) * root.asDiagonal();
  const EComplex right = root.asDiagonal() * svd.matrixV().leftCols(k).adjoint();
  return {from_eigen(left), from_eigen(right), static_cast<std::size_t>(k)};
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) throw ShapeMismatch("hermitian_eigenvalues: matrix not square");
  Eigen::SelfAdjointEigenSolver<EComplex> eig(to_eigen(h), Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h, double clamp_tol) {
  if (h.rows() != h.cols()) throw ShapeMismatch("psd_sqrt: matrix not square");
  Eigen::SelfAdjointEigenSolver<EComplex> eig(to_eigen(h));
  Eigen::VectorXd ev = eig.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -clamp_tol) {
      throw InvalidArgument("psd_sqrt: eigenvalue " + std::to_string(ev(i)) +
                            " is below -" + std::to_string(clamp_tol));
    }
    ev(i) = std::sqrt(std::max(ev(i), 0.0));
  }
  const EComplex root = eig.eigenvectors() * ev.asDiagonal() * eig.eigenvectors().adjoint();
  return from_eigen(root);
}

RealMatrix real_null_space(const RealMatrix& a, double rel_tol) {
  const EReal m = to_eigen(a);
  Eigen::JacobiSVD<EReal> svd(m, Eigen::ComputeFullV);
  const auto rank = static_cast<Eigen::Index>(count_above(svd.singularValues(), rel_tol));
  const Eigen::Index dim = m.cols() - rank;
  RealMatrix out(a.cols(), static_cast<std::size_t>(dim));
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < m.cols(); ++i)
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = svd.matrixV()(i, rank + j);
  return out;
}

}  // namespace nnsdist::linalg
