#include "nnsdist/simplex.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "nnsdist/kernels.hpp"

namespace nnsdist {

namespace {

// Columns of [S A D | I | -I] stored contiguously, S flipping rows so b >= 0
// and D scaling each structural column to unit max-norm (x = D x', which
// leaves x >= 0 and the duals unchanged). Structurals first, then the +e_i
// and -e_i artificials.
class Problem {
 public:
  Problem(const RealMatrix& a, std::span<const double> b)
      : m_(a.rows()),
        n_(a.cols()),
        columns_((n_ + 2 * m_) * m_, 0.0),
        rhs_(m_),
        signs_(m_),
        col_scale_(n_, 1.0),
        col_norm1_(n_ + 2 * m_, 1.0) {
    for (std::size_t j = 0; j < n_; ++j) {
      double largest = 0.0;
      for (std::size_t i = 0; i < m_; ++i) largest = std::max(largest, std::abs(a(i, j)));
      if (largest > 0.0) col_scale_[j] = 1.0 / largest;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      signs_[i] = b[i] < 0.0 ? -1.0 : 1.0;
      rhs_(static_cast<Eigen::Index>(i)) = signs_[i] * b[i];
      for (std::size_t j = 0; j < n_; ++j) {
        columns_[j * m_ + i] = signs_[i] * a(i, j) * col_scale_[j];
      }
      columns_[(n_ + i) * m_ + i] = 1.0;
      columns_[(n_ + m_ + i) * m_ + i] = -1.0;
    }
    for (std::size_t j = 0; j < n_; ++j) {
      double sum = 0.0;
      for (double v : column(j)) sum += std::abs(v);
      col_norm1_[j] = sum;
    }
  }

  std::size_t rows() const { return m_; }
  std::size_t structurals() const { return n_; }
  std::size_t columns() const { return n_ + 2 * m_; }
  std::size_t pos_artificial(std::size_t i) const { return n_ + i; }
  double cost(std::size_t j) const { return j < n_ ? 0.0 : 1.0; }
  double sign(std::size_t i) const { return signs_[i]; }
  double col_scale(std::size_t j) const { return col_scale_[j]; }
  double col_norm1(std::size_t j) const { return col_norm1_[j]; }
  const Eigen::VectorXd& rhs() const { return rhs_; }

  std::span<const double> column(std::size_t j) const { return {columns_.data() + j * m_, m_}; }

  Eigen::Map<const Eigen::VectorXd> column_vector(std::size_t j) const {
    return {columns_.data() + j * m_, static_cast<Eigen::Index>(m_)};
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<double> columns_;
  Eigen::VectorXd rhs_;
  std::vector<double> signs_;
  std::vector<double> col_scale_;
  std::vector<double> col_norm1_;
};

}  // namespace

PhaseOneSolution solve_phase_one(const RealMatrix& a, std::span<const double> b,
                                 const SimplexOptions& options) {
  if (b.size() != a.rows()) throw ShapeMismatch("solve_phase_one: rhs length differs");
  const Problem p(a, b);
  const std::size_t m = p.rows();
  const auto mi = static_cast<Eigen::Index>(m);

  std::vector<std::size_t> basis(m);
  std::vector<char> in_basis(p.columns(), 0);
  for (std::size_t i = 0; i < m; ++i) {
    basis[i] = p.pos_artificial(i);
    in_basis[basis[i]] = 1;
  }

  PhaseOneSolution sol;
  Eigen::MatrixXd bmat(mi, mi);
  Eigen::VectorXd x_b(mi);
  Eigen::VectorXd u(mi);
  std::vector<double> u_std(m);

  // Every iteration refactors the basis from the original columns, so no
  // rounding error carries over between pivots.
  while (true) {
    for (std::size_t i = 0; i < m; ++i) bmat.col(static_cast<Eigen::Index>(i)) = p.column_vector(basis[i]);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(bmat);
    x_b = lu.solve(p.rhs());
    for (Eigen::Index i = 0; i < mi; ++i) x_b(i) = std::max(x_b(i), 0.0);

    Eigen::VectorXd c_b(mi);
    for (std::size_t i = 0; i < m; ++i) c_b(static_cast<Eigen::Index>(i)) = p.cost(basis[i]);
    u = lu.transpose().solve(c_b);
    for (std::size_t i = 0; i < m; ++i) u_std[i] = u(static_cast<Eigen::Index>(i));

    // Bland: lowest-index column with negative reduced cost. The cutoff
    // scales with |u| |a_j|, the size of the rounding in u^T a_j.
    const double u_max = u.cwiseAbs().maxCoeff();
    std::size_t entering = p.columns();
    for (std::size_t j = 0; j < p.columns(); ++j) {
      if (in_basis[j]) continue;
      const double cutoff = options.cost_tol * (1.0 + u_max * p.col_norm1(j));
      if (p.cost(j) - kernels::dot(u_std, p.column(j)) < -cutoff) {
        entering = j;
        break;
      }
    }
    if (entering == p.columns()) break;
    if (sol.iterations >= options.max_iterations) {
      sol.iteration_limit = true;
      break;
    }

    const Eigen::VectorXd w = lu.solve(p.column_vector(entering));
    const double threshold = options.pivot_tol * std::max(1.0, w.cwiseAbs().maxCoeff());
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < mi; ++i) {
      if (w(i) > threshold) best = std::min(best, x_b(i) / w(i));
    }
    // The phase-one objective is bounded below, so a column with negative
    // reduced cost always has a positive entry; if rounding says otherwise,
    // stop at the current basis.
    if (!std::isfinite(best)) break;

    std::size_t leaving = m;
    const double tie = options.pivot_tol * (1.0 + std::abs(best));
    for (std::size_t i = 0; i < m; ++i) {
      const double wi = w(static_cast<Eigen::Index>(i));
      if (wi <= threshold) continue;
      if (x_b(static_cast<Eigen::Index>(i)) / wi <= best + tie &&
          (leaving == m || basis[i] < basis[leaving])) {
        leaving = i;
      }
    }
    in_basis[basis[leaving]] = 0;
    basis[leaving] = entering;
    in_basis[entering] = 1;
    ++sol.iterations;
  }

  sol.x.assign(p.structurals(), 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < p.structurals()) {
      sol.x[basis[i]] = x_b(static_cast<Eigen::Index>(i)) * p.col_scale(basis[i]);
    }
  }
  // Reported against the caller's A and b rather than the basis solve.
  const auto ax = multiply(a, std::span<const double>(sol.x));
  double objective = 0.0;
  for (std::size_t i = 0; i < m; ++i) objective += std::abs(b[i] - ax[i]);
  sol.objective = objective;

  sol.duals.resize(m);
  for (std::size_t i = 0; i < m; ++i) sol.duals[i] = p.sign(i) * u_std[i];
  return sol;
}

}  // namespace nnsdist
