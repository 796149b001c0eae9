#include "qgv/numeric.hpp"

namespace qgv {

namespace {

// Rotates the first entry of (near-)largest magnitude onto the positive
// real axis.  The slack makes the pivot stable against SVD rounding when
// several entries tie.  Keeps orthonormality intact.
void canonicalize_phase(Vector& v) {
  double best = 0.0;
  for (Index i = 0; i < v.size(); ++i) best = std::max(best, std::abs(v(i)));
  if (best == 0.0) return;
  for (Index i = 0; i < v.size(); ++i) {
    double a = std::abs(v(i));
    if (a >= best * (1.0 - 1e-9)) {
      v *= std::conj(v(i)) / a;
      return;
    }
  }
}

}  // namespace

Index rank(const Matrix& m, Tolerance tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  double cutoff = sv(0) <= tol.eps ? tol.eps : tol.eps * sv(0);
  Index r = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++r;
  return r;
}

std::vector<Vector> nullspace(const Matrix& m, Tolerance tol) {
  if (m.cols() == 0) return {};
  if (m.rows() == 0) {
    // No constraints: the whole space, in coordinate order.
    std::vector<Vector> basis;
    for (Index j = 0; j < m.cols(); ++j)
      basis.push_back(Vector::Unit(m.cols(), j));
    return basis;
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  double cutoff = smax <= tol.eps ? tol.eps : tol.eps * smax;
  Index r = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++r;
  std::vector<Vector> basis;
  basis.reserve(m.cols() - r);
  for (Index j = r; j < m.cols(); ++j) {
    Vector v = svd.matrixV().col(j);
    canonicalize_phase(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix adjoint_wrt(const Matrix& t, const Matrix& gram_dom,
                   const Matrix& gram_cod) {
  Eigen::LLT<Matrix> llt(gram_dom);
  if (llt.info() != Eigen::Success)
    throw compute_error("adjoint_wrt: domain Gram matrix is not positive definite");
  Eigen::LLT<Matrix> llt_cod(gram_cod);
  if (llt_cod.info() != Eigen::Success)
    throw compute_error("adjoint_wrt: codomain Gram matrix is not positive definite");
  return llt.solve(t.adjoint() * gram_cod);
}

double min_hermitian_eigenvalue(const Matrix& g) {
  if (g.size() == 0) return 0.0;
  Matrix h = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool is_hermitian_pd(const Matrix& g, Tolerance tol) {
  if (g.rows() != g.cols()) return false;
  if (max_abs(Matrix(g - g.adjoint())) > tol.eps * std::max(1.0, max_abs(g)))
    return false;
  return min_hermitian_eigenvalue(g) > tol.eps * std::max(1.0, max_abs(g));
}

}  // namespace qgv
