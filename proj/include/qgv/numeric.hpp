// Dense complex linear algebra primitives shared by every qgv module.
//
// All computations run in double precision with a single relative tolerance.
// Rank and nullspace decisions are made by singular-value thresholding, and
// every basis returned here is deterministic for identical input bits: no
// randomized pivoting, and nullspace vectors carry a canonical phase.

#ifndef QGV_NUMERIC_HPP
#define QGV_NUMERIC_HPP

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgv {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RowVector = Eigen::RowVectorXcd;
using Index = Eigen::Index;

/// Malformed user input: files, tables, flags, unregistered objects.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A computation that cannot proceed: singular data, violated precondition.
struct compute_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Relative tolerance governing all residual checks and rank cutoffs.
struct Tolerance {
  double eps = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double e) : eps(e) {
    if (!(e > 0.0)) throw input_error("tolerance must be positive");
  }
};

/// Kronecker product with row-major index convention:
/// kron(A,B)(i*rowsB + k, j*colsB + l) = A(i,j) * B(k,l).
template <typename DerivedA, typename DerivedB>
Matrix kron(const Eigen::MatrixBase<DerivedA>& a,
            const Eigen::MatrixBase<DerivedB>& b) {
  return Eigen::kroneckerProduct(a.derived(), b.derived());
}

/// Largest absolute entry; 0 for an empty matrix.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

/// Number of singular values above eps * (largest singular value).
/// An absolute cutoff applies when the largest singular value is <= eps.
Index rank(const Matrix& m, Tolerance tol);

/// Orthonormal basis of {v : M v = 0}, one column vector per basis element.
/// Each vector's largest-magnitude entry is rotated to the positive real
/// axis so the basis is reproducible bit-for-bit.
std::vector<Vector> nullspace(const Matrix& m, Tolerance tol);

/// Adjoint of T : (dom, gramDom) -> (cod, gramCod) with respect to the
/// sesquilinear forms (x,y) = y^H G x, i.e. the unique T* with
/// (T u, v)_cod = (u, T* v)_dom.  Equals gramDom^{-1} T^H gramCod.
/// Throws compute_error if either Gram matrix is not positive definite.
Matrix adjoint_wrt(const Matrix& t, const Matrix& gram_dom,
                   const Matrix& gram_cod);

/// Smallest eigenvalue of a Hermitian matrix (by symmetrized part).
double min_hermitian_eigenvalue(const Matrix& g);

/// True when G is Hermitian positive definite within tol.
bool is_hermitian_pd(const Matrix& g, Tolerance tol);

}  // namespace qgv

#endif
