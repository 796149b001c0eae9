#include "qgv/repcat.hpp"

#include <cmath>

namespace qgv {

Matrix Representation::act(const Vector& a) const {
  Matrix out = Matrix::Zero(carrier_dim, carrier_dim);
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != 0.0) out += a(i) * matrices[i];
  return out;
}

double representation_residual(const Representation& pi) {
  const FiniteHopfStarAlgebra& h = *pi.algebra;
  const Index n = h.dim;
  double res = max_abs(
      Matrix(pi.act(h.unit) - Matrix::Identity(pi.carrier_dim, pi.carrier_dim)));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Matrix lhs = pi.matrices[i] * pi.matrices[j];
      res = std::max(res, max_abs(Matrix(lhs - pi.act(h.lmul[i].col(j)))));
    }
  for (Index i = 0; i < n; ++i) {
    Matrix star_action = pi.act(h.star.col(i));
    Matrix adj = adjoint_wrt(pi.matrices[i], pi.gram, pi.gram);
    res = std::max(res, max_abs(Matrix(adj - star_action)));
  }
  return res;
}

Representation regular_rep(const FiniteHopfStarAlgebra& h, const HaarData& haar) {
  Representation pi;
  pi.algebra = &h;
  pi.carrier_dim = h.dim;
  pi.matrices = h.lmul;
  pi.gram = haar.gram;
  return pi;
}

Representation unit_rep(const FiniteHopfStarAlgebra& h) {
  Representation pi;
  pi.algebra = &h;
  pi.carrier_dim = 1;
  for (Index i = 0; i < h.dim; ++i)
    pi.matrices.push_back(Matrix::Constant(1, 1, h.counit(i)));
  pi.gram = Matrix::Identity(1, 1);
  return pi;
}

Representation block_irrep(const FiniteHopfStarAlgebra& h, const HaarData& haar,
                           const BlockStructure& blocks, Index block) {
  if (block < 0 || block >= static_cast<Index>(blocks.blocks.size()))
    throw input_error("block index out of range");
  const Matrix& w = blocks.blocks[block].carrier;
  Representation pi;
  pi.algebra = &h;
  pi.carrier_dim = w.cols();
  for (Index i = 0; i < h.dim; ++i)
    pi.matrices.push_back(w.adjoint() * haar.gram * (h.lmul[i] * w));
  pi.gram = Matrix::Identity(w.cols(), w.cols());
  return pi;
}

Representation tensor_rep(const Representation& a, const Representation& b) {
  if (a.algebra != b.algebra)
    throw input_error("tensor product of representations of different algebras");
  const FiniteHopfStarAlgebra& h = *a.algebra;
  const Index n = h.dim;
  Representation pi;
  pi.algebra = a.algebra;
  pi.carrier_dim = a.carrier_dim * b.carrier_dim;
  pi.matrices.reserve(n);
  for (Index i = 0; i < n; ++i) {
    Matrix m = Matrix::Zero(pi.carrier_dim, pi.carrier_dim);
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        Complex d = h.comult(j * n + k, i);
        if (d != 0.0) m += d * kron(a.matrices[j], b.matrices[k]);
      }
    pi.matrices.push_back(std::move(m));
  }
  pi.gram = kron(a.gram, b.gram);
  return pi;
}

Representation direct_sum_rep(const Representation& a, const Representation& b) {
  if (a.algebra != b.algebra)
    throw input_error("direct sum of representations of different algebras");
  Representation pi;
  pi.algebra = a.algebra;
  pi.carrier_dim = a.carrier_dim + b.carrier_dim;
  for (std::size_t i = 0; i < a.matrices.size(); ++i) {
    Matrix m = Matrix::Zero(pi.carrier_dim, pi.carrier_dim);
    m.topLeftCorner(a.carrier_dim, a.carrier_dim) = a.matrices[i];
    m.bottomRightCorner(b.carrier_dim, b.carrier_dim) = b.matrices[i];
    pi.matrices.push_back(std::move(m));
  }
  pi.gram = Matrix::Zero(pi.carrier_dim, pi.carrier_dim);
  pi.gram.topLeftCorner(a.carrier_dim, a.carrier_dim) = a.gram;
  pi.gram.bottomRightCorner(b.carrier_dim, b.carrier_dim) = b.gram;
  return pi;
}

std::vector<Matrix> hom_space(const Representation& source,
                              const Representation& target, Tolerance tol) {
  if (source.algebra != target.algebra)
    throw input_error("hom space of representations of different algebras");
  const Index n = source.algebra->dim;
  const Index ds = source.carrier_dim, dt = target.carrier_dim;
  // Column-major vectorization: vec(T pi(a)) = (pi(a)^T (x) I) vec(T).
  Matrix sys(n * ds * dt, ds * dt);
  Matrix id_t = Matrix::Identity(dt, dt);
  Matrix id_s = Matrix::Identity(ds, ds);
  for (Index i = 0; i < n; ++i)
    sys.middleRows(i * ds * dt, ds * dt) =
        kron(source.matrices[i].transpose(), id_t) -
        kron(id_s, target.matrices[i]);
  std::vector<Vector> basis = nullspace(sys, tol);
  std::vector<Matrix> out;
  out.reserve(basis.size());
  for (const Vector& v : basis)
    out.push_back(Eigen::Map<const Matrix>(v.data(), dt, ds));
  return out;
}

double intertwiner_residual(const Representation& source,
                            const Representation& target, const Matrix& t) {
  double res = 0.0;
  for (std::size_t i = 0; i < source.matrices.size(); ++i)
    res = std::max(res, max_abs(Matrix(t * source.matrices[i] -
                                       target.matrices[i] * t)));
  return res;
}

std::vector<Matrix> isotypic_isometries(const Representation& irrep,
                                        const Representation& pi,
                                        Tolerance tol) {
  std::vector<Matrix> raw = hom_space(irrep, pi, tol);
  // Schur: w' = adjoint_wrt(w, gram_irrep, gram_pi) composed with another
  // intertwiner is a scalar multiple of the identity.  Gram-Schmidt in that
  // scalar inner product makes the family isometric with orthogonal ranges.
  std::vector<Matrix> out;
  const double d = static_cast<double>(irrep.carrier_dim);
  for (Matrix t : raw) {
    for (const Matrix& w : out) {
      Matrix overlap = adjoint_wrt(w, irrep.gram, pi.gram) * t;
      t -= (overlap.trace() / d) * w;
    }
    Matrix norm2 = adjoint_wrt(t, irrep.gram, pi.gram) * t;
    double nrm = std::sqrt(std::abs(norm2.trace()) / d);
    if (nrm <= tol.eps) continue;
    out.push_back(t / nrm);
  }
  return out;
}

Decomposition decompose(const Representation& pi, const HaarData& haar,
                        const BlockStructure& blocks, Tolerance tol) {
  const FiniteHopfStarAlgebra& h = *pi.algebra;
  Decomposition dec;
  Matrix completeness = Matrix::Zero(pi.carrier_dim, pi.carrier_dim);
  Index total = 0;
  for (std::size_t b = 0; b < blocks.blocks.size(); ++b) {
    const Block& blk = blocks.blocks[b];
    Index r = rank(pi.act(blk.central_projection), tol);
    if (r % blk.block_dim != 0)
      throw compute_error("decompose: rank " + std::to_string(r) +
                          " not divisible by block dimension " +
                          std::to_string(blk.block_dim));
    Index mult = r / blk.block_dim;

    Representation p = block_irrep(h, haar, blocks, static_cast<Index>(b));
    std::vector<Matrix> ws = isotypic_isometries(p, pi, tol);
    if (static_cast<Index>(ws.size()) != mult)
      throw compute_error(
          "decompose: rank formula gives multiplicity " + std::to_string(mult) +
          " but the intertwiner space has dimension " +
          std::to_string(ws.size()));
    for (const Matrix& w : ws)
      completeness += w * adjoint_wrt(w, p.gram, pi.gram);
    dec.multiplicities.push_back(mult);
    dec.isometries.push_back(std::move(ws));
    total += mult * blk.block_dim;
  }
  if (total != pi.carrier_dim)
    throw compute_error("decompose: multiplicities do not exhaust the carrier");
  double res = max_abs(Matrix(
      completeness - Matrix::Identity(pi.carrier_dim, pi.carrier_dim)));
  if (res > 1e3 * tol.eps)
    throw compute_error("decompose: isometries do not resolve the identity");
  return dec;
}

Representation conjugate_rep(const Representation& pi, Tolerance tol) {
  const FiniteHopfStarAlgebra& h = *pi.algebra;
  const Index n = h.dim;
  double kac = max_abs(Matrix(h.antipode * h.antipode - Matrix::Identity(n, n)));
  if (kac > tol.eps)
    throw compute_error("conjugate_rep requires an involutive coinverse "
                        "(residual " + std::to_string(kac) + ")");
  // Orthonormalize the carrier first so transposition is basis-legitimate.
  Eigen::LLT<Matrix> llt(pi.gram);
  if (llt.info() != Eigen::Success)
    throw compute_error("conjugate_rep: carrier Gram not positive definite");
  Matrix l = llt.matrixL();
  Matrix lh = l.adjoint();
  Representation out;
  out.algebra = pi.algebra;
  out.carrier_dim = pi.carrier_dim;
  out.matrices.reserve(n);
  for (Index i = 0; i < n; ++i) {
    Matrix ortho = lh * pi.act(h.antipode.col(i)) *
                   lh.triangularView<Eigen::Upper>().solve(
                       Matrix::Identity(pi.carrier_dim, pi.carrier_dim));
    out.matrices.push_back(ortho.transpose());
  }
  out.gram = Matrix::Identity(pi.carrier_dim, pi.carrier_dim);
  return out;
}

}  // namespace qgv
