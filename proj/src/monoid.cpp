#include "qgv/monoid.hpp"

#include <cmath>

namespace qgv {

namespace {

Matrix coinverse_inverse(const FiniteHopfStarAlgebra& h) {
  Eigen::FullPivLU<Matrix> lu(h.antipode);
  if (!lu.isInvertible())
    throw compute_error("regular monoid: coinverse is singular");
  return lu.inverse();
}

// Closed functional form: mul(a (x) b) = (phi (x) id)[((S^{-1} (x) id)
// coprod(b)) (a (x) 1)], evaluated on all basis pairs.
Matrix mul_from_functional(const FiniteHopfStarAlgebra& h, const HaarData& haar,
                           const Matrix& antipode_inv) {
  const Index n = h.dim;
  // scal(j,p) = phi(S^{-1}(e_j) e_p)
  Matrix scal(n, n);
  for (Index j = 0; j < n; ++j) {
    Vector sj = antipode_inv.col(j);
    for (Index p = 0; p < n; ++p)
      scal(j, p) = haar.values.cwiseProduct(h.mul(sj, Vector(Vector::Unit(n, p)))).sum();
  }
  Matrix out = Matrix::Zero(n, n * n);
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q)
      for (Index k = 0; k < n; ++k) {
        Complex acc = 0.0;
        for (Index j = 0; j < n; ++j) acc += h.comult(j * n + k, q) * scal(j, p);
        out(k, p * n + q) = acc;
      }
  return out;
}

// Mirror closed form: mul(a (x) b) = (id (x) phi)[(1 (x) S^{-1}(b)) coprod(a)].
Matrix mul_from_functional_mirror(const FiniteHopfStarAlgebra& h,
                                  const HaarData& haar,
                                  const Matrix& antipode_inv) {
  const Index n = h.dim;
  Matrix scal(n, n);  // scal(q,k) = phi(S^{-1}(e_q) e_k)
  for (Index q = 0; q < n; ++q) {
    Vector sq = antipode_inv.col(q);
    for (Index k = 0; k < n; ++k)
      scal(q, k) = haar.values.cwiseProduct(h.mul(sq, Vector(Vector::Unit(n, k)))).sum();
  }
  Matrix out = Matrix::Zero(n, n * n);
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q)
      for (Index j = 0; j < n; ++j) {
        Complex acc = 0.0;
        for (Index k = 0; k < n; ++k) acc += h.comult(j * n + k, p) * scal(q, k);
        out(j, p * n + q) = acc;
      }
  return out;
}

}  // namespace

Matrix regular_mul_functional(const FiniteHopfStarAlgebra& h,
                              const HaarData& haar) {
  return mul_from_functional(h, haar, coinverse_inverse(h));
}

Matrix regular_mul_functional_mirror(const FiniteHopfStarAlgebra& h,
                                     const HaarData& haar) {
  return mul_from_functional_mirror(h, haar, coinverse_inverse(h));
}

MonoidObject regular_monoid(const FiniteHopfStarAlgebra& h, const HaarData& haar,
                            const FourierData& fd, Tolerance tol) {
  const Index n = h.dim;
  MonoidObject m;
  m.object = regular_rep(h, haar);

  // Transform route: pull the dual multiplication back along the transform.
  Matrix dual_mult = h.comult.transpose();
  m.mul = fd.inverse * dual_mult * kron(fd.transform, fd.transform);

  Matrix functional_route = mul_from_functional(h, haar, coinverse_inverse(h));
  double agree = max_abs(Matrix(m.mul - functional_route));
  if (agree > 1e3 * tol.eps)
    throw compute_error(
        "regular_monoid: the two constructions of the multiplication "
        "disagree (residual " + std::to_string(agree) + ")");

  m.unit = fd.inverse * h.counit.transpose();
  double unit_res =
      max_abs(Matrix(m.mul * kron(m.unit, Matrix::Identity(n, n)) -
                     Matrix::Identity(n, n)));
  unit_res = std::max(
      unit_res, max_abs(Matrix(m.mul * kron(Matrix::Identity(n, n), m.unit) -
                               Matrix::Identity(n, n))));
  if (unit_res > 1e3 * tol.eps)
    throw compute_error("regular_monoid: unit law fails (residual " +
                        std::to_string(unit_res) +
                        "); check the Haar normalization");
  return m;
}

ComonoidObject regular_comonoid(const FiniteHopfStarAlgebra& h,
                                const HaarData& haar) {
  ComonoidObject c;
  c.object = regular_rep(h, haar);
  c.comul = h.comult;
  c.counit = h.counit;
  return c;
}

Report verify_frobenius(const MonoidObject& monoid, const ComonoidObject& comonoid,
                        Tolerance tol) {
  const FiniteHopfStarAlgebra& h = *monoid.object.algebra;
  const Index n = h.dim;
  const Matrix& g = monoid.object.gram;
  Matrix g2 = kron(g, g);
  Matrix id_n = Matrix::Identity(n, n);
  Report rep;

  rep.add("frobenius-mul-adjoint", "p-frob",
          max_abs(Matrix(adjoint_wrt(monoid.mul, g2, g) - comonoid.comul)),
          tol.eps);
  Matrix unit_map = monoid.unit;  // n x 1
  Matrix eps_adj = adjoint_wrt(unit_map, Matrix::Identity(1, 1), g);
  rep.add("frobenius-unit-adjoint", "p-monoid",
          max_abs(Matrix(eps_adj - Matrix(comonoid.counit))), tol.eps);

  Matrix left = kron(id_n, monoid.mul) * kron(comonoid.comul, id_n);
  Matrix mid = comonoid.comul * monoid.mul;
  Matrix right = kron(monoid.mul, id_n) * kron(id_n, comonoid.comul);
  rep.add("frobenius-left", "e-frob", max_abs(Matrix(left - mid)), tol.eps);
  rep.add("frobenius-right", "e-frob", max_abs(Matrix(right - mid)), tol.eps);
  return rep;
}

AbsorbingIso absorbing_iso(const FiniteHopfStarAlgebra& h,
                           const Representation& theta) {
  const Index n = h.dim;
  const Index dk = theta.carrier_dim;
  AbsorbingIso iso;
  iso.left = Matrix::Zero(dk * n, dk * n);
  iso.left_inv = Matrix::Zero(dk * n, dk * n);
  iso.right = Matrix::Zero(n * dk, n * dk);

  Eigen::FullPivLU<Matrix> lu(h.antipode);
  if (!lu.isInvertible())
    throw compute_error("absorbing_iso: coinverse is singular");
  Matrix antipode_inv = lu.inverse();

  // left (v (x) e_q) = sum_jk coprod(q; j,k) theta(e_j) v (x) e_k
  for (Index j = 0; j < n; ++j) {
    Matrix bj = Matrix::Zero(n, n);
    for (Index q = 0; q < n; ++q)
      for (Index k = 0; k < n; ++k) bj(k, q) = h.comult(j * n + k, q);
    if (max_abs(bj) == 0.0) continue;
    iso.left += kron(theta.matrices[j], bj);
    iso.left_inv += kron(theta.act(antipode_inv.col(j)), bj);
  }
  // right (e_q (x) v) = sum_jk coprod(q; j,k) e_j (x) theta(e_k) v
  for (Index k = 0; k < n; ++k) {
    Matrix ck = Matrix::Zero(n, n);
    for (Index q = 0; q < n; ++q)
      for (Index j = 0; j < n; ++j) ck(j, q) = h.comult(j * n + k, q);
    if (max_abs(ck) == 0.0) continue;
    iso.right += kron(ck, theta.matrices[k]);
  }
  return iso;
}

namespace {

Representation trivialized_rep(const FiniteHopfStarAlgebra& h,
                               const Representation& theta) {
  Representation out;
  out.algebra = &h;
  out.carrier_dim = theta.carrier_dim;
  for (Index i = 0; i < h.dim; ++i)
    out.matrices.push_back(h.counit(i) *
                           Matrix::Identity(theta.carrier_dim, theta.carrier_dim));
  out.gram = theta.gram;
  return out;
}

}  // namespace

Report verify_absorbing_suite(const FiniteHopfStarAlgebra& h,
                              const MonoidObject& monoid, const HaarData& haar,
                              const BlockStructure& blocks,
                              const std::vector<Representation>& thetas,
                              const std::vector<MorphismEntry>& morphisms,
                              Tolerance tol) {
  Report rep;
  const Index n = h.dim;
  Representation reg = regular_rep(h, haar);
  Matrix id_n = Matrix::Identity(n, n);

  std::vector<AbsorbingIso> isos;
  isos.reserve(thetas.size());
  for (const Representation& theta : thetas) isos.push_back(absorbing_iso(h, theta));

  double r_intw = 0.0, r_unitary = 0.0, r_inv = 0.0;
  bool mult_ok = true;
  for (std::size_t t = 0; t < thetas.size(); ++t) {
    const Representation& theta = thetas[t];
    Representation triv = trivialized_rep(h, theta);
    Representation triv_reg = tensor_rep(triv, reg);
    Representation theta_reg = tensor_rep(theta, reg);
    Representation reg_triv = tensor_rep(reg, triv);
    Representation reg_theta = tensor_rep(reg, theta);

    r_intw = std::max(r_intw,
                      intertwiner_residual(triv_reg, theta_reg, isos[t].left));
    r_intw = std::max(r_intw,
                      intertwiner_residual(reg_triv, reg_theta, isos[t].right));

    Matrix gl = kron(theta.gram, reg.gram);
    Matrix gr = kron(reg.gram, theta.gram);
    r_unitary = std::max(
        r_unitary, max_abs(Matrix(adjoint_wrt(isos[t].left, gl, gl) * isos[t].left -
                                  Matrix::Identity(gl.rows(), gl.cols()))));
    r_unitary = std::max(
        r_unitary,
        max_abs(Matrix(adjoint_wrt(isos[t].right, gr, gr) * isos[t].right -
                       Matrix::Identity(gr.rows(), gr.cols()))));

    r_inv = std::max(r_inv, max_abs(Matrix(isos[t].left_inv * isos[t].left -
                                           Matrix::Identity(gl.rows(), gl.cols()))));
    r_inv = std::max(
        r_inv, max_abs(Matrix(isos[t].left * isos[t].left_inv -
                              Matrix::Identity(gl.rows(), gl.cols()))));

    // theta (x) regular decomposes as dim(theta) copies of the regular one.
    Decomposition dec = decompose(theta_reg, haar, blocks, tol);
    for (std::size_t b = 0; b < blocks.blocks.size(); ++b)
      if (dec.multiplicities[b] !=
          theta.carrier_dim * blocks.blocks[b].block_dim)
        mult_ok = false;
  }
  rep.add("absorb-intertwiner", "p-abs", r_intw, tol.eps);
  rep.add("absorb-unitary", "p-abs.unitary", r_unitary, tol.eps);
  rep.add("absorb-inverse-formula", "p-abs", r_inv, tol.eps);
  rep.add_exact("absorb-multiplicities", "p-abs", mult_ok);

  double r_nat = 0.0;
  for (const MorphismEntry& s : morphisms) {
    const Matrix& map = s.map;
    Matrix lhs_r = isos[s.target].right * kron(id_n, map);
    Matrix rhs_r = kron(id_n, map) * isos[s.source].right;
    r_nat = std::max(r_nat, max_abs(Matrix(lhs_r - rhs_r)));
    Matrix lhs_l = isos[s.target].left * kron(map, id_n);
    Matrix rhs_l = kron(map, id_n) * isos[s.source].left;
    r_nat = std::max(r_nat, max_abs(Matrix(lhs_l - rhs_l)));
  }
  rep.add("absorb-naturality", "p-functorial", r_nat, tol.eps);

  double r_mod = 0.0;
  for (std::size_t t = 0; t < thetas.size(); ++t) {
    Index dk = thetas[t].carrier_dim;
    Matrix mk = kron(monoid.mul, Matrix::Identity(dk, dk));
    Matrix lhs = mk * kron(id_n, isos[t].right);
    Matrix rhs = isos[t].right * mk;
    r_mod = std::max(r_mod, max_abs(Matrix(lhs - rhs)));
  }
  rep.add("absorb-module-square", "p-Vmod", r_mod, tol.eps);

  // Coproduct-of-products identity on all basis triples:
  // (mul (x) id)(y (x) coprod(x)(1 (x) a)) = coprod(mul(y (x) x))(1 (x) a).
  double r_qf = 0.0;
  for (Index x = 0; x < n; ++x) {
    Vector dx = h.comult.col(x);
    for (Index a = 0; a < n; ++a) {
      Matrix ra = h.right_mul(Vector(Vector::Unit(n, a)));
      Vector w = kron(id_n, ra) * dx;
      for (Index y = 0; y < n; ++y) {
        Vector lhs = kron(monoid.mul, id_n) * kron(Vector(Vector::Unit(n, y)), w);
        Vector rhs = kron(id_n, ra) * h.comult *
                     (monoid.mul * kron(Vector(Vector::Unit(n, y)),
                                        Vector(Vector::Unit(n, x))));
        r_qf = std::max(r_qf, max_abs(Vector(lhs - rhs)));
      }
    }
  }
  rep.add("absorb-coproduct-identity", "e-qf", r_qf, tol.eps);
  return rep;
}

std::vector<Matrix> monoid_intrinsic_group(const FiniteHopfStarAlgebra& h,
                                           const MonoidObject& monoid,
                                           const HaarData& haar, Tolerance tol,
                                           std::uint64_t seed) {
  std::vector<Vector> gl = group_like_unitaries(h, tol, seed);
  Representation reg = regular_rep(h, haar);
  std::vector<Matrix> out;
  out.reserve(gl.size());
  for (const Vector& g : gl) {
    Matrix t = h.right_mul(g);
    double res = intertwiner_residual(reg, reg, t);
    res = std::max(res, max_abs(Matrix(adjoint_wrt(t, reg.gram, reg.gram) * t -
                                       Matrix::Identity(h.dim, h.dim))));
    res = std::max(res, max_abs(Matrix(monoid.mul * kron(t, t) - t * monoid.mul)));
    if (res > 1e3 * tol.eps)
      throw compute_error(
          "a group-like unitary fails the monoid endomorphism conditions "
          "(residual " + std::to_string(res) + ")");
    out.push_back(std::move(t));
  }
  return out;
}

bool check_monoid_commutative(const MonoidObject& monoid, const Matrix& braid,
                              Tolerance tol) {
  Representation qq = tensor_rep(monoid.object, monoid.object);
  double res = intertwiner_residual(qq, qq, braid);
  if (res > tol.eps)
    throw input_error("braid is not an intertwiner of the squared object "
                      "(residual " + std::to_string(res) + ")");
  return max_abs(Matrix(monoid.mul * braid - monoid.mul)) <= tol.eps;
}

}  // namespace qgv
