#include "qgv/embedding.hpp"

#include <cmath>

namespace qgv {

std::vector<Vector> hom_from_unit(const Representation& rho, Tolerance tol) {
  const FiniteHopfStarAlgebra& h = *rho.algebra;
  const Index n = h.dim;
  const Index d = rho.carrier_dim;
  Matrix sys(n * d, d);
  for (Index i = 0; i < n; ++i)
    sys.middleRows(i * d, d) =
        rho.matrices[i] - h.counit(i) * Matrix::Identity(d, d);
  return nullspace(sys, tol);
}

QModuleHoms q_module_homs(const MonoidObject& monoid, const Representation& x,
                          Tolerance tol) {
  const FiniteHopfStarAlgebra& h = *monoid.object.algebra;
  const Index n = h.dim;
  const Index dx = x.carrier_dim;
  Representation qx = tensor_rep(monoid.object, x);
  const Index dqx = qx.carrier_dim;

  // Morphisms s : Q -> Q (x) X satisfying both the intertwiner constraint
  // and the module constraint s o mul = (mul (x) id_X) o (id_Q (x) s).
  // Unknown s is dqx x n, vectorized column-major.
  Matrix id_n = Matrix::Identity(n, n);
  Matrix id_qx = Matrix::Identity(dqx, dqx);
  Matrix mul_x = kron(monoid.mul, Matrix::Identity(dx, dx));  // Q Q X -> Q X
  Matrix sys(n * n * dqx + n * n * dqx, n * dqx);
  for (Index i = 0; i < n; ++i)
    sys.middleRows(i * n * dqx, n * dqx) =
        kron(h.lmul[i].transpose(), id_qx) - kron(id_n, qx.matrices[i]);
  {
    // vec(s o mul) = (mul^T (x) I) vec(s).
    Matrix lhs = kron(monoid.mul.transpose(), id_qx);
    // Column q1*n+q2 of (mul (x) id_X)(id_Q (x) s) is
    // mul_x * (e_{q1} (x) s e_{q2}), linear in the entries of s.
    Matrix rhs = Matrix::Zero(n * n * dqx, n * dqx);
    for (Index q1 = 0; q1 < n; ++q1)
      for (Index src = 0; src < dqx; ++src) {
        Vector image = mul_x * Vector(Vector::Unit(n * dqx, q1 * dqx + src));
        for (Index q2 = 0; q2 < n; ++q2) {
          Index col = q1 * n + q2;
          for (Index r = 0; r < image.size(); ++r)
            rhs(col * dqx + r, q2 * dqx + src) += image(r);
        }
      }
    sys.middleRows(n * n * dqx, n * n * dqx) = lhs - rhs;
  }
  QModuleHoms out;
  std::vector<Vector> basis_vecs = nullspace(sys, tol);
  for (const Vector& v : basis_vecs)
    out.basis.push_back(Eigen::Map<const Matrix>(v.data(), dqx, n));

  std::vector<Vector> unit_homs = hom_from_unit(qx, tol);
  Matrix carrier(dqx, static_cast<Index>(unit_homs.size()));
  for (Index b = 0; b < carrier.cols(); ++b) carrier.col(b) = unit_homs[b];

  const Index dm = static_cast<Index>(out.basis.size());
  const Index de = carrier.cols();
  out.to_vectors = Matrix::Zero(de, dm);
  for (Index a = 0; a < dm; ++a) {
    Vector v = out.basis[a] * monoid.unit;
    out.to_vectors.col(a) = carrier.adjoint() * v;
  }
  out.from_vectors = Matrix::Zero(dm, de);
  for (Index b = 0; b < de; ++b) {
    Matrix phi = carrier.col(b);
    Matrix s = mul_x * kron(id_n, phi);  // Q -> Q (x) X
    // Coordinates in the orthonormal (entrywise) module-hom basis.
    Eigen::Map<const Vector> sv(s.data(), s.size());
    for (Index a = 0; a < dm; ++a) {
      Eigen::Map<const Vector> bv(out.basis[a].data(), out.basis[a].size());
      out.from_vectors(a, b) = bv.dot(sv);
    }
  }
  if (dm == de && dm > 0) {
    double r1 = max_abs(Matrix(out.to_vectors * out.from_vectors -
                               Matrix::Identity(de, de)));
    double r2 = max_abs(Matrix(out.from_vectors * out.to_vectors -
                               Matrix::Identity(dm, dm)));
    out.roundtrip_residual = std::max(r1, r2);
  } else {
    out.roundtrip_residual = 1.0;
  }
  return out;
}

EmbeddingFunctor::EmbeddingFunctor(const MonoidObject& monoid, Tolerance tol)
    : monoid_(monoid), tol_(tol) {
  std::vector<Vector> unit_homs = hom_from_unit(monoid_.object, tol_);
  if (unit_homs.size() != 1)
    throw compute_error("embedding functor requires a one-dimensional "
                        "unit-hom space; found dimension " +
                        std::to_string(unit_homs.size()));
  leaves_.push_back(unit_rep(*monoid_.object.algebra));
}

int EmbeddingFunctor::add_object(const Representation& x) {
  if (x.algebra != monoid_.object.algebra)
    throw input_error("embedding functor: object over a different algebra");
  leaves_.push_back(x);
  return static_cast<int>(leaves_.size()) - 1;
}

EmbeddingFunctor::ObjKey EmbeddingFunctor::concat(const ObjKey& a,
                                                  const ObjKey& b) {
  ObjKey out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

const Representation& EmbeddingFunctor::object(const ObjKey& key) {
  if (key.empty()) throw input_error("embedding functor: empty object key");
  auto it = objects_.find(key);
  if (it != objects_.end()) return it->second;
  for (int leaf : key)
    if (leaf < 0 || leaf >= leaf_count())
      throw input_error("embedding functor: object not registered");
  Representation rep = leaves_[static_cast<std::size_t>(key[0])];
  for (std::size_t i = 1; i < key.size(); ++i)
    rep = tensor_rep(rep, leaves_[static_cast<std::size_t>(key[i])]);
  return objects_.emplace(key, std::move(rep)).first->second;
}

const Matrix& EmbeddingFunctor::carrier(const ObjKey& key) {
  auto it = carriers_.find(key);
  if (it != carriers_.end()) return it->second;
  Representation qx = tensor_rep(monoid_.object, object(key));
  std::vector<Vector> basis = hom_from_unit(qx, tol_);
  Matrix c(qx.carrier_dim, static_cast<Index>(basis.size()));
  for (Index b = 0; b < c.cols(); ++b) c.col(b) = basis[b];
  return carriers_.emplace(key, std::move(c)).first->second;
}

const Matrix& EmbeddingFunctor::gram(const ObjKey& key) {
  auto it = grams_.find(key);
  if (it != grams_.end()) return it->second;
  const Matrix& c = carrier(key);
  Matrix big = kron(monoid_.object.gram, object(key).gram);
  Matrix g = c.adjoint() * big * c;
  return grams_.emplace(key, std::move(g)).first->second;
}

const Matrix& EmbeddingFunctor::tensorator(const ObjKey& x, const ObjKey& y) {
  auto it = tensorators_.find({x, y});
  if (it != tensorators_.end()) return it->second;
  const Matrix& ex = carrier(x);
  const Matrix& ey = carrier(y);
  ObjKey xy = concat(x, y);
  const Matrix& exy = carrier(xy);
  const Index dx = object(x).carrier_dim;
  const Index dy = object(y).carrier_dim;
  const Index n = monoid_.object.carrier_dim;
  Matrix id_y = Matrix::Identity(dy, dy);
  Matrix mul_xy = kron(monoid_.mul, Matrix::Identity(dx * dy, dx * dy));
  Matrix d(exy.cols(), ex.cols() * ey.cols());
  double residual = 0.0;
  for (Index a = 0; a < ex.cols(); ++a) {
    Matrix phi = ex.col(a);  // (n*dx) x 1
    Matrix middle = kron(Matrix::Identity(n, n), kron(phi, id_y));
    for (Index b = 0; b < ey.cols(); ++b) {
      Vector v = mul_xy * (middle * ey.col(b));
      Vector coords = exy.adjoint() * v;
      residual = std::max(residual, max_abs(Vector(v - exy * coords)));
      d.col(a * ey.cols() + b) = coords;
    }
  }
  if (residual > 1e3 * tol_.eps)
    throw compute_error("tensorator image escapes the unit-hom carrier "
                        "(residual " + std::to_string(residual) + ")");
  return tensorators_.emplace(std::make_pair(x, y), std::move(d)).first->second;
}

Matrix EmbeddingFunctor::on_morphism(const ObjKey& x, const ObjKey& y,
                                     const Matrix& s) {
  const Matrix& ex = carrier(x);
  const Matrix& ey = carrier(y);
  const Index n = monoid_.object.carrier_dim;
  Matrix lifted = kron(Matrix::Identity(n, n), s);
  Matrix image = lifted * ex;
  Matrix coords = ey.adjoint() * image;
  double residual = max_abs(Matrix(image - ey * coords));
  if (residual > 1e3 * tol_.eps)
    throw compute_error("functor image of a morphism escapes the carrier "
                        "(residual " + std::to_string(residual) + ")");
  return coords;
}

Matrix EmbeddingFunctor::unit_iso() {
  ObjKey unit_key{0};
  const Matrix& eu = carrier(unit_key);
  Vector eta = monoid_.unit;  // carrier of Q (x) unit is just the carrier of Q
  Matrix coords = eu.adjoint() * eta;
  return coords;
}

EmbeddingFunctor embedding_functor(const MonoidObject& monoid,
                                   const std::vector<Representation>& objects,
                                   Tolerance tol) {
  EmbeddingFunctor f(monoid, tol);
  for (const Representation& x : objects) f.add_object(x);
  return f;
}

Report verify_embedding_suite(EmbeddingFunctor& functor, const HaarData& haar,
                              const BlockStructure& blocks,
                              const std::vector<int>& leaf_ids, Tolerance tol) {
  Report rep;
  const MonoidObject& monoid = functor.monoid();
  const FiniteHopfStarAlgebra& h = *monoid.object.algebra;

  rep.add_exact("embed-unit-hom-dim", "p-embed.hyp1", true);  // ctor enforced

  double r_qmod = 0.0;
  bool qmod_dims = true;
  for (int x : leaf_ids) {
    QModuleHoms qm = q_module_homs(monoid, functor.object({x}), tol);
    if (static_cast<Index>(qm.basis.size()) != functor.dim({x}))
      qmod_dims = false;
    r_qmod = std::max(r_qmod, qm.roundtrip_residual);
  }
  rep.add_exact("embed-module-hom-dims", "p-embed.hyp2", qmod_dims);
  rep.add("embed-module-identification", "p-embed.delta", r_qmod, tol.eps);

  bool dims_mult = true;
  double r_inv = 0.0, r_unitary = 0.0;
  for (int x : leaf_ids)
    for (int y : leaf_ids) {
      EmbeddingFunctor::ObjKey kx{x}, ky{y};
      auto kxy = EmbeddingFunctor::concat(kx, ky);
      if (functor.dim(kxy) != functor.dim(kx) * functor.dim(ky))
        dims_mult = false;
      const Matrix& d = functor.tensorator(kx, ky);
      Eigen::FullPivLU<Matrix> lu(d);
      if (!lu.isInvertible()) {
        r_inv = 1.0;
        continue;
      }
      Matrix gd = kron(functor.gram(kx), functor.gram(ky));
      Matrix gc = functor.gram(kxy);
      r_unitary = std::max(
          r_unitary, max_abs(Matrix(adjoint_wrt(d, gd, gc) * d -
                                    Matrix::Identity(d.cols(), d.cols()))));
    }
  rep.add_exact("embed-dim-multiplicative", "p-embed", dims_mult);
  rep.add("tensorator-invertible", "p-embed", r_inv, tol.eps);
  rep.add("tensorator-unitary", "p-embed*", r_unitary, tol.eps);

  double r_coh = 0.0;
  for (int x : leaf_ids)
    for (int y : leaf_ids)
      for (int z : leaf_ids) {
        EmbeddingFunctor::ObjKey kx{x}, ky{y}, kz{z};
        auto kxy = EmbeddingFunctor::concat(kx, ky);
        auto kyz = EmbeddingFunctor::concat(ky, kz);
        Matrix lhs = functor.tensorator(kxy, kz) *
                     kron(functor.tensorator(kx, ky),
                          Matrix::Identity(functor.dim(kz), functor.dim(kz)));
        Matrix rhs = functor.tensorator(kx, kyz) *
                     kron(Matrix::Identity(functor.dim(kx), functor.dim(kx)),
                          functor.tensorator(ky, kz));
        r_coh = std::max(r_coh, max_abs(Matrix(lhs - rhs)));
      }
  rep.add("tensorator-coherence", "p-embed.coherence", r_coh, tol.eps);

  // Unit axioms, checked directly at the carrier level.
  double r_unit = 0.0;
  {
    const Index n = monoid.object.carrier_dim;
    Matrix e = functor.unit_iso();
    for (int x : leaf_ids) {
      EmbeddingFunctor::ObjKey kx{x};
      const Matrix& ex = functor.carrier(kx);
      const Index dx = functor.object(kx).carrier_dim;
      Matrix mul_x = kron(monoid.mul, Matrix::Identity(dx, dx));
      for (Index a = 0; a < ex.cols(); ++a) {
        Vector phi = ex.col(a);
        // d_{X,1}(phi (x) e(1)) under the identification X (x) 1 = X.
        Vector right = mul_x * kron(Matrix::Identity(n, n), Matrix(phi)) *
                       monoid.unit;
        r_unit = std::max(r_unit, max_abs(Vector(right - phi)));
        // d_{1,X}(e(1) (x) phi) under the identification 1 (x) X = X.
        Vector left = mul_x *
                      kron(Matrix::Identity(n, n),
                           kron(Matrix(monoid.unit), Matrix::Identity(dx, dx))) *
                      phi;
        r_unit = std::max(r_unit, max_abs(Vector(left - phi)));
      }
    }
  }
  rep.add("embed-unit-axioms", "p-embed.unit", r_unit, tol.eps);

  // Morphisms for naturality, *-preservation and faithfulness: decomposition
  // isometries of the pair products.
  double r_nat = 0.0, r_star = 0.0;
  bool faithful = true;
  for (int x : leaf_ids)
    for (int y : leaf_ids) {
      EmbeddingFunctor::ObjKey kx{x}, ky{y};
      auto kxy = EmbeddingFunctor::concat(kx, ky);
      const Representation& prod = functor.object(kxy);
      Decomposition dec = decompose(prod, haar, blocks, tol);
      std::vector<Matrix> stacked;
      for (std::size_t b = 0; b < dec.isometries.size(); ++b) {
        Representation pb =
            block_irrep(h, haar, blocks, static_cast<Index>(b));
        int leaf_b = -1;
        for (int l : leaf_ids)
          if (functor.object({l}).carrier_dim == pb.carrier_dim &&
              hom_space(functor.object({l}), pb, tol).size() == 1)
            leaf_b = l;
        if (leaf_b < 0) continue;
        EmbeddingFunctor::ObjKey kb{leaf_b};
        for (const Matrix& w : dec.isometries[b]) {
          // Naturality of the tensorator in the first slot.
          for (int zz : {leaf_ids.front(), leaf_ids.back()}) {
            EmbeddingFunctor::ObjKey kzz{zz};
            auto kbz = EmbeddingFunctor::concat(kb, kzz);
            auto kxyz = EmbeddingFunctor::concat(kxy, kzz);
            Index dz = functor.object(kzz).carrier_dim;
            Matrix w_idz = kron(w, Matrix::Identity(dz, dz));
            Matrix lhs = functor.on_morphism(kbz, kxyz, w_idz) *
                         functor.tensorator(kb, kzz);
            Matrix rhs = functor.tensorator(kxy, kzz) *
                         kron(functor.on_morphism(kb, kxy, w),
                              Matrix::Identity(functor.dim(kzz),
                                               functor.dim(kzz)));
            r_nat = std::max(r_nat, max_abs(Matrix(lhs - rhs)));
            // Second slot.
            auto kzb = EmbeddingFunctor::concat(kzz, kb);
            auto kzxy = EmbeddingFunctor::concat(kzz, kxy);
            Matrix idz_w = kron(Matrix::Identity(dz, dz), w);
            Matrix lhs2 = functor.on_morphism(kzb, kzxy, idz_w) *
                          functor.tensorator(kzz, kb);
            Matrix rhs2 = functor.tensorator(kzz, kxy) *
                          kron(Matrix::Identity(functor.dim(kzz),
                                                functor.dim(kzz)),
                               functor.on_morphism(kb, kxy, w));
            r_nat = std::max(r_nat, max_abs(Matrix(lhs2 - rhs2)));
          }
          // *-preservation: E(w*) = E(w)* in the stored inner products.
          Matrix w_star = adjoint_wrt(w, functor.object(kb).gram, prod.gram);
          Matrix ew = functor.on_morphism(kb, kxy, w);
          Matrix ew_star = functor.on_morphism(kxy, kb, w_star);
          Matrix ew_adj = adjoint_wrt(ew, functor.gram(kb), functor.gram(kxy));
          r_star = std::max(r_star, max_abs(Matrix(ew_star - ew_adj)));
        }
      }
      // Faithfulness: the functor has full rank on each intertwiner space.
      std::vector<Matrix> homs = hom_space(prod, prod, tol);
      Matrix images(functor.dim(kxy) * functor.dim(kxy),
                    static_cast<Index>(homs.size()));
      for (std::size_t m = 0; m < homs.size(); ++m) {
        Matrix em = functor.on_morphism(kxy, kxy, homs[m]);
        images.col(static_cast<Index>(m)) =
            Eigen::Map<const Vector>(em.data(), em.size());
      }
      if (rank(images, tol) != static_cast<Index>(homs.size()))
        faithful = false;
    }
  rep.add("embed-naturality", "p-embed.natural", r_nat, tol.eps);
  rep.add("embed-star-preserving", "p-embed*", r_star, tol.eps);
  rep.add_exact("embed-faithful", "p-faithful", faithful);
  return rep;
}

}  // namespace qgv
