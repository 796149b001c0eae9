#include "qgv/tannaka.hpp"

#include <cmath>

namespace qgv {

Matrix natural_unitary(const MonoidObject& monoid, EmbeddingFunctor& functor,
                       const HaarData& haar,
                       const EmbeddingFunctor::ObjKey& key) {
  const FiniteHopfStarAlgebra& h = *monoid.object.algebra;
  const Representation& x = functor.object(key);
  AbsorbingIso iso = absorbing_iso(h, x);
  const Index dx = x.carrier_dim;
  // phi -> right-iso(integral (x) phi), expressed in the embedded basis.
  Matrix embed = iso.right * kron(Matrix(haar.integral), Matrix::Identity(dx, dx));
  const Matrix& carrier = functor.carrier(key);
  Matrix coords = carrier.adjoint() * embed;
  double residual = max_abs(Matrix(embed - carrier * coords));
  if (residual > 1e3 * functor.tolerance().eps)
    throw compute_error("natural unitary escapes the embedded carrier "
                        "(residual " + std::to_string(residual) + ")");
  return coords;
}

Report verify_natural_unitaries(const MonoidObject& monoid,
                                EmbeddingFunctor& functor, const HaarData& haar,
                                const BlockStructure& blocks,
                                const std::vector<int>& leaf_ids, Tolerance tol) {
  const FiniteHopfStarAlgebra& h = *monoid.object.algebra;
  Report rep;
  double r_unitary = 0.0, r_natural = 0.0, r_monoidal = 0.0;

  std::map<EmbeddingFunctor::ObjKey, Matrix> us;
  auto u_of = [&](const EmbeddingFunctor::ObjKey& key) -> const Matrix& {
    auto it = us.find(key);
    if (it != us.end()) return it->second;
    return us.emplace(key, natural_unitary(monoid, functor, haar, key))
        .first->second;
  };

  for (int x : leaf_ids) {
    EmbeddingFunctor::ObjKey kx{x};
    const Matrix& u = u_of(kx);
    r_unitary = std::max(
        r_unitary,
        max_abs(Matrix(adjoint_wrt(u, functor.object(kx).gram,
                                   functor.gram(kx)) * u -
                       Matrix::Identity(u.cols(), u.cols()))));
  }
  for (int x : leaf_ids)
    for (int y : leaf_ids) {
      EmbeddingFunctor::ObjKey kx{x}, ky{y};
      auto kxy = EmbeddingFunctor::concat(kx, ky);
      // Monoidality: tensorator o (u (x) u) = u on the product.
      Matrix lhs = functor.tensorator(kx, ky) * kron(u_of(kx), u_of(ky));
      r_monoidal = std::max(r_monoidal, max_abs(Matrix(lhs - u_of(kxy))));
      // Naturality along the decomposition isometries of the product.
      const Representation& prod = functor.object(kxy);
      Decomposition dec = decompose(prod, haar, blocks, tol);
      for (std::size_t b = 0; b < dec.isometries.size(); ++b) {
        int leaf_b = -1;
        for (int l : leaf_ids) {
          Representation pb = block_irrep(h, haar, blocks, static_cast<Index>(b));
          if (functor.object({l}).carrier_dim == pb.carrier_dim &&
              hom_space(functor.object({l}), pb, tol).size() == 1) {
            leaf_b = l;
            break;
          }
        }
        if (leaf_b < 0) continue;
        EmbeddingFunctor::ObjKey kb{leaf_b};
        for (const Matrix& w : dec.isometries[b]) {
          Matrix lhs_n = u_of(kxy) * w;
          Matrix rhs_n = functor.on_morphism(kb, kxy, w) * u_of(kb);
          r_natural = std::max(r_natural, max_abs(Matrix(lhs_n - rhs_n)));
        }
      }
    }
  rep.add("natural-unitary-unitary", "l-circ", r_unitary, tol.eps);
  rep.add("natural-unitary-natural", "l-circ", r_natural, tol.eps);
  rep.add("natural-unitary-monoidal", "l-circ", r_monoidal, tol.eps);
  return rep;
}

namespace {

struct BlockLayout {
  std::vector<Index> dims;
  std::vector<Index> offsets;
  Index total = 0;

  explicit BlockLayout(const std::vector<Index>& d) : dims(d) {
    for (Index x : d) {
      offsets.push_back(total);
      total += x * x;
    }
  }
  Index idx(std::size_t block, Index r, Index s) const {
    return offsets[block] + r * dims[block] + s;
  }
};

}  // namespace

ReconstructedHopf reconstruct(EmbeddingFunctor& functor, const HaarData& haar,
                              const BlockStructure& blocks,
                              const std::vector<int>& irrep_leaves,
                              Tolerance tol) {
  const MonoidObject& monoid = functor.monoid();
  const FiniteHopfStarAlgebra& h = *monoid.object.algebra;
  const std::size_t nb = irrep_leaves.size();
  if (nb != blocks.blocks.size())
    throw input_error("reconstruct: need one irreducible leaf per block");

  std::vector<Index> dims;
  for (int l : irrep_leaves) dims.push_back(functor.dim({l}));
  BlockLayout lay(dims);

  // Completeness of the irreducible list against the endomorphisms of the
  // monoid object.
  Index end_q = static_cast<Index>(
      hom_space(monoid.object, monoid.object, tol).size());
  if (lay.total != end_q)
    throw compute_error(
        "reconstruct: embedded dimensions give " + std::to_string(lay.total) +
        " but the monoid object has endomorphism dimension " +
        std::to_string(end_q) + "; irreducible list incomplete");

  ReconstructedHopf rh;
  rh.block_dims = dims;
  FiniteHopfStarAlgebra& a = rh.algebra;
  a.dim = lay.total;
  for (std::size_t b = 0; b < nb; ++b)
    for (Index r = 0; r < dims[b]; ++r)
      for (Index s = 0; s < dims[b]; ++s)
        a.basis_names.push_back("b" + std::to_string(b) + "_" +
                                std::to_string(r) + std::to_string(s));

  // Blockwise matrix-unit multiplication and unit.
  a.lmul.assign(a.dim, Matrix::Zero(a.dim, a.dim));
  a.unit = Vector::Zero(a.dim);
  for (std::size_t b = 0; b < nb; ++b) {
    for (Index r = 0; r < dims[b]; ++r) {
      a.unit(lay.idx(b, r, r)) = 1.0;
      for (Index s = 0; s < dims[b]; ++s)
        for (Index v = 0; v < dims[b]; ++v)
          a.lmul[lay.idx(b, r, s)](lay.idx(b, r, v), lay.idx(b, s, v)) = 1.0;
    }
  }

  // Extensions of a basis endomorphism family to a pair product, through the
  // decomposition isometries, conjugated into the tensor factors.
  a.comult = Matrix::Zero(a.dim * a.dim, a.dim);
  std::map<std::pair<int, int>, std::vector<std::vector<Matrix>>> lifted;
  for (std::size_t pa = 0; pa < nb; ++pa)
    for (std::size_t pb = 0; pb < nb; ++pb) {
      EmbeddingFunctor::ObjKey ka{irrep_leaves[pa]}, kb{irrep_leaves[pb]};
      auto kab = EmbeddingFunctor::concat(ka, kb);
      const Representation& prod = functor.object(kab);
      Decomposition dec = decompose(prod, haar, blocks, tol);
      std::vector<std::vector<Matrix>> ews(nb);
      std::vector<Matrix> recorded;
      for (std::size_t k = 0; k < nb; ++k) {
        for (const Matrix& w : dec.isometries[k]) {
          ews[k].push_back(functor.on_morphism({irrep_leaves[k]}, kab, w));
          recorded.push_back(w);
        }
      }
      rh.transport.emplace(std::make_pair(int(pa), int(pb)), recorded);

      const Matrix& d = functor.tensorator(ka, kb);
      Eigen::FullPivLU<Matrix> lu(d);
      if (!lu.isInvertible())
        throw compute_error("reconstruct: singular tensorator");
      Matrix dinv = lu.inverse();

      for (std::size_t k = 0; k < nb; ++k) {
        if (ews[k].empty()) continue;
        for (Index r = 0; r < dims[k]; ++r)
          for (Index s = 0; s < dims[k]; ++s) {
            Matrix unit_rs = Matrix::Zero(dims[k], dims[k]);
            unit_rs(r, s) = 1.0;
            Matrix ext = Matrix::Zero(functor.dim(kab), functor.dim(kab));
            for (const Matrix& ew : ews[k]) {
              Matrix ew_adj =
                  adjoint_wrt(ew, functor.gram({irrep_leaves[k]}),
                              functor.gram(kab));
              ext += ew * unit_rs * ew_adj;
            }
            Matrix t = dinv * ext * d;  // acts on E(a) (x) E(b)
            Index col = lay.idx(k, r, s);
            for (Index ra = 0; ra < dims[pa]; ++ra)
              for (Index sa = 0; sa < dims[pa]; ++sa)
                for (Index rb = 0; rb < dims[pb]; ++rb)
                  for (Index sb = 0; sb < dims[pb]; ++sb) {
                    Complex cjk = t(ra * dims[pb] + rb, sa * dims[pb] + sb);
                    if (cjk == 0.0) continue;
                    Index row = lay.idx(pa, ra, sa) * a.dim + lay.idx(pb, rb, sb);
                    a.comult(row, col) += cjk;
                  }
          }
      }
    }

  // Counit: the scalar by which the extension acts on the embedded unit.
  a.counit = RowVector::Zero(a.dim);
  {
    EmbeddingFunctor::ObjKey unit_key{0};
    const Representation& one = functor.object(unit_key);
    Decomposition dec = decompose(one, haar, blocks, tol);
    Matrix e = functor.unit_iso();
    if (e.rows() != 1 || std::abs(e(0, 0)) <= tol.eps)
      throw compute_error("reconstruct: unit isomorphism is degenerate");
    for (std::size_t k = 0; k < nb; ++k) {
      for (const Matrix& w : dec.isometries[k]) {
        Matrix ew = functor.on_morphism({irrep_leaves[k]}, unit_key, w);
        Matrix ew_adj = adjoint_wrt(ew, functor.gram({irrep_leaves[k]}),
                                    functor.gram(unit_key));
        for (Index r = 0; r < dims[k]; ++r)
          for (Index s = 0; s < dims[k]; ++s) {
            Matrix unit_rs = Matrix::Zero(dims[k], dims[k]);
            unit_rs(r, s) = 1.0;
            // Conjugating the 1x1 action by the unit isomorphism is a
            // cancellation; the scalar itself is the counit value.
            Matrix act = ew * unit_rs * ew_adj;
            a.counit(lay.idx(k, r, s)) += act(0, 0);
          }
      }
    }
  }

  // Coinverse and star transported along the canonical identification.
  Matrix m = canonical_map(h, monoid, functor, rh, haar, irrep_leaves);
  Eigen::FullPivLU<Matrix> lu(m);
  if (!lu.isInvertible())
    throw compute_error("reconstruct: canonical map is singular");
  Matrix minv = lu.inverse();
  a.antipode = m * h.antipode * minv;
  a.star = m * h.star * minv.conjugate();
  return rh;
}

Matrix canonical_map(const FiniteHopfStarAlgebra& h, const MonoidObject& monoid,
                     EmbeddingFunctor& functor, const ReconstructedHopf& rh,
                     const HaarData& haar,
                     const std::vector<int>& irrep_leaves) {
  BlockLayout lay(rh.block_dims);
  Matrix m = Matrix::Zero(lay.total, h.dim);
  for (std::size_t b = 0; b < irrep_leaves.size(); ++b) {
    EmbeddingFunctor::ObjKey kb{irrep_leaves[b]};
    Matrix u = natural_unitary(monoid, functor, haar, kb);
    Eigen::FullPivLU<Matrix> lu(u);
    if (!lu.isInvertible())
      throw compute_error("canonical map: natural unitary is singular");
    Matrix uinv = lu.inverse();
    const Representation& pb = functor.object(kb);
    for (Index j = 0; j < h.dim; ++j) {
      Matrix img = u * pb.matrices[j] * uinv;
      for (Index r = 0; r < rh.block_dims[b]; ++r)
        for (Index s = 0; s < rh.block_dims[b]; ++s)
          m(lay.idx(b, r, s), j) = img(r, s);
    }
  }
  return m;
}

Report verify_roundtrip(const FiniteHopfStarAlgebra& h,
                        const MonoidObject& monoid, EmbeddingFunctor& functor,
                        const ReconstructedHopf& rh, const HaarData& haar,
                        const std::vector<int>& irrep_leaves, Tolerance tol) {
  Report rep;
  const FiniteHopfStarAlgebra& a = rh.algebra;
  Matrix m = canonical_map(h, monoid, functor, rh, haar, irrep_leaves);

  rep.add_exact("roundtrip-dim", "c-equiv.2", a.dim == h.dim);
  rep.add_exact("roundtrip-bijective", "c-equiv.2",
                a.dim == h.dim && rank(m, tol) == h.dim);

  double r_mult = max_abs(Vector(m * h.unit - a.unit));
  for (Index i = 0; i < h.dim; ++i)
    for (Index j = 0; j < h.dim; ++j) {
      Vector lhs = m * h.lmul[i].col(j);
      Vector rhs = a.mul(Vector(m.col(i)), Vector(m.col(j)));
      r_mult = std::max(r_mult, max_abs(Vector(lhs - rhs)));
    }
  rep.add("roundtrip-multiplicative", "c-equiv.2", r_mult, tol.eps);

  rep.add("roundtrip-star", "c-equiv.2",
          max_abs(Matrix(m * h.star - a.star * m.conjugate())), tol.eps);

  Matrix mm = kron(m, m);
  rep.add("roundtrip-coproduct", "c-equiv.2",
          max_abs(Matrix(a.comult * m - mm * h.comult)), tol.eps);

  rep.add("roundtrip-counit", "c-equiv.2",
          max_abs(Matrix(a.counit * m - h.counit)), tol.eps);
  return rep;
}

}  // namespace qgv
