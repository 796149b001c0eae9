#include "qgv/runners.hpp"

#include <cmath>

namespace qgv {

AlgebraContext::AlgebraContext(FiniteHopfStarAlgebra algebra,
                               const RunOptions& opts)
    : h(std::move(algebra)),
      haar(haar_left(h, opts.tol)),
      blocks(block_decompose(h, haar, opts.tol, opts.seed)),
      fd(fourier(h, haar)),
      regular(regular_rep(h, haar)) {
  for (std::size_t b = 0; b < blocks.blocks.size(); ++b)
    irreps.push_back(block_irrep(h, haar, blocks, static_cast<Index>(b)));
}

namespace {

// Runs a stage that may throw compute_error; a throw becomes a failed check
// so the report stays well-formed and the exit code truthful.
template <typename F>
void stage(Report& rep, const std::string& id, const std::string& anchor,
           F&& body) {
  try {
    body();
  } catch (const compute_error& e) {
    rep.add_exact(id, anchor, false);
  }
}

void haar_checks(Report& rep, const FiniteHopfStarAlgebra& h,
                 const HaarData& haar, Tolerance tol) {
  const Index n = h.dim;
  // Left invariance of the functional on every basis element.
  double r_inv = 0.0;
  for (Index i = 0; i < n; ++i) {
    Vector lhs = Vector::Zero(n);
    for (Index jj = 0; jj < n; ++jj)
      for (Index k = 0; k < n; ++k)
        lhs(jj) += h.comult(jj * n + k, i) * haar.values(k);
    Vector rhs = haar.values(i) * h.unit;
    r_inv = std::max(r_inv, max_abs(Vector(lhs - rhs)));
  }
  rep.add("haar-left-invariance", "haar", r_inv, tol.eps);
  rep.add_exact("haar-gram-positive", "haar", is_hermitian_pd(haar.gram, tol));
  double r_norm = std::abs(haar.values.cwiseProduct(haar.integral).sum() - 1.0);
  rep.add("haar-normalization", "haar.I0", r_norm, tol.eps);

  double r_mod = 0.0;
  for (Index i = 0; i < n; ++i) {
    Vector rho_i = haar.modular_map.col(i);
    for (Index jj = 0; jj < n; ++jj) {
      Complex lhs = haar.values.cwiseProduct(h.lmul[i].col(jj)).sum();
      Complex rhs = haar.values
                        .cwiseProduct(h.mul(Vector(Vector::Unit(n, jj)), rho_i))
                        .sum();
      r_mod = std::max(r_mod, std::abs(lhs - rhs));
    }
  }
  rep.add("haar-modular-property", "intrinsic-group", r_mod, tol.eps);
  rep.add("haar-modular-squared-coinverse", "intrinsic-group",
          max_abs(Matrix(haar.modular_map - h.antipode * h.antipode)), tol.eps);

  // Informational: finite-dimensional examples here are of involutive type.
  rep.add_info("warn-coinverse-involutive", "aqg.standing",
               max_abs(Matrix(h.antipode * h.antipode -
                              Matrix::Identity(n, n))));
  double r_trace = 0.0;
  for (Index i = 0; i < n; ++i)
    for (Index jj = 0; jj < n; ++jj)
      r_trace = std::max(
          r_trace,
          std::abs(haar.values.cwiseProduct(h.lmul[i].col(jj)).sum() -
                   haar.values.cwiseProduct(h.lmul[jj].col(i)).sum()));
  rep.add_info("warn-haar-tracial", "haar", r_trace);
}

void block_checks(Report& rep, const FiniteHopfStarAlgebra& h,
                  const BlockStructure& blocks, Tolerance tol) {
  const Index n = h.dim;
  Index sum = 0;
  double r_idem = 0.0, r_central = 0.0;
  Vector total = Vector::Zero(n);
  for (const Block& b : blocks.blocks) {
    sum += b.block_dim * b.block_dim;
    const Vector& p = b.central_projection;
    total += p;
    r_idem = std::max(r_idem, max_abs(Vector(h.mul(p, p) - p)));
    r_idem = std::max(r_idem, max_abs(Vector(h.star_of(p) - p)));
    r_central = std::max(
        r_central, max_abs(Matrix(h.left_mul(p) - h.right_mul(p))));
  }
  for (std::size_t a = 0; a < blocks.blocks.size(); ++a)
    for (std::size_t c = a + 1; c < blocks.blocks.size(); ++c)
      r_idem = std::max(
          r_idem, max_abs(Vector(h.mul(blocks.blocks[a].central_projection,
                                       blocks.blocks[c].central_projection))));
  rep.add_exact("block-dimension-sum", "p-disc", sum == n);
  rep.add("block-idempotents", "p-disc", r_idem, tol.eps);
  rep.add("block-central", "p-disc", r_central, tol.eps);
  rep.add("block-resolution", "p-disc", max_abs(Vector(total - h.unit)),
          tol.eps);
  const Block& cb = blocks.blocks[blocks.counit_block];
  double r_cb = std::abs(h.counit_of(cb.central_projection) - 1.0);
  for (std::size_t b = 0; b < blocks.blocks.size(); ++b)
    if (static_cast<Index>(b) != blocks.counit_block)
      r_cb = std::max(
          r_cb, std::abs(h.counit_of(blocks.blocks[b].central_projection)));
  rep.add("block-counit", "p-monoid", r_cb, tol.eps);
  rep.add_exact("block-counit-dim", "p-monoid", cb.block_dim == 1);
}

void fourier_checks(Report& rep, const FiniteHopfStarAlgebra& h,
                    const HaarData& haar, const FourierData& fd,
                    Tolerance tol) {
  const Index n = h.dim;
  rep.add("fourier-roundtrip", "fourier",
          max_abs(Matrix(fd.inverse * fd.transform - Matrix::Identity(n, n))),
          tol.eps);
  rep.add("fourier-unit", "p-monoid",
          max_abs(Vector(fd.transform * haar.integral - h.counit.transpose())),
          tol.eps);

  DualAlgebra dl = dual(h);
  double r_pl = 0.0;
  for (Index i = 0; i < n; ++i) {
    Vector fa_star = dl.algebra.star_of(fd.transform.col(i));
    Vector a_star = h.star_of(Vector(Vector::Unit(n, i)));
    for (Index jj = 0; jj < n; ++jj) {
      Vector prod = dl.algebra.mul(fa_star, fd.transform.col(jj));
      Complex lhs = (fd.dual_right_haar * prod)(0);
      Complex rhs = haar.values
                        .cwiseProduct(h.mul(a_star, Vector(Vector::Unit(n, jj))))
                        .sum();
      r_pl = std::max(r_pl, std::abs(lhs - rhs));
    }
  }
  rep.add("plancherel", "plancherel", r_pl, tol.eps);

  // The right invariant functional on the dual is invariant on the other side.
  double r_psi = 0.0;
  for (Index i = 0; i < n; ++i) {
    Vector lhs = Vector::Zero(n);
    for (Index jj = 0; jj < n; ++jj)
      for (Index k = 0; k < n; ++k)
        lhs(k) += dl.algebra.comult(jj * n + k, i) * fd.dual_right_haar(jj);
    Vector rhs = fd.dual_right_haar(i) * dl.algebra.unit;
    r_psi = std::max(r_psi, max_abs(Vector(lhs - rhs)));
  }
  rep.add("dual-right-invariance", "plancherel", r_psi, tol.eps);
}

}  // namespace

Report run_verify(const FiniteHopfStarAlgebra& h, const RunOptions& opts) {
  Report rep = verify_hopf_axioms(h, opts.tol);
  bool axioms_ok = rep.pass();
  rep.add_info("block-decomposition-seed", "artifact",
               static_cast<double>(opts.seed));
  if (!axioms_ok) return rep;

  stage(rep, "derived-data-computed", "artifact", [&] {
    AlgebraContext ctx(h, opts);
    haar_checks(rep, ctx.h, ctx.haar, opts.tol);
    block_checks(rep, ctx.h, ctx.blocks, opts.tol);
    Report dual_rep = verify_hopf_axioms(dual(ctx.h).algebra, opts.tol);
    rep.add("dual-hopf-axioms", "dual", dual_rep.max_residual(),
            dual_rep.pass() ? opts.tol.eps : -1.0);
    fourier_checks(rep, ctx.h, ctx.haar, ctx.fd, opts.tol);

    std::vector<Vector> gl = group_like_unitaries(ctx.h, opts.tol, opts.seed);
    double r_gl = 0.0;
    for (const Vector& g : gl) {
      r_gl = std::max(r_gl, max_abs(Vector(ctx.h.comult * g - kron(g, g))));
      r_gl = std::max(
          r_gl, max_abs(Vector(ctx.h.mul(ctx.h.star_of(g), g) - ctx.h.unit)));
    }
    rep.add("grouplike-defining", "intrinsic-group", r_gl, opts.tol.eps);
    rep.add_info("grouplike-count", "intrinsic-group",
                 static_cast<double>(gl.size()));
  });
  return rep;
}

Report run_monoid(const FiniteHopfStarAlgebra& h, const RunOptions& opts) {
  Report rep = verify_hopf_axioms(h, opts.tol);
  if (!rep.pass()) return rep;

  stage(rep, "monoid-computed", "p-monoid", [&] {
    AlgebraContext ctx(h, opts);
    const Index n = ctx.h.dim;
    MonoidObject monoid = regular_monoid(ctx.h, ctx.haar, ctx.fd, opts.tol);
    ComonoidObject comonoid = regular_comonoid(ctx.h, ctx.haar);
    Matrix id_n = Matrix::Identity(n, n);

    rep.add("monoid-associativity", "p-formon.3",
            max_abs(Matrix(monoid.mul * kron(monoid.mul, id_n) -
                           monoid.mul * kron(id_n, monoid.mul))),
            opts.tol.eps);
    double r_unit = max_abs(
        Matrix(monoid.mul * kron(Matrix(monoid.unit), id_n) - id_n));
    r_unit = std::max(r_unit,
                      max_abs(Matrix(monoid.mul * kron(id_n, Matrix(monoid.unit)) -
                                     id_n)));
    rep.add("monoid-unit-law", "p-monoid", r_unit, opts.tol.eps);
    Representation qq = tensor_rep(ctx.regular, ctx.regular);
    rep.add("monoid-intertwiner", "p-formon.4",
            intertwiner_residual(qq, ctx.regular, monoid.mul), opts.tol.eps);
    rep.add("monoid-unit-integral", "p-monoid",
            max_abs(Vector(monoid.unit - ctx.haar.integral)), opts.tol.eps);

    // Cross-check of the two closed forms of the multiplication.
    Matrix dual_mult = ctx.h.comult.transpose();
    Matrix transform_route =
        ctx.fd.inverse * dual_mult * kron(ctx.fd.transform, ctx.fd.transform);
    rep.add("monoid-transform-route", "p-formon.1",
            max_abs(Matrix(monoid.mul - transform_route)), opts.tol.eps);
    Matrix mirror = regular_mul_functional_mirror(ctx.h, ctx.haar);
    double r_strong =
        max_abs(Matrix(regular_mul_functional(ctx.h, ctx.haar) - mirror));
    r_strong = std::max(r_strong, max_abs(Matrix(monoid.mul - mirror)));
    rep.add("monoid-strong-invariance", "l-strinv", r_strong, opts.tol.eps);

    rep.add("comonoid-coassociativity", "t-compcomon",
            max_abs(Matrix(kron(comonoid.comul, id_n) * comonoid.comul -
                           kron(id_n, comonoid.comul) * comonoid.comul)),
            opts.tol.eps);
    double r_counit = max_abs(
        Matrix(kron(comonoid.counit, id_n) * comonoid.comul - id_n));
    r_counit = std::max(r_counit,
                        max_abs(Matrix(kron(id_n, comonoid.counit) *
                                           comonoid.comul -
                                       id_n)));
    rep.add("comonoid-counit-law", "t-compcomon", r_counit, opts.tol.eps);
    rep.add("comonoid-comul-intertwiner", "t-compcomon",
            intertwiner_residual(ctx.regular, qq, comonoid.comul),
            opts.tol.eps);
    Representation unit_obj = unit_rep(ctx.h);
    rep.add("comonoid-counit-intertwiner", "t-compcomon",
            intertwiner_residual(ctx.regular, unit_obj,
                                 Matrix(comonoid.counit)),
            opts.tol.eps);

    rep.merge(verify_frobenius(monoid, comonoid, opts.tol));

    // Absorbing suite over the block irreducibles, with the decomposition
    // isometries of pair products as the spanning morphisms.
    std::vector<Representation> thetas = ctx.irreps;
    std::vector<MorphismEntry> morphisms;
    std::size_t nb = ctx.irreps.size();
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j) {
        thetas.push_back(tensor_rep(ctx.irreps[i], ctx.irreps[j]));
        Decomposition dec =
            decompose(thetas.back(), ctx.haar, ctx.blocks, opts.tol);
        for (std::size_t b = 0; b < nb; ++b)
          for (const Matrix& w : dec.isometries[b])
            morphisms.push_back(
                {b, nb + i * nb + j, w});
      }
    rep.merge(verify_absorbing_suite(ctx.h, monoid, ctx.haar, ctx.blocks,
                                     thetas, morphisms, opts.tol));

    std::vector<Matrix> ig =
        monoid_intrinsic_group(ctx.h, monoid, ctx.haar, opts.tol, opts.seed);
    rep.add_info("intrinsic-group-order", "intrinsic-group",
                 static_cast<double>(ig.size()));
    bool closed = true;
    double r_ig = 0.0;
    for (const Matrix& t1 : ig)
      for (const Matrix& t2 : ig) {
        Matrix prod = t1 * t2;
        double best = 1e300;
        for (const Matrix& t3 : ig)
          best = std::min(best, max_abs(Matrix(prod - t3)));
        r_ig = std::max(r_ig, best);
        if (best > 1e3 * opts.tol.eps) closed = false;
      }
    rep.add_exact("intrinsic-group-closure", "intrinsic-group", closed);
    double r_mon = 0.0;
    for (const Matrix& t : ig)
      r_mon = std::max(
          r_mon, max_abs(Matrix(monoid.mul * kron(t, t) - t * monoid.mul)));
    rep.add("intrinsic-group-monoid", "intrinsic-group", r_mon, opts.tol.eps);

    rep.add_exact("unit-hom-dimension", "p-monoid",
                  hom_from_unit(ctx.regular, opts.tol).size() == 1);
  });
  return rep;
}

Report run_embed(const FiniteHopfStarAlgebra& h, const RunOptions& opts) {
  Report rep = verify_hopf_axioms(h, opts.tol);
  if (!rep.pass()) return rep;
  stage(rep, "embedding-computed", "p-embed", [&] {
    AlgebraContext ctx(h, opts);
    MonoidObject monoid = regular_monoid(ctx.h, ctx.haar, ctx.fd, opts.tol);
    EmbeddingFunctor functor(monoid, opts.tol);
    std::vector<int> leaves;
    for (const Representation& p : ctx.irreps)
      leaves.push_back(functor.add_object(p));

    bool dims_ok = true;
    for (std::size_t b = 0; b < ctx.irreps.size(); ++b)
      if (functor.dim({leaves[b]}) != ctx.blocks.blocks[b].block_dim)
        dims_ok = false;
    rep.add_exact("embed-dims", "p-embed", dims_ok);

    rep.merge(verify_embedding_suite(functor, ctx.haar, ctx.blocks, leaves,
                                     opts.tol));
  });
  return rep;
}

Report run_tannaka(const FiniteHopfStarAlgebra& h, const RunOptions& opts) {
  Report rep = verify_hopf_axioms(h, opts.tol);
  if (!rep.pass()) return rep;
  stage(rep, "tannaka-computed", "c-equiv.2", [&] {
    AlgebraContext ctx(h, opts);
    MonoidObject monoid = regular_monoid(ctx.h, ctx.haar, ctx.fd, opts.tol);
    EmbeddingFunctor functor(monoid, opts.tol);
    std::vector<int> leaves;
    for (const Representation& p : ctx.irreps)
      leaves.push_back(functor.add_object(p));

    rep.merge(verify_natural_unitaries(monoid, functor, ctx.haar, ctx.blocks,
                                       leaves, opts.tol));

    ReconstructedHopf rh =
        reconstruct(functor, ctx.haar, ctx.blocks, leaves, opts.tol);
    bool dims_match = true;
    for (std::size_t b = 0; b < ctx.blocks.blocks.size(); ++b)
      if (rh.block_dims[b] != ctx.blocks.blocks[b].block_dim)
        dims_match = false;
    rep.add_exact("reconstruction-block-dims", "c-equiv.2", dims_match);

    Report axioms = verify_hopf_axioms(rh.algebra, opts.tol);
    rep.add("reconstruction-hopf-axioms", "c-equiv.2", axioms.max_residual(),
            axioms.pass() ? opts.tol.eps : -1.0);

    rep.merge(verify_roundtrip(ctx.h, monoid, functor, rh, ctx.haar, leaves,
                               opts.tol));

    // Dimension count of the endomorphisms of the embedded spaces against
    // the monoid object.
    Index total = 0;
    for (Index d : rh.block_dims) total += d * d;
    Index end_q = static_cast<Index>(
        hom_space(monoid.object, monoid.object, opts.tol).size());
    rep.add_exact("natural-endomorphism-dim", "l-nat", total == end_q);
  });
  return rep;
}

Report run_fusion(const FiniteHopfStarAlgebra& h, const RunOptions& opts,
                  const std::optional<std::vector<std::int64_t>>& dims) {
  Report rep = verify_hopf_axioms(h, opts.tol);
  if (!rep.pass()) return rep;
  stage(rep, "fusion-computed", "l-absor", [&] {
    AlgebraContext ctx(h, opts);
    FusionData fd = fusion_from_category(ctx.h, ctx.haar, ctx.blocks, opts.tol);
    rep.merge(verify_fusion_invariants(fd));

    PerronFrobeniusDims pf = perron_frobenius_dims(fd, opts.tol);
    rep.add_exact("pf-integral", "l-absor", pf.all_integral);
    double r_pf = 0.0;
    for (std::size_t i = 0; i < pf.dims.size(); ++i)
      r_pf = std::max(r_pf, std::abs(pf.dims[i] -
                                     double(ctx.blocks.blocks[i].block_dim)));
    rep.add("pf-matches-blocks", "l-absor", r_pf, opts.tol.eps);

    // The intrinsic dimension function always passes its own checks here.
    std::vector<std::int64_t> intrinsic;
    for (const Block& b : ctx.blocks.blocks) intrinsic.push_back(b.block_dim);
    rep.merge(verify_dimension_function(fd, intrinsic), "intrinsic-");
    AbsorbingMultiplicities am = absorbing_multiplicities(fd, intrinsic);
    rep.add_exact("absorbing-identity", "l-absor", am.identity_holds);
    bool q_matches = true;
    for (int i = 0; i < fd.size; ++i)
      if (am.q[i] != ctx.blocks.blocks[fd.bar[i]].block_dim) q_matches = false;
    rep.add_exact("absorbing-object-multiplicities", "p-disc.2", q_matches);

    if (dims) {
      rep.merge(verify_dimension_function(fd, *dims), "given-");
      std::vector<std::int64_t> pf_round;
      for (double d : pf.dims)
        pf_round.push_back(static_cast<std::int64_t>(std::llround(d)));
      rep.add_exact("given-matches-intrinsic", "l-absor", *dims == pf_round);
    }
  });
  return rep;
}

Report run_fusion_data(const FusionData& fd, const RunOptions& opts,
                       const std::optional<std::vector<std::int64_t>>& dims) {
  Report rep = verify_fusion_invariants(fd);
  PerronFrobeniusDims pf = perron_frobenius_dims(fd, opts.tol);
  rep.add_exact("pf-integral", "l-absor", pf.all_integral);
  for (std::size_t i = 0; i < pf.dims.size(); ++i)
    rep.add_info("pf-dim-" + std::to_string(i), "l-absor", pf.dims[i]);
  if (dims) {
    rep.merge(verify_dimension_function(fd, *dims), "given-");
    if (rep.pass()) {
      AbsorbingMultiplicities am = absorbing_multiplicities(fd, *dims);
      rep.add_exact("absorbing-identity", "l-absor", am.identity_holds);
    }
  }
  return rep;
}

}  // namespace qgv
