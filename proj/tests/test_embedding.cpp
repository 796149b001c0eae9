#include <doctest.h>

#include <cmath>

#include "qgv/embedding.hpp"
#include "qgv/runners.hpp"

using namespace qgv;

namespace {

const Tolerance kTol;
const RunOptions kOpts;

MonoidObject make_monoid(const AlgebraContext& ctx) {
  return regular_monoid(ctx.h, ctx.haar, ctx.fd, kTol);
}

}  // namespace

TEST_CASE("unit-hom spaces of small representations") {
  AlgebraContext ctx(function_algebra(cyclic_group(2)), kOpts);
  CHECK(hom_from_unit(unit_rep(ctx.h), kTol).size() == 1);

  auto reg_homs = hom_from_unit(ctx.regular, kTol);
  REQUIRE(reg_homs.size() == 1);
  CHECK(std::abs(reg_homs[0](0) - Complex(1.0)) < 1e-12);  // the mass at e
  CHECK(std::abs(reg_homs[0](1)) < 1e-12);

  // Non-counit blocks see no unit-hom vectors.
  CHECK(hom_from_unit(ctx.irreps[1], kTol).empty());
}

TEST_CASE("module homs over the monoid match embedded dimensions") {
  AlgebraContext ctx(function_algebra(symmetric_group_s3()), kOpts);
  MonoidObject m = make_monoid(ctx);
  for (const Representation& p : ctx.irreps) {
    QModuleHoms qm = q_module_homs(m, p, kTol);
    CHECK(qm.basis.size() == 1);  // all blocks are one-dimensional here
    CHECK(qm.roundtrip_residual <= 1e-9);
  }
}

TEST_CASE("module homs for the unit object identify the monoid unit") {
  AlgebraContext ctx(group_algebra(cyclic_group(3)), kOpts);
  MonoidObject m = make_monoid(ctx);
  QModuleHoms qm = q_module_homs(m, unit_rep(ctx.h), kTol);
  REQUIRE(qm.basis.size() == 1);
  // The (unique) module morphism is a multiple of the identity of Q, and the
  // identification composes it with the monoid unit.
  Matrix s = qm.basis[0];
  Complex lead = s(0, 0);
  CHECK(max_abs(Matrix(s - lead * Matrix::Identity(3, 3))) < 1e-9);
  Vector image = s * m.unit;
  // Proportional to the monoid unit itself.
  Complex ratio = image(0) / m.unit(0);
  CHECK(max_abs(Vector(image - ratio * m.unit)) < 1e-9);
}

TEST_CASE("embedded dimensions equal block dimensions") {
  SUBCASE("two-point function algebra") {
    AlgebraContext ctx(function_algebra(cyclic_group(2)), kOpts);
    MonoidObject m = make_monoid(ctx);
    EmbeddingFunctor f(m, kTol);
    int a = f.add_object(ctx.irreps[0]);
    int b = f.add_object(ctx.irreps[1]);
    CHECK(f.dim({a}) == 1);
    CHECK(f.dim({b}) == 1);
  }
  SUBCASE("group algebra of S3") {
    AlgebraContext ctx(group_algebra(symmetric_group_s3()), kOpts);
    MonoidObject m = make_monoid(ctx);
    EmbeddingFunctor f(m, kTol);
    std::vector<Index> dims;
    for (const Representation& p : ctx.irreps)
      dims.push_back(f.dim({f.add_object(p)}));
    CHECK(dims == std::vector<Index>{1, 1, 2});
  }
}

TEST_CASE("embedded unit object is the monoid unit line") {
  AlgebraContext ctx(group_algebra(symmetric_group_s3()), kOpts);
  MonoidObject m = make_monoid(ctx);
  EmbeddingFunctor f(m, kTol);
  const Matrix& eu = f.carrier({0});
  REQUIRE(eu.cols() == 1);
  Complex ratio = 0.0;
  for (Index i = 0; i < eu.rows(); ++i)
    if (std::abs(m.unit(i)) > 1e-9) ratio = eu(i, 0) / m.unit(i);
  CHECK(max_abs(Vector(eu.col(0) - ratio * m.unit)) < 1e-9);
  Matrix e = f.unit_iso();
  CHECK(std::abs(e(0, 0)) > 1e-9);  // invertible
}

TEST_CASE("functor on morphisms is linear and unital") {
  AlgebraContext ctx(group_algebra(symmetric_group_s3()), kOpts);
  MonoidObject m = make_monoid(ctx);
  EmbeddingFunctor f(m, kTol);
  int two = f.add_object(ctx.irreps[2]);
  Matrix id2 = Matrix::Identity(2, 2);
  CHECK(max_abs(Matrix(f.on_morphism({two}, {two}, id2) -
                       Matrix::Identity(2, 2))) < 1e-12);
  CHECK(max_abs(f.on_morphism({two}, {two}, Matrix::Zero(2, 2))) == 0.0);
}

TEST_CASE("faithfulness on a multiplicity-two hom space") {
  AlgebraContext ctx(group_algebra(symmetric_group_s3()), kOpts);
  MonoidObject m = make_monoid(ctx);
  EmbeddingFunctor f(m, kTol);
  int one = f.add_object(ctx.irreps[0]);
  Representation doubled = direct_sum_rep(ctx.irreps[0], ctx.irreps[0]);
  int two_copies = f.add_object(doubled);
  auto homs = hom_space(ctx.irreps[0], doubled, kTol);
  REQUIRE(homs.size() == 2);
  Matrix images(f.dim({two_copies}) * f.dim({one}),
                static_cast<Index>(homs.size()));
  for (std::size_t i = 0; i < homs.size(); ++i) {
    Matrix e = f.on_morphism({one}, {two_copies}, homs[i]);
    images.col(static_cast<Index>(i)) =
        Eigen::Map<const Vector>(e.data(), e.size());
  }
  CHECK(rank(images, kTol) == 2);
}

TEST_CASE("functoriality under composition") {
  AlgebraContext ctx(group_algebra(symmetric_group_s3()), kOpts);
  MonoidObject m = make_monoid(ctx);
  EmbeddingFunctor f(m, kTol);
  int two = f.add_object(ctx.irreps[2]);
  EmbeddingFunctor::ObjKey k2{two};
  auto k22 = EmbeddingFunctor::concat(k2, k2);
  Decomposition dec = decompose(f.object(k22), ctx.haar, ctx.blocks, kTol);
  const Matrix& w = dec.isometries[2][0];  // p2 -> p2 (x) p2
  Matrix w_adj = adjoint_wrt(w, ctx.irreps[2].gram, f.object(k22).gram);
  Matrix lhs = f.on_morphism(k2, k2, Matrix(w_adj * w));
  Matrix rhs = f.on_morphism(k22, k2, w_adj) * f.on_morphism(k2, k22, w);
  CHECK(max_abs(Matrix(lhs - rhs)) < 1e-9);
}

TEST_CASE("tensorator factors through the module-hom pairing") {
  AlgebraContext ctx(group_algebra(symmetric_group_s3()), kOpts);
  MonoidObject m = make_monoid(ctx);
  EmbeddingFunctor f(m, kTol);
  int x = f.add_object(ctx.irreps[2]);
  int y = f.add_object(ctx.irreps[1]);
  EmbeddingFunctor::ObjKey kx{x}, ky{y};
  auto kxy = EmbeddingFunctor::concat(kx, ky);

  QModuleHoms qx = q_module_homs(m, f.object(kx), kTol);
  QModuleHoms qy = q_module_homs(m, f.object(ky), kTol);
  QModuleHoms qxy = q_module_homs(m, f.object(kxy), kTol);
  const Index dy = f.object(ky).carrier_dim;

  // Pairing s (x) t -> (s (x) id) o t on module morphisms, pushed through
  // the identifications, must reproduce the tensorator.
  const Matrix& d = f.tensorator(kx, ky);
  const Index ex = f.dim(kx), ey = f.dim(ky);
  Matrix viaModules(f.dim(kxy), ex * ey);
  for (Index a = 0; a < ex; ++a) {
    // Module morphism behind the a-th embedded basis vector of E(X).
    Matrix sa = Matrix::Zero(qx.basis[0].rows(), qx.basis[0].cols());
    for (std::size_t r = 0; r < qx.basis.size(); ++r)
      sa += qx.from_vectors(static_cast<Index>(r), a) * qx.basis[r];
    for (Index b = 0; b < ey; ++b) {
      Matrix tb = Matrix::Zero(qy.basis[0].rows(), qy.basis[0].cols());
      for (std::size_t r = 0; r < qy.basis.size(); ++r)
        tb += qy.from_vectors(static_cast<Index>(r), b) * qy.basis[r];
      Matrix gamma = kron(sa, Matrix::Identity(dy, dy)) * tb;
      // Identify with embedded coordinates by composing with the unit.
      Vector vec = gamma * m.unit;
      viaModules.col(a * ey + b) = f.carrier(kxy).adjoint() * vec;
    }
  }
  CHECK(max_abs(Matrix(viaModules - d)) < 1e-9);
}

TEST_CASE("inner-product compatibility of the functor") {
  AlgebraContext ctx(group_algebra(symmetric_group_s3()), kOpts);
  MonoidObject m = make_monoid(ctx);
  EmbeddingFunctor f(m, kTol);
  int two = f.add_object(ctx.irreps[2]);
  EmbeddingFunctor::ObjKey k2{two};
  auto k22 = EmbeddingFunctor::concat(k2, k2);
  Decomposition dec = decompose(f.object(k22), ctx.haar, ctx.blocks, kTol);
  const Matrix& w = dec.isometries[2][0];
  Matrix ew = f.on_morphism(k2, k22, w);
  Matrix ew_star = f.on_morphism(
      k22, k2, adjoint_wrt(w, ctx.irreps[2].gram, f.object(k22).gram));
  // (E(s) phi, psi) = (phi, E(s*) psi) in the stored inner products, with
  // (x, y) = y^H G x on coordinate vectors.
  const Matrix& gx = f.gram(k2);
  const Matrix& gxy = f.gram(k22);
  for (Index a = 0; a < ew.cols(); ++a)
    for (Index b = 0; b < ew_star.cols(); ++b) {
      Complex lhs =
          (Vector(Vector::Unit(gxy.rows(), b)).adjoint() * (gxy * ew.col(a)))(0);
      Complex rhs = (Vector(ew_star.col(b)).adjoint() *
                     (gx * Vector(Vector::Unit(gx.rows(), a))))(0);
      CHECK(std::abs(lhs - rhs) < 1e-9);
    }
}

TEST_CASE("embedding suite passes on the example algebras") {
  for (const char* name : {"Z3", "S3"}) {
    for (bool fn : {false, true}) {
      AlgebraContext ctx(fn ? function_algebra(builtin_group(name))
                            : group_algebra(builtin_group(name)),
                         kOpts);
      MonoidObject m = make_monoid(ctx);
      EmbeddingFunctor f(m, kTol);
      std::vector<int> leaves;
      for (const Representation& p : ctx.irreps)
        leaves.push_back(f.add_object(p));
      Report rep = verify_embedding_suite(f, ctx.haar, ctx.blocks, leaves, kTol);
      CHECK(rep.pass());
      CHECK(rep.max_residual() <= 1e-9);
    }
  }
}

TEST_CASE("coherence over one-dimensional triples is scalar associativity") {
  AlgebraContext ctx(function_algebra(cyclic_group(4)), kOpts);
  MonoidObject m = make_monoid(ctx);
  EmbeddingFunctor f(m, kTol);
  std::vector<int> leaves;
  for (const Representation& p : ctx.irreps) leaves.push_back(f.add_object(p));
  for (int x : leaves)
    for (int y : leaves) {
      EmbeddingFunctor::ObjKey kx{x}, ky{y};
      const Matrix& d = f.tensorator(kx, ky);
      REQUIRE(d.rows() == 1);
      REQUIRE(d.cols() == 1);
      CHECK(std::abs(d(0, 0)) > 1e-9);
    }
  // All embedded spaces are lines, so the coherence equation is an equality
  // of products of scalars.
  for (int x : leaves)
    for (int y : leaves)
      for (int z : leaves) {
        EmbeddingFunctor::ObjKey kx{x}, ky{y}, kz{z};
        auto kxy = EmbeddingFunctor::concat(kx, ky);
        auto kyz = EmbeddingFunctor::concat(ky, kz);
        Complex lhs = f.tensorator(kxy, kz)(0, 0) * f.tensorator(kx, ky)(0, 0);
        Complex rhs = f.tensorator(kx, kyz)(0, 0) * f.tensorator(ky, kz)(0, 0);
        CHECK(std::abs(lhs - rhs) < 1e-12);
      }
}

TEST_CASE("embedding requires a one-dimensional unit-hom space") {
  AlgebraContext ctx(group_algebra(cyclic_group(2)), kOpts);
  MonoidObject m = make_monoid(ctx);
  // A doubled monoid object has a two-dimensional unit-hom space.
  MonoidObject bad = m;
  bad.object = direct_sum_rep(m.object, m.object);
  bad.mul = Matrix::Zero(4, 16);
  bad.unit = Vector::Zero(4);
  CHECK_THROWS_AS(EmbeddingFunctor(bad, kTol), compute_error);
}
