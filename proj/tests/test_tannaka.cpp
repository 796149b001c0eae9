#include <doctest.h>

#include <cmath>

#include "qgv/runners.hpp"
#include "qgv/tannaka.hpp"

using namespace qgv;

namespace {

const Tolerance kTol;
const RunOptions kOpts;

struct TannakaSetup {
  AlgebraContext ctx;
  MonoidObject monoid;
  EmbeddingFunctor functor;
  std::vector<int> leaves;

  explicit TannakaSetup(FiniteHopfStarAlgebra h)
      : ctx(std::move(h), kOpts),
        monoid(regular_monoid(ctx.h, ctx.haar, ctx.fd, kTol)),
        functor(monoid, kTol) {
    for (const Representation& p : ctx.irreps)
      leaves.push_back(functor.add_object(p));
  }
};

}  // namespace

TEST_CASE("natural unitary on the unit object hits the monoid unit") {
  TannakaSetup s(group_algebra(symmetric_group_s3()));
  Matrix u = natural_unitary(s.monoid, s.functor, s.ctx.haar, {0});
  REQUIRE(u.rows() == 1);
  REQUIRE(u.cols() == 1);
  Vector image = s.functor.carrier({0}) * u;
  CHECK(max_abs(Vector(image - s.monoid.unit)) < 1e-9);
}

TEST_CASE("natural unitaries verify on the example algebras") {
  for (const char* name : {"Z3", "S3"}) {
    for (bool fn : {false, true}) {
      TannakaSetup s(fn ? function_algebra(builtin_group(name))
                        : group_algebra(builtin_group(name)));
      Report rep = verify_natural_unitaries(s.monoid, s.functor, s.ctx.haar,
                                            s.ctx.blocks, s.leaves, kTol);
      CHECK(rep.pass());
      CHECK(rep.max_residual() <= 1e-9);
    }
  }
}

TEST_CASE("reconstruction dimensions") {
  SUBCASE("two-point function algebra: two one-dimensional blocks") {
    TannakaSetup s(function_algebra(cyclic_group(2)));
    ReconstructedHopf rh =
        reconstruct(s.functor, s.ctx.haar, s.ctx.blocks, s.leaves, kTol);
    CHECK(rh.algebra.dim == 2);
    CHECK(rh.block_dims == std::vector<Index>{1, 1});
  }
  SUBCASE("group algebra of S3: blocks 1,1,2") {
    TannakaSetup s(group_algebra(symmetric_group_s3()));
    ReconstructedHopf rh =
        reconstruct(s.functor, s.ctx.haar, s.ctx.blocks, s.leaves, kTol);
    CHECK(rh.algebra.dim == 6);
    CHECK(rh.block_dims == std::vector<Index>{1, 1, 2});
  }
}

TEST_CASE("reconstructed algebra satisfies the axioms") {
  for (const char* name : {"Z4", "S3"}) {
    for (bool fn : {false, true}) {
      TannakaSetup s(fn ? function_algebra(builtin_group(name))
                        : group_algebra(builtin_group(name)));
      ReconstructedHopf rh =
          reconstruct(s.functor, s.ctx.haar, s.ctx.blocks, s.leaves, kTol);
      Report rep = verify_hopf_axioms(rh.algebra, kTol);
      CHECK(rep.pass());
      // The counit takes value one on the identity family.
      CHECK(std::abs(rh.algebra.counit_of(rh.algebra.unit) - Complex(1.0)) <
            1e-9);
    }
  }
}

TEST_CASE("round trip identifies the original algebra") {
  for (const char* name : {"Z2", "Z3", "S3"}) {
    for (bool fn : {false, true}) {
      TannakaSetup s(fn ? function_algebra(builtin_group(name))
                        : group_algebra(builtin_group(name)));
      ReconstructedHopf rh =
          reconstruct(s.functor, s.ctx.haar, s.ctx.blocks, s.leaves, kTol);
      Report rep = verify_roundtrip(s.ctx.h, s.monoid, s.functor, rh,
                                    s.ctx.haar, s.leaves, kTol);
      CHECK(rep.pass());
      CHECK(rep.max_residual() <= 1e-9);
    }
  }
}

TEST_CASE("endomorphisms of the monoid object give all natural families") {
  TannakaSetup s(group_algebra(symmetric_group_s3()));
  // Dimension count.
  Index total = 0;
  for (int l : s.leaves) {
    Index d = s.functor.dim({l});
    total += d * d;
  }
  auto end_q = hom_space(s.monoid.object, s.monoid.object, kTol);
  CHECK(total == static_cast<Index>(end_q.size()));

  // Injectivity of s -> (s (x) id_X) acting on the embedded spaces.
  const Index n = s.ctx.h.dim;
  std::vector<Matrix> columns;
  for (const Matrix& endo : end_q) {
    Vector flat(total * total);  // generous upper bound, filled per leaf
    Index pos = 0;
    Vector acc = Vector::Zero(total * total);
    for (int l : s.leaves) {
      const Matrix& carrier = s.functor.carrier({l});
      Index dx = s.functor.object({l}).carrier_dim;
      Matrix action = carrier.adjoint() *
                      (kron(endo, Matrix::Identity(dx, dx)) * carrier);
      for (Index i = 0; i < action.size(); ++i) {
        acc(pos++) = action(i / action.cols(), i % action.cols());
      }
    }
    columns.push_back(acc.topRows(pos));
  }
  Matrix stacked(columns[0].size(), static_cast<Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    stacked.col(static_cast<Index>(c)) = columns[c];
  CHECK(rank(stacked, kTol) == n);
}

TEST_CASE("conjugating the monoid reconstructs an isomorphic algebra") {
  TannakaSetup s(function_algebra(symmetric_group_s3()));
  ReconstructedHopf rh =
      reconstruct(s.functor, s.ctx.haar, s.ctx.blocks, s.leaves, kTol);

  // A nontrivial unitary monoid endomorphism.
  auto ig = monoid_intrinsic_group(s.ctx.h, s.monoid, s.ctx.haar, kTol);
  REQUIRE(ig.size() == 2);
  Matrix t = ig[1];
  Matrix t_inv = adjoint_wrt(t, s.ctx.haar.gram, s.ctx.haar.gram);

  MonoidObject conjugated;
  conjugated.object = s.monoid.object;
  conjugated.mul = t * s.monoid.mul * kron(t_inv, t_inv);
  conjugated.unit = t * s.monoid.unit;

  EmbeddingFunctor functor2(conjugated, kTol);
  std::vector<int> leaves2;
  for (const Representation& p : s.ctx.irreps)
    leaves2.push_back(functor2.add_object(p));
  ReconstructedHopf rh2 =
      reconstruct(functor2, s.ctx.haar, s.ctx.blocks, leaves2, kTol);

  // The induced blockwise change of coordinates phi -> (t (x) id) phi is a
  // Hopf isomorphism between the two reconstructions.
  const Index dim = rh.algebra.dim;
  Matrix big = Matrix::Zero(dim, dim);
  Index off = 0;
  for (std::size_t b = 0; b < s.leaves.size(); ++b) {
    const Matrix& c1 = s.functor.carrier({s.leaves[b]});
    const Matrix& c2 = functor2.carrier({leaves2[b]});
    Index dx = s.functor.object({s.leaves[b]}).carrier_dim;
    Matrix bmap = c2.adjoint() * (kron(t, Matrix::Identity(dx, dx)) * c1);
    Index d = bmap.rows();
    // Conjugation on the matrix-unit coordinates of the block.
    Matrix binv = bmap.fullPivLu().inverse();
    for (Index r = 0; r < d; ++r)
      for (Index ss = 0; ss < d; ++ss)
        for (Index r2 = 0; r2 < d; ++r2)
          for (Index s2 = 0; s2 < d; ++s2)
            big(off + r * d + ss, off + r2 * d + s2) =
                bmap(r, r2) * binv(s2, ss);
    off += d * d;
  }
  // Algebra map: unital, multiplicative by construction; the content is the
  // coproduct and counit compatibility.
  CHECK(max_abs(Matrix(rh2.algebra.comult * big -
                       kron(big, big) * rh.algebra.comult)) < 1e-9);
  CHECK(max_abs(Matrix(rh2.algebra.counit * big - rh.algebra.counit)) < 1e-9);
  CHECK(max_abs(Vector(big * rh.algebra.unit - rh2.algebra.unit)) < 1e-9);
}

TEST_CASE("reconstruct rejects an incomplete irreducible list") {
  TannakaSetup s(group_algebra(symmetric_group_s3()));
  std::vector<int> partial{s.leaves[0], s.leaves[1]};
  CHECK_THROWS_AS(
      reconstruct(s.functor, s.ctx.haar, s.ctx.blocks, partial, kTol),
      input_error);
}
