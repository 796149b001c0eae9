// The category of finite-dimensional *-representations: tensor products via
// the coproduct, intertwiner spaces, irreducible decomposition, conjugates.
//
// Intertwiners are plain matrices; their source and target are supplied by
// the call context.  Tensor carriers always associate left to right with
// row-major Kronecker indexing, so X (x) Y has index x * dimY + y.

#ifndef QGV_REPCAT_HPP
#define QGV_REPCAT_HPP

#include <vector>

#include "qgv/hopf.hpp"
#include "qgv/numeric.hpp"

namespace qgv {

struct Representation {
  const FiniteHopfStarAlgebra* algebra = nullptr;
  Index carrier_dim = 0;
  std::vector<Matrix> matrices;  // one per basis element of the algebra
  Matrix gram;                   // carrier inner product, (u,v) = v^H G u

  /// pi(a) for an element a in algebra coordinates.
  Matrix act(const Vector& a) const;
};

struct Decomposition {
  std::vector<Index> multiplicities;            // one per block
  std::vector<std::vector<Matrix>> isometries;  // per block, per copy
};

/// Residuals of the representation axioms: homomorphism, unitality, and the
/// *-property with respect to the carrier Gram matrix.
double representation_residual(const Representation& pi);

/// Left regular representation with the Haar inner product.
Representation regular_rep(const FiniteHopfStarAlgebra& h, const HaarData& haar);

/// The one-dimensional representation given by the counit.
Representation unit_rep(const FiniteHopfStarAlgebra& h);

/// The irreducible representation carried by one Wedderburn block, in a
/// Gram-orthonormal carrier basis (so its own Gram matrix is the identity).
Representation block_irrep(const FiniteHopfStarAlgebra& h, const HaarData& haar,
                           const BlockStructure& blocks, Index block);

/// Tensor product representation (pi (x) pi') o coprod.
Representation tensor_rep(const Representation& a, const Representation& b);

/// Direct sum with block-diagonal action and Gram matrix.
Representation direct_sum_rep(const Representation& a, const Representation& b);

/// Orthonormal basis (entrywise inner product) of the space of intertwiners
/// T with T pi(a) = pi'(a) T for all a.  Each T maps source to target, so it
/// is a (target dim) x (source dim) matrix.
std::vector<Matrix> hom_space(const Representation& source,
                              const Representation& target, Tolerance tol);

/// Largest violation of T pi(a) = pi'(a) T over the algebra basis.
double intertwiner_residual(const Representation& source,
                            const Representation& target, const Matrix& t);

/// Isometric intertwiners from an irreducible into pi spanning its isotypic
/// component: w_b* w_a = delta id with the Gram-aware adjoint.
std::vector<Matrix> isotypic_isometries(const Representation& irrep,
                                        const Representation& pi,
                                        Tolerance tol);

/// Multiplicities by the rank formula rank(pi(block unit)) / block dim,
/// cross-checked against intertwiner space dimensions, plus explicit
/// decomposition isometries with completeness verified.
Decomposition decompose(const Representation& pi, const HaarData& haar,
                        const BlockStructure& blocks, Tolerance tol);

/// Conjugate representation a -> transpose(pi(S(a))) in an orthonormalized
/// carrier basis.  Requires S^2 = id within tol.
Representation conjugate_rep(const Representation& pi, Tolerance tol);

}  // namespace qgv

#endif
