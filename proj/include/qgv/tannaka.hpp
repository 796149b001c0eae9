// Reconstruction of the Hopf *-algebra from the embedding functor, the
// natural unitaries identifying it with the forgetful picture, and the
// round-trip verification.

#ifndef QGV_TANNAKA_HPP
#define QGV_TANNAKA_HPP

#include <map>
#include <utility>
#include <vector>

#include "qgv/embedding.hpp"

namespace qgv {

struct ReconstructedHopf {
  FiniteHopfStarAlgebra algebra;  // direct sum of endomorphism blocks
  std::vector<Index> block_dims;  // embedded dimension per irreducible leaf
  // Decomposition isometries used to extend endomorphism families to tensor
  // products, keyed by the leaf pair.
  std::map<std::pair<int, int>, std::vector<Matrix>> transport;
};

/// The natural unitary from the forgetful carrier of object(key) onto the
/// embedded space, built by pairing the integral into the absorbing
/// isomorphism.
Matrix natural_unitary(const MonoidObject& monoid, EmbeddingFunctor& functor,
                       const HaarData& haar,
                       const EmbeddingFunctor::ObjKey& key);

/// Unitarity, naturality and monoidality of the natural unitaries over the
/// given leaves and their pair products.
Report verify_natural_unitaries(const MonoidObject& monoid,
                                EmbeddingFunctor& functor, const HaarData& haar,
                                const BlockStructure& blocks,
                                const std::vector<int>& leaf_ids, Tolerance tol);

/// Rebuilds a Hopf *-algebra from the functor restricted to the irreducible
/// leaves (one per block, in block order).  Multiplication is blockwise,
/// the coproduct conjugates the extension through the tensorators, the
/// counit acts through the unit isomorphism, and the coinverse and star are
/// transported along the canonical identification.
ReconstructedHopf reconstruct(EmbeddingFunctor& functor, const HaarData& haar,
                              const BlockStructure& blocks,
                              const std::vector<int>& irrep_leaves,
                              Tolerance tol);

/// The canonical map from the original algebra onto the reconstruction,
/// assembled from the natural unitaries: checks bijectivity, algebra and
/// star compatibility, and coproduct compatibility.
Report verify_roundtrip(const FiniteHopfStarAlgebra& h,
                        const MonoidObject& monoid, EmbeddingFunctor& functor,
                        const ReconstructedHopf& rh, const HaarData& haar,
                        const std::vector<int>& irrep_leaves, Tolerance tol);

/// The canonical coordinate map onto the reconstruction.
Matrix canonical_map(const FiniteHopfStarAlgebra& h, const MonoidObject& monoid,
                     EmbeddingFunctor& functor, const ReconstructedHopf& rh,
                     const HaarData& haar, const std::vector<int>& irrep_leaves);

}  // namespace qgv

#endif
