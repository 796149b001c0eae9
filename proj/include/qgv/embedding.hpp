// The embedding functor built from an absorbing monoid: per-object carriers
// inside the tensor product with the monoid object, tensorators, the unit
// isomorphism, and inner products.
//
// Objects are registered as leaves; tensor products are addressed by leaf
// sequences, so the two ways of parenthesizing a triple name the same
// carrier.  Everything is computed lazily and memoized; instances are meant
// for single-threaded use.

#ifndef QGV_EMBEDDING_HPP
#define QGV_EMBEDDING_HPP

#include <map>
#include <vector>

#include "qgv/monoid.hpp"
#include "qgv/repcat.hpp"
#include "qgv/report.hpp"

namespace qgv {

/// Orthonormal basis of {v : rho(a) v = counit(a) v for all a}.
std::vector<Vector> hom_from_unit(const Representation& rho, Tolerance tol);

struct QModuleHoms {
  std::vector<Matrix> basis;  // module morphisms Q -> Q (x) X
  Matrix to_vectors;          // composes with the monoid unit
  Matrix from_vectors;        // the stated inverse
  double roundtrip_residual = 0.0;
};

/// Basis of the module morphisms Q -> Q (x) X and the mutually inverse
/// identifications with the unit-hom carrier of Q (x) X.
QModuleHoms q_module_homs(const MonoidObject& monoid, const Representation& x,
                          Tolerance tol);

class EmbeddingFunctor {
 public:
  using ObjKey = std::vector<int>;

  EmbeddingFunctor(const MonoidObject& monoid, Tolerance tol);

  /// Registers a leaf object and returns its id.  Id 0 is always the
  /// one-dimensional unit object.
  int add_object(const Representation& x);
  int leaf_count() const { return static_cast<int>(leaves_.size()); }

  const MonoidObject& monoid() const { return monoid_; }
  Tolerance tolerance() const { return tol_; }

  /// The representation named by a leaf sequence (left-associated product).
  const Representation& object(const ObjKey& key);

  /// Columns form the orthonormal unit-hom basis of Q (x) object(key).
  const Matrix& carrier(const ObjKey& key);
  Index dim(const ObjKey& key) { return carrier(key).cols(); }

  /// Inner product matrix on the embedded space, from the monoid pairing
  /// (phi, psi) id = psi* o phi.
  const Matrix& gram(const ObjKey& key);

  /// E(X) (x) E(Y) -> E(X (x) Y).
  const Matrix& tensorator(const ObjKey& x, const ObjKey& y);

  /// Image of a morphism s : object(x) -> object(y).
  Matrix on_morphism(const ObjKey& x, const ObjKey& y, const Matrix& s);

  /// Scalars -> E(unit), sending 1 to the monoid unit.
  Matrix unit_iso();

  static ObjKey concat(const ObjKey& a, const ObjKey& b);

 private:
  MonoidObject monoid_;
  Tolerance tol_;
  std::vector<Representation> leaves_;
  std::map<ObjKey, Representation> objects_;
  std::map<ObjKey, Matrix> carriers_;
  std::map<ObjKey, Matrix> grams_;
  std::map<std::pair<ObjKey, ObjKey>, Matrix> tensorators_;
};

/// Embedding functor over the given leaf objects (the unit object is always
/// included).  Fails unless the monoid's unit-hom space is one-dimensional.
EmbeddingFunctor embedding_functor(const MonoidObject& monoid,
                                   const std::vector<Representation>& objects,
                                   Tolerance tol);

/// Full functor verification: module-hom identifications, tensorator
/// invertibility and unitarity, coherence over triples, unit axioms,
/// naturality in both slots, *-preservation, dimension multiplicativity,
/// and faithfulness rank checks.  `leaf_ids` selects the objects exercised;
/// morphisms are spanned by decomposition isometries of pair products.
Report verify_embedding_suite(EmbeddingFunctor& functor, const HaarData& haar,
                              const BlockStructure& blocks,
                              const std::vector<int>& leaf_ids, Tolerance tol);

}  // namespace qgv

#endif
