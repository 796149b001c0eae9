// The regular monoid on the left regular representation, the regular
// comonoid, their Frobenius compatibility, the absorbing isomorphisms, and
// the intrinsic group realized as monoid endomorphisms.

#ifndef QGV_MONOID_HPP
#define QGV_MONOID_HPP

#include <vector>

#include "qgv/repcat.hpp"
#include "qgv/report.hpp"

namespace qgv {

struct MonoidObject {
  Representation object;  // Q
  Matrix mul;             // Q (x) Q -> Q
  Vector unit;            // image of 1 under the unit morphism
};

struct ComonoidObject {
  Representation object;
  Matrix comul;      // Q -> Q (x) Q
  RowVector counit;  // Q -> scalars
};

struct FrobeniusObject {
  MonoidObject monoid;
  ComonoidObject comonoid;  // on the same object
};

struct AbsorbingIso {
  Matrix left;      // trivialized (x) regular -> theta (x) regular, on K (x) A
  Matrix right;     // regular (x) trivialized -> regular (x) theta, on A (x) K
  Matrix left_inv;  // inverse of `left` from the closed coinverse formula
};

/// The regular monoid: multiplication transported from the dual through the
/// Fourier transform, unit sending 1 to the integral.  Verifies the closed
/// functional formula against the transform route.
MonoidObject regular_monoid(const FiniteHopfStarAlgebra& h, const HaarData& haar,
                            const FourierData& fd, Tolerance tol);

/// The two closed functional forms of the regular multiplication; their
/// agreement with each other and with the transform route is the strong
/// left invariance identity.
Matrix regular_mul_functional(const FiniteHopfStarAlgebra& h,
                              const HaarData& haar);
Matrix regular_mul_functional_mirror(const FiniteHopfStarAlgebra& h,
                                     const HaarData& haar);

/// The regular comonoid: the coproduct and counit viewed as intertwiners.
ComonoidObject regular_comonoid(const FiniteHopfStarAlgebra& h,
                                const HaarData& haar);

/// Frobenius checks: mul and comul are mutually adjoint under the Haar Gram
/// matrices, the unit is adjoint to the counit, and both compatibility
/// equalities hold.
Report verify_frobenius(const MonoidObject& monoid, const ComonoidObject& comonoid,
                        Tolerance tol);
inline Report verify_frobenius(const FrobeniusObject& frob, Tolerance tol) {
  return verify_frobenius(frob.monoid, frob.comonoid, tol);
}

/// Absorbing isomorphisms for a *-representation theta, assembled from the
/// coproduct's structure constants; the inverse of the left one additionally
/// comes from the closed coinverse formula and is cross-checked numerically.
AbsorbingIso absorbing_iso(const FiniteHopfStarAlgebra& h,
                           const Representation& theta);

struct MorphismEntry {
  std::size_t source = 0;  // indices into the theta list
  std::size_t target = 0;
  Matrix map;
};

/// Full absorbing-property suite over a family of representations: the
/// isomorphisms intertwine, are unitary, trivialize tensoring with the
/// regular representation (multiplicities compared through decompose),
/// are natural in theta, are module maps for the monoid multiplication,
/// and satisfy the coproduct-of-products identity on all basis triples.
Report verify_absorbing_suite(const FiniteHopfStarAlgebra& h,
                              const MonoidObject& monoid, const HaarData& haar,
                              const BlockStructure& blocks,
                              const std::vector<Representation>& thetas,
                              const std::vector<MorphismEntry>& morphisms,
                              Tolerance tol);

/// Right multiplications by the group-like unitaries: unitary monoid
/// endomorphisms of the regular monoid, closed under composition.
std::vector<Matrix> monoid_intrinsic_group(const FiniteHopfStarAlgebra& h,
                                           const MonoidObject& monoid,
                                           const HaarData& haar, Tolerance tol,
                                           std::uint64_t seed = 1);

/// True when mul o braid = mul within tol.  The braid must itself be an
/// intertwiner of Q (x) Q, otherwise input_error.
bool check_monoid_commutative(const MonoidObject& monoid, const Matrix& braid,
                              Tolerance tol);

}  // namespace qgv

#endif
