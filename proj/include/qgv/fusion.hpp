// Fusion-ring extraction from the representation category, dimension
// functions, absorbing-object multiplicity arithmetic and Perron-Frobenius
// intrinsic dimensions.  All ring identities are checked in exact integer
// arithmetic; only the extraction step is floating point.

#ifndef QGV_FUSION_HPP
#define QGV_FUSION_HPP

#include <cstdint>
#include <vector>

#include "qgv/repcat.hpp"
#include "qgv/report.hpp"

namespace qgv {

struct FusionData {
  int size = 0;
  int unit = 0;
  std::vector<int> bar;  // index involution matching conjugates
  std::vector<std::vector<std::vector<std::int64_t>>> coeff;  // N[i][j][k]

  std::int64_t n(int i, int j, int k) const { return coeff[i][j][k]; }
};

/// Multiplicity tensor of the block irreducibles, with the conjugation
/// involution matched through conjugate representations.
FusionData fusion_from_category(const FiniteHopfStarAlgebra& h,
                                const HaarData& haar,
                                const BlockStructure& blocks, Tolerance tol);

/// Structural identities of a fusion tensor: unit laws, duality of the
/// coefficients, associativity.  Exact.
Report verify_fusion_invariants(const FusionData& fd);

/// The three dimension-function identities, in exact integers.
Report verify_dimension_function(const FusionData& fd,
                                 const std::vector<std::int64_t>& n);

struct AbsorbingMultiplicities {
  std::vector<std::int64_t> q;  // multiplicity of each irreducible in the
                                // absorbing object
  bool identity_holds = false;
};

/// q[i] = n[bar(i)] together with the absorption identity
/// sum_i N[i][j][k] n[bar(i)] = n[j] n[bar(k)] over all pairs.
AbsorbingMultiplicities absorbing_multiplicities(
    const FusionData& fd, const std::vector<std::int64_t>& n);

struct PerronFrobeniusDims {
  std::vector<double> dims;
  std::vector<bool> integral;
  bool all_integral = false;
};

/// Spectral radius of each fusion matrix N[i][.][.], with integrality flags.
PerronFrobeniusDims perron_frobenius_dims(const FusionData& fd, Tolerance tol);

}  // namespace qgv

#endif
