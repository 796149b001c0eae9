// Suite drivers shared by the command line tool, the tests and the
// acceptance harness.  Each driver turns an algebra into a report with a
// deterministic check order.

#ifndef QGV_RUNNERS_HPP
#define QGV_RUNNERS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qgv/embedding.hpp"
#include "qgv/fusion.hpp"
#include "qgv/hopf.hpp"
#include "qgv/monoid.hpp"
#include "qgv/report.hpp"
#include "qgv/tannaka.hpp"

namespace qgv {

struct RunOptions {
  Tolerance tol;
  std::uint64_t seed = 1;
};

/// Everything the suites derive from one algebra.  Non-copyable: the
/// representations point back at the stored algebra.
struct AlgebraContext {
  FiniteHopfStarAlgebra h;
  HaarData haar;
  BlockStructure blocks;
  FourierData fd;
  std::vector<Representation> irreps;  // block irreducibles, block order
  Representation regular;

  AlgebraContext(FiniteHopfStarAlgebra algebra, const RunOptions& opts);
  AlgebraContext(const AlgebraContext&) = delete;
  AlgebraContext& operator=(const AlgebraContext&) = delete;
};

/// Axioms + Haar + blocks + dual + Fourier/Plancherel + group-likes.
Report run_verify(const FiniteHopfStarAlgebra& h, const RunOptions& opts);

/// Regular monoid, comonoid, Frobenius property, absorbing suite over all
/// block irreducibles, intrinsic group.
Report run_monoid(const FiniteHopfStarAlgebra& h, const RunOptions& opts);

/// Embedding-functor suite over the block irreducibles.
Report run_embed(const FiniteHopfStarAlgebra& h, const RunOptions& opts);

/// Reconstruction and round-trip verification.
Report run_tannaka(const FiniteHopfStarAlgebra& h, const RunOptions& opts);

/// Fusion extraction and arithmetic; `dims` optionally supplies a dimension
/// function to verify.
Report run_fusion(const FiniteHopfStarAlgebra& h, const RunOptions& opts,
                  const std::optional<std::vector<std::int64_t>>& dims);

/// Fusion arithmetic on standalone fusion data (no category behind it).
Report run_fusion_data(const FusionData& fd, const RunOptions& opts,
                       const std::optional<std::vector<std::int64_t>>& dims);

}  // namespace qgv

#endif
