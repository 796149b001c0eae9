// Finite-dimensional Hopf *-algebras given by structure constants, together
// with axiom verification, the left Haar functional, Wedderburn block
// decomposition, the dual algebra, the Fourier transform, group-like
// unitaries, and the group-algebra / function-algebra generators.
//
// Conventions.  For a basis e_0..e_{n-1}:
//   e_i e_j        = sum_k  mult[i][j][k] e_k      (stored as lmul[i](k,j))
//   coprod(e_i)    = sum_jk comult(j*n+k, i) e_j (x) e_k
//   S(e_i)         = antipode.col(i)
//   (sum a_i e_i)* = sum_i conj(a_i) * star.col(i)
// Tensor factors are indexed row-major: e_j (x) e_k has index j*n + k.

#ifndef QGV_HOPF_HPP
#define QGV_HOPF_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qgv/groups.hpp"
#include "qgv/numeric.hpp"
#include "qgv/report.hpp"

namespace qgv {

struct FiniteHopfStarAlgebra {
  Index dim = 0;
  std::vector<std::string> basis_names;
  std::vector<Matrix> lmul;  // lmul[i](k,j) = coefficient of e_k in e_i e_j
  Matrix comult;             // (n*n) x n
  Vector unit;
  RowVector counit;
  Matrix antipode;
  Matrix star;

  double mult_coeff_abs_max() const;
  Complex mult_coeff(Index i, Index j, Index k) const { return lmul[i](k, j); }

  /// Multiplication as a linear map A (x) A -> A, an n x n^2 matrix.
  Matrix mult_matrix() const;

  Vector mul(const Vector& a, const Vector& b) const;
  Matrix left_mul(const Vector& a) const;   // x -> a x
  Matrix right_mul(const Vector& a) const;  // x -> x a
  /// Left multiplication by a tensor t in A (x) A, acting on A (x) A.
  Matrix left_mul2(const Vector& t) const;

  Vector coproduct(const Vector& a) const { return comult * a; }
  Complex counit_of(const Vector& a) const { return (counit * a)(0); }
  Vector antipode_of(const Vector& a) const { return antipode * a; }
  Vector star_of(const Vector& a) const { return star * a.conjugate(); }

  /// Throws input_error unless all tensors have mutually consistent shapes.
  void check_shapes() const;
};

struct HaarNormalization {
  enum Kind { CounitBlock, State } kind = CounitBlock;
};

struct HaarData {
  Vector values;       // phi on the basis
  Matrix gram;         // gram(i,j) = phi(e_i^* e_j), Hermitian positive definite
  Matrix modular_map;  // rho with phi(a b) = phi(b rho(a))
  Vector integral;     // two-sided integral with counit value 1 (the unit of
                       // the block singled out by the counit)
  HaarNormalization normalization;

  /// phi applied to an element.
  Complex operator()(const Vector& a) const { return values.dot(a.conjugate()); }
};

struct Block {
  Vector central_projection;  // minimal central self-adjoint idempotent
  Index block_dim = 0;        // the block is a block_dim x block_dim matrix algebra
  Matrix carrier;             // n x block_dim, Gram-orthonormal basis of A q for a
                              // minimal projection q inside the block
};

struct BlockStructure {
  std::vector<Block> blocks;
  Index counit_block = 0;  // index of the block on which the counit is 1
  std::uint64_t seed = 0;  // seed of the random central element used
};

struct DualAlgebra {
  FiniteHopfStarAlgebra algebra;  // same dimension, basis dual to the input's
  Matrix pairing;                 // pairing(i,j) = <dual e_i, e_j>
};

struct FourierData {
  Matrix transform;        // a -> phi(. a) in the dual basis
  Matrix inverse;
  RowVector dual_right_haar;  // right invariant functional on the dual,
                              // normalized against the transform
};

/// Checks every Hopf *-algebra axiom and reports one residual per axiom.
Report verify_hopf_axioms(const FiniteHopfStarAlgebra& h, Tolerance tol);

/// Left Haar functional.  Solves the invariance system, requires the solution
/// space to be one-dimensional, and normalizes so the functional takes value
/// one on the integral (default) or on the unit (State).
HaarData haar_left(const FiniteHopfStarAlgebra& h, Tolerance tol,
                   HaarNormalization norm = {});

/// Wedderburn decomposition into minimal central idempotents.
BlockStructure block_decompose(const FiniteHopfStarAlgebra& h,
                               const HaarData& haar, Tolerance tol,
                               std::uint64_t seed = 1);

DualAlgebra dual(const FiniteHopfStarAlgebra& h);

FourierData fourier(const FiniteHopfStarAlgebra& h, const HaarData& haar);

/// The group-like unitaries g: coprod(g) = g (x) g, g* g = g g* = 1.
/// Found through the one-dimensional blocks of the dual and re-verified
/// against both defining equations.
std::vector<Vector> group_like_unitaries(const FiniteHopfStarAlgebra& h,
                                         Tolerance tol,
                                         std::uint64_t seed = 1);

/// The group algebra C[G]: basis g, coprod(g) = g (x) g, g* = g^{-1}.
FiniteHopfStarAlgebra group_algebra(const CayleyTable& g);

/// The function algebra C^G: basis of point evaluations, pointwise product,
/// convolution coproduct.
FiniteHopfStarAlgebra function_algebra(const CayleyTable& g);

}  // namespace qgv

#endif
