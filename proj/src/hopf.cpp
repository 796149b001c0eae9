#include "qgv/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qgv {

double FiniteHopfStarAlgebra::mult_coeff_abs_max() const {
  double m = 0.0;
  for (const Matrix& l : lmul) m = std::max(m, max_abs(l));
  return m;
}

Matrix FiniteHopfStarAlgebra::mult_matrix() const {
  Matrix m = Matrix::Zero(dim, dim * dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) m.col(i * dim + j) = lmul[i].col(j);
  return m;
}

Vector FiniteHopfStarAlgebra::mul(const Vector& a, const Vector& b) const {
  Vector out = Vector::Zero(dim);
  for (Index i = 0; i < dim; ++i)
    if (a(i) != 0.0) out += a(i) * (lmul[i] * b);
  return out;
}

Matrix FiniteHopfStarAlgebra::left_mul(const Vector& a) const {
  Matrix out = Matrix::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i)
    if (a(i) != 0.0) out += a(i) * lmul[i];
  return out;
}

Matrix FiniteHopfStarAlgebra::right_mul(const Vector& a) const {
  Matrix out = Matrix::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i) out.col(i) = lmul[i] * a;
  return out;
}

Matrix FiniteHopfStarAlgebra::left_mul2(const Vector& t) const {
  Matrix out = Matrix::Zero(dim * dim, dim * dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j)
      if (t(i * dim + j) != 0.0) out += t(i * dim + j) * kron(lmul[i], lmul[j]);
  return out;
}

void FiniteHopfStarAlgebra::check_shapes() const {
  const Index n = dim;
  if (n <= 0) throw input_error("algebra: dim must be positive");
  if (static_cast<Index>(basis_names.size()) != n)
    throw input_error("algebra: one basis name per dimension required");
  if (static_cast<Index>(lmul.size()) != n)
    throw input_error("algebra: mult tensor has wrong leading dimension");
  for (const Matrix& l : lmul)
    if (l.rows() != n || l.cols() != n)
      throw input_error("algebra: mult tensor slice has wrong shape");
  if (comult.rows() != n * n || comult.cols() != n)
    throw input_error("algebra: comult tensor has wrong shape");
  if (unit.size() != n) throw input_error("algebra: unit has wrong length");
  if (counit.size() != n) throw input_error("algebra: counit has wrong length");
  if (antipode.rows() != n || antipode.cols() != n)
    throw input_error("algebra: antipode has wrong shape");
  if (star.rows() != n || star.cols() != n)
    throw input_error("algebra: star has wrong shape");
  if (!unit.allFinite() || !counit.allFinite() || !antipode.allFinite() ||
      !star.allFinite() || !comult.allFinite())
    throw input_error("algebra: non-finite entry");
  for (const Matrix& l : lmul)
    if (!l.allFinite()) throw input_error("algebra: non-finite entry in mult");
}

Report verify_hopf_axioms(const FiniteHopfStarAlgebra& h, Tolerance tol) {
  h.check_shapes();
  const Index n = h.dim;
  Report rep;

  // Associativity: left multiplication is an algebra homomorphism.
  double r_assoc = 0.0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Matrix lhs = h.lmul[i] * h.lmul[j];
      Matrix rhs = h.left_mul(h.lmul[i].col(j));
      r_assoc = std::max(r_assoc, max_abs(Matrix(lhs - rhs)));
    }
  rep.add("mult-assoc", "aqg.standing", r_assoc, tol.eps);

  double r_unit = max_abs(Matrix(h.left_mul(h.unit) - Matrix::Identity(n, n)));
  r_unit = std::max(
      r_unit, max_abs(Matrix(h.right_mul(h.unit) - Matrix::Identity(n, n))));
  rep.add("unit-law", "aqg.standing", r_unit, tol.eps);

  Matrix id_n = Matrix::Identity(n, n);
  Matrix coassoc = kron(h.comult, id_n) * h.comult -
                   kron(id_n, h.comult) * h.comult;
  rep.add("coassoc", "aqg.standing", max_abs(coassoc), tol.eps);

  double r_counit =
      max_abs(Matrix(kron(h.counit, id_n) * h.comult - id_n));
  r_counit = std::max(
      r_counit, max_abs(Matrix(kron(id_n, h.counit) * h.comult - id_n)));
  rep.add("counit-law", "aqg.standing", r_counit, tol.eps);

  // coprod and counit are unital algebra homomorphisms.
  double r_chom =
      max_abs(Vector(h.comult * h.unit - kron(h.unit, h.unit)));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Vector lhs = h.left_mul2(h.comult.col(i)) * h.comult.col(j);
      Vector rhs = h.comult * h.lmul[i].col(j);
      r_chom = std::max(r_chom, max_abs(Vector(lhs - rhs)));
    }
  rep.add("comult-homomorphism", "aqg.standing", r_chom, tol.eps);

  double r_ehom = std::abs(h.counit_of(h.unit) - 1.0);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      r_ehom = std::max(r_ehom, std::abs(h.counit_of(h.lmul[i].col(j)) -
                                         h.counit(i) * h.counit(j)));
  rep.add("counit-homomorphism", "aqg.standing", r_ehom, tol.eps);

  // coprod(a*) = coprod(a)* with the factorwise star on the tensor square.
  Matrix tensor_star_of_comult =
      kron(h.star, h.star) * h.comult.conjugate();
  rep.add("comult-star", "aqg.standing",
          max_abs(Matrix(h.comult * h.star - tensor_star_of_comult)), tol.eps);

  Matrix mm = h.mult_matrix();
  Matrix eta_eps = h.unit * h.counit;  // rank-one map a -> counit(a) 1
  double r_antipode =
      max_abs(Matrix(mm * kron(h.antipode, id_n) * h.comult - eta_eps));
  r_antipode = std::max(
      r_antipode,
      max_abs(Matrix(mm * kron(id_n, h.antipode) * h.comult - eta_eps)));
  rep.add("antipode-axiom", "t-compcomon", r_antipode, tol.eps);

  rep.add("star-involution", "aqg.standing",
          max_abs(Matrix(h.star * h.star.conjugate() - id_n)), tol.eps);

  double r_anti = max_abs(Vector(h.star_of(h.unit) - h.unit));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Vector lhs = h.star_of(h.lmul[i].col(j));
      Vector rhs = h.mul(h.star.col(j), h.star.col(i));
      r_anti = std::max(r_anti, max_abs(Vector(lhs - rhs)));
    }
  rep.add("star-antimult", "aqg.standing", r_anti, tol.eps);

  return rep;
}

namespace {

// The integral with counit value one: the unique solution of
// a x = counit(a) x, normalized so counit(x) = 1.
Vector normalized_integral(const FiniteHopfStarAlgebra& h, Tolerance tol) {
  const Index n = h.dim;
  Matrix sys(n * n, n);
  for (Index i = 0; i < n; ++i)
    sys.middleRows(i * n, n) =
        h.lmul[i] - h.counit(i) * Matrix::Identity(n, n);
  std::vector<Vector> sol = nullspace(sys, tol);
  if (sol.size() != 1)
    throw compute_error("integral space has dimension " +
                        std::to_string(sol.size()) + ", expected 1");
  Complex e = h.counit_of(sol[0]);
  if (std::abs(e) <= tol.eps)
    throw compute_error("counit vanishes on the integral (algebra is not "
                        "semisimple at this tolerance)");
  return sol[0] / e;
}

Complex functional(const Vector& phi, const Vector& a) {
  return phi.cwiseProduct(a).sum();
}

}  // namespace

HaarData haar_left(const FiniteHopfStarAlgebra& h, Tolerance tol,
                   HaarNormalization norm) {
  const Index n = h.dim;
  // (id (x) phi) coprod(a) = phi(a) 1 for all basis a, linear in phi.
  Matrix sys(n * n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        sys(i * n + j, k) =
            h.comult(j * n + k, i) - (k == i ? h.unit(j) : Complex(0));
  std::vector<Vector> sol = nullspace(sys, tol);
  if (sol.size() != 1)
    throw compute_error("left invariant functional space has dimension " +
                        std::to_string(sol.size()) + ", expected 1");

  HaarData haar;
  haar.normalization = norm;
  haar.integral = normalized_integral(h, tol);
  Complex scale = norm.kind == HaarNormalization::CounitBlock
                      ? functional(sol[0], haar.integral)
                      : functional(sol[0], h.unit);
  if (std::abs(scale) <= tol.eps)
    throw compute_error("Haar functional vanishes at the normalization point");
  haar.values = sol[0] / scale;

  haar.gram = Matrix(n, n);
  for (Index i = 0; i < n; ++i) {
    Vector si = h.star.col(i);
    for (Index j = 0; j < n; ++j)
      haar.gram(i, j) = functional(haar.values, h.mul(si, Vector(Vector::Unit(n, j))));
  }
  if (!is_hermitian_pd(haar.gram, tol))
    throw compute_error("Haar Gram matrix is not positive definite");

  Matrix pair(n, n);  // pair(i,j) = phi(e_i e_j)
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      pair(i, j) = functional(haar.values, h.lmul[i].col(j));
  Eigen::FullPivLU<Matrix> lu(pair);
  if (!lu.isInvertible())
    throw compute_error("Haar pairing is singular; functional not faithful");
  haar.modular_map = lu.solve(pair.transpose());
  return haar;
}

namespace {

struct Rng {
  std::mt19937_64 engine;
  std::normal_distribution<double> dist;
  explicit Rng(std::uint64_t seed) : engine(seed), dist(0.0, 1.0) {}
  Complex draw() { double re = dist(engine); double im = dist(engine); return {re, im}; }
  Vector draw_vector(Index n) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v(i) = draw();
    return v;
  }
};

// Newton refinement toward the nearest idempotent, keeping self-adjointness.
Vector refine_idempotent(const FiniteHopfStarAlgebra& h, Vector p,
                         Tolerance tol) {
  for (int iter = 0; iter < 64; ++iter) {
    p = 0.5 * (p + h.star_of(p));
    Vector p2 = h.mul(p, p);
    double res = max_abs(Vector(p2 - p));
    if (res <= 1e-3 * tol.eps) break;
    p = 3.0 * p2 - 2.0 * h.mul(p2, p);
  }
  return p;
}

// Orthonormal basis (standard inner product) of the range of an operator.
std::vector<Vector> range_basis(const Matrix& op, Tolerance tol) {
  Eigen::JacobiSVD<Matrix> svd(op, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  double cutoff = smax <= tol.eps ? tol.eps : tol.eps * smax;
  std::vector<Vector> basis;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) basis.push_back(svd.matrixU().col(i));
  return basis;
}

// Splits a self-adjoint central (or block) element into spectral projections
// by Lagrange interpolation inside the algebra.  `unit_elem` is the unit of
// the subalgebra the element lives in.
std::vector<Vector> spectral_idempotents(const FiniteHopfStarAlgebra& h,
                                         const Vector& elem,
                                         const Vector& unit_elem,
                                         const std::vector<double>& eigs,
                                         Tolerance tol) {
  std::vector<Vector> out;
  for (std::size_t a = 0; a < eigs.size(); ++a) {
    Vector p = unit_elem;
    for (std::size_t b = 0; b < eigs.size(); ++b) {
      if (b == a) continue;
      Vector factor = elem - eigs[b] * unit_elem;
      p = h.mul(p, factor) / (eigs[a] - eigs[b]);
    }
    out.push_back(refine_idempotent(h, p, tol));
  }
  return out;
}

// Distinct values of a real spectrum, clustered by gap.
std::vector<double> cluster_values(std::vector<double> v, double gap) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    double sum = 0.0;
    while (j < v.size() && v[j] - v[i] <= gap) sum += v[j++];
    out.push_back(sum / double(j - i));
    i = j;
  }
  return out;
}

}  // namespace

BlockStructure block_decompose(const FiniteHopfStarAlgebra& h,
                               const HaarData& haar, Tolerance tol,
                               std::uint64_t seed) {
  const Index n = h.dim;
  // Center: elements commuting with every basis element.
  Matrix sys(n * n, n);
  for (Index i = 0; i < n; ++i) {
    Matrix ri(n, n);
    for (Index j = 0; j < n; ++j) ri.col(j) = h.lmul[j].col(i);
    sys.middleRows(i * n, n) = h.lmul[i] - ri;
  }
  std::vector<Vector> center = nullspace(sys, tol);
  const Index c = static_cast<Index>(center.size());
  if (c == 0) throw compute_error("block decomposition: empty center");
  Matrix zb(n, c);
  for (Index a = 0; a < c; ++a) zb.col(a) = center[a];

  Rng rng(seed);
  std::vector<Vector> projections;
  for (int attempt = 0; attempt < 32 && projections.empty(); ++attempt) {
    Vector w = zb * rng.draw_vector(c);
    Vector z = w + h.star_of(w);
    // Restrict left multiplication by z to the center.
    Matrix m = zb.adjoint() * (h.left_mul(z) * zb);
    Eigen::ComplexEigenSolver<Matrix> es(m);
    if (es.info() != Eigen::Success) continue;
    std::vector<double> eigs;
    for (Index a = 0; a < c; ++a) eigs.push_back(es.eigenvalues()(a).real());
    double scale = 1.0;
    for (double e : eigs) scale = std::max(scale, std::abs(e));
    std::sort(eigs.begin(), eigs.end());
    bool separated = true;
    for (Index a = 0; a + 1 < c; ++a)
      if (eigs[a + 1] - eigs[a] < 1e-4 * scale) separated = false;
    if (!separated) continue;
    projections = spectral_idempotents(h, z, h.unit, eigs, tol);
  }
  if (projections.empty())
    throw compute_error("block decomposition: could not separate the center "
                        "(retry with a different seed)");

  BlockStructure bs;
  bs.seed = seed;
  Index dim_sum = 0;
  for (const Vector& p : projections) {
    Block blk;
    blk.central_projection = p;
    Matrix corner = h.left_mul(p) * h.right_mul(p);
    Index r = rank(corner, tol);
    Index d = static_cast<Index>(std::llround(std::sqrt(double(r))));
    if (d * d != r)
      throw compute_error("block decomposition: block rank " +
                          std::to_string(r) + " is not a square");
    blk.block_dim = d;
    dim_sum += r;

    // Minimal projection q inside the block, then the left module A q.
    Vector q = p;
    if (d > 1) {
      std::vector<Vector> basis = range_basis(corner, tol);
      Matrix bb(n, static_cast<Index>(basis.size()));
      for (Index a = 0; a < bb.cols(); ++a) bb.col(a) = basis[a];
      bool found = false;
      for (int attempt = 0; attempt < 32 && !found; ++attempt) {
        Vector w = bb * rng.draw_vector(bb.cols());
        Vector hh = w + h.star_of(w);
        Matrix m = bb.adjoint() * (h.left_mul(hh) * bb);
        Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()));
        std::vector<double> all(es.eigenvalues().data(),
                                es.eigenvalues().data() + es.eigenvalues().size());
        double scale = std::max(1.0, std::abs(all.front()));
        scale = std::max(scale, std::abs(all.back()));
        std::vector<double> vals = cluster_values(all, 1e-4 * scale);
        if (static_cast<Index>(vals.size()) != d) continue;
        std::vector<Vector> sp = spectral_idempotents(h, hh, p, vals, tol);
        q = sp.front();
        Vector q2 = h.mul(q, q);
        if (max_abs(Vector(q2 - q)) <= tol.eps) found = true;
      }
      if (!found)
        throw compute_error("block decomposition: no minimal projection found");
    }

    std::vector<Vector> module = range_basis(h.right_mul(q), tol);
    if (static_cast<Index>(module.size()) != d)
      throw compute_error("block decomposition: module dimension mismatch");
    // Gram-orthonormalize with respect to the Haar inner product.
    Matrix w(n, d);
    Index col = 0;
    for (Vector v : module) {
      for (Index a = 0; a < col; ++a)
        v -= (w.col(a).adjoint() * haar.gram * v)(0) * w.col(a);
      double nrm = std::sqrt(std::abs((v.adjoint() * haar.gram * v)(0)));
      if (nrm <= tol.eps)
        throw compute_error("block decomposition: degenerate module basis");
      w.col(col++) = v / nrm;
    }
    blk.carrier = w;
    bs.blocks.push_back(std::move(blk));
  }
  if (dim_sum != n)
    throw compute_error(
        "block decomposition: block dimensions sum to " +
        std::to_string(dim_sum) + ", expected " + std::to_string(n));

  // Residual sanity on the projections as a family.
  Vector total = Vector::Zero(n);
  for (const Block& b : bs.blocks) total += b.central_projection;
  if (max_abs(Vector(total - h.unit)) > 1e3 * tol.eps)
    throw compute_error("block decomposition: projections do not sum to 1");

  // Deterministic order: counit block first, then ascending dimension,
  // then lexicographic on the projection coordinates.
  auto eps_of = [&](const Block& b) {
    return std::abs(h.counit_of(b.central_projection) - 1.0) <= 0.5;
  };
  std::stable_sort(bs.blocks.begin(), bs.blocks.end(),
                   [&](const Block& x, const Block& y) {
                     bool ex = eps_of(x), ey = eps_of(y);
                     if (ex != ey) return ex;
                     if (x.block_dim != y.block_dim)
                       return x.block_dim < y.block_dim;
                     for (Index i = 0; i < x.central_projection.size(); ++i) {
                       double xr = x.central_projection(i).real();
                       double yr = y.central_projection(i).real();
                       if (xr != yr) return xr > yr;
                     }
                     return false;
                   });

  Index counit_hits = 0;
  for (std::size_t b = 0; b < bs.blocks.size(); ++b) {
    Complex e = h.counit_of(bs.blocks[b].central_projection);
    if (std::abs(e - 1.0) <= 1e3 * tol.eps) {
      bs.counit_block = static_cast<Index>(b);
      ++counit_hits;
    } else if (std::abs(e) > 1e3 * tol.eps) {
      throw compute_error("block decomposition: counit is neither 0 nor 1 on "
                          "a central projection");
    }
  }
  if (counit_hits != 1 || bs.blocks[bs.counit_block].block_dim != 1)
    throw compute_error("block decomposition: counit block not found");
  return bs;
}

DualAlgebra dual(const FiniteHopfStarAlgebra& h) {
  const Index n = h.dim;
  DualAlgebra d;
  FiniteHopfStarAlgebra& a = d.algebra;
  a.dim = n;
  a.basis_names.reserve(n);
  for (Index i = 0; i < n; ++i) a.basis_names.push_back(h.basis_names[i] + "^");
  a.lmul.assign(n, Matrix::Zero(n, n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        a.lmul[i](k, j) = h.comult(i * n + j, k);
  a.comult = Matrix::Zero(n * n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        a.comult(j * n + k, i) = h.lmul[j](i, k);
  a.unit = h.counit.transpose();
  a.counit = h.unit.transpose();
  a.antipode = h.antipode.transpose();
  a.star = (h.star * h.antipode.conjugate()).adjoint();
  d.pairing = Matrix::Identity(n, n);
  return d;
}

FourierData fourier(const FiniteHopfStarAlgebra& h, const HaarData& haar) {
  const Index n = h.dim;
  FourierData f;
  f.transform = Matrix(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      f.transform(i, j) = haar.values.cwiseProduct(h.lmul[i].col(j)).sum();
  Eigen::FullPivLU<Matrix> lu(f.transform);
  if (!lu.isInvertible())
    throw compute_error("Fourier transform is singular");
  f.inverse = lu.inverse();
  f.dual_right_haar = h.counit * f.inverse;
  return f;
}

std::vector<Vector> group_like_unitaries(const FiniteHopfStarAlgebra& h,
                                         Tolerance tol, std::uint64_t seed) {
  DualAlgebra dl = dual(h);
  HaarData dual_haar = haar_left(dl.algebra, tol);
  BlockStructure dbs = block_decompose(dl.algebra, dual_haar, tol, seed);
  const Index n = h.dim;

  std::vector<Vector> out;
  for (const Block& b : dbs.blocks) {
    if (b.block_dim != 1) continue;
    const Vector& p = b.central_projection;
    Complex norm = p.squaredNorm();
    Vector g(n);
    for (Index i = 0; i < n; ++i) {
      // On a one-dimensional block every element acts by a scalar character.
      Vector v = dl.algebra.mul(Vector(Vector::Unit(n, i)), p);
      g(i) = p.dot(v) / norm;
    }
    double res = max_abs(Vector(h.comult * g - kron(g, g)));
    res = std::max(res, max_abs(Vector(h.mul(h.star_of(g), g) - h.unit)));
    res = std::max(res, max_abs(Vector(h.mul(g, h.star_of(g)) - h.unit)));
    if (res > 1e3 * tol.eps)
      throw compute_error(
          "group-like candidate fails its defining equations (residual " +
          std::to_string(res) + "); tolerance may be too tight");
    out.push_back(std::move(g));
  }

  // Closure under products and inverses.
  auto find = [&](const Vector& v) {
    for (std::size_t i = 0; i < out.size(); ++i)
      if (max_abs(Vector(out[i] - v)) <= 1e3 * tol.eps) return true;
    return false;
  };
  for (const Vector& g1 : out)
    for (const Vector& g2 : out)
      if (!find(h.mul(g1, g2)))
        throw compute_error("group-like set is not closed under products");
  for (const Vector& g : out)
    if (!find(h.star_of(g)))
      throw compute_error("group-like set is not closed under inverses");
  return out;
}

FiniteHopfStarAlgebra group_algebra(const CayleyTable& g) {
  g.validate();
  const Index n = g.order();
  FiniteHopfStarAlgebra h;
  h.dim = n;
  for (Index i = 0; i < n; ++i) h.basis_names.push_back("g" + std::to_string(i));
  h.lmul.assign(n, Matrix::Zero(n, n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) h.lmul[i](g.mul(int(i), int(j)), j) = 1.0;
  h.comult = Matrix::Zero(n * n, n);
  for (Index i = 0; i < n; ++i) h.comult(i * n + i, i) = 1.0;
  h.unit = Vector::Unit(n, 0);
  h.counit = RowVector::Ones(n);
  h.antipode = Matrix::Zero(n, n);
  h.star = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    h.antipode(g.inverse(int(i)), i) = 1.0;
    h.star(g.inverse(int(i)), i) = 1.0;
  }
  return h;
}

FiniteHopfStarAlgebra function_algebra(const CayleyTable& g) {
  g.validate();
  const Index n = g.order();
  FiniteHopfStarAlgebra h;
  h.dim = n;
  for (Index i = 0; i < n; ++i) h.basis_names.push_back("d" + std::to_string(i));
  h.lmul.assign(n, Matrix::Zero(n, n));
  for (Index i = 0; i < n; ++i) h.lmul[i](i, i) = 1.0;
  h.comult = Matrix::Zero(n * n, n);
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k) h.comult(j * n + k, g.mul(int(j), int(k))) = 1.0;
  h.unit = Vector::Ones(n);
  h.counit = RowVector::Zero(n);
  h.counit(0) = 1.0;
  h.antipode = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) h.antipode(g.inverse(int(i)), i) = 1.0;
  h.star = Matrix::Identity(n, n);
  return h;
}

}  // namespace qgv
