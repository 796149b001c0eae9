#include "qgv/fusion.hpp"

#include <cmath>

namespace qgv {

FusionData fusion_from_category(const FiniteHopfStarAlgebra& h,
                                const HaarData& haar,
                                const BlockStructure& blocks, Tolerance tol) {
  const int nb = static_cast<int>(blocks.blocks.size());
  FusionData fd;
  fd.size = nb;
  fd.unit = static_cast<int>(blocks.counit_block);
  fd.coeff.assign(nb, std::vector<std::vector<std::int64_t>>(
                          nb, std::vector<std::int64_t>(nb, 0)));

  std::vector<Representation> irreps;
  for (int i = 0; i < nb; ++i)
    irreps.push_back(block_irrep(h, haar, blocks, i));

  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      Representation prod = tensor_rep(irreps[i], irreps[j]);
      Decomposition dec = decompose(prod, haar, blocks, tol);
      for (int k = 0; k < nb; ++k)
        fd.coeff[i][j][k] = dec.multiplicities[k];
    }

  fd.bar.assign(nb, -1);
  for (int i = 0; i < nb; ++i) {
    Representation conj = conjugate_rep(irreps[i], tol);
    for (int k = 0; k < nb; ++k) {
      std::size_t d = hom_space(conj, irreps[k], tol).size();
      if (d == 1) {
        if (fd.bar[i] != -1)
          throw compute_error("fusion: conjugate matches several blocks");
        fd.bar[i] = k;
      } else if (d > 1) {
        throw compute_error("fusion: conjugate match is not multiplicity-free");
      }
    }
    if (fd.bar[i] == -1)
      throw compute_error("fusion: conjugate of block " + std::to_string(i) +
                          " matches no block");
  }
  return fd;
}

Report verify_fusion_invariants(const FusionData& fd) {
  Report rep;
  const int nb = fd.size;
  bool unit_laws = true, duality = true, assoc = true, bar_ok = true;
  for (int j = 0; j < nb; ++j)
    for (int k = 0; k < nb; ++k) {
      if (fd.n(fd.unit, j, k) != (j == k ? 1 : 0)) unit_laws = false;
      if (fd.n(j, fd.unit, k) != (j == k ? 1 : 0)) unit_laws = false;
    }
  for (int i = 0; i < nb; ++i) {
    if (fd.bar[i] < 0 || fd.bar[i] >= nb || fd.bar[fd.bar[i]] != i)
      bar_ok = false;
    for (int j = 0; j < nb; ++j)
      if (fd.n(i, j, fd.unit) != (j == fd.bar[i] ? 1 : 0)) duality = false;
  }
  for (int i = 0; i < nb && assoc; ++i)
    for (int j = 0; j < nb && assoc; ++j)
      for (int l = 0; l < nb && assoc; ++l)
        for (int mm = 0; mm < nb; ++mm) {
          std::int64_t lhs = 0, rhs = 0;
          for (int k = 0; k < nb; ++k) {
            lhs += fd.n(i, j, k) * fd.n(k, l, mm);
            rhs += fd.n(j, l, k) * fd.n(i, k, mm);
          }
          if (lhs != rhs) {
            assoc = false;
            break;
          }
        }
  rep.add_exact("fusion-unit-laws", "l-absor", unit_laws);
  rep.add_exact("fusion-bar-involution", "l-absor", bar_ok);
  rep.add_exact("fusion-duality", "l-absor", duality);
  rep.add_exact("fusion-associativity", "l-absor", assoc);
  return rep;
}

Report verify_dimension_function(const FusionData& fd,
                                 const std::vector<std::int64_t>& n) {
  Report rep;
  const int nb = fd.size;
  if (static_cast<int>(n.size()) != nb)
    throw input_error("dimension function has wrong length");
  bool positive = true;
  for (std::int64_t v : n)
    if (v <= 0) positive = false;
  rep.add_exact("dimfn-positive", "dimension-function", positive);
  rep.add_exact("dimfn-unit", "dimension-function",
                positive && n[fd.unit] == 1);
  bool bar_inv = true, mult = true;
  for (int i = 0; i < nb; ++i) {
    if (n[fd.bar[i]] != n[i]) bar_inv = false;
    for (int j = 0; j < nb; ++j) {
      std::int64_t sum = 0;
      for (int k = 0; k < nb; ++k) sum += fd.n(i, j, k) * n[k];
      if (sum != n[i] * n[j]) mult = false;
    }
  }
  rep.add_exact("dimfn-conjugation", "dimension-function", bar_inv);
  rep.add_exact("dimfn-multiplicative", "dimension-function", mult);
  return rep;
}

AbsorbingMultiplicities absorbing_multiplicities(
    const FusionData& fd, const std::vector<std::int64_t>& n) {
  Report ok = verify_dimension_function(fd, n);
  if (!ok.pass())
    throw input_error("absorbing multiplicities need a valid dimension function");
  AbsorbingMultiplicities out;
  const int nb = fd.size;
  out.q.resize(nb);
  for (int i = 0; i < nb; ++i) out.q[i] = n[fd.bar[i]];
  out.identity_holds = true;
  for (int j = 0; j < nb; ++j)
    for (int k = 0; k < nb; ++k) {
      std::int64_t sum = 0;
      for (int i = 0; i < nb; ++i) sum += fd.n(i, j, k) * n[fd.bar[i]];
      if (sum != n[j] * n[fd.bar[k]]) out.identity_holds = false;
    }
  if (!out.identity_holds)
    throw compute_error("absorption identity fails for a verified dimension "
                        "function; fusion data is inconsistent");
  return out;
}

PerronFrobeniusDims perron_frobenius_dims(const FusionData& fd, Tolerance tol) {
  PerronFrobeniusDims out;
  const int nb = fd.size;
  out.all_integral = true;
  for (int i = 0; i < nb; ++i) {
    Eigen::MatrixXd m(nb, nb);
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < nb; ++k) m(j, k) = static_cast<double>(fd.n(i, j, k));
    Eigen::EigenSolver<Eigen::MatrixXd> es(m);
    double radius = 0.0;
    for (int j = 0; j < nb; ++j)
      radius = std::max(radius, std::abs(es.eigenvalues()(j)));
    out.dims.push_back(radius);
    bool integral = std::abs(radius - std::round(radius)) <= tol.eps;
    out.integral.push_back(integral);
    if (!integral) out.all_integral = false;
  }
  return out;
}

}  // namespace qgv
