#include "drazspec/drazin.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "drazspec/error.hpp"

namespace drazspec {
namespace {

// Staircase form of the range chain: Q_j is an orthonormal basis of
// range(A^j), obtained from the SVD of A Q_{j-1}. Singular values of A Q stay
// on the scale of ||A||, so one cutoff rank_rel * ||A|| serves every step,
// unlike explicit powers whose small singular values shrink geometrically.
struct RankChain {
  std::size_t index = 0;
  std::size_t stable_rank = 0;  // rank(A^index)
  ComplexMatrix range;          // orthonormal basis of range(A^index)
};

RankChain rank_chain(const ComplexMatrix& a, const Tolerance& tol) {
  const auto n = static_cast<std::size_t>(a.rows());
  const double cutoff = tol.rank_rel_for(a.rows(), a.cols()) * singular_values(a).front();

  ComplexMatrix q = identity(a.rows());
  for (std::size_t k = 0; k < n; ++k) {
    Eigen::JacobiSVD<ComplexMatrix> svd(a * q, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    Eigen::Index r = 0;
    while (r < s.size() && s(r) > cutoff) ++r;
    if (static_cast<Eigen::Index>(q.cols()) == r) return {k, static_cast<std::size_t>(r), q};
    q = svd.matrixU().leftCols(r);
    if (r == 0) return {k + 1, 0, q};
  }
  return {n, static_cast<std::size_t>(q.cols()), q};
}

double rel(double num, double den) { return den > 0.0 ? num / den : num; }

}  // namespace

std::size_t index_of(const ComplexMatrix& a, const Tolerance& tol) {
  require_square(a, "index_of");
  require_finite(a, "index_of");
  tol.check();
  return rank_chain(a, tol).index;
}

DrazinDecomposition drazin_inverse(const ComplexMatrix& a, const Tolerance& tol) {
  require_square(a, "drazin_inverse");
  require_finite(a, "drazin_inverse");
  tol.check();

  const Eigen::Index n = a.rows();
  const RankChain chain = rank_chain(a, tol);

  DrazinDecomposition d;
  d.index = chain.index;

  if (chain.index == 0) {
    d.drazin_inverse = solve(a, identity(n), tol);
    d.basis = identity(n);
    d.core_block = a;
    d.nil_block = ComplexMatrix(0, 0);
    return d;
  }
  if (chain.stable_rank == 0) {
    d.drazin_inverse = ComplexMatrix::Zero(n, n);
    d.basis = identity(n);
    d.core_block = ComplexMatrix(0, 0);
    d.nil_block = a;
    return d;
  }

  const auto r = static_cast<Eigen::Index>(chain.stable_rank);
  // null(A^k) is the orthogonal complement of range((A^*)^k).
  const RankChain adjoint_chain = rank_chain(a.adjoint(), tol);
  if (adjoint_chain.index != chain.index || adjoint_chain.stable_rank != chain.stable_rank) {
    throw Error(ErrorCode::IllConditioned, "drazin_inverse: rank chains of A and A^* disagree");
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(adjoint_chain.range);
  const ComplexMatrix full_q = qr.householderQ() * identity(n);

  ComplexMatrix basis(n, n);
  basis.leftCols(r) = chain.range;
  basis.rightCols(n - r) = full_q.rightCols(n - r);

  const double cond = condition_number(basis);
  if (!(cond <= kMaxBasisCondition)) {
    throw Error(ErrorCode::IllConditioned,
                "drazin_inverse: range/null basis condition number " + sci(cond) +
                    " exceeds cap " + sci(kMaxBasisCondition));
  }

  const Eigen::PartialPivLU<ComplexMatrix> lu(basis);
  const ComplexMatrix basis_inv = lu.inverse();
  const ComplexMatrix similar = basis_inv * a * basis;

  d.basis = basis;
  d.core_block = similar.topLeftCorner(r, r);
  d.nil_block = similar.bottomRightCorner(n - r, n - r);
  d.drazin_inverse = basis.leftCols(r) * solve(d.core_block, basis_inv.topRows(r), tol);
  return d;
}

DrazinResiduals drazin_residuals(const ComplexMatrix& a, const ComplexMatrix& x, std::size_t index) {
  const ComplexMatrix ak = matrix_power(a, index);
  DrazinResiduals r;
  r.power = rel((ak * x * a - ak).norm(), ak.norm() + std::pow(a.norm(), static_cast<double>(index)));
  r.reflexive = rel((x * a * x - x).norm(), x.norm());
  r.commutator = rel((a * x - x * a).norm(), a.norm() * x.norm());
  return r;
}

std::vector<EigenCluster> spectral_clusters(const ComplexMatrix& a, const Tolerance& tol) {
  require_square(a, "spectral_clusters");
  const auto eigs = eigenvalues(a, tol);
  const auto n = static_cast<std::size_t>(a.rows());
  const double r_min = tol.eig_cluster_for(a);

  double max_abs = 0.0;
  for (Complex e : eigs) max_abs = std::max(max_abs, std::abs(e));
  const double r_start = std::max(r_min, 1e-2 * (1.0 + max_abs));

  auto chain_at = [&](Complex c) { return rank_chain(a - c * identity(a.rows()), tol); };

  std::vector<EigenCluster> out;
  std::function<void(const std::vector<Complex>&, double)> refine =
      [&](const std::vector<Complex>& points, double radius) {
        for (const auto& group : cluster_points(points, radius)) {
          const RankChain chain = chain_at(group.center);
          const std::size_t deficiency = n - chain.stable_rank;
          const bool verified = chain.index > 0 && deficiency == group.members.size();
          if (verified || radius <= r_min || group.members.size() == 1) {
            out.push_back({group.center, group.members.size(), std::max<std::size_t>(chain.index, 1),
                           verified});
            continue;
          }
          // Shrink until the group actually splits; re-validate only then.
          double next = radius;
          std::size_t parts = 1;
          while (parts == 1 && next > r_min) {
            next = std::max(r_min, next / 4.0);
            parts = cluster_points(group.members, next).size();
          }
          if (parts == 1) {
            out.push_back({group.center, group.members.size(), std::max<std::size_t>(chain.index, 1),
                           false});
          } else {
            refine(group.members, next);
          }
        }
      };
  refine(eigs, r_start);

  // Snap near-zero centers to exactly zero, merging if more than one lands there.
  std::vector<EigenCluster> merged;
  EigenCluster zero{Complex(0.0), 0, 0, false};
  for (auto& c : out) {
    if (std::abs(c.value) <= r_min) {
      zero.multiplicity += c.multiplicity;
    } else {
      merged.push_back(c);
    }
  }
  if (zero.multiplicity > 0) {
    const RankChain chain = chain_at(Complex(0.0));
    zero.index = std::max<std::size_t>(chain.index, 1);
    zero.rank_verified = chain.index > 0 && n - chain.stable_rank == zero.multiplicity;
    merged.push_back(zero);
  }
  std::sort(merged.begin(), merged.end(), [](const EigenCluster& x, const EigenCluster& y) {
    return x.value.real() < y.value.real() ||
           (x.value.real() == y.value.real() && x.value.imag() < y.value.imag());
  });
  return merged;
}

std::size_t pole_order(const ComplexMatrix& a, Complex lambda, const Tolerance& tol) {
  const auto clusters = spectral_clusters(a, tol);
  const EigenCluster* nearest = nullptr;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : clusters) {
    const double d = std::abs(c.value - lambda);
    if (d < best) {
      best = d;
      nearest = &c;
    }
  }
  const double radius = tol.eig_cluster_for(a);
  if (nearest == nullptr || best > radius) {
    throw Error(ErrorCode::NotInSpectrum, "pole_order: (" + std::to_string(lambda.real()) + ", " +
                                              std::to_string(lambda.imag()) +
                                              ") is not within eig_cluster of an eigenvalue");
  }
  return nearest->index;
}

}  // namespace drazspec
