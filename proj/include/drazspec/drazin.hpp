#pragma once

#include <cstddef>
#include <vector>

#include "drazspec/linalg.hpp"

namespace drazspec {

/// Basis matrices whose 2-norm condition number exceeds this are rejected.
inline constexpr double kMaxBasisCondition = 1e10;

/// Core-nilpotent splitting of a square matrix A:
///   basis^{-1} A basis = diag(core_block, nil_block),
///   A^D = basis diag(core_block^{-1}, 0) basis^{-1}.
/// The first core_block.rows() columns of basis span range(A^k), the rest span
/// null(A^k). When A^k = 0 the core block is 0x0 and A^D = 0.
struct DrazinDecomposition {
  std::size_t index = 0;
  ComplexMatrix drazin_inverse;
  ComplexMatrix basis;
  ComplexMatrix core_block;
  ComplexMatrix nil_block;
};

/// Relative Frobenius residuals of the three defining identities.
struct DrazinResiduals {
  /// ||A^k X A - A^k|| / (||A^k|| + ||A||^k). The ||A||^k term keeps the
  /// scale meaningful when A^k is zero up to roundoff (nilpotent A).
  double power = 0.0;
  double reflexive = 0.0;    ///< ||X A X - X|| / ||X||        (absolute if X = 0)
  double commutator = 0.0;   ///< ||A X - X A|| / (||A|| ||X||) (absolute if either is 0)

  bool within(double tol) const { return power <= tol && reflexive <= tol && commutator <= tol; }
};

/// Smallest k with rank(A^k) = rank(A^{k+1}), A^0 = I. Always <= n.
std::size_t index_of(const ComplexMatrix& a, const Tolerance& tol = {});

/// Throws IllConditioned if the splitting basis is too ill-conditioned to be
/// trusted, rather than returning an inaccurate inverse.
DrazinDecomposition drazin_inverse(const ComplexMatrix& a, const Tolerance& tol = {});

DrazinResiduals drazin_residuals(const ComplexMatrix& a, const ComplexMatrix& x, std::size_t index);

/// A distinct eigenvalue with algebraic multiplicity and index of A - value I.
struct EigenCluster {
  Complex value;
  std::size_t multiplicity = 0;
  std::size_t index = 0;
  bool rank_verified = false;  ///< multiplicity confirmed by n - rank((A - value I)^index)
};

/// Distinct eigenvalues of A. Computed eigenvalues of a defective eigenvalue
/// scatter on the order of eps^(1/k), so grouping starts from a loose radius and
/// a group is accepted only when the rank deficiency of (A - c I)^k at its mean c
/// matches its size; otherwise it is split at a smaller radius, down to
/// eig_cluster. Values with |c| <= eig_cluster are reported as exactly 0.
std::vector<EigenCluster> spectral_clusters(const ComplexMatrix& a, const Tolerance& tol = {});

/// Order of lambda as a pole of the resolvent, i.e. index_of(A - lambda I),
/// evaluated at the nearest clustered eigenvalue. Throws NotInSpectrum when no
/// eigenvalue lies within eig_cluster of lambda.
std::size_t pole_order(const ComplexMatrix& a, Complex lambda, const Tolerance& tol = {});

}  // namespace drazspec
