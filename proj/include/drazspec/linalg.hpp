#pragma once

// Dense complex linear algebra kernel shared by every other module.

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace drazspec {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Numerical tolerances. Unset fields resolve to matrix-dependent defaults:
///   eig_cluster  = 1e-7 * (1 + ||A||_F)
///   rank_rel     = 1e-10 * max(rows, cols)
///   residual_rel = 1e-8
struct Tolerance {
  std::optional<double> eig_cluster;
  std::optional<double> rank_rel;
  std::optional<double> residual_rel;

  double eig_cluster_for(const ComplexMatrix& a) const;
  double rank_rel_for(Eigen::Index rows, Eigen::Index cols) const;
  double residual() const;

  /// Throws InvalidArgument if any explicitly set field is not strictly positive.
  void check() const;
};

inline constexpr double kDefaultEigCluster = 1e-7;
inline constexpr double kDefaultRankRel = 1e-10;
inline constexpr double kDefaultResidualRel = 1e-8;

/// Throws NotSquare unless a is square and nonempty.
void require_square(const ComplexMatrix& a, const char* what);
/// Throws InvalidArgument if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& a, const char* what);

/// Eigenvalues with multiplicity, via Householder reduction to Hessenberg form
/// followed by single-shift complex QR with deflation. The total number of QR
/// sweeps is capped at 30 * n^2; on failure the unconverged block is reported.
std::vector<Complex> eigenvalues(const ComplexMatrix& a, const Tolerance& tol = {});

/// Singular values in decreasing order.
std::vector<double> singular_values(const ComplexMatrix& a);

/// Number of singular values above rank_rel * sigma_max (0 for the zero matrix).
std::size_t numerical_rank(const ComplexMatrix& a, const Tolerance& tol = {});

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Column-stacking vectorisation and its inverse.
ComplexMatrix vec(const ComplexMatrix& a);
ComplexMatrix unvec(const ComplexMatrix& v, Eigen::Index rows, Eigen::Index cols);

/// Solves a * x = b. Throws Singular when a is rank deficient to tolerance or the
/// residual check ||a x - b||_F <= residual_rel * ||b||_F fails.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol = {});

ComplexMatrix identity(Eigen::Index n);
ComplexMatrix matrix_power(const ComplexMatrix& a, std::size_t k);

/// 2-norm condition number from singular values; infinity when singular.
double condition_number(const ComplexMatrix& a);

/// Jordan block J_k(lambda): lambda on the diagonal, ones on the superdiagonal.
ComplexMatrix jordan_block(Complex lambda, Eigen::Index k);
ComplexMatrix block_diagonal(const std::vector<ComplexMatrix>& blocks);

/// A group of nearby eigenvalues represented by its mean.
struct PointCluster {
  Complex center;
  std::vector<Complex> members;
};

/// Single-linkage grouping of points whose chained distance is <= radius.
/// Clusters come back ordered lexicographically by (re, im) of the center.
std::vector<PointCluster> cluster_points(const std::vector<Complex>& points, double radius);

}  // namespace drazspec
