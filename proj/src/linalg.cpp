#include "drazspec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "drazspec/error.hpp"

namespace drazspec {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::NotSquare: return "not_square";
    case ErrorCode::NoConvergence: return "no_convergence";
    case ErrorCode::Singular: return "singular";
    case ErrorCode::IllConditioned: return "ill_conditioned";
    case ErrorCode::InvalidDescriptor: return "invalid_descriptor";
    case ErrorCode::NotInSpectrum: return "not_in_spectrum";
    case ErrorCode::CheckFailed: return "check_failed";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

double Tolerance::eig_cluster_for(const ComplexMatrix& a) const {
  return eig_cluster ? *eig_cluster : kDefaultEigCluster * (1.0 + a.norm());
}

double Tolerance::rank_rel_for(Eigen::Index rows, Eigen::Index cols) const {
  return rank_rel ? *rank_rel
                  : kDefaultRankRel * static_cast<double>(std::max<Eigen::Index>(rows, cols));
}

double Tolerance::residual() const { return residual_rel ? *residual_rel : kDefaultResidualRel; }

void Tolerance::check() const {
  auto positive = [](const std::optional<double>& v, const char* name) {
    if (v && !(*v > 0.0 && std::isfinite(*v))) {
      throw Error(ErrorCode::InvalidArgument, std::string("tolerance ") + name + " must be positive");
    }
  };
  positive(eig_cluster, "eig_cluster");
  positive(rank_rel, "rank_rel");
  positive(residual_rel, "residual_rel");
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() == 0 || a.rows() != a.cols()) {
    throw Error(ErrorCode::NotSquare, std::string(what) + ": expected a nonempty square matrix, got " +
                                          std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

void require_finite(const ComplexMatrix& a, const char* what) {
  if (!a.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + ": matrix has non-finite entries");
  }
}

std::vector<double> singular_values(const ComplexMatrix& a) {
  if (a.size() == 0) return {};
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

std::size_t numerical_rank(const ComplexMatrix& a, const Tolerance& tol) {
  const auto s = singular_values(a);
  if (s.empty() || s.front() == 0.0) return 0;
  const double cutoff = tol.rank_rel_for(a.rows(), a.cols()) * s.front();
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [cutoff](double v) { return v > cutoff; }));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix vec(const ComplexMatrix& a) {
  ComplexMatrix v(a.size(), 1);
  for (Eigen::Index j = 0; j < a.cols(); ++j) v.block(j * a.rows(), 0, a.rows(), 1) = a.col(j);
  return v;
}

ComplexMatrix unvec(const ComplexMatrix& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.cols() != 1 || v.rows() != rows * cols) {
    throw Error(ErrorCode::InvalidArgument, "unvec: vector length does not match target shape");
  }
  ComplexMatrix a(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) a.col(j) = v.block(j * rows, 0, rows, 1);
  return a;
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
  require_square(a, "solve");
  if (b.rows() != a.rows()) {
    throw Error(ErrorCode::InvalidArgument, "solve: right-hand side has incompatible row count");
  }
  const auto n = static_cast<std::size_t>(a.rows());
  if (numerical_rank(a, tol) < n) {
    throw Error(ErrorCode::Singular, "solve: matrix is singular to tolerance");
  }
  const Eigen::PartialPivLU<ComplexMatrix> lu(a);
  ComplexMatrix x = lu.solve(b);
  const double bnorm = b.norm();
  const double res = (a * x - b).norm();
  if (res > tol.residual() * bnorm) {
    throw Error(ErrorCode::Singular, "solve: residual " + sci(res) +
                                         " exceeds tolerance; matrix is too ill-conditioned");
  }
  return x;
}

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix matrix_power(const ComplexMatrix& a, std::size_t k) {
  ComplexMatrix out = identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) out = out * a;
  return out;
}

double condition_number(const ComplexMatrix& a) {
  const auto s = singular_values(a);
  if (s.empty()) return 1.0;
  if (s.back() == 0.0) return std::numeric_limits<double>::infinity();
  return s.front() / s.back();
}

ComplexMatrix jordan_block(Complex lambda, Eigen::Index k) {
  ComplexMatrix j = ComplexMatrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    j(i, i) = lambda;
    if (i + 1 < k) j(i, i + 1) = 1.0;
  }
  return j;
}

ComplexMatrix block_diagonal(const std::vector<ComplexMatrix>& blocks) {
  Eigen::Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return out;
}

namespace {
bool lex_less(Complex x, Complex y) {
  return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
}
}  // namespace

std::vector<PointCluster> cluster_points(const std::vector<Complex>& points, double radius) {
  // Union-find over all pairs; n is small.
  const std::size_t n = points.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(points[i] - points[j]) <= radius) parent[find(i)] = find(j);
    }
  }
  std::vector<std::size_t> root_slot(n, n);
  std::vector<PointCluster> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (root_slot[r] == n) {
      root_slot[r] = out.size();
      out.push_back({});
    }
    out[root_slot[r]].members.push_back(points[i]);
  }
  for (auto& c : out) {
    Complex sum = 0.0;
    for (Complex m : c.members) sum += m;
    c.center = sum / static_cast<double>(c.members.size());
  }
  std::sort(out.begin(), out.end(),
            [](const PointCluster& x, const PointCluster& y) { return lex_less(x.center, y.center); });
  return out;
}

}  // namespace drazspec
