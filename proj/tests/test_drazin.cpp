#include <gtest/gtest.h>

#include <random>

#include "drazspec/drazin.hpp"
#include "drazspec/error.hpp"

using namespace drazspec;

namespace {

ComplexMatrix random_similarity(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  ComplexMatrix p(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) p(i, j) = Complex(nd(rng), nd(rng));
  return p + 3.0 * identity(n);
}

// Jordan matrix together with its Drazin inverse, built block by block:
// nonzero blocks are inverted, nilpotent blocks map to zero.
struct JordanCase {
  ComplexMatrix j;
  ComplexMatrix jd;
  std::size_t index;
};

JordanCase jordan_case(const std::vector<std::pair<Complex, Eigen::Index>>& blocks) {
  std::vector<ComplexMatrix> js;
  std::vector<ComplexMatrix> jds;
  std::size_t index = 0;
  for (const auto& [lambda, k] : blocks) {
    const ComplexMatrix b = jordan_block(lambda, k);
    js.push_back(b);
    if (lambda == Complex(0.0)) {
      jds.push_back(ComplexMatrix::Zero(k, k));
      index = std::max<std::size_t>(index, static_cast<std::size_t>(k));
    } else {
      jds.push_back(b.inverse());
    }
  }
  return {block_diagonal(js), block_diagonal(jds), index};
}

// Classical closed form A^D = A^k (A^{2k+1})^+ A^k, pseudoinverse by complete
// orthogonal decomposition.
ComplexMatrix drazin_by_pseudoinverse(const ComplexMatrix& a, std::size_t k) {
  const ComplexMatrix ak = matrix_power(a, k);
  Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod(matrix_power(a, 2 * k + 1));
  cod.setThreshold(1e-9);
  return ak * cod.pseudoInverse() * ak;
}

double rel_diff(const ComplexMatrix& x, const ComplexMatrix& y) {
  const double scale = std::max(1.0, y.norm());
  return (x - y).norm() / scale;
}

}  // namespace

TEST(IndexOf, Examples) {
  EXPECT_EQ(index_of(identity(3)), 0u);
  EXPECT_EQ(index_of(jordan_block(0.0, 3)), 3u);
  EXPECT_EQ(index_of(block_diagonal({jordan_block(0.0, 2), jordan_block(5.0, 1)})), 2u);
}

TEST(IndexOf, ZeroMatrixAndNonSquare) {
  EXPECT_EQ(index_of(ComplexMatrix::Zero(3, 3)), 1u);
  try {
    index_of(ComplexMatrix::Zero(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSquare);
  }
}

TEST(IndexOf, InvariantUnderSimilarity) {
  std::mt19937_64 rng(1);
  for (Eigen::Index k = 0; k <= 4; ++k) {
    std::vector<std::pair<Complex, Eigen::Index>> blocks{{Complex(1.5, -0.5), 2}, {Complex(-2.0), 1}};
    if (k > 0) blocks.push_back({0.0, k});
    const auto jc = jordan_case(blocks);
    const ComplexMatrix p = random_similarity(jc.j.rows(), rng);
    EXPECT_EQ(index_of(p * jc.j * p.inverse()), static_cast<std::size_t>(k));
  }
}

TEST(DrazinInverse, InvertibleGivesInverse) {
  std::mt19937_64 rng(2);
  const ComplexMatrix a = random_similarity(5, rng);
  const auto d = drazin_inverse(a);
  EXPECT_EQ(d.index, 0u);
  EXPECT_LT(rel_diff(d.drazin_inverse, a.inverse()), 1e-12);
}

TEST(DrazinInverse, NilpotentGivesZero) {
  std::mt19937_64 rng(3);
  const ComplexMatrix p = random_similarity(4, rng);
  const ComplexMatrix a = p * jordan_block(0.0, 4) * p.inverse();
  const auto d = drazin_inverse(a);
  EXPECT_EQ(d.index, 4u);
  EXPECT_EQ(d.drazin_inverse.norm(), 0.0);
}

TEST(DrazinInverse, MixedDiagonalExample) {
  const ComplexMatrix a = block_diagonal({jordan_block(0.0, 2), jordan_block(4.0, 1)});
  const auto d = drazin_inverse(a);
  EXPECT_EQ(d.index, 2u);
  ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
  expected(2, 2) = 0.25;
  EXPECT_LT(rel_diff(d.drazin_inverse, expected), 1e-14);

  // The three axioms by direct multiplication.
  const ComplexMatrix& x = d.drazin_inverse;
  const ComplexMatrix a2 = a * a;
  EXPECT_LT((a2 * x * a - a2).norm(), 1e-14);
  EXPECT_LT((x * a * x - x).norm(), 1e-14);
  EXPECT_LT((a * x - x * a).norm(), 1e-14);
}

TEST(DrazinInverse, MatchesJordanConstruction) {
  std::mt19937_64 rng(4);
  const std::vector<std::vector<std::pair<Complex, Eigen::Index>>> cases{
      {{0.0, 1}, {Complex(2.0), 1}},
      {{0.0, 2}, {Complex(0.0, 1.0), 2}, {Complex(-1.0), 1}},
      {{0.0, 3}, {0.0, 1}, {Complex(0.5, 0.5), 3}},
      {{0.0, 4}, {Complex(-2.0, 1.0), 1}, {Complex(1.0), 2}},
  };
  for (const auto& blocks : cases) {
    const auto jc = jordan_case(blocks);
    const ComplexMatrix p = random_similarity(jc.j.rows(), rng);
    const ComplexMatrix pinv = p.inverse();
    const ComplexMatrix a = p * jc.j * pinv;
    const auto d = drazin_inverse(a);
    EXPECT_EQ(d.index, jc.index);
    EXPECT_LT(rel_diff(d.drazin_inverse, p * jc.jd * pinv), 1e-9);
    EXPECT_LT(rel_diff(d.drazin_inverse, drazin_by_pseudoinverse(a, jc.index)), 1e-6);
    EXPECT_TRUE(drazin_residuals(a, d.drazin_inverse, d.index).within(1e-10));
  }
}

TEST(DrazinInverse, DecompositionBlocks) {
  std::mt19937_64 rng(5);
  const auto jc = jordan_case({{0.0, 2}, {Complex(3.0), 2}});
  const ComplexMatrix p = random_similarity(4, rng);
  const ComplexMatrix a = p * jc.j * p.inverse();
  const auto d = drazin_inverse(a);
  ASSERT_EQ(d.core_block.rows(), 2);
  ASSERT_EQ(d.nil_block.rows(), 2);
  const ComplexMatrix similar = d.basis.inverse() * a * d.basis;
  EXPECT_LT(similar.topRightCorner(2, 2).norm() / a.norm(), 1e-10);
  EXPECT_LT(similar.bottomLeftCorner(2, 2).norm() / a.norm(), 1e-10);
  EXPECT_LT((d.nil_block * d.nil_block).norm() / a.norm(), 1e-10);
  EXPECT_EQ(index_of(d.core_block), 0u);
}

TEST(DrazinResiduals, DetectWrongInverse) {
  const ComplexMatrix a = block_diagonal({jordan_block(0.0, 2), jordan_block(4.0, 1)});
  const auto r = drazin_residuals(a, identity(3), 2);
  EXPECT_FALSE(r.within(1e-8));
}

TEST(PoleOrder, Examples) {
  EXPECT_EQ(pole_order(jordan_block(3.0, 2), 3.0), 2u);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  EXPECT_EQ(pole_order(d, 1.0), 1u);
}

TEST(PoleOrder, SinglePoleMeansNilpotentShift) {
  const ComplexMatrix a = jordan_block(7.0, 4);
  EXPECT_EQ(pole_order(a, 7.0), 4u);
  const ComplexMatrix shifted = a - 7.0 * identity(4);
  EXPECT_EQ(matrix_power(shifted, 4).norm(), 0.0);
  EXPECT_NE(matrix_power(shifted, 3).norm(), 0.0);
}

TEST(PoleOrder, NotInSpectrum) {
  try {
    pole_order(identity(2), 5.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInSpectrum);
  }
}

TEST(SpectralClusters, DefectiveEigenvaluesUnderSimilarity) {
  std::mt19937_64 rng(6);
  const auto jc = jordan_case({{Complex(2.0), 3}, {Complex(2.0), 1}, {Complex(-1.0, 1.0), 2}, {0.0, 1}});
  const ComplexMatrix p = random_similarity(jc.j.rows(), rng);
  const auto clusters = spectral_clusters(p * jc.j * p.inverse());
  ASSERT_EQ(clusters.size(), 3u);
  // Sorted by (re, im): -1+i, 0, 2.
  EXPECT_NEAR(std::abs(clusters[0].value - Complex(-1.0, 1.0)), 0.0, 1e-8);
  EXPECT_EQ(clusters[0].multiplicity, 2u);
  EXPECT_EQ(clusters[0].index, 2u);
  EXPECT_EQ(clusters[1].value, Complex(0.0));
  EXPECT_EQ(clusters[1].index, 1u);
  EXPECT_EQ(clusters[2].multiplicity, 4u);
  EXPECT_EQ(clusters[2].index, 3u);
  for (const auto& c : clusters) EXPECT_TRUE(c.rank_verified);
}

TEST(SpectralClusters, CloseButDistinctEigenvaluesStaySeparate) {
  ComplexMatrix a = ComplexMatrix::Zero(3, 3);
  a(0, 0) = 1.0;
  a(1, 1) = 1.0 + 1e-4;
  a(2, 2) = 5.0;
  const auto clusters = spectral_clusters(a);
  ASSERT_EQ(clusters.size(), 3u);
  for (const auto& c : clusters) EXPECT_EQ(c.multiplicity, 1u);
}
