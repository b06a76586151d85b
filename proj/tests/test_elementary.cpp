#include <gtest/gtest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "drazspec/elementary.hpp"
#include "drazspec/error.hpp"

using namespace drazspec;

namespace {

ComplexMatrix random_matrix(Eigen::Index r, Eigen::Index c, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  ComplexMatrix m(r, c);
  for (Eigen::Index j = 0; j < c; ++j)
    for (Eigen::Index i = 0; i < r; ++i) m(i, j) = Complex(nd(rng), nd(rng));
  return m;
}

ComplexMatrix diag(std::initializer_list<Complex> values) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(values.size()),
                                        static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (Complex v : values) m(i, i) = v, ++i;
  return m;
}

double spectral_norm(const ComplexMatrix& a) { return singular_values(a).front(); }

}  // namespace

TEST(BuildElementary, IdentityPair) {
  const auto e = build_elementary(identity(2), identity(3));
  EXPECT_EQ(e.matrix_form, identity(6));
}

TEST(BuildElementary, VecIdentityOnRandomOperands) {
  std::mt19937_64 rng(31);
  const auto e = build_elementary(random_matrix(2, 2, rng), random_matrix(3, 3, rng));
  const ComplexMatrix x = random_matrix(2, 3, rng);
  EXPECT_LE(vec_identity_residual(e, x), 1e-10);
  // Direct multiplication as an independent check of the matrix form.
  const ComplexMatrix lhs = vec(e.s * x * e.t);
  EXPECT_LT((lhs - e.matrix_form * vec(x)).norm(), 1e-12 * (1.0 + lhs.norm()));
}

TEST(BuildElementary, IdealNormInequality) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix s = random_matrix(3, 3, rng);
    const ComplexMatrix t = random_matrix(4, 4, rng);
    const ComplexMatrix x = random_matrix(3, 4, rng);
    const auto e = build_elementary(s, t);
    EXPECT_LE(e.apply(x).norm(), spectral_norm(s) * x.norm() * spectral_norm(t) * (1.0 + 1e-12));
  }
}

TEST(BuildElementary, RejectsNonSquare) {
  try {
    build_elementary(ComplexMatrix::Zero(2, 3), identity(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSquare);
  }
}

TEST(SpectrumCheck, DiagonalExample) {
  const auto c = spectrum_check(build_elementary(diag({1.0, 2.0}), diag({3.0})));
  EXPECT_TRUE(c.match);
  ASSERT_EQ(c.operator_spectrum.size(), 2u);
  EXPECT_NEAR(std::abs(c.operator_spectrum[0].value - Complex(3.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(c.operator_spectrum[1].value - Complex(6.0)), 0.0, 1e-12);
  EXPECT_EQ(c.index, 0u);
}

TEST(SpectrumCheck, NilpotentLeftFactor) {
  std::mt19937_64 rng(33);
  const auto c = spectrum_check(build_elementary(jordan_block(0.0, 3), random_matrix(2, 2, rng)));
  EXPECT_TRUE(c.match);
  ASSERT_EQ(c.operator_spectrum.size(), 1u);
  EXPECT_EQ(c.operator_spectrum[0].value, Complex(0.0));
  EXPECT_EQ(c.operator_spectrum[0].multiplicity, 6u);
  EXPECT_EQ(c.index, 3u);
}

TEST(SpectrumCheck, RandomPairsAgainstReferenceSolver) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix s = random_matrix(4, 4, rng);
    const ComplexMatrix t = random_matrix(3, 3, rng);
    const auto e = build_elementary(s, t);
    const auto c = spectrum_check(e);
    EXPECT_TRUE(c.match) << "trial " << trial;

    // Reference: products of eigenvalues from Eigen's solver, matched greedily.
    Eigen::ComplexEigenSolver<ComplexMatrix> es(s, false), et(t, false);
    std::vector<Complex> products;
    for (Eigen::Index i = 0; i < 4; ++i)
      for (Eigen::Index j = 0; j < 3; ++j) products.push_back(es.eigenvalues()(i) * et.eigenvalues()(j));
    std::size_t total = 0;
    for (const auto& w : c.operator_spectrum) {
      total += w.multiplicity;
      std::size_t near = 0;
      for (Complex p : products) near += std::abs(p - w.value) <= 1e-7 ? 1 : 0;
      EXPECT_EQ(near, w.multiplicity);
    }
    EXPECT_EQ(total, 12u);
  }
}

TEST(ElementaryClassify, AllPoleFactors) {
  const SpectralClassification s({{0.0, SpectralTag::Pole, 2}, {1.0, SpectralTag::Pole, 1}});
  const SpectralClassification t({{2.0, SpectralTag::Pole, 1}});
  const auto r = elementary_classify(s, t);
  EXPECT_TRUE(r.drazin.by_classification.empty());
  EXPECT_TRUE(r.d.empty());
}

TEST(ElementaryClassify, MatricesGiveAllPoleOperator) {
  std::mt19937_64 rng(35);
  const ComplexMatrix s = block_diagonal({jordan_block(0.0, 2), jordan_block(1.5, 1)});
  const ComplexMatrix t = random_matrix(2, 2, rng);
  const auto r = elementary_classify(classify_matrix(s), classify_matrix(t));
  EXPECT_TRUE(r.drazin.by_classification.empty());
  const auto oracle = classify_matrix(build_elementary(s, t).matrix_form);
  EXPECT_TRUE(oracle.all_poles());
  EXPECT_EQ(oracle.points().size(), r.result.points().size());
}

TEST(ElementaryClassify, SymbolicPoleAndInvertibleFactor) {
  const SpectralClassification s({{0.0, SpectralTag::Pole, 1}, {1.0, SpectralTag::Pole, 1}});
  const SpectralClassification t({{2.0, SpectralTag::IsoNonPole, std::nullopt}, {3.0, SpectralTag::Pole, 1}});
  const auto r = elementary_classify(s, t);
  // 0 ∈ Π(S) and 0 ∈ ρ_DR(T): the equality criterion fails.
  ASSERT_TRUE(r.predicates.one_sided.has_value());
  EXPECT_FALSE(*r.predicates.one_sided);
  EXPECT_FALSE(r.equality_holds);
  EXPECT_EQ(r.d, r.drazin.by_classification | ComplexSet{0.0});
}
