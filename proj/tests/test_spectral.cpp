#include <gtest/gtest.h>

#include <random>

#include "drazspec/complex_set.hpp"
#include "drazspec/error.hpp"
#include "drazspec/spectral.hpp"

using namespace drazspec;

namespace {

SpectralPoint pole(Complex v, std::size_t order = 1) { return {v, SpectralTag::Pole, order}; }
SpectralPoint acc(Complex v) { return {v, SpectralTag::Acc, std::nullopt}; }
SpectralPoint iso(Complex v) { return {v, SpectralTag::IsoNonPole, std::nullopt}; }

bool has_violation(const ValidationResult& r, const std::string& name) {
  for (const auto& v : r.violations)
    if (v.invariant == name) return true;
  return false;
}

ComplexMatrix diag(std::initializer_list<Complex> values) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(values.size()),
                                        static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (Complex v : values) m(i, i) = v, ++i;
  return m;
}

}  // namespace

TEST(ComplexSet, SortedDeduplicatedAndCanonical) {
  ComplexSet s{Complex(1, 0), Complex(-0.0, 2), Complex(0, -1), Complex(1, 0)};
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.values()[0], Complex(0, -1));
  EXPECT_EQ(s.values()[1], Complex(0, 2));
  EXPECT_FALSE(std::signbit(s.values()[1].real()));
  EXPECT_EQ(s.values()[2], Complex(1, 0));
}

TEST(ComplexSet, Algebra) {
  const ComplexSet x{1.0, 2.0, 3.0};
  const ComplexSet y{2.0, 4.0};
  EXPECT_EQ(x | y, (ComplexSet{1.0, 2.0, 3.0, 4.0}));
  EXPECT_EQ(x & y, (ComplexSet{2.0}));
  EXPECT_EQ(x - y, (ComplexSet{1.0, 3.0}));
  EXPECT_TRUE((ComplexSet{2.0}).subset_of(x));
  EXPECT_FALSE(y.subset_of(x));
  EXPECT_EQ((ComplexSet{0.0, 1.0}).without_zero(), (ComplexSet{1.0}));
  EXPECT_TRUE(ComplexSet{}.subset_of(y));
}

TEST(ComplexSet, RadiusMembership) {
  ComplexSet s(1e-6);
  s.insert(1.0);
  s.insert(1.0 + 1e-8);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_TRUE(s.contains(1.0 - 5e-7));
  EXPECT_FALSE(s.contains(1.0 + 1e-5));
  EXPECT_FALSE((ComplexSet{1.0}).contains(1.0 + 1e-15));
}

TEST(ProductSet, Examples) {
  EXPECT_EQ(product_set(ComplexSet{1.0, 2.0}, ComplexSet{3.0}), (ComplexSet{3.0, 6.0}));
  EXPECT_EQ(product_set(ComplexSet{0.0, 1.0}, ComplexSet{2.0}), (ComplexSet{0.0, 2.0}));
  EXPECT_TRUE(product_set(ComplexSet{}, ComplexSet{2.0}).empty());
  EXPECT_EQ(product_set(ComplexSet{Complex(0, 1)}, ComplexSet{Complex(0, 1), Complex(0, -1)}),
            (ComplexSet{-1.0, 1.0}));
}

TEST(Descriptor, DerivedSets) {
  const SpectralClassification c({acc(0.0), pole(1.0)});
  EXPECT_EQ(c.drazin_spectrum(), (ComplexSet{0.0}));
  EXPECT_EQ(c.poles(), (ComplexSet{1.0}));
  EXPECT_EQ(c.spectrum(), (ComplexSet{0.0, 1.0}));
  EXPECT_TRUE(c.isolated() == (ComplexSet{1.0}));
  EXPECT_FALSE(c.invertible());
  EXPECT_FALSE(c.all_poles());
}

TEST(Descriptor, AllPolesHasEmptyDrazinSpectrum) {
  const SpectralClassification c({pole(0.0, 2), pole(3.0), pole(Complex(1, 1), 3)});
  EXPECT_TRUE(c.drazin_spectrum().empty());
  EXPECT_TRUE(c.all_poles());
}

TEST(Descriptor, QuasinilpotentNotNilpotent) {
  const SpectralClassification c({iso(0.0)});
  EXPECT_EQ(c.spectrum(), (ComplexSet{0.0}));
  EXPECT_EQ(c.drazin_spectrum(), (ComplexSet{0.0}));
  EXPECT_EQ(c.iso_non_poles(), (ComplexSet{0.0}));
  EXPECT_TRUE(c.quasinilpotent_not_nilpotent());
  EXPECT_FALSE(c.nilpotent());
}

TEST(Descriptor, NilpotentFlag) {
  EXPECT_TRUE(SpectralClassification({pole(0.0, 2)}).nilpotent());
  EXPECT_FALSE(SpectralClassification({pole(0.0, 2), pole(1.0)}).nilpotent());
  EXPECT_FALSE(SpectralClassification({acc(0.0)}).nilpotent());
  EXPECT_FALSE(SpectralClassification({acc(0.0)}).quasinilpotent_not_nilpotent());
}

TEST(Descriptor, TagLookup) {
  const SpectralClassification c({acc(0.0), iso(2.0)});
  EXPECT_EQ(c.tag_at(2.0), SpectralTag::IsoNonPole);
  EXPECT_EQ(c.tag_at(0.0), SpectralTag::Acc);
  EXPECT_FALSE(c.tag_at(1.0).has_value());
}

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(SpectralClassification({pole(0.0)})).ok());
  EXPECT_TRUE(has_violation(validate(SpectralClassification({pole(0.0), acc(0.0)})), "disjointness"));
  EXPECT_TRUE(has_violation(validate(SpectralClassification(std::vector<SpectralPoint>{})), "nonempty spectrum"));
}

TEST(Validate, OrderRules) {
  EXPECT_TRUE(has_violation(validate(SpectralClassification({{1.0, SpectralTag::Acc, 2}})), "order requires pole"));
  EXPECT_TRUE(has_violation(validate(SpectralClassification({pole(1.0, 0)})), "positive order"));
  EXPECT_TRUE(validate(SpectralClassification({{1.0, SpectralTag::Pole, std::nullopt}})).ok());
}

TEST(Validate, NonFiniteAndWarnings) {
  EXPECT_TRUE(has_violation(validate(SpectralClassification({pole(Complex(INFINITY, 0))})), "finite values"));
  const auto r = validate(SpectralClassification({acc(1.0)}));
  EXPECT_TRUE(r.ok());
  EXPECT_FALSE(r.warnings.empty());
  EXPECT_THROW(require_valid(SpectralClassification(std::vector<SpectralPoint>{}), "test"), Error);
}

TEST(Tags, RoundTrip) {
  for (auto t : {SpectralTag::Acc, SpectralTag::Pole, SpectralTag::IsoNonPole}) {
    EXPECT_EQ(parse_tag(to_string(t)), t);
  }
  EXPECT_FALSE(parse_tag("POLE").has_value());
}

TEST(ClassifyMatrix, Examples) {
  const auto j = classify_matrix(jordan_block(0.0, 2));
  ASSERT_EQ(j.points().size(), 1u);
  EXPECT_EQ(j.points()[0].value, Complex(0.0));
  EXPECT_EQ(j.points()[0].tag, SpectralTag::Pole);
  EXPECT_EQ(j.points()[0].order, 2u);

  const auto d = classify_matrix(diag({1.0, 1.0, 2.0}));
  ASSERT_EQ(d.points().size(), 2u);
  EXPECT_EQ(d.points()[0].order, 1u);
  EXPECT_EQ(d.points()[1].order, 1u);
  EXPECT_TRUE(d.spectrum() == (ComplexSet{1.0, 2.0}));

  const auto m = classify_matrix(block_diagonal({jordan_block(5.0, 2), jordan_block(5.0, 1)}));
  ASSERT_EQ(m.points().size(), 1u);
  EXPECT_EQ(m.points()[0].order, 2u);
  EXPECT_TRUE(validate(m).ok());
}

TEST(ClassifyMatrix, SimilarityInvariant) {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> nd;
  ComplexMatrix p(5, 5);
  for (Eigen::Index j = 0; j < 5; ++j)
    for (Eigen::Index i = 0; i < 5; ++i) p(i, j) = Complex(nd(rng), nd(rng));
  p += 3.0 * identity(5);
  const ComplexMatrix j = block_diagonal({jordan_block(Complex(0, 1), 3), jordan_block(-2.0, 2)});
  const auto c = classify_matrix(p * j * p.inverse());
  ASSERT_EQ(c.points().size(), 2u);
  EXPECT_EQ(c.points()[0].order, 2u);  // -2 sorts first
  EXPECT_EQ(c.points()[1].order, 3u);
  EXPECT_TRUE(c.all_poles());
  EXPECT_GT(c.merge_radius(), 0.0);
}
