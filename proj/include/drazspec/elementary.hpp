#pragma once

#include <cstdint>
#include <vector>

#include "drazspec/linalg.hpp"
#include "drazspec/tensor.hpp"

namespace drazspec {

/// M_{S,T}(X) = S X T acting on n x m matrices. Under column-stacking vec the
/// operator is the nm x nm matrix kron(T^T, S).
struct ElementaryOperator {
  ComplexMatrix s;
  ComplexMatrix t;
  ComplexMatrix matrix_form;

  ComplexMatrix apply(const ComplexMatrix& x) const { return s * x * t; }
};

/// Builds the operator and checks vec(S X T) = matrix_form vec(X) on a random
/// probe X drawn from probe_seed; throws Internal if the relative residual
/// exceeds residual_rel.
ElementaryOperator build_elementary(const ComplexMatrix& s, const ComplexMatrix& t, const Tolerance& tol = {},
                                    std::uint64_t probe_seed = 0x5eed);

/// ||vec(S X T) - matrix_form vec(X)||_F / (||matrix_form||_F ||X||_F).
double vec_identity_residual(const ElementaryOperator& e, const ComplexMatrix& x);

/// A clustered eigenvalue with its algebraic multiplicity.
struct WeightedPoint {
  Complex value;
  std::size_t multiplicity = 0;
};

struct SpectrumCheck {
  bool match = false;
  double radius = 0.0;
  std::vector<WeightedPoint> operator_spectrum;  ///< clustered eigenvalues of matrix_form
  std::vector<WeightedPoint> product_spectrum;   ///< σ(S)σ(T) with multiplicities m_S * m_T
  std::size_t index = 0;                         ///< Drazin index of matrix_form
};

/// Compares the eigenvalue multiset of matrix_form with the product multiset of
/// the spectra of S and T, clustering at eig_cluster of matrix_form.
SpectrumCheck spectrum_check(const ElementaryOperator& e, const Tolerance& tol = {});

/// Tensor calculus applied to descriptors of S and T. Adjoints share poles and
/// Drazin spectra, so T enters through its own descriptor unchanged.
TensorReport elementary_classify(const SpectralClassification& s, const SpectralClassification& t);

}  // namespace drazspec
