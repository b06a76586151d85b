#pragma once

// Spectral calculus of elementary tensors a ⊗ b, expressed as set algebra on
// the descriptors of a and b.
//
// Notation used throughout (all sets finite):
//   L = (I(a)∖0)(I(b)∖0) ∪ (I(a)∖0)(Π(b)∖0) ∪ (Π(a)∖0)(I(b)∖0)
//   A = σ(a) acc σ(b) ∪ acc σ(a) σ(b)
//   B = I(a)I(b) ∪ I(a)Π(b) ∪ Π(a)I(b)
//   D = σ(a) σ_DR(b) ∪ σ_DR(a) σ(b)

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "drazspec/complex_set.hpp"
#include "drazspec/spectral.hpp"

namespace drazspec {

enum class ZeroStatus { NotInSpectrum, Pole, IsoNonPole, Acc };

const char* to_string(ZeroStatus s) noexcept;

/// Position of 0 relative to one factor: the inputs of the zero-point table.
struct ZeroProfile {
  ZeroStatus status = ZeroStatus::NotInSpectrum;
  bool nilpotent = false;                     ///< σ = Π = {0}
  bool quasinilpotent_not_nilpotent = false;  ///< σ = I = {0}
};

ZeroProfile zero_profile(const SpectralClassification& c);

/// One row of the zero-point case table. Rows are mutually exclusive and
/// jointly cover every profile pair a valid descriptor can produce.
struct ZeroCase {
  std::string_view id;
  bool (*applies)(const ZeroProfile& a, const ZeroProfile& b);
  ZeroStatus result;
};

std::span<const ZeroCase> zero_case_table() noexcept;

struct ZeroDecision {
  ZeroStatus status = ZeroStatus::NotInSpectrum;
  std::string_view case_id;
};

/// Table lookup; throws Internal if no row applies.
ZeroDecision classify_zero(const ZeroProfile& a, const ZeroProfile& b);
/// Validates both descriptors, then looks up the table.
ZeroDecision classify_zero(const SpectralClassification& a, const SpectralClassification& b);

ComplexSet l_set(const SpectralClassification& a, const SpectralClassification& b);
ComplexSet a_set(const SpectralClassification& a, const SpectralClassification& b);
ComplexSet b_set(const SpectralClassification& a, const SpectralClassification& b);
ComplexSet d_set(const SpectralClassification& a, const SpectralClassification& b);

/// Nonzero isolated points of σ(a ⊗ b): I∖0 = L and Π∖0 = (Π(a)∖0)(Π(b)∖0) ∖ L.
struct NonzeroIsolated {
  ComplexSet iso_non_poles;
  ComplexSet poles;
};

NonzeroIsolated iso_classify_nonzero(const SpectralClassification& a, const SpectralClassification& b);

/// Which Drazin-spectrum characterisation governs the pair.
enum class DrazinRegime {
  BothDrazinEmpty,  ///< σ(a)=Π(a) and σ(b)=Π(b)
  NilpotentFactor,  ///< one factor nilpotent, the other with σ_DR ≠ ∅
  OneSidedLeft,     ///< σ(a)=Π(a)≠{0}, σ_DR(b) ≠ ∅
  OneSidedRight,    ///< σ_DR(a) ≠ ∅, σ(b)=Π(b)≠{0}
  BothNonempty,     ///< σ_DR(a) ≠ ∅ and σ_DR(b) ≠ ∅
};

const char* to_string(DrazinRegime r) noexcept;
DrazinRegime drazin_regime(const SpectralClassification& a, const SpectralClassification& b);

/// The equivalent conditions for σ_DR(a ⊗ b) = D, each computed independently.
struct EqualityPredicates {
  DrazinRegime regime = DrazinRegime::BothDrazinEmpty;
  bool both_invertible = false;
  /// 0 ∉ (Π(a) ∩ ρ_DR(b)) ∪ (ρ_DR(a) ∩ Π(b))
  bool zero_outside_pole_resolvent_mix = false;
  /// 0 ∈ σ_DR(a ⊗ b) according to the zero-point table.
  bool tensor_not_drazin_invertible = false;
  /// σ_DR(a ⊗ b) = D, with σ_DR(a ⊗ b) taken from the assembled classification.
  bool drazin_spectrum_equals_d = false;
  /// both invertible, or a ⊗ b not Drazin invertible
  bool invertible_or_not_drazin = false;
  /// both invertible, or zero_outside_pole_resolvent_mix
  bool invertible_or_zero_outside = false;
  /// One-sided criterion, present only in the OneSided regimes:
  /// left: 0 ∉ Π(a) or 0 ∉ ρ_DR(b); right: 0 ∉ ρ_DR(a) or 0 ∉ Π(b).
  std::optional<bool> one_sided;
};

EqualityPredicates equality_predicates(const SpectralClassification& a, const SpectralClassification& b);

/// σ_DR(a ⊗ b) computed two ways: from the assembled classification (acc ∪ I)
/// and from D together with the equality criterion of the governing regime.
struct DrazinSpectrumResult {
  ComplexSet by_classification;
  ComplexSet by_formula;
  DrazinRegime regime = DrazinRegime::BothDrazinEmpty;
  bool equals_d = false;
};

/// Throws Internal if the two computations disagree.
DrazinSpectrumResult drazin_spectrum_tensor(const SpectralClassification& a, const SpectralClassification& b);

/// Classification of a ⊗ b. Nonzero points: A∖0 is Acc; L∖A is IsoNonPole;
/// the remaining products of nonzero poles are Pole (orders left unset).
/// A product that also factors through an accumulation point is itself an
/// accumulation point, so A takes precedence over L, and L over Π(a)Π(b).
SpectralClassification tensor_product_classification(const SpectralClassification& a,
                                                     const SpectralClassification& b);

struct TensorReport {
  SpectralClassification a;
  SpectralClassification b;
  SpectralClassification result;
  ComplexSet l;
  ComplexSet a_set;
  ComplexSet b_set;
  ComplexSet d;
  ZeroDecision zero;
  bool equality_holds = false;
  EqualityPredicates predicates;
  DrazinSpectrumResult drazin;
  std::vector<Violation> warnings;
};

TensorReport tensor_classify(const SpectralClassification& a, const SpectralClassification& b);

}  // namespace drazspec
