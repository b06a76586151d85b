#include "drazspec/tensor.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "drazspec/error.hpp"

namespace drazspec {

const char* to_string(ZeroStatus s) noexcept {
  switch (s) {
    case ZeroStatus::NotInSpectrum: return "not_in_spectrum";
    case ZeroStatus::Pole: return "pole";
    case ZeroStatus::IsoNonPole: return "iso_non_pole";
    case ZeroStatus::Acc: return "acc";
  }
  return "?";
}

const char* to_string(DrazinRegime r) noexcept {
  switch (r) {
    case DrazinRegime::BothDrazinEmpty: return "both_drazin_empty";
    case DrazinRegime::NilpotentFactor: return "nilpotent_factor";
    case DrazinRegime::OneSidedLeft: return "one_sided_left";
    case DrazinRegime::OneSidedRight: return "one_sided_right";
    case DrazinRegime::BothNonempty: return "both_nonempty";
  }
  return "?";
}

ZeroProfile zero_profile(const SpectralClassification& c) {
  ZeroProfile p;
  if (const auto tag = c.tag_at(Complex(0.0))) {
    switch (*tag) {
      case SpectralTag::Pole: p.status = ZeroStatus::Pole; break;
      case SpectralTag::IsoNonPole: p.status = ZeroStatus::IsoNonPole; break;
      case SpectralTag::Acc: p.status = ZeroStatus::Acc; break;
    }
  }
  p.nilpotent = c.nilpotent();
  p.quasinilpotent_not_nilpotent = c.quasinilpotent_not_nilpotent();
  return p;
}

namespace {

using S = ZeroStatus;

bool nil(const ZeroProfile& p) { return p.nilpotent; }
bool qnn(const ZeroProfile& p) { return p.quasinilpotent_not_nilpotent; }
// Neither factor has spectrum {0}; statuses alone decide.
bool generic(const ZeroProfile& a, const ZeroProfile& b) {
  return !nil(a) && !nil(b) && !qnn(a) && !qnn(b);
}

// clang-format off
constexpr std::array<ZeroCase, 15> kZeroCases{{
  // A nilpotent factor makes the product nilpotent.
  {"thm-zero(i)",         [](const ZeroProfile& a, const ZeroProfile&)  { return nil(a); }, S::Pole},
  {"thm-zero(i)-sym",     [](const ZeroProfile& a, const ZeroProfile& b) { return !nil(a) && nil(b); }, S::Pole},
  // Neither nilpotent, one factor quasinilpotent: σ(a⊗b) = I(a⊗b) = {0}.
  {"thm-zero(ii)",        [](const ZeroProfile& a, const ZeroProfile& b) { return !nil(a) && !nil(b) && qnn(a); }, S::IsoNonPole},
  {"thm-zero(ii)-sym",    [](const ZeroProfile& a, const ZeroProfile& b) { return !nil(a) && !nil(b) && !qnn(a) && qnn(b); }, S::IsoNonPole},
  {"thm-zero(iii)",       [](const ZeroProfile& a, const ZeroProfile& b) { return generic(a, b) && a.status == S::Pole && b.status == S::NotInSpectrum; }, S::Pole},
  {"thm-zero(iii)-sym",   [](const ZeroProfile& a, const ZeroProfile& b) { return generic(a, b) && a.status == S::NotInSpectrum && b.status == S::Pole; }, S::Pole},
  {"thm-zero(iii)-both",  [](const ZeroProfile& a, const ZeroProfile& b) { return generic(a, b) && a.status == S::Pole && b.status == S::Pole; }, S::Pole},
  {"thm-zero(iv)",        [](const ZeroProfile& a, const ZeroProfile& b) { return generic(a, b) && a.status == S::Pole && b.status == S::IsoNonPole; }, S::IsoNonPole},
  {"thm-zero(iv)-sym",    [](const ZeroProfile& a, const ZeroProfile& b) { return generic(a, b) && a.status == S::IsoNonPole && b.status == S::Pole; }, S::IsoNonPole},
  {"thm-zero(v)",         [](const ZeroProfile& a, const ZeroProfile& b) { return generic(a, b) && a.status == S::IsoNonPole && b.status == S::NotInSpectrum; }, S::IsoNonPole},
  {"thm-zero(v)-sym",     [](const ZeroProfile& a, const ZeroProfile& b) { return generic(a, b) && a.status == S::NotInSpectrum && b.status == S::IsoNonPole; }, S::IsoNonPole},
  {"thm-zero(vi)",        [](const ZeroProfile& a, const ZeroProfile& b) { return generic(a, b) && a.status == S::IsoNonPole && b.status == S::IsoNonPole; }, S::IsoNonPole},
  // The other spectrum has a nonzero point, so 0 stays an accumulation point.
  {"thm-zero(vii)",       [](const ZeroProfile& a, const ZeroProfile& b) { return generic(a, b) && a.status == S::Acc; }, S::Acc},
  {"thm-zero(vii)-sym",   [](const ZeroProfile& a, const ZeroProfile& b) { return generic(a, b) && a.status != S::Acc && b.status == S::Acc; }, S::Acc},
  {"zero-not-in-spectrum",[](const ZeroProfile& a, const ZeroProfile& b) { return generic(a, b) && a.status == S::NotInSpectrum && b.status == S::NotInSpectrum; }, S::NotInSpectrum},
}};
// clang-format on

double radius_of(const SpectralClassification& a, const SpectralClassification& b) {
  return std::max(a.merge_radius(), b.merge_radius());
}

ComplexSet with_radius(const ComplexSet& s, double r) {
  return ComplexSet::from(s.values(), r);
}

}  // namespace

std::span<const ZeroCase> zero_case_table() noexcept { return kZeroCases; }

ZeroDecision classify_zero(const ZeroProfile& a, const ZeroProfile& b) {
  for (const auto& row : kZeroCases) {
    if (row.applies(a, b)) return {row.result, row.id};
  }
  throw Error(ErrorCode::Internal,
              std::string("classify_zero: no case applies to (") + to_string(a.status) + ", " +
                  to_string(b.status) + ")");
}

ZeroDecision classify_zero(const SpectralClassification& a, const SpectralClassification& b) {
  require_valid(a, "classify_zero(a)");
  require_valid(b, "classify_zero(b)");
  return classify_zero(zero_profile(a), zero_profile(b));
}

ComplexSet l_set(const SpectralClassification& a, const SpectralClassification& b) {
  const double r = radius_of(a, b);
  const ComplexSet ia = with_radius(a.iso_non_poles().without_zero(), r);
  const ComplexSet ib = with_radius(b.iso_non_poles().without_zero(), r);
  const ComplexSet pa = with_radius(a.poles().without_zero(), r);
  const ComplexSet pb = with_radius(b.poles().without_zero(), r);
  return product_set(ia, ib) | product_set(ia, pb) | product_set(pa, ib);
}

ComplexSet a_set(const SpectralClassification& a, const SpectralClassification& b) {
  const double r = radius_of(a, b);
  return with_radius(product_set(a.spectrum(), b.acc_set()) | product_set(a.acc_set(), b.spectrum()), r);
}

ComplexSet b_set(const SpectralClassification& a, const SpectralClassification& b) {
  const double r = radius_of(a, b);
  return with_radius(product_set(a.iso_non_poles(), b.iso_non_poles()) |
                         product_set(a.iso_non_poles(), b.poles()) |
                         product_set(a.poles(), b.iso_non_poles()),
                     r);
}

ComplexSet d_set(const SpectralClassification& a, const SpectralClassification& b) {
  const double r = radius_of(a, b);
  return with_radius(product_set(a.spectrum(), b.drazin_spectrum()) |
                         product_set(a.drazin_spectrum(), b.spectrum()),
                     r);
}

NonzeroIsolated iso_classify_nonzero(const SpectralClassification& a, const SpectralClassification& b) {
  require_valid(a, "iso_classify_nonzero(a)");
  require_valid(b, "iso_classify_nonzero(b)");
  const double r = radius_of(a, b);
  NonzeroIsolated out;
  out.iso_non_poles = l_set(a, b);
  out.poles = with_radius(product_set(a.poles().without_zero(), b.poles().without_zero()), r) -
              out.iso_non_poles;
  return out;
}

SpectralClassification tensor_product_classification(const SpectralClassification& a,
                                                     const SpectralClassification& b) {
  require_valid(a, "tensor(a)");
  require_valid(b, "tensor(b)");
  const double r = radius_of(a, b);

  const ComplexSet acc_nz = a_set(a, b).without_zero();
  const NonzeroIsolated iso = iso_classify_nonzero(a, b);
  const ComplexSet iso_nz = iso.iso_non_poles - acc_nz;
  const ComplexSet pole_nz = iso.poles - acc_nz;

  std::vector<SpectralPoint> points;
  for (Complex z : acc_nz) points.push_back({z, SpectralTag::Acc, std::nullopt});
  for (Complex z : iso_nz) points.push_back({z, SpectralTag::IsoNonPole, std::nullopt});
  for (Complex z : pole_nz) points.push_back({z, SpectralTag::Pole, std::nullopt});

  switch (classify_zero(zero_profile(a), zero_profile(b)).status) {
    case ZeroStatus::NotInSpectrum: break;
    case ZeroStatus::Pole: points.push_back({Complex(0.0), SpectralTag::Pole, std::nullopt}); break;
    case ZeroStatus::IsoNonPole:
      points.push_back({Complex(0.0), SpectralTag::IsoNonPole, std::nullopt});
      break;
    case ZeroStatus::Acc: points.push_back({Complex(0.0), SpectralTag::Acc, std::nullopt}); break;
  }
  return SpectralClassification(std::move(points), r);
}

DrazinRegime drazin_regime(const SpectralClassification& a, const SpectralClassification& b) {
  const bool a_poles = a.all_poles();
  const bool b_poles = b.all_poles();
  if (a_poles && b_poles) return DrazinRegime::BothDrazinEmpty;
  if (a_poles) return a.nilpotent() ? DrazinRegime::NilpotentFactor : DrazinRegime::OneSidedLeft;
  if (b_poles) return b.nilpotent() ? DrazinRegime::NilpotentFactor : DrazinRegime::OneSidedRight;
  return DrazinRegime::BothNonempty;
}

namespace {

bool zero_in(const ComplexSet& s) { return s.contains_zero(); }

// 0 ∉ (Π(a) ∩ ρ_DR(b)) ∪ (ρ_DR(a) ∩ Π(b)); ρ_DR is the complement of σ_DR.
bool zero_outside_mix(const SpectralClassification& a, const SpectralClassification& b) {
  const bool left = zero_in(a.poles()) && !zero_in(b.drazin_spectrum());
  const bool right = !zero_in(a.drazin_spectrum()) && zero_in(b.poles());
  return !(left || right);
}

ComplexSet formula_drazin_spectrum(const SpectralClassification& a, const SpectralClassification& b,
                                   DrazinRegime regime) {
  const ComplexSet d = d_set(a, b);
  bool zero_kept = false;
  switch (regime) {
    case DrazinRegime::BothDrazinEmpty:
    case DrazinRegime::NilpotentFactor:
      return ComplexSet(d.merge_radius());
    case DrazinRegime::OneSidedLeft:
      zero_kept = !zero_in(a.poles()) || zero_in(b.drazin_spectrum());
      break;
    case DrazinRegime::OneSidedRight:
      zero_kept = zero_in(a.drazin_spectrum()) || !zero_in(b.poles());
      break;
    case DrazinRegime::BothNonempty:
      zero_kept = (a.invertible() && b.invertible()) || zero_outside_mix(a, b);
      break;
  }
  return zero_kept ? d : d.without_zero();
}

}  // namespace

DrazinSpectrumResult drazin_spectrum_tensor(const SpectralClassification& a, const SpectralClassification& b) {
  DrazinSpectrumResult r;
  r.regime = drazin_regime(a, b);
  r.by_classification = tensor_product_classification(a, b).drazin_spectrum();
  r.by_formula = formula_drazin_spectrum(a, b, r.regime);
  r.equals_d = r.by_formula == d_set(a, b);
  if (!(r.by_classification == r.by_formula)) {
    throw Error(ErrorCode::Internal, std::string("drazin_spectrum_tensor: classification and formula "
                                                 "disagree in regime ") +
                                         to_string(r.regime));
  }
  return r;
}

EqualityPredicates equality_predicates(const SpectralClassification& a, const SpectralClassification& b) {
  require_valid(a, "equality_predicates(a)");
  require_valid(b, "equality_predicates(b)");
  EqualityPredicates p;
  p.regime = drazin_regime(a, b);
  p.both_invertible = a.invertible() && b.invertible();
  p.zero_outside_pole_resolvent_mix = zero_outside_mix(a, b);
  const ZeroStatus z = classify_zero(zero_profile(a), zero_profile(b)).status;
  p.tensor_not_drazin_invertible = z == ZeroStatus::IsoNonPole || z == ZeroStatus::Acc;
  p.drazin_spectrum_equals_d = tensor_product_classification(a, b).drazin_spectrum() == d_set(a, b);
  p.invertible_or_not_drazin = p.both_invertible || p.tensor_not_drazin_invertible;
  p.invertible_or_zero_outside = p.both_invertible || p.zero_outside_pole_resolvent_mix;
  if (p.regime == DrazinRegime::OneSidedLeft) {
    p.one_sided = !zero_in(a.poles()) || zero_in(b.drazin_spectrum());
  } else if (p.regime == DrazinRegime::OneSidedRight) {
    p.one_sided = zero_in(a.drazin_spectrum()) || !zero_in(b.poles());
  }
  return p;
}

TensorReport tensor_classify(const SpectralClassification& a, const SpectralClassification& b) {
  TensorReport rep;
  rep.a = a;
  rep.b = b;
  rep.result = tensor_product_classification(a, b);
  rep.l = l_set(a, b);
  rep.a_set = a_set(a, b);
  rep.b_set = b_set(a, b);
  rep.d = d_set(a, b);
  rep.zero = classify_zero(zero_profile(a), zero_profile(b));
  rep.equality_holds = rep.result.drazin_spectrum() == rep.d;
  rep.predicates = equality_predicates(a, b);
  rep.drazin = drazin_spectrum_tensor(a, b);
  for (const auto* side : {&a, &b}) {
    for (auto& w : validate(*side).warnings) rep.warnings.push_back(w);
  }
  return rep;
}

}  // namespace drazspec
