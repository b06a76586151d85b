#include "drazspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "drazspec/drazin.hpp"
#include "drazspec/error.hpp"

namespace drazspec {

const char* to_string(SpectralTag tag) noexcept {
  switch (tag) {
    case SpectralTag::Acc: return "acc";
    case SpectralTag::Pole: return "pole";
    case SpectralTag::IsoNonPole: return "iso_non_pole";
  }
  return "?";
}

std::optional<SpectralTag> parse_tag(std::string_view s) noexcept {
  if (s == "acc") return SpectralTag::Acc;
  if (s == "pole") return SpectralTag::Pole;
  if (s == "iso_non_pole") return SpectralTag::IsoNonPole;
  return std::nullopt;
}

SpectralClassification::SpectralClassification(std::vector<SpectralPoint> points, double merge_radius)
    : points_(std::move(points)), radius_(merge_radius) {
  for (auto& p : points_) p.value = canonical(p.value);
  std::stable_sort(points_.begin(), points_.end(),
                   [](const SpectralPoint& x, const SpectralPoint& y) { return lex_less(x.value, y.value); });
}

ComplexSet SpectralClassification::collect(std::optional<SpectralTag> tag) const {
  ComplexSet s(radius_);
  for (const auto& p : points_) {
    if (!tag || p.tag == *tag) s.insert(p.value);
  }
  return s;
}

ComplexSet SpectralClassification::spectrum() const { return collect(std::nullopt); }
ComplexSet SpectralClassification::acc_set() const { return collect(SpectralTag::Acc); }
ComplexSet SpectralClassification::poles() const { return collect(SpectralTag::Pole); }
ComplexSet SpectralClassification::iso_non_poles() const { return collect(SpectralTag::IsoNonPole); }
ComplexSet SpectralClassification::drazin_spectrum() const { return acc_set() | iso_non_poles(); }
ComplexSet SpectralClassification::isolated() const { return poles() | iso_non_poles(); }

std::optional<SpectralTag> SpectralClassification::tag_at(Complex z) const {
  for (const auto& p : points_) {
    const bool hit = radius_ == 0.0 ? p.value == canonical(z) : std::abs(p.value - z) <= radius_;
    if (hit) return p.tag;
  }
  return std::nullopt;
}

bool SpectralClassification::all_poles() const {
  return std::all_of(points_.begin(), points_.end(),
                     [](const SpectralPoint& p) { return p.tag == SpectralTag::Pole; });
}

bool SpectralClassification::single_zero_with(SpectralTag tag) const {
  const ComplexSet s = spectrum();
  return s.size() == 1 && s.contains_zero() && tag_at(Complex(0.0)) == tag;
}

ValidationResult validate(const SpectralClassification& c) {
  ValidationResult r;
  const auto& pts = c.points();
  if (pts.empty()) {
    r.violations.push_back({"nonempty spectrum", "descriptor lists no spectral points"});
  }
  auto describe = [](Complex z) {
    std::ostringstream os;
    os << '(' << z.real() << ", " << z.imag() << ')';
    return os.str();
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    if (!std::isfinite(p.value.real()) || !std::isfinite(p.value.imag())) {
      r.violations.push_back({"finite values", "point " + std::to_string(i) + " is not finite"});
    }
    if (p.order && p.tag != SpectralTag::Pole) {
      r.violations.push_back({"order requires pole", "point " + describe(p.value) + " tagged " +
                                                         to_string(p.tag) + " carries an order"});
    }
    if (p.order && *p.order == 0) {
      r.violations.push_back({"positive order", "point " + describe(p.value) + " has order 0"});
    }
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const bool same = c.merge_radius() == 0.0 ? pts[j].value == p.value
                                                : std::abs(pts[j].value - p.value) <= c.merge_radius();
      if (same) {
        r.violations.push_back({"disjointness", "value " + describe(p.value) + " listed as both " +
                                                    to_string(p.tag) + " and " + to_string(pts[j].tag)});
      }
    }
    if (p.tag == SpectralTag::Acc && p.value != Complex(0.0)) {
      r.warnings.push_back({"acc outside zero", "accumulation point " + describe(p.value) +
                                                    " is nonzero; a finite descriptor cannot list "
                                                    "the spectral points approaching it"});
    }
  }
  return r;
}

void require_valid(const SpectralClassification& c, const char* what) {
  const auto r = validate(c);
  if (r.ok()) return;
  std::string msg = std::string(what) + ": invalid descriptor:";
  for (const auto& v : r.violations) msg += " [" + v.invariant + "] " + v.detail + ";";
  throw Error(ErrorCode::InvalidDescriptor, msg);
}

SpectralClassification classify_matrix(const ComplexMatrix& a, const Tolerance& tol) {
  require_square(a, "classify_matrix");
  require_finite(a, "classify_matrix");
  tol.check();
  std::vector<SpectralPoint> points;
  for (const auto& c : spectral_clusters(a, tol)) {
    points.push_back({c.value, SpectralTag::Pole, c.index});
  }
  return SpectralClassification(std::move(points), tol.eig_cluster_for(a));
}

}  // namespace drazspec
