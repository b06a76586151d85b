#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drazspec/complex_set.hpp"
#include "drazspec/linalg.hpp"

namespace drazspec {

/// Kind of spectral point: accumulation point, pole of the resolvent, or
/// isolated point that is not a pole.
enum class SpectralTag { Acc, Pole, IsoNonPole };

const char* to_string(SpectralTag tag) noexcept;
std::optional<SpectralTag> parse_tag(std::string_view s) noexcept;

struct SpectralPoint {
  Complex value;
  SpectralTag tag = SpectralTag::Pole;
  std::optional<std::size_t> order;  ///< pole order; only meaningful for Pole
};

/// Finite descriptor of an element's spectrum, split into accumulation points,
/// poles and isolated non-poles.
///
/// For matrices every point is a pole. For abstract elements an Acc point
/// stands for a non-isolated spectral value; only the listed values take part
/// in the set calculus. Construction does not validate; call validate().
class SpectralClassification {
 public:
  SpectralClassification() = default;
  /// Points are stored sorted by value. A positive merge_radius makes the set
  /// views tolerance-based (matrix-derived descriptors).
  explicit SpectralClassification(std::vector<SpectralPoint> points, double merge_radius = 0.0);

  const std::vector<SpectralPoint>& points() const noexcept { return points_; }
  double merge_radius() const noexcept { return radius_; }

  ComplexSet spectrum() const;
  ComplexSet acc_set() const;
  ComplexSet poles() const;
  ComplexSet iso_non_poles() const;
  /// acc ∪ I
  ComplexSet drazin_spectrum() const;
  /// Π ∪ I
  ComplexSet isolated() const;

  /// Tag of the point equal to z (within merge_radius), if any.
  std::optional<SpectralTag> tag_at(Complex z) const;

  bool invertible() const { return !spectrum().contains_zero(); }
  /// Spectrum is {0} and 0 is a pole.
  bool nilpotent() const { return single_zero_with(SpectralTag::Pole); }
  /// Spectrum is {0} and 0 is isolated but not a pole.
  bool quasinilpotent_not_nilpotent() const { return single_zero_with(SpectralTag::IsoNonPole); }
  /// Every point is a pole (σ = Π), equivalently σ_DR = ∅.
  bool all_poles() const;

 private:
  bool single_zero_with(SpectralTag tag) const;
  ComplexSet collect(std::optional<SpectralTag> tag) const;

  std::vector<SpectralPoint> points_;
  double radius_ = 0.0;
};

struct Violation {
  std::string invariant;
  std::string detail;
};

struct ValidationResult {
  std::vector<Violation> violations;
  std::vector<Violation> warnings;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks: "nonempty spectrum", "finite values", "disjointness",
/// "order requires pole", "positive order". Emits the warning "acc outside
/// zero" when an accumulation point is nonzero.
ValidationResult validate(const SpectralClassification& c);

/// Throws InvalidDescriptor listing the violations.
void require_valid(const SpectralClassification& c, const char* what);

/// Every eigenvalue of a matrix is a pole whose order is the index of A - λI.
SpectralClassification classify_matrix(const ComplexMatrix& a, const Tolerance& tol = {});

}  // namespace drazspec
