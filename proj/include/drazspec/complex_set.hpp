#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace drazspec {

using Complex = std::complex<double>;

/// Lexicographic (re, im) order used for every rendered set.
bool lex_less(Complex x, Complex y) noexcept;

/// Finite set of complex scalars kept sorted by (re, im).
///
/// With merge_radius == 0 membership is exact equality (symbolic descriptors).
/// A positive radius makes insertion and membership tolerance-based: a value
/// within the radius of an existing element is considered the same point
/// (matrix-derived descriptors). Negative zero parts are normalised to +0.
class ComplexSet {
 public:
  explicit ComplexSet(double merge_radius = 0.0) : radius_(merge_radius) {}
  ComplexSet(std::initializer_list<Complex> values, double merge_radius = 0.0);

  static ComplexSet from(const std::vector<Complex>& values, double merge_radius = 0.0);

  void insert(Complex z);
  bool contains(Complex z) const;
  bool empty() const noexcept { return items_.empty(); }
  std::size_t size() const noexcept { return items_.size(); }
  double merge_radius() const noexcept { return radius_; }

  const std::vector<Complex>& values() const noexcept { return items_; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  ComplexSet without_zero() const;
  bool contains_zero() const { return contains(Complex(0.0)); }

  /// Same points under this set's radius (element-wise matching both ways).
  bool same_as(const ComplexSet& other) const;
  bool subset_of(const ComplexSet& other) const;

  friend ComplexSet operator|(const ComplexSet& x, const ComplexSet& y);  // union
  friend ComplexSet operator-(const ComplexSet& x, const ComplexSet& y);  // difference
  friend ComplexSet operator&(const ComplexSet& x, const ComplexSet& y);  // intersection
  friend bool operator==(const ComplexSet& x, const ComplexSet& y) { return x.same_as(y); }

 private:
  double radius_;
  std::vector<Complex> items_;
};

/// {p q : p in P, q in Q}, deduplicated with the larger of the two radii.
ComplexSet product_set(const ComplexSet& p, const ComplexSet& q);

Complex canonical(Complex z) noexcept;

}  // namespace drazspec
