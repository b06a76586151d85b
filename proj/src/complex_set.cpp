#include "drazspec/complex_set.hpp"

#include <algorithm>
#include <cmath>

namespace drazspec {

bool lex_less(Complex x, Complex y) noexcept {
  return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
}

Complex canonical(Complex z) noexcept {
  // -0.0 + 0.0 == +0.0
  return {z.real() + 0.0, z.imag() + 0.0};
}

ComplexSet::ComplexSet(std::initializer_list<Complex> values, double merge_radius)
    : radius_(merge_radius) {
  for (Complex z : values) insert(z);
}

ComplexSet ComplexSet::from(const std::vector<Complex>& values, double merge_radius) {
  ComplexSet s(merge_radius);
  for (Complex z : values) s.insert(z);
  return s;
}

void ComplexSet::insert(Complex z) {
  z = canonical(z);
  if (contains(z)) return;
  items_.insert(std::lower_bound(items_.begin(), items_.end(), z, lex_less), z);
}

bool ComplexSet::contains(Complex z) const {
  z = canonical(z);
  if (radius_ == 0.0) return std::binary_search(items_.begin(), items_.end(), z, lex_less);
  return std::any_of(items_.begin(), items_.end(),
                     [&](Complex w) { return std::abs(w - z) <= radius_; });
}

ComplexSet ComplexSet::without_zero() const {
  ComplexSet out(radius_);
  for (Complex z : items_) {
    if (radius_ == 0.0 ? z != Complex(0.0) : std::abs(z) > radius_) out.items_.push_back(z);
  }
  return out;
}

bool ComplexSet::subset_of(const ComplexSet& other) const {
  return std::all_of(items_.begin(), items_.end(), [&](Complex z) { return other.contains(z); });
}

bool ComplexSet::same_as(const ComplexSet& other) const {
  return subset_of(other) && other.subset_of(*this);
}

ComplexSet operator|(const ComplexSet& x, const ComplexSet& y) {
  ComplexSet out(std::max(x.radius_, y.radius_));
  for (Complex z : x) out.insert(z);
  for (Complex z : y) out.insert(z);
  return out;
}

ComplexSet operator-(const ComplexSet& x, const ComplexSet& y) {
  ComplexSet out(x.radius_);
  for (Complex z : x) {
    if (!y.contains(z)) out.items_.push_back(z);
  }
  return out;
}

ComplexSet operator&(const ComplexSet& x, const ComplexSet& y) {
  ComplexSet out(x.radius_);
  for (Complex z : x) {
    if (y.contains(z)) out.items_.push_back(z);
  }
  return out;
}

ComplexSet product_set(const ComplexSet& p, const ComplexSet& q) {
  ComplexSet out(std::max(p.merge_radius(), q.merge_radius()));
  for (Complex x : p) {
    for (Complex y : q) out.insert(x * y);
  }
  return out;
}

}  // namespace drazspec
