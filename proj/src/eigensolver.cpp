#include <cmath>
#include <limits>
#include <string>

#include "drazspec/error.hpp"
#include "drazspec/linalg.hpp"

namespace drazspec {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Householder reduction to upper Hessenberg form, in place.
void reduce_to_hessenberg(ComplexMatrix& h) {
  const Eigen::Index n = h.rows();
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    const Eigen::Index len = n - k - 1;
    Eigen::VectorXcd x = h.block(k + 1, k, len, 1);
    const double xnorm = x.norm();
    if (xnorm == 0.0) continue;
    const Complex x0 = x(0);
    const Complex phase = std::abs(x0) == 0.0 ? Complex(1.0) : x0 / std::abs(x0);
    const Complex alpha = -phase * xnorm;
    Eigen::VectorXcd v = x;
    v(0) -= alpha;
    const double vnorm = v.norm();
    if (vnorm == 0.0) continue;
    v /= vnorm;

    // H <- (I - 2 v v^H) H (I - 2 v v^H), restricted to the affected rows/columns.
    auto rows = h.block(k + 1, k, len, n - k);
    const Eigen::RowVectorXcd w = v.adjoint() * rows;
    rows.noalias() -= 2.0 * v * w;
    auto cols = h.block(0, k + 1, n, len);
    const Eigen::VectorXcd u = cols * v;
    cols.noalias() -= 2.0 * u * v.adjoint();

    h.block(k + 2, k, len - 1, 1).setZero();
    h(k + 1, k) = alpha;
  }
}

// Rotation G = [c s; -conj(s) c] with G * [a; b] = [r; 0].
struct Givens {
  double c;
  Complex s;
};

Givens make_givens(Complex a, Complex b) {
  const double abs_a = std::abs(a);
  const double abs_b = std::abs(b);
  if (abs_b == 0.0) return {1.0, Complex(0.0)};
  if (abs_a == 0.0) return {0.0, Complex(1.0)};
  const double r = std::hypot(abs_a, abs_b);
  const Complex alpha = a / abs_a;
  return {abs_a / r, alpha * std::conj(b) / r};
}

// Eigenvalue of the trailing 2x2 block closest to its last diagonal entry.
Complex wilkinson_shift(const ComplexMatrix& h, Eigen::Index iu) {
  const Complex a = h(iu - 1, iu - 1);
  const Complex b = h(iu - 1, iu);
  const Complex c = h(iu, iu - 1);
  const Complex d = h(iu, iu);
  const Complex half_tr = 0.5 * (a + d);
  const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
  const Complex mu1 = half_tr + disc;
  const Complex mu2 = half_tr - disc;
  return std::abs(mu1 - d) <= std::abs(mu2 - d) ? mu1 : mu2;
}

// One explicitly shifted QR sweep on the active window [il, iu].
void qr_sweep(ComplexMatrix& h, Eigen::Index il, Eigen::Index iu, Complex shift) {
  for (Eigen::Index k = il; k <= iu; ++k) h(k, k) -= shift;

  std::vector<Givens> rots;
  rots.reserve(static_cast<std::size_t>(iu - il));
  for (Eigen::Index k = il; k < iu; ++k) {
    const Givens g = make_givens(h(k, k), h(k + 1, k));
    for (Eigen::Index j = k; j <= iu; ++j) {
      const Complex x = h(k, j);
      const Complex y = h(k + 1, j);
      h(k, j) = g.c * x + g.s * y;
      h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
    }
    h(k + 1, k) = 0.0;
    rots.push_back(g);
  }
  for (Eigen::Index k = il; k < iu; ++k) {
    const Givens& g = rots[static_cast<std::size_t>(k - il)];
    const Eigen::Index last = std::min(k + 1, iu);
    for (Eigen::Index i = il; i <= last; ++i) {
      const Complex x = h(i, k);
      const Complex y = h(i, k + 1);
      h(i, k) = g.c * x + std::conj(g.s) * y;
      h(i, k + 1) = -g.s * x + g.c * y;
    }
  }

  for (Eigen::Index k = il; k <= iu; ++k) h(k, k) += shift;
}

bool negligible_subdiagonal(ComplexMatrix& h, Eigen::Index k, double floor) {
  const double sub = std::abs(h(k, k - 1));
  const double scale = std::abs(h(k - 1, k - 1)) + std::abs(h(k, k));
  if (sub <= kEps * scale || sub <= floor) {
    h(k, k - 1) = 0.0;
    return true;
  }
  return false;
}

}  // namespace

std::vector<Complex> eigenvalues(const ComplexMatrix& a, const Tolerance& tol) {
  require_square(a, "eigenvalues");
  require_finite(a, "eigenvalues");
  tol.check();

  const Eigen::Index n = a.rows();
  ComplexMatrix h = a;
  reduce_to_hessenberg(h);

  // Absolute floor so that an all-zero neighbourhood still deflates.
  const double floor = kEps * std::max(h.norm(), std::numeric_limits<double>::min());
  const long long cap = 30LL * n * n;
  long long total = 0;
  int block_iter = 0;

  Eigen::Index iu = n - 1;
  while (iu > 0) {
    Eigen::Index il = iu;
    while (il > 0 && !negligible_subdiagonal(h, il, floor)) --il;
    if (il == iu) {
      --iu;
      block_iter = 0;
      continue;
    }
    if (total >= cap) {
      throw Error(ErrorCode::NoConvergence,
                  "QR iteration did not converge after " + std::to_string(cap) +
                      " sweeps; unconverged block rows " + std::to_string(il) + ".." +
                      std::to_string(iu));
    }
    ++total;
    ++block_iter;

    Complex shift;
    if (block_iter % 10 == 0) {
      // Exceptional shift to break cycles.
      shift = std::abs(h(iu, iu - 1).real());
      if (iu - 2 >= il) shift += std::abs(h(iu - 1, iu - 2).real());
    } else {
      shift = wilkinson_shift(h, iu);
    }
    qr_sweep(h, il, iu, shift);
  }

  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = h(i, i);
  return out;
}

}  // namespace drazspec
