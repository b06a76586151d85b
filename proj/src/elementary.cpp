#include "drazspec/elementary.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "drazspec/drazin.hpp"
#include "drazspec/error.hpp"

namespace drazspec {

ElementaryOperator build_elementary(const ComplexMatrix& s, const ComplexMatrix& t, const Tolerance& tol,
                                    std::uint64_t probe_seed) {
  require_square(s, "elementary(S)");
  require_square(t, "elementary(T)");
  require_finite(s, "elementary(S)");
  require_finite(t, "elementary(T)");
  tol.check();

  ElementaryOperator e{s, t, kron(t.transpose(), s)};

  std::mt19937_64 rng(probe_seed);
  std::normal_distribution<double> normal;
  ComplexMatrix probe(s.rows(), t.rows());
  for (Eigen::Index j = 0; j < probe.cols(); ++j) {
    for (Eigen::Index i = 0; i < probe.rows(); ++i) probe(i, j) = Complex(normal(rng), normal(rng));
  }
  const double res = vec_identity_residual(e, probe);
  if (!(res <= tol.residual())) {
    throw Error(ErrorCode::Internal, "build_elementary: vec identity residual " + sci(res) +
                                         " exceeds tolerance");
  }
  return e;
}

double vec_identity_residual(const ElementaryOperator& e, const ComplexMatrix& x) {
  const double scale = e.matrix_form.norm() * x.norm();
  const double diff = (vec(e.apply(x)) - e.matrix_form * vec(x)).norm();
  return scale > 0.0 ? diff / scale : diff;
}

namespace {

std::vector<WeightedPoint> to_weighted(const std::vector<EigenCluster>& clusters) {
  std::vector<WeightedPoint> out;
  out.reserve(clusters.size());
  for (const auto& c : clusters) out.push_back({c.value, c.multiplicity});
  return out;
}

void sort_points(std::vector<WeightedPoint>& pts) {
  std::sort(pts.begin(), pts.end(), [](const WeightedPoint& x, const WeightedPoint& y) {
    return lex_less(x.value, y.value);
  });
}

}  // namespace

SpectrumCheck spectrum_check(const ElementaryOperator& e, const Tolerance& tol) {
  SpectrumCheck out;
  out.radius = tol.eig_cluster_for(e.matrix_form);
  out.operator_spectrum = to_weighted(spectral_clusters(e.matrix_form, tol));
  out.index = index_of(e.matrix_form, tol);

  const auto ss = spectral_clusters(e.s, tol);
  const auto ts = spectral_clusters(e.t, tol);
  for (const auto& x : ss) {
    for (const auto& y : ts) {
      const Complex p = canonical(x.value * y.value);
      const std::size_t m = x.multiplicity * y.multiplicity;
      auto hit = std::find_if(out.product_spectrum.begin(), out.product_spectrum.end(),
                              [&](const WeightedPoint& w) { return std::abs(w.value - p) <= out.radius; });
      if (hit != out.product_spectrum.end()) {
        hit->multiplicity += m;
      } else {
        out.product_spectrum.push_back({p, m});
      }
    }
  }
  sort_points(out.product_spectrum);

  out.match = out.operator_spectrum.size() == out.product_spectrum.size();
  std::vector<bool> used(out.product_spectrum.size(), false);
  for (const auto& w : out.operator_spectrum) {
    if (!out.match) break;
    bool found = false;
    for (std::size_t i = 0; i < out.product_spectrum.size() && !found; ++i) {
      const auto& p = out.product_spectrum[i];
      if (!used[i] && std::abs(p.value - w.value) <= out.radius && p.multiplicity == w.multiplicity) {
        used[i] = true;
        found = true;
      }
    }
    out.match = found;
  }
  return out;
}

TensorReport elementary_classify(const SpectralClassification& s, const SpectralClassification& t) {
  return tensor_classify(s, t);
}

}  // namespace drazspec
