#include "drazspec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "drazspec/drazin.hpp"
#include "drazspec/elementary.hpp"
#include "drazspec/error.hpp"
#include "drazspec/json_io.hpp"
#include "drazspec/tensor.hpp"

namespace drazspec {

namespace {

using Rng = std::mt19937_64;

std::size_t uniform_int(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

ComplexMatrix random_unitary(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  return qr.householderQ() * identity(n);
}

ComplexMatrix random_gaussian(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  }
  return g;
}

std::string describe(Complex z) {
  std::ostringstream os;
  os << '(' << z.real() << ", " << z.imag() << ')';
  return os.str();
}

Json spec_to_json(const std::vector<PoleSpec>& spec) {
  Json out = Json::array();
  for (const auto& p : spec) {
    out.push_back({{"value", to_json(p.value)}, {"order", p.order}, {"multiplicity", p.multiplicity}});
  }
  return out;
}

// Random Jordan structure of total dimension n. zero_weight is the chance that
// a block sits at 0.
std::vector<PoleSpec> random_spec(std::size_t n, std::size_t max_order, double zero_weight, Rng& rng) {
  const auto& lattice = value_lattice();
  std::vector<PoleSpec> spec;
  std::size_t left = n;
  while (left > 0) {
    const Complex v = coin(rng, zero_weight) ? Complex(0.0) : lattice[uniform_int(rng, 0, lattice.size() - 1)];
    const std::size_t order = uniform_int(rng, 1, std::min(left, max_order));
    spec.push_back({v, order, 1});
    left -= order;
  }
  return spec;
}

// Largest block order per distinct value: the pole orders the generator implies.
std::vector<std::pair<Complex, std::size_t>> expected_poles(const std::vector<PoleSpec>& spec) {
  std::vector<std::pair<Complex, std::size_t>> out;
  for (const auto& p : spec) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == p.value; });
    if (it == out.end()) {
      out.emplace_back(p.value, p.order);
    } else {
      it->second = std::max(it->second, p.order);
    }
  }
  return out;
}

// Checks that a matrix-derived classification reproduces the generator spec.
void check_recovers_spec(const SpectralClassification& c, const std::vector<PoleSpec>& spec, const char* label,
                         std::vector<std::string>& failures) {
  const auto expected = expected_poles(spec);
  if (c.points().size() != expected.size()) {
    failures.push_back(std::string(label) + ": expected " + std::to_string(expected.size()) +
                       " distinct eigenvalues, classified " + std::to_string(c.points().size()));
    return;
  }
  for (const auto& [value, order] : expected) {
    const auto it = std::find_if(c.points().begin(), c.points().end(), [&](const SpectralPoint& p) {
      return std::abs(p.value - value) <= c.merge_radius();
    });
    if (it == c.points().end()) {
      failures.push_back(std::string(label) + ": eigenvalue " + describe(value) + " not recovered");
    } else if (it->order != order) {
      failures.push_back(std::string(label) + ": eigenvalue " + describe(value) + " has order " +
                         std::to_string(it->order.value_or(0)) + ", expected " + std::to_string(order));
    }
  }
}

double max_matched_distance(const ComplexSet& x, const ComplexSet& y) {
  double worst = 0.0;
  for (Complex z : x) {
    double best = INFINITY;
    for (Complex w : y) best = std::min(best, std::abs(z - w));
    worst = std::max(worst, best);
  }
  return worst;
}

template <typename Body>
std::vector<VerificationReport> run_trials(const SuiteConfig& cfg, TrialKind kind, Body body) {
  cfg.tol.check();
  std::vector<VerificationReport> out;
  out.reserve(cfg.trials);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    VerificationReport r;
    r.trial_id = t;
    r.kind = kind;
    r.seed = trial_seed(cfg.seed, t);
    try {
      body(r);
    } catch (const std::exception& e) {
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    r.passed = r.failures.empty();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

const char* to_string(TrialKind k) noexcept {
  switch (k) {
    case TrialKind::MatrixTensor: return "matrix_tensor";
    case TrialKind::MatrixElementary: return "matrix_elementary";
    case TrialKind::SymbolicConsistency: return "symbolic_consistency";
    case TrialKind::DrazinAxioms: return "drazin_axioms";
    case TrialKind::AdjointInvariance: return "adjoint_invariance";
  }
  return "?";
}

std::uint64_t trial_seed(std::uint64_t suite_seed, std::size_t trial_id) noexcept {
  std::uint64_t z = suite_seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial_id) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

const std::vector<Complex>& value_lattice() {
  static const std::vector<Complex> lattice = [] {
    const Complex units[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    std::vector<Complex> out;
    for (double scale : {0.5, 1.0, 2.0}) {
      for (Complex u : units) out.push_back(scale * u);
    }
    return out;
  }();
  return lattice;
}

ComplexMatrix gen_matrix_with_poles(const std::vector<PoleSpec>& spec, double cond_cap, std::uint64_t seed) {
  if (spec.empty()) throw Error(ErrorCode::InvalidArgument, "gen_matrix_with_poles: empty spec");
  if (!(cond_cap >= 1.0) || !std::isfinite(cond_cap)) {
    throw Error(ErrorCode::InvalidArgument, "gen_matrix_with_poles: cond_cap must be a finite value >= 1");
  }
  std::vector<ComplexMatrix> blocks;
  std::size_t n = 0;
  for (const auto& p : spec) {
    if (p.order == 0 || p.multiplicity == 0) {
      throw Error(ErrorCode::InvalidArgument, "gen_matrix_with_poles: orders and multiplicities must be >= 1");
    }
    for (std::size_t k = 0; k < p.multiplicity; ++k) {
      blocks.push_back(jordan_block(p.value, static_cast<Eigen::Index>(p.order)));
      n += p.order;
    }
  }
  if (n > kMaxGeneratedDimension) {
    throw Error(ErrorCode::InvalidArgument, "gen_matrix_with_poles: total dimension " + std::to_string(n) +
                                                " exceeds " + std::to_string(kMaxGeneratedDimension));
  }
  const ComplexMatrix jordan = block_diagonal(blocks);
  const auto dim = static_cast<Eigen::Index>(n);

  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr int kAttempts = 8;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const double target = std::exp(unit(rng) * std::log(cond_cap));
    Eigen::VectorXd sigma(dim);
    for (Eigen::Index i = 0; i < dim; ++i) sigma(i) = std::exp(unit(rng) * std::log(target));
    sigma(0) = 1.0;
    if (dim > 1) sigma(dim - 1) = target;
    const ComplexMatrix p = random_unitary(dim, rng) * sigma.cast<Complex>().asDiagonal() * random_unitary(dim, rng);
    if (condition_number(p) > cond_cap * (1.0 + 1e-9)) continue;
    const Eigen::PartialPivLU<ComplexMatrix> lu(p);
    return p * jordan * lu.inverse();
  }
  throw Error(ErrorCode::CheckFailed, "gen_matrix_with_poles: no similarity within cond_cap after retries");
}

SpectralClassification gen_descriptor(const DescriptorProfile& profile, std::uint64_t seed) {
  Rng rng(seed);
  ZeroMode mode = profile.zero_mode;
  if (mode == ZeroMode::Random) {
    constexpr ZeroMode modes[] = {ZeroMode::Absent, ZeroMode::Pole, ZeroMode::IsoNonPole,
                                  ZeroMode::Acc, ZeroMode::Nilpotent, ZeroMode::Quasinilpotent};
    mode = modes[uniform_int(rng, 0, std::size(modes) - 1)];
  }
  const auto order = [&] { return std::optional<std::size_t>(uniform_int(rng, 1, 3)); };
  if (mode == ZeroMode::Nilpotent) {
    return SpectralClassification({{Complex(0.0), SpectralTag::Pole, order()}});
  }
  if (mode == ZeroMode::Quasinilpotent) {
    return SpectralClassification({{Complex(0.0), SpectralTag::IsoNonPole, std::nullopt}});
  }

  std::vector<SpectralTag> tags{SpectralTag::Pole};
  if (profile.allow_acc) tags.push_back(SpectralTag::Acc);
  if (profile.allow_iso_np) tags.push_back(SpectralTag::IsoNonPole);

  std::vector<Complex> values = value_lattice();
  std::shuffle(values.begin(), values.end(), rng);
  const std::size_t count = uniform_int(rng, 1, 4);

  std::vector<SpectralPoint> points;
  for (std::size_t i = 0; i < count; ++i) {
    const SpectralTag tag = tags[uniform_int(rng, 0, tags.size() - 1)];
    points.push_back({values[i], tag, tag == SpectralTag::Pole ? order() : std::nullopt});
  }
  switch (mode) {
    case ZeroMode::Pole: points.push_back({Complex(0.0), SpectralTag::Pole, order()}); break;
    case ZeroMode::IsoNonPole: points.push_back({Complex(0.0), SpectralTag::IsoNonPole, std::nullopt}); break;
    case ZeroMode::Acc: points.push_back({Complex(0.0), SpectralTag::Acc, std::nullopt}); break;
    default: break;
  }
  return SpectralClassification(std::move(points));
}

std::vector<VerificationReport> run_symbolic_suite(const SuiteConfig& cfg) {
  return run_trials(cfg, TrialKind::SymbolicConsistency, [&](VerificationReport& r) {
    Rng rng(r.seed);
    const DescriptorProfile pa{coin(rng), coin(rng), ZeroMode::Random};
    const DescriptorProfile pb{coin(rng), coin(rng), ZeroMode::Random};
    const auto a = gen_descriptor(pa, rng());
    const auto b = gen_descriptor(pb, rng());
    r.replay = {{"a", descriptor_to_json(a)}, {"b", descriptor_to_json(b)}};
    auto& fail = r.failures;

    if (!validate(a).ok() || !validate(b).ok()) fail.push_back("generated descriptor is invalid");

    const TensorReport rep = tensor_classify(a, b);
    const ComplexSet sdr = rep.drazin.by_classification;
    const ComplexSet& d = rep.d;
    r.predicted = {{"drazin_spectrum_formula", to_json(rep.drazin.by_formula)}, {"D", to_json(d)}};
    r.observed = {{"drazin_spectrum_classification", to_json(sdr)},
                  {"zero", to_string(rep.zero.status)},
                  {"case", std::string(rep.zero.case_id)},
                  {"regime", to_string(rep.drazin.regime)}};

    if (!validate(rep.result).ok()) fail.push_back("tensor result violates descriptor invariants");
    if (!(rep.result.spectrum() == product_set(a.spectrum(), b.spectrum()))) {
      fail.push_back("spectrum of the product is not σ(a)σ(b)");
    }
    if (!(rep.drazin.by_classification == rep.drazin.by_formula)) fail.push_back("two-path mismatch");
    if (!sdr.subset_of(d)) fail.push_back("σ_DR(a⊗b) not contained in D");
    if (!(d - sdr).subset_of(ComplexSet{Complex(0.0)})) fail.push_back("D ∖ σ_DR(a⊗b) is not within {0}");

    const DrazinRegime regime = rep.drazin.regime;
    if (regime == DrazinRegime::BothDrazinEmpty) {
      if (!d.empty() || !sdr.empty()) fail.push_back("σ=Π on both sides but D or σ_DR(a⊗b) nonempty");
    } else if (!(sdr.without_zero() == d.without_zero())) {
      fail.push_back("σ_DR(a⊗b)∖0 differs from D∖0");
    }
    if (!(sdr == d)) {
      if (!(d == (sdr | ComplexSet{Complex(0.0)})) || sdr.contains_zero() || rep.zero.status != ZeroStatus::Pole) {
        fail.push_back("strict inclusion without D = σ_DR(a⊗b) ∪ {0} and 0 a pole of a⊗b");
      }
    }
    const auto& p = rep.predicates;
    if (regime == DrazinRegime::BothNonempty &&
        !(p.drazin_spectrum_equals_d == p.invertible_or_not_drazin &&
          p.invertible_or_not_drazin == p.invertible_or_zero_outside)) {
      fail.push_back("equality criteria disagree");
    }
    if ((regime == DrazinRegime::OneSidedLeft || regime == DrazinRegime::OneSidedRight) &&
        p.one_sided != p.drazin_spectrum_equals_d) {
      fail.push_back("one-sided equality criterion disagrees");
    }
    if (regime == DrazinRegime::NilpotentFactor &&
        !(sdr.empty() && d == ComplexSet{Complex(0.0)})) {
      fail.push_back("nilpotent factor: expected σ_DR(a⊗b) = ∅ and D = {0}");
    }
  });
}

std::vector<VerificationReport> run_matrix_tensor_suite(const SuiteConfig& cfg) {
  const std::size_t max_product = cfg.max_dim ? cfg.max_dim : 36;
  const double cond_cap = cfg.cond_cap > 0.0 ? cfg.cond_cap : 30.0;
  return run_trials(cfg, TrialKind::MatrixTensor, [&](VerificationReport& r) {
    Rng rng(r.seed);
    const std::size_t na = uniform_int(rng, 1, std::min<std::size_t>(6, max_product));
    const std::size_t nb = uniform_int(rng, 1, std::min<std::size_t>(6, max_product / na));
    const auto spec_a = random_spec(na, 3, 0.35, rng);
    const auto spec_b = random_spec(nb, 3, 0.35, rng);
    const ComplexMatrix a = gen_matrix_with_poles(spec_a, cond_cap, rng());
    const ComplexMatrix b = gen_matrix_with_poles(spec_b, cond_cap, rng());
    r.replay = {{"A", matrix_to_json(a)}, {"B", matrix_to_json(b)},
                {"spec_A", spec_to_json(spec_a)}, {"spec_B", spec_to_json(spec_b)}};
    auto& fail = r.failures;

    const auto da = classify_matrix(a, cfg.tol);
    const auto db = classify_matrix(b, cfg.tol);
    check_recovers_spec(da, spec_a, "A", fail);
    check_recovers_spec(db, spec_b, "B", fail);

    const ComplexMatrix k = kron(a, b);
    const double radius = cfg.tol.eig_cluster_for(k);
    const auto predicted = tensor_product_classification(da, db);
    const ZeroDecision zero = classify_zero(da, db);
    const auto oracle = classify_matrix(k, cfg.tol);
    r.predicted = {{"classification", descriptor_to_json(predicted)},
                   {"zero", to_string(zero.status)},
                   {"case", std::string(zero.case_id)}};
    r.observed = {{"classification", descriptor_to_json(oracle)}};

    const ComplexSet ps = ComplexSet::from(predicted.spectrum().values(), radius);
    const ComplexSet os = ComplexSet::from(oracle.spectrum().values(), radius);
    r.residuals["spectrum_distance"] = std::max(max_matched_distance(ps, os), max_matched_distance(os, ps));

    if (!predicted.all_poles()) fail.push_back("prediction has non-pole points for matrices");
    if (!oracle.all_poles()) fail.push_back("oracle has non-pole points");
    if (!(ps == os)) fail.push_back("spectrum mismatch between prediction and kron oracle");

    const ComplexSet pp = ComplexSet::from(predicted.poles().without_zero().values(), radius);
    const ComplexSet op = ComplexSet::from(oracle.poles().without_zero().values(), radius);
    if (!(pp == op)) fail.push_back("nonzero pole sets differ");

    const bool oracle_zero = oracle.tag_at(Complex(0.0)).has_value();
    const ZeroStatus oracle_status = oracle_zero ? ZeroStatus::Pole : ZeroStatus::NotInSpectrum;
    if (zero.status != oracle_status) {
      fail.push_back(std::string("zero status: predicted ") + to_string(zero.status) + ", oracle " +
                     to_string(oracle_status));
    }
  });
}

std::vector<VerificationReport> run_elementary_suite(const SuiteConfig& cfg) {
  const std::size_t max_n = cfg.max_dim ? cfg.max_dim : 5;
  const double cond_cap = cfg.cond_cap > 0.0 ? cfg.cond_cap : 30.0;
  return run_trials(cfg, TrialKind::MatrixElementary, [&](VerificationReport& r) {
    Rng rng(r.seed);
    const std::size_t n = uniform_int(rng, 1, max_n);
    const std::size_t m = uniform_int(rng, 1, max_n);
    ComplexMatrix s;
    ComplexMatrix t;
    if (coin(rng)) {
      s = random_gaussian(static_cast<Eigen::Index>(n), rng);
      t = random_gaussian(static_cast<Eigen::Index>(m), rng);
    } else {
      s = gen_matrix_with_poles(random_spec(n, 3, 0.3, rng), cond_cap, rng());
      t = gen_matrix_with_poles(random_spec(m, 3, 0.3, rng), cond_cap, rng());
    }
    r.replay = {{"S", matrix_to_json(s)}, {"T", matrix_to_json(t)}};
    auto& fail = r.failures;

    const ElementaryOperator e = build_elementary(s, t, cfg.tol, rng());
    ComplexMatrix probe(s.rows(), t.rows());
    std::normal_distribution<double> normal;
    for (Eigen::Index j = 0; j < probe.cols(); ++j) {
      for (Eigen::Index i = 0; i < probe.rows(); ++i) probe(i, j) = Complex(normal(rng), normal(rng));
    }
    const double vec_res = vec_identity_residual(e, probe);
    r.residuals["vec_identity"] = vec_res;
    if (!(vec_res <= 1e-10)) fail.push_back("vec identity residual above 1e-10");

    const SpectrumCheck check = spectrum_check(e, cfg.tol);
    r.predicted = {{"product_spectrum", to_json(check).at("product_spectrum")}};
    r.observed = {{"operator_spectrum", to_json(check).at("operator_spectrum")}, {"index", check.index}};
    if (!check.match) fail.push_back("σ(M) multiset differs from σ(S)σ(T)");

    const auto ds = classify_matrix(s, cfg.tol);
    const auto dt = classify_matrix(t, cfg.tol);
    const bool both_invertible = ds.invertible() && dt.invertible();
    const bool zero_in_products = std::any_of(check.product_spectrum.begin(), check.product_spectrum.end(),
                                              [](const WeightedPoint& w) { return w.value == Complex(0.0); });
    if ((check.index == 0) != both_invertible || both_invertible == zero_in_products) {
      fail.push_back("index(M) = 0, invertibility of S and T, and 0 ∉ σ(S)σ(T) disagree");
    }

    const double radius = cfg.tol.eig_cluster_for(e.matrix_form);
    const auto predicted = elementary_classify(ds, dt).result;
    const auto oracle = classify_matrix(e.matrix_form, cfg.tol);
    if (!(ComplexSet::from(predicted.spectrum().values(), radius) ==
          ComplexSet::from(oracle.spectrum().values(), radius)) ||
        !predicted.all_poles() || !oracle.all_poles()) {
      fail.push_back("elementary classification differs from classify_matrix(matrix_form)");
    }
  });
}

std::vector<VerificationReport> run_drazin_suite(const SuiteConfig& cfg) {
  const std::size_t max_n = cfg.max_dim ? cfg.max_dim : 20;
  const double cond_cap = cfg.cond_cap > 0.0 ? cfg.cond_cap : kDefaultCondCap;
  return run_trials(cfg, TrialKind::DrazinAxioms, [&](VerificationReport& r) {
    Rng rng(r.seed);
    const std::size_t index = r.trial_id % 5;
    const std::size_t n = uniform_int(rng, std::max<std::size_t>(index, 1), max_n);

    // Nilpotent part: one J_index(0) plus optional smaller zero blocks; the
    // rest is an invertible core drawn from the lattice.
    std::vector<PoleSpec> spec;
    std::size_t left = n;
    if (index > 0) {
      spec.push_back({Complex(0.0), index, 1});
      left -= index;
      while (left > 0 && coin(rng, 0.3)) {
        const std::size_t o = uniform_int(rng, 1, std::min(index, left));
        spec.push_back({Complex(0.0), o, 1});
        left -= o;
      }
    }
    if (left > 0) {
      for (const auto& p : random_spec(left, 3, 0.0, rng)) spec.push_back(p);
    }
    const ComplexMatrix a = gen_matrix_with_poles(spec, cond_cap, rng());
    r.replay = {{"A", matrix_to_json(a)}, {"spec", spec_to_json(spec)}, {"prescribed_index", index}};
    auto& fail = r.failures;

    const std::size_t got = index_of(a, cfg.tol);
    const DrazinDecomposition d = drazin_inverse(a, cfg.tol);
    const DrazinResiduals res = drazin_residuals(a, d.drazin_inverse, d.index);
    r.residuals = {{"power", res.power}, {"reflexive", res.reflexive}, {"commutator", res.commutator}};
    r.predicted = {{"index", index}};
    r.observed = {{"index", got}, {"decomposition_index", d.index}};

    if (got != index) fail.push_back("index_of returned " + std::to_string(got));
    if (d.index != got) fail.push_back("decomposition index differs from index_of");
    if (!res.within(cfg.tol.residual())) fail.push_back("axiom residual above tolerance");
    if (index == 0) {
      const ComplexMatrix inv = solve(a, identity(a.rows()), cfg.tol);
      const double diff = (d.drazin_inverse - inv).norm() / inv.norm();
      r.residuals["inverse_difference"] = diff;
      if (!(diff <= cfg.tol.residual())) fail.push_back("A^D differs from A^{-1} for invertible A");
    }
  });
}

std::vector<VerificationReport> run_adjoint_suite(const SuiteConfig& cfg) {
  const std::size_t max_n = cfg.max_dim ? cfg.max_dim : 8;
  const double cond_cap = cfg.cond_cap > 0.0 ? cfg.cond_cap : kDefaultCondCap;
  return run_trials(cfg, TrialKind::AdjointInvariance, [&](VerificationReport& r) {
    Rng rng(r.seed);
    const std::size_t n = uniform_int(rng, 1, max_n);
    const auto spec = random_spec(n, 3, 0.3, rng);
    const ComplexMatrix a = gen_matrix_with_poles(spec, cond_cap, rng());
    r.replay = {{"A", matrix_to_json(a)}, {"spec", spec_to_json(spec)}};

    const auto ca = classify_matrix(a, cfg.tol);
    const auto ct = classify_matrix(a.transpose(), cfg.tol);
    r.predicted = {{"classification", descriptor_to_json(ca)}};
    r.observed = {{"classification_transpose", descriptor_to_json(ct)}};
    check_recovers_spec(ca, spec, "A", r.failures);

    const double radius = std::max(ca.merge_radius(), ct.merge_radius());
    if (ca.points().size() != ct.points().size()) {
      r.failures.push_back("different number of spectral points for A and A^T");
      return;
    }
    double worst = 0.0;
    for (const auto& p : ca.points()) {
      const auto it = std::find_if(ct.points().begin(), ct.points().end(), [&](const SpectralPoint& q) {
        return std::abs(q.value - p.value) <= radius;
      });
      if (it == ct.points().end()) {
        r.failures.push_back("eigenvalue " + describe(p.value) + " of A missing for A^T");
        continue;
      }
      worst = std::max(worst, std::abs(it->value - p.value));
      if (it->order != p.order) r.failures.push_back("pole order differs at " + describe(p.value));
    }
    r.residuals["value_distance"] = worst;
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"drazin", "symbolic", "matrix-tensor", "elementary", "adjoint"};
  return names;
}

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "drazin") return run_drazin_suite(cfg);
  if (name == "symbolic") return run_symbolic_suite(cfg);
  if (name == "matrix-tensor") return run_matrix_tensor_suite(cfg);
  if (name == "elementary") return run_elementary_suite(cfg);
  if (name == "adjoint") return run_adjoint_suite(cfg);
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
}

nlohmann::json to_json(const VerificationReport& r) {
  Json j = {{"trial_id", r.trial_id}, {"kind", to_string(r.kind)}, {"seed", r.seed},
            {"passed", r.passed},     {"residuals", r.residuals},  {"failures", r.failures},
            {"predicted", r.predicted}, {"observed", r.observed}};
  if (!r.passed) j["replay"] = r.replay;
  return j;
}

}  // namespace drazspec
