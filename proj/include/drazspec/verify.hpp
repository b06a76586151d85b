#pragma once

// Randomised two-path comparisons: every trial computes a quantity through
// the spectral calculus and through an independent numerical route, and
// records enough input to replay the trial on its own.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "drazspec/linalg.hpp"
#include "drazspec/spectral.hpp"

namespace drazspec {

/// Jordan structure request: `multiplicity` blocks J_order(value).
struct PoleSpec {
  Complex value;
  std::size_t order = 1;
  std::size_t multiplicity = 1;
};

inline constexpr std::size_t kMaxGeneratedDimension = 64;
inline constexpr double kDefaultCondCap = 1e3;

/// P J P^{-1} with J the Jordan matrix of `spec` and P a random similarity
/// whose 2-norm condition number is at most cond_cap. Throws InvalidArgument
/// on an empty or oversized spec and CheckFailed when no admissible P is found
/// within a bounded number of attempts.
ComplexMatrix gen_matrix_with_poles(const std::vector<PoleSpec>& spec, double cond_cap, std::uint64_t seed);

/// Nonzero generator lattice: u * 2^e with u in {±1, ±i, ±1±i} and e in {-1, 0, 1}.
/// Products of lattice points are exact in binary floating point, so product
/// collisions are exact.
const std::vector<Complex>& value_lattice();

enum class ZeroMode {
  Random,         ///< any of the modes below, drawn per call
  Absent,         ///< invertible
  Pole,           ///< 0 is a pole, plus nonzero points
  IsoNonPole,     ///< 0 isolated non-pole, plus nonzero points
  Acc,            ///< 0 accumulation point, plus nonzero points
  Nilpotent,      ///< {0: pole}
  Quasinilpotent, ///< {0: iso_non_pole}
};

struct DescriptorProfile {
  bool allow_acc = true;     ///< nonzero Acc points
  bool allow_iso_np = true;  ///< nonzero IsoNonPole points
  ZeroMode zero_mode = ZeroMode::Random;
};

SpectralClassification gen_descriptor(const DescriptorProfile& profile, std::uint64_t seed);

enum class TrialKind { MatrixTensor, MatrixElementary, SymbolicConsistency, DrazinAxioms, AdjointInvariance };

const char* to_string(TrialKind k) noexcept;

struct VerificationReport {
  std::size_t trial_id = 0;
  TrialKind kind = TrialKind::SymbolicConsistency;
  std::uint64_t seed = 0;
  bool passed = false;
  std::map<std::string, double> residuals;
  nlohmann::json predicted;
  nlohmann::json observed;
  nlohmann::json replay;    ///< inputs needed to rerun this trial alone
  std::vector<std::string> failures;
};

/// Per-trial seed derived from the suite seed (splitmix64), so trials are
/// independent of execution order.
std::uint64_t trial_seed(std::uint64_t suite_seed, std::size_t trial_id) noexcept;

struct SuiteConfig {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  Tolerance tol;
  std::size_t max_dim = 0;      ///< 0: suite default
  double cond_cap = 0.0;        ///< 0: suite default
};

/// Kronecker two-path: tensor calculus on classify_matrix(A), classify_matrix(B)
/// against classify_matrix(kron(A, B)). Defaults: dim product <= 36, factor
/// cond_cap 30.
std::vector<VerificationReport> run_matrix_tensor_suite(const SuiteConfig& cfg);

/// σ(M_{S,T}) = σ(S)σ(T) as multisets plus the vec identity. Defaults: n, m <= 5.
std::vector<VerificationReport> run_elementary_suite(const SuiteConfig& cfg);

/// Two-path Drazin spectrum, containment, strict-inclusion shape and the
/// equivalence of the equality criteria over random descriptor pairs.
std::vector<VerificationReport> run_symbolic_suite(const SuiteConfig& cfg);

/// Drazin axioms on matrices with prescribed index 0..4. Defaults: n <= 20,
/// cond_cap 1e3.
std::vector<VerificationReport> run_drazin_suite(const SuiteConfig& cfg);

/// classify_matrix(A^T) = classify_matrix(A). Defaults: n <= 8, cond_cap 1e3.
std::vector<VerificationReport> run_adjoint_suite(const SuiteConfig& cfg);

/// Dispatch by name: "drazin", "symbolic", "matrix-tensor", "elementary", "adjoint".
/// Throws InvalidArgument for an unknown name.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteConfig& cfg);

const std::vector<std::string>& suite_names();

nlohmann::json to_json(const VerificationReport& r);

}  // namespace drazspec
