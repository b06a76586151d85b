#pragma once

// File formats.
//   Matrix:     {"rows": n, "cols": m, "data": [[re, im], ...]}   row-major
//   Descriptor: {"points": [{"value": [re, im], "tag": "acc"|"pole"|"iso_non_pole",
//                            "order": k|null}]}
// Doubles are written in shortest round-trip form, so values survive a
// write/read cycle bit-exactly. Sets are rendered sorted by (re, im).

#include <string>

#include "json.hpp"

#include "drazspec/drazin.hpp"
#include "drazspec/elementary.hpp"
#include "drazspec/spectral.hpp"
#include "drazspec/tensor.hpp"

namespace drazspec {

using Json = nlohmann::json;

Json to_json(Complex z);
Json to_json(const ComplexSet& s);
Json matrix_to_json(const ComplexMatrix& a);
Json descriptor_to_json(const SpectralClassification& c);
Json to_json(const ValidationResult& v);

/// Throws Parse on malformed input.
ComplexMatrix matrix_from_json(const Json& j);
SpectralClassification descriptor_from_json(const Json& j);
Json parse_json(const std::string& text);

bool looks_like_matrix(const Json& j);
bool looks_like_descriptor(const Json& j);

/// Labels name the two factors in the rendered report ("a"/"b" or "S"/"T").
Json tensor_report_to_json(const TensorReport& r, const char* left = "a", const char* right = "b");

struct DrazinReport {
  ComplexMatrix input;
  DrazinDecomposition decomposition;
  DrazinResiduals residuals;
  double tolerance = 0.0;
  bool within_tolerance = false;
};

DrazinReport make_drazin_report(const ComplexMatrix& a, const Tolerance& tol);
Json to_json(const DrazinReport& r);

Json to_json(const SpectrumCheck& c);

/// Deterministic rendering: 2-space indent, keys sorted.
std::string dump(const Json& j);

}  // namespace drazspec
