#include "drazspec/json_io.hpp"

#include <cmath>

#include "drazspec/error.hpp"

namespace drazspec {

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorCode::Parse, msg); }

double finite_number(const Json& j, const char* what) {
  if (!j.is_number()) parse_error(std::string(what) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) parse_error(std::string(what) + ": non-finite value");
  return v;
}

Complex complex_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) parse_error(std::string(what) + ": expected [re, im]");
  return {finite_number(j[0], what), finite_number(j[1], what)};
}

std::size_t positive_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    parse_error(std::string("matrix: '") + key + "' must be an integer");
  }
  const auto v = j[key].get<long long>();
  if (v <= 0) parse_error(std::string("matrix: '") + key + "' must be positive");
  return static_cast<std::size_t>(v);
}

}  // namespace

Json to_json(Complex z) {
  z = canonical(z);
  return Json::array({z.real(), z.imag()});
}

Json to_json(const ComplexSet& s) {
  Json out = Json::array();
  for (Complex z : s) out.push_back(to_json(z));
  return out;
}

Json matrix_to_json(const ComplexMatrix& a) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) data.push_back(to_json(a(i, j)));
  }
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) parse_error("matrix: expected an object");
  const std::size_t rows = positive_int(j, "rows");
  const std::size_t cols = positive_int(j, "cols");
  if (!j.contains("data") || !j["data"].is_array()) parse_error("matrix: 'data' must be an array");
  const Json& data = j["data"];
  if (data.size() != rows * cols) {
    parse_error("matrix: 'data' has " + std::to_string(data.size()) + " entries, expected " +
                std::to_string(rows * cols));
  }
  ComplexMatrix a(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t k = 0; k < data.size(); ++k) {
    a(static_cast<Eigen::Index>(k / cols), static_cast<Eigen::Index>(k % cols)) =
        complex_from_json(data[k], "matrix entry");
  }
  return a;
}

Json descriptor_to_json(const SpectralClassification& c) {
  Json pts = Json::array();
  for (const auto& p : c.points()) {
    Json o = {{"value", to_json(p.value)}, {"tag", to_string(p.tag)}};
    o["order"] = p.order ? Json(*p.order) : Json(nullptr);
    pts.push_back(std::move(o));
  }
  return {{"points", std::move(pts)}};
}

SpectralClassification descriptor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
    parse_error("descriptor: expected {\"points\": [...]}");
  }
  std::vector<SpectralPoint> points;
  for (const auto& p : j["points"]) {
    if (!p.is_object() || !p.contains("value") || !p.contains("tag")) {
      parse_error("descriptor: each point needs 'value' and 'tag'");
    }
    SpectralPoint sp;
    sp.value = complex_from_json(p["value"], "descriptor value");
    if (!p["tag"].is_string()) parse_error("descriptor: 'tag' must be a string");
    const auto tag = parse_tag(p["tag"].get<std::string>());
    if (!tag) parse_error("descriptor: unknown tag '" + p["tag"].get<std::string>() + "'");
    sp.tag = *tag;
    if (p.contains("order") && !p["order"].is_null()) {
      if (!p["order"].is_number_integer() || p["order"].get<long long>() < 0) {
        parse_error("descriptor: 'order' must be a nonnegative integer or null");
      }
      sp.order = p["order"].get<std::size_t>();
    }
    points.push_back(sp);
  }
  return SpectralClassification(std::move(points));
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
}

bool looks_like_matrix(const Json& j) { return j.is_object() && j.contains("rows") && j.contains("data"); }
bool looks_like_descriptor(const Json& j) { return j.is_object() && j.contains("points"); }

Json to_json(const ValidationResult& v) {
  auto list = [](const std::vector<Violation>& vs) {
    Json out = Json::array();
    for (const auto& x : vs) out.push_back({{"invariant", x.invariant}, {"detail", x.detail}});
    return out;
  };
  return {{"valid", v.ok()}, {"violations", list(v.violations)}, {"warnings", list(v.warnings)}};
}

Json tensor_report_to_json(const TensorReport& r, const char* left, const char* right) {
  Json j;
  j["inputs"] = {{left, descriptor_to_json(r.a)}, {right, descriptor_to_json(r.b)}};
  j["result"] = descriptor_to_json(r.result);
  j["sets"] = {{"L", to_json(r.l)}, {"A", to_json(r.a_set)}, {"B", to_json(r.b_set)}, {"D", to_json(r.d)}};
  j["zero"] = {{"status", to_string(r.zero.status)}, {"case", std::string(r.zero.case_id)}};
  j["equality_holds"] = r.equality_holds;
  j["drazin_spectrum"] = {{"classification", to_json(r.drazin.by_classification)},
                          {"formula", to_json(r.drazin.by_formula)},
                          {"paths_agree", r.drazin.by_classification == r.drazin.by_formula},
                          {"equals_D", r.drazin.equals_d},
                          {"regime", to_string(r.drazin.regime)}};
  const auto& p = r.predicates;
  j["predicates"] = {{"both_invertible", p.both_invertible},
                     {"zero_outside_pole_resolvent_mix", p.zero_outside_pole_resolvent_mix},
                     {"tensor_not_drazin_invertible", p.tensor_not_drazin_invertible},
                     {"drazin_spectrum_equals_D", p.drazin_spectrum_equals_d},
                     {"invertible_or_not_drazin_invertible", p.invertible_or_not_drazin},
                     {"invertible_or_zero_outside", p.invertible_or_zero_outside},
                     {"one_sided", p.one_sided ? Json(*p.one_sided) : Json(nullptr)}};
  Json warnings = Json::array();
  for (const auto& w : r.warnings) warnings.push_back({{"invariant", w.invariant}, {"detail", w.detail}});
  j["warnings"] = std::move(warnings);
  return j;
}

DrazinReport make_drazin_report(const ComplexMatrix& a, const Tolerance& tol) {
  DrazinReport r;
  r.input = a;
  r.decomposition = drazin_inverse(a, tol);
  r.residuals = drazin_residuals(a, r.decomposition.drazin_inverse, r.decomposition.index);
  r.tolerance = tol.residual();
  r.within_tolerance = r.residuals.within(r.tolerance);
  return r;
}

Json to_json(const DrazinReport& r) {
  return {{"index", r.decomposition.index},
          {"drazin_inverse", matrix_to_json(r.decomposition.drazin_inverse)},
          {"core_dimension", r.decomposition.core_block.rows()},
          {"residuals",
           {{"power", r.residuals.power},
            {"reflexive", r.residuals.reflexive},
            {"commutator", r.residuals.commutator}}},
          {"tolerance", r.tolerance},
          {"within_tolerance", r.within_tolerance}};
}

Json to_json(const SpectrumCheck& c) {
  auto list = [](const std::vector<WeightedPoint>& pts) {
    Json out = Json::array();
    for (const auto& p : pts) out.push_back({{"value", to_json(p.value)}, {"multiplicity", p.multiplicity}});
    return out;
  };
  return {{"operator_spectrum", list(c.operator_spectrum)},
          {"product_spectrum", list(c.product_spectrum)},
          {"match", c.match},
          {"radius", c.radius},
          {"index", c.index}};
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace drazspec
