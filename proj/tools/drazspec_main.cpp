// drazspec command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "drazspec/drazspec.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheck = 1;
constexpr int kExitInput = 2;

struct Options {
  double tol_eig = 0.0;
  double tol_rank = 0.0;
  double tol_res = 0.0;
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  std::string format = "json";
  std::vector<std::string> suites;
  std::vector<std::string> files;

  dsp_tolerance tol() const { return {tol_eig, tol_rank, tol_res}; }
};

// Owns a malloc'd string handed out by the library.
struct CString {
  char* p = nullptr;
  ~CString() { dsp_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct Failure {
  int code;
  std::string message;
};

bool is_input_error(dsp_status s) {
  return s == DSP_ERR_INVALID_ARGUMENT || s == DSP_ERR_PARSE || s == DSP_ERR_NOT_SQUARE ||
         s == DSP_ERR_INVALID_DESCRIPTOR;
}

void check(dsp_status s, const std::string& context) {
  if (s == DSP_OK) return;
  throw Failure{is_input_error(s) ? kExitInput : kExitCheck,
                context + ": " + dsp_status_string(s) + ": " + dsp_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitInput, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json sniff(const std::string& text, const std::string& path) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Failure{kExitInput, path + ": invalid JSON: " + e.what()};
  }
}

bool is_matrix(const nlohmann::json& j) { return j.is_object() && j.contains("rows"); }
bool is_descriptor(const nlohmann::json& j) { return j.is_object() && j.contains("points"); }

struct Matrix {
  dsp_matrix* h = nullptr;
  ~Matrix() { dsp_matrix_free(h); }
};

struct Descriptor {
  dsp_descriptor* h = nullptr;
  ~Descriptor() { dsp_descriptor_free(h); }
};

void load(const std::string& path, Matrix& m) {
  check(dsp_matrix_from_json(read_file(path).c_str(), &m.h), path);
}

void load(const std::string& path, Descriptor& d) {
  check(dsp_descriptor_from_json(read_file(path).c_str(), &d.h), path);
}

// Loads and validates; an invalid descriptor prints its violation report.
void load_valid(const std::string& path, Descriptor& d) {
  load(path, d);
  int valid = 0;
  CString report;
  check(dsp_descriptor_validate(d.h, &valid, &report.p), path);
  if (!valid) {
    std::cerr << report.str() << '\n';
    throw Failure{kExitInput, path + ": descriptor violates invariants"};
  }
}

void flatten(const nlohmann::json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array()) &&
      !(j[0].is_array() && j[0].size() == 2 && j[0][0].is_number())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": " << j.dump() << '\n';
}

void emit(const std::string& json, const Options& opt) {
  if (opt.format == "text") {
    flatten(nlohmann::json::parse(json), "", std::cout);
  } else {
    std::cout << json << '\n';
  }
}

int cmd_drazin(const Options& opt) {
  Matrix a;
  load(opt.files.at(0), a);
  const dsp_tolerance tol = opt.tol();
  int within = 0;
  CString report;
  check(dsp_drazin_report(a.h, &tol, &within, &report.p), "drazin");
  emit(report.str(), opt);
  return within ? kExitOk : kExitCheck;
}

int cmd_classify(const Options& opt) {
  const std::string& path = opt.files.at(0);
  const auto j = sniff(read_file(path), path);
  const dsp_tolerance tol = opt.tol();
  if (is_matrix(j)) {
    Matrix a;
    load(path, a);
    Descriptor d;
    check(dsp_classify_matrix(a.h, &tol, &d.h), "classify");
    CString out;
    check(dsp_descriptor_to_json(d.h, &out.p), "classify");
    emit(out.str(), opt);
    return kExitOk;
  }
  if (is_descriptor(j)) {
    Descriptor d;
    load(path, d);
    int valid = 0;
    CString report;
    check(dsp_descriptor_validate(d.h, &valid, &report.p), "classify");
    emit(report.str(), opt);
    return valid ? kExitOk : kExitInput;
  }
  throw Failure{kExitInput, path + ": neither a matrix nor a descriptor"};
}

int cmd_tensor(const Options& opt) {
  Descriptor a;
  Descriptor b;
  load_valid(opt.files.at(0), a);
  load_valid(opt.files.at(1), b);
  CString report;
  check(dsp_tensor_report(a.h, b.h, &report.p), "tensor");
  emit(report.str(), opt);
  return kExitOk;
}

int cmd_elementary(const Options& opt) {
  const auto js = sniff(read_file(opt.files.at(0)), opt.files.at(0));
  const auto jt = sniff(read_file(opt.files.at(1)), opt.files.at(1));
  if (is_descriptor(js) && is_descriptor(jt)) {
    Descriptor s;
    Descriptor t;
    load_valid(opt.files.at(0), s);
    load_valid(opt.files.at(1), t);
    CString report;
    check(dsp_elementary_descriptor_report(s.h, t.h, &report.p), "elementary");
    emit(report.str(), opt);
    return kExitOk;
  }
  Matrix s;
  Matrix t;
  load(opt.files.at(0), s);
  load(opt.files.at(1), t);
  const dsp_tolerance tol = opt.tol();
  int match = 0;
  CString report;
  check(dsp_elementary_report(s.h, t.h, &tol, &match, &report.p), "elementary");
  emit(report.str(), opt);
  return match ? kExitOk : kExitCheck;
}

int cmd_verify(const Options& opt) {
  std::vector<std::string> suites = opt.suites;
  if (suites.empty()) suites = {"drazin", "symbolic", "matrix-tensor", "elementary", "adjoint"};
  const dsp_tolerance tol = opt.tol();
  std::size_t total_failures = 0;
  for (const auto& name : suites) {
    CString lines;
    std::size_t failures = 0;
    check(dsp_verify(name.c_str(), opt.trials, opt.seed, &tol, &lines.p, &failures), "verify " + name);
    total_failures += failures;
    if (opt.format == "text") {
      std::istringstream in(lines.str());
      std::string line;
      while (std::getline(in, line)) {
        const auto j = nlohmann::json::parse(line);
        if (j.contains("summary")) {
          const auto& s = j["summary"];
          std::cout << name << ": " << s["passed"].get<std::size_t>() << "/" << s["trials"].get<std::size_t>()
                    << " passed\n";
        } else if (!j["passed"].get<bool>()) {
          std::cout << "  trial " << j["trial_id"] << " failed: " << j["failures"].dump() << "\n  replay: "
                    << j["replay"].dump() << '\n';
        }
      }
    } else {
      std::cout << lines.str();
    }
  }
  return total_failures == 0 ? kExitOk : kExitCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drazin spectra, tensor products and elementary operators"};
  app.set_version_flag("--version", dsp_version());
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol-eig", opt.tol_eig, "eigenvalue clustering radius")->check(CLI::PositiveNumber);
    sub->add_option("--tol-rank", opt.tol_rank, "relative singular value cutoff")->check(CLI::PositiveNumber);
    sub->add_option("--tol-res", opt.tol_res, "relative residual tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--trials", opt.trials, "trials per suite")->check(CLI::PositiveNumber);
  };

  auto* drazin = app.add_subcommand("drazin", "Drazin inverse, index and axiom residuals of a matrix");
  drazin->add_option("matrix", opt.files, "matrix JSON file")->required()->expected(1);
  auto* classify = app.add_subcommand("classify", "classify a matrix or validate a descriptor");
  classify->add_option("input", opt.files, "matrix or descriptor JSON file")->required()->expected(1);
  auto* tensor = app.add_subcommand("tensor", "spectral report for the tensor product of two descriptors");
  tensor->add_option("descriptors", opt.files, "descriptor files a and b")->required()->expected(2);
  auto* elementary = app.add_subcommand("elementary", "spectrum of X -> S X T");
  elementary->add_option("operands", opt.files, "S and T (matrices or descriptors)")->required()->expected(2);
  auto* verify = app.add_subcommand("verify", "run randomized verification suites");
  verify->add_option("--suite", opt.suites, "suite name (repeatable; default all)")
      ->check(CLI::IsMember({"drazin", "symbolic", "matrix-tensor", "elementary", "adjoint"}));
  for (auto* sub : {drazin, classify, tensor, elementary, verify}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*drazin) return cmd_drazin(opt);
    if (*classify) return cmd_classify(opt);
    if (*tensor) return cmd_tensor(opt);
    if (*elementary) return cmd_elementary(opt);
    return cmd_verify(opt);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheck;
  }
}
