#include "drazspec/drazspec.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "drazspec/drazin.hpp"
#include "drazspec/elementary.hpp"
#include "drazspec/error.hpp"
#include "drazspec/json_io.hpp"
#include "drazspec/spectral.hpp"
#include "drazspec/tensor.hpp"
#include "drazspec/verify.hpp"

struct dsp_matrix {
  drazspec::ComplexMatrix m;
};

struct dsp_descriptor {
  drazspec::SpectralClassification d;
};

namespace {

using namespace drazspec;

thread_local std::string g_last_error;

dsp_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return DSP_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return DSP_ERR_PARSE;
    case ErrorCode::NotSquare: return DSP_ERR_NOT_SQUARE;
    case ErrorCode::NoConvergence: return DSP_ERR_NO_CONVERGENCE;
    case ErrorCode::Singular: return DSP_ERR_SINGULAR;
    case ErrorCode::IllConditioned: return DSP_ERR_ILL_CONDITIONED;
    case ErrorCode::InvalidDescriptor: return DSP_ERR_INVALID_DESCRIPTOR;
    case ErrorCode::NotInSpectrum: return DSP_ERR_NOT_IN_SPECTRUM;
    case ErrorCode::CheckFailed: return DSP_ERR_CHECK_FAILED;
    case ErrorCode::Internal: return DSP_ERR_INTERNAL;
  }
  return DSP_ERR_INTERNAL;
}

template <typename F>
dsp_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return DSP_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DSP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DSP_ERR_INTERNAL;
  }
}

void require(bool cond, const char* msg) {
  if (!cond) throw Error(ErrorCode::InvalidArgument, msg);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Tolerance tolerance_of(const dsp_tolerance* t) {
  Tolerance tol;
  if (t) {
    if (t->eig_cluster > 0) tol.eig_cluster = t->eig_cluster;
    if (t->rank_rel > 0) tol.rank_rel = t->rank_rel;
    if (t->residual_rel > 0) tol.residual_rel = t->residual_rel;
  }
  tol.check();
  return tol;
}

}  // namespace

extern "C" {

const char* dsp_version(void) { return "0.1.0"; }

const char* dsp_status_string(dsp_status s) {
  switch (s) {
    case DSP_OK: return "ok";
    case DSP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DSP_ERR_PARSE: return "parse error";
    case DSP_ERR_NOT_SQUARE: return "matrix not square";
    case DSP_ERR_NO_CONVERGENCE: return "no convergence";
    case DSP_ERR_SINGULAR: return "singular";
    case DSP_ERR_ILL_CONDITIONED: return "ill-conditioned";
    case DSP_ERR_INVALID_DESCRIPTOR: return "invalid descriptor";
    case DSP_ERR_NOT_IN_SPECTRUM: return "not in spectrum";
    case DSP_ERR_CHECK_FAILED: return "check failed";
    case DSP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* dsp_last_error(void) { return g_last_error.c_str(); }

void dsp_string_free(char* s) { std::free(s); }

dsp_status dsp_matrix_create(size_t rows, size_t cols, const double* data, dsp_matrix** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    require(rows > 0 && cols > 0, "matrix dimensions must be positive");
    require(data != nullptr, "data is null");
    auto h = std::make_unique<dsp_matrix>();
    h->m.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (size_t i = 0; i < rows; ++i) {
      for (size_t j = 0; j < cols; ++j) {
        const double* p = data + 2 * (i * cols + j);
        h->m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Complex(p[0], p[1]);
      }
    }
    require_finite(h->m, "dsp_matrix_create");
    *out = h.release();
  });
}

dsp_status dsp_matrix_from_json(const char* json, dsp_matrix** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    auto h = std::make_unique<dsp_matrix>();
    h->m = matrix_from_json(parse_json(json));
    *out = h.release();
  });
}

dsp_status dsp_matrix_to_json(const dsp_matrix* m, char** out) {
  return guarded([&] {
    require(m != nullptr && out != nullptr, "null argument");
    *out = copy_string(dump(matrix_to_json(m->m)));
  });
}

size_t dsp_matrix_rows(const dsp_matrix* m) { return m ? static_cast<size_t>(m->m.rows()) : 0; }
size_t dsp_matrix_cols(const dsp_matrix* m) { return m ? static_cast<size_t>(m->m.cols()) : 0; }

dsp_status dsp_matrix_get(const dsp_matrix* m, size_t i, size_t j, double* re, double* im) {
  return guarded([&] {
    require(m != nullptr && re != nullptr && im != nullptr, "null argument");
    require(i < static_cast<size_t>(m->m.rows()) && j < static_cast<size_t>(m->m.cols()), "index out of range");
    const Complex z = m->m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    *re = z.real();
    *im = z.imag();
  });
}

void dsp_matrix_free(dsp_matrix* m) { delete m; }

dsp_status dsp_descriptor_from_json(const char* json, dsp_descriptor** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    auto h = std::make_unique<dsp_descriptor>();
    h->d = descriptor_from_json(parse_json(json));
    *out = h.release();
  });
}

dsp_status dsp_descriptor_to_json(const dsp_descriptor* d, char** out) {
  return guarded([&] {
    require(d != nullptr && out != nullptr, "null argument");
    *out = copy_string(dump(descriptor_to_json(d->d)));
  });
}

void dsp_descriptor_free(dsp_descriptor* d) { delete d; }

dsp_status dsp_descriptor_validate(const dsp_descriptor* d, int* valid, char** report_json) {
  return guarded([&] {
    require(d != nullptr && valid != nullptr, "null argument");
    const ValidationResult v = validate(d->d);
    Json j = to_json(v);
    j["descriptor"] = descriptor_to_json(d->d);
    *valid = v.ok() ? 1 : 0;
    if (report_json) *report_json = copy_string(dump(j));
  });
}

dsp_status dsp_classify_matrix(const dsp_matrix* a, const dsp_tolerance* tol, dsp_descriptor** out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    auto h = std::make_unique<dsp_descriptor>();
    h->d = classify_matrix(a->m, tolerance_of(tol));
    *out = h.release();
  });
}

dsp_status dsp_drazin_index(const dsp_matrix* a, const dsp_tolerance* tol, size_t* index) {
  return guarded([&] {
    require(a != nullptr && index != nullptr, "null argument");
    *index = index_of(a->m, tolerance_of(tol));
  });
}

dsp_status dsp_drazin_inverse(const dsp_matrix* a, const dsp_tolerance* tol, dsp_matrix** out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    auto h = std::make_unique<dsp_matrix>();
    h->m = drazin_inverse(a->m, tolerance_of(tol)).drazin_inverse;
    *out = h.release();
  });
}

dsp_status dsp_drazin_report(const dsp_matrix* a, const dsp_tolerance* tol, int* within_tolerance,
                             char** report_json) {
  return guarded([&] {
    require(a != nullptr && within_tolerance != nullptr && report_json != nullptr, "null argument");
    const DrazinReport r = make_drazin_report(a->m, tolerance_of(tol));
    *within_tolerance = r.within_tolerance ? 1 : 0;
    *report_json = copy_string(dump(to_json(r)));
  });
}

dsp_status dsp_pole_order(const dsp_matrix* a, double re, double im, const dsp_tolerance* tol, size_t* order) {
  return guarded([&] {
    require(a != nullptr && order != nullptr, "null argument");
    *order = pole_order(a->m, Complex(re, im), tolerance_of(tol));
  });
}

dsp_status dsp_tensor_report(const dsp_descriptor* a, const dsp_descriptor* b, char** report_json) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && report_json != nullptr, "null argument");
    *report_json = copy_string(dump(tensor_report_to_json(tensor_classify(a->d, b->d))));
  });
}

dsp_status dsp_elementary_report(const dsp_matrix* s, const dsp_matrix* t, const dsp_tolerance* tol, int* match,
                                 char** report_json) {
  return guarded([&] {
    require(s != nullptr && t != nullptr && match != nullptr && report_json != nullptr, "null argument");
    const Tolerance tl = tolerance_of(tol);
    const ElementaryOperator e = build_elementary(s->m, t->m, tl);
    const SpectrumCheck check = spectrum_check(e, tl);
    Json j = to_json(check);
    j["dimension"] = e.matrix_form.rows();
    const TensorReport rep = elementary_classify(classify_matrix(s->m, tl), classify_matrix(t->m, tl));
    j["classification"] = tensor_report_to_json(rep, "S", "T");
    *match = check.match ? 1 : 0;
    *report_json = copy_string(dump(j));
  });
}

dsp_status dsp_elementary_descriptor_report(const dsp_descriptor* s, const dsp_descriptor* t, char** report_json) {
  return guarded([&] {
    require(s != nullptr && t != nullptr && report_json != nullptr, "null argument");
    *report_json = copy_string(dump(tensor_report_to_json(elementary_classify(s->d, t->d), "S", "T")));
  });
}

dsp_status dsp_verify(const char* suite, size_t trials, uint64_t seed, const dsp_tolerance* tol, char** jsonl,
                      size_t* failures) {
  return guarded([&] {
    require(suite != nullptr && jsonl != nullptr && failures != nullptr, "null argument");
    SuiteConfig cfg;
    if (trials > 0) cfg.trials = trials;
    cfg.seed = seed;
    cfg.tol = tolerance_of(tol);
    const auto reports = run_suite(suite, cfg);
    std::string out;
    size_t failed = 0;
    for (const auto& r : reports) {
      if (!r.passed) ++failed;
      out += to_json(r).dump();
      out += '\n';
    }
    const Json summary = {{"summary",
                           {{"suite", suite},
                            {"trials", reports.size()},
                            {"passed", reports.size() - failed},
                            {"failed", failed},
                            {"seed", seed}}}};
    out += summary.dump();
    out += '\n';
    *failures = failed;
    *jsonl = copy_string(out);
  });
}

}  // extern "C"
