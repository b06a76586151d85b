#include <gtest/gtest.h>

#include <string>

#include "json.hpp"

#include "drazspec/drazspec.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { dsp_string_free(p); }
  nlohmann::json json() const { return nlohmann::json::parse(p); }
};

const char* kJordanZero = R"({"rows":2,"cols":2,"data":[[0,0],[1,0],[0,0],[0,0]]})";

}  // namespace

TEST(CApi, VersionAndStatusStrings) {
  EXPECT_STRNE(dsp_version(), "");
  EXPECT_STREQ(dsp_status_string(DSP_OK), "ok");
  EXPECT_STREQ(dsp_status_string(DSP_ERR_CHECK_FAILED), "check failed");
}

TEST(CApi, MatrixLifecycle) {
  const double data[] = {1, 0, 2, -1, 3, 0, 4, 0.5};
  dsp_matrix* m = nullptr;
  ASSERT_EQ(dsp_matrix_create(2, 2, data, &m), DSP_OK);
  EXPECT_EQ(dsp_matrix_rows(m), 2u);
  EXPECT_EQ(dsp_matrix_cols(m), 2u);
  double re = 0, im = 0;
  ASSERT_EQ(dsp_matrix_get(m, 0, 1, &re, &im), DSP_OK);
  EXPECT_EQ(re, 2.0);
  EXPECT_EQ(im, -1.0);
  EXPECT_EQ(dsp_matrix_get(m, 2, 0, &re, &im), DSP_ERR_INVALID_ARGUMENT);
  EXPECT_STRNE(dsp_last_error(), "");

  Str js;
  ASSERT_EQ(dsp_matrix_to_json(m, &js.p), DSP_OK);
  dsp_matrix* back = nullptr;
  ASSERT_EQ(dsp_matrix_from_json(js.p, &back), DSP_OK);
  ASSERT_EQ(dsp_matrix_get(back, 1, 1, &re, &im), DSP_OK);
  EXPECT_EQ(re, 4.0);
  EXPECT_EQ(im, 0.5);
  dsp_matrix_free(back);
  dsp_matrix_free(m);
}

TEST(CApi, ErrorCodes) {
  dsp_matrix* m = nullptr;
  EXPECT_EQ(dsp_matrix_from_json("{", &m), DSP_ERR_PARSE);
  EXPECT_EQ(m, nullptr);
  EXPECT_EQ(dsp_matrix_from_json(nullptr, &m), DSP_ERR_INVALID_ARGUMENT);

  ASSERT_EQ(dsp_matrix_from_json(R"({"rows":1,"cols":2,"data":[[1,0],[2,0]]})", &m), DSP_OK);
  size_t k = 0;
  EXPECT_EQ(dsp_drazin_index(m, nullptr, &k), DSP_ERR_NOT_SQUARE);
  dsp_matrix_free(m);

  const double nan_data[] = {NAN, 0};
  EXPECT_EQ(dsp_matrix_create(1, 1, nan_data, &m), DSP_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(dsp_matrix_create(0, 1, nan_data, &m), DSP_ERR_INVALID_ARGUMENT);

  ASSERT_EQ(dsp_matrix_from_json(kJordanZero, &m), DSP_OK);
  size_t order = 0;
  EXPECT_EQ(dsp_pole_order(m, 5.0, 0.0, nullptr, &order), DSP_ERR_NOT_IN_SPECTRUM);
  dsp_tolerance bad{0.0, 0.0, 0.0};
  EXPECT_EQ(dsp_drazin_index(m, &bad, &k), DSP_OK);  // zeros keep defaults
  dsp_matrix_free(m);
}

TEST(CApi, DrazinOperations) {
  dsp_matrix* m = nullptr;
  ASSERT_EQ(dsp_matrix_from_json(kJordanZero, &m), DSP_OK);
  size_t k = 0;
  ASSERT_EQ(dsp_drazin_index(m, nullptr, &k), DSP_OK);
  EXPECT_EQ(k, 2u);
  dsp_matrix* x = nullptr;
  ASSERT_EQ(dsp_drazin_inverse(m, nullptr, &x), DSP_OK);
  double re = 1, im = 1;
  ASSERT_EQ(dsp_matrix_get(x, 0, 1, &re, &im), DSP_OK);
  EXPECT_EQ(re, 0.0);
  dsp_matrix_free(x);

  int within = 0;
  Str report;
  ASSERT_EQ(dsp_drazin_report(m, nullptr, &within, &report.p), DSP_OK);
  EXPECT_EQ(within, 1);
  EXPECT_EQ(report.json()["index"], 2);

  size_t order = 0;
  ASSERT_EQ(dsp_pole_order(m, 0.0, 0.0, nullptr, &order), DSP_OK);
  EXPECT_EQ(order, 2u);

  dsp_descriptor* d = nullptr;
  ASSERT_EQ(dsp_classify_matrix(m, nullptr, &d), DSP_OK);
  Str dj;
  ASSERT_EQ(dsp_descriptor_to_json(d, &dj.p), DSP_OK);
  EXPECT_EQ(dj.json()["points"][0]["order"], 2);
  dsp_descriptor_free(d);
  dsp_matrix_free(m);
}

TEST(CApi, DescriptorValidationAndTensor) {
  dsp_descriptor* dup = nullptr;
  ASSERT_EQ(dsp_descriptor_from_json(
                R"({"points":[{"value":[1,0],"tag":"pole","order":1},{"value":[1,0],"tag":"acc"}]})", &dup),
            DSP_OK);
  int valid = 1;
  Str report;
  ASSERT_EQ(dsp_descriptor_validate(dup, &valid, &report.p), DSP_OK);
  EXPECT_EQ(valid, 0);
  EXPECT_EQ(report.json()["violations"][0]["invariant"], "disjointness");

  dsp_descriptor* nil = nullptr;
  dsp_descriptor* b = nullptr;
  ASSERT_EQ(dsp_descriptor_from_json(R"({"points":[{"value":[0,0],"tag":"pole","order":2}]})", &nil), DSP_OK);
  ASSERT_EQ(dsp_descriptor_from_json(
                R"({"points":[{"value":[0,0],"tag":"acc"},{"value":[1,0],"tag":"pole","order":1}]})", &b),
            DSP_OK);
  Str t;
  ASSERT_EQ(dsp_tensor_report(nil, b, &t.p), DSP_OK);
  EXPECT_EQ(t.json()["equality_holds"], false);
  EXPECT_EQ(t.json()["sets"]["D"].size(), 1u);
  EXPECT_EQ(dsp_tensor_report(dup, b, &t.p), DSP_ERR_INVALID_DESCRIPTOR);

  Str e;
  ASSERT_EQ(dsp_elementary_descriptor_report(nil, b, &e.p), DSP_OK);
  EXPECT_EQ(e.json()["inputs"].contains("S"), true);

  dsp_descriptor_free(dup);
  dsp_descriptor_free(nil);
  dsp_descriptor_free(b);
}

TEST(CApi, ElementaryReport) {
  const double s_data[] = {1, 0, 0, 0, 0, 0, 2, 0};
  const double t_data[] = {3, 0};
  dsp_matrix* s = nullptr;
  dsp_matrix* t = nullptr;
  ASSERT_EQ(dsp_matrix_create(2, 2, s_data, &s), DSP_OK);
  ASSERT_EQ(dsp_matrix_create(1, 1, t_data, &t), DSP_OK);
  int match = 0;
  Str r;
  ASSERT_EQ(dsp_elementary_report(s, t, nullptr, &match, &r.p), DSP_OK);
  EXPECT_EQ(match, 1);
  const auto j = r.json();
  ASSERT_EQ(j["operator_spectrum"].size(), 2u);
  EXPECT_NEAR(j["operator_spectrum"][1]["value"][0].get<double>(), 6.0, 1e-12);
  dsp_matrix_free(s);
  dsp_matrix_free(t);
}

TEST(CApi, VerifyProducesJsonLinesWithSummary) {
  char* out = nullptr;
  size_t failures = 99;
  ASSERT_EQ(dsp_verify("symbolic", 20, 3, nullptr, &out, &failures), DSP_OK);
  EXPECT_EQ(failures, 0u);
  std::string text(out);
  dsp_string_free(out);
  size_t lines = 0;
  nlohmann::json last;
  for (size_t pos = 0, nl; (nl = text.find('\n', pos)) != std::string::npos; pos = nl + 1) {
    last = nlohmann::json::parse(text.substr(pos, nl - pos));
    ++lines;
  }
  EXPECT_EQ(lines, 21u);
  EXPECT_EQ(last["summary"]["passed"], 20);
  EXPECT_EQ(dsp_verify("bogus", 1, 1, nullptr, &out, &failures), DSP_ERR_INVALID_ARGUMENT);
}
