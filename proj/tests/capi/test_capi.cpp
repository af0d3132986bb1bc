// Exercises the shared library through kpferm.h only.

#include "kpferm/kpferm.h"

#include <catch2/catch_amalgamated.hpp>

#include <string>

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  kpf_string_free(s);
  return out;
}

kpf_coords* coords(const char* json) {
  kpf_coords* h = nullptr;
  REQUIRE(kpf_coords_parse(json, &h) == KPF_OK);
  return h;
}

kpf_loop* loop(const char* json) {
  kpf_loop* h = nullptr;
  REQUIRE(kpf_loop_parse(json, &h) == KPF_OK);
  return h;
}

}  // namespace

TEST_CASE("tau through the C interface") {
  kpf_coords* a = coords(R"({"entries":[{"n":0,"m":1,"value":"1"}]})");
  kpf_series* s = nullptr;
  REQUIRE(kpf_tau(a, 2, 0, &s) == KPF_OK);
  char* text = nullptr;
  REQUIRE(kpf_series_format(s, KPF_FORMAT_TEXT, &text) == KPF_OK);
  CHECK(take(text) == "1 + 1/2*T1^2 + T2\n");
  kpf_series_free(s);

  CHECK(kpf_tau(a, KPF_MAX_WEIGHT + 1, KPF_FAST, &s) == KPF_CAP);
  CHECK(s == nullptr);
  CHECK(std::string(kpf_last_error()).find("cap") != std::string::npos);
  CHECK(kpf_tau(a, -1, 0, &s) == KPF_INVALID);
  CHECK(kpf_tau(nullptr, 2, 0, &s) == KPF_INVALID);
  kpf_coords_free(a);
}

TEST_CASE("parse failures") {
  kpf_coords* a = nullptr;
  CHECK(kpf_coords_parse("{", &a) == KPF_PARSE);
  CHECK(a == nullptr);
  CHECK(std::string(kpf_last_error()).size() > 0);
  CHECK(kpf_coords_parse(R"({"entries":[{"n":0,"m":0,"value":"x"}]})", &a) == KPF_PARSE);
  kpf_quad* x = nullptr;
  CHECK(kpf_quad_parse("[]", &x) == KPF_PARSE);
}

TEST_CASE("n-point through the C interface") {
  kpf_coords* a = coords(R"({"entries":[{"n":0,"m":0,"value":"2"}]})");
  kpf_table* t = nullptr;
  REQUIRE(kpf_npoint(a, 2, 2, 0, &t) == KPF_OK);
  char* text = nullptr;
  REQUIRE(kpf_table_format(t, KPF_FORMAT_TEXT, &text) == KPF_OK);
  CHECK(take(text) == "1,1: -4\n");
  kpf_table_free(t);
  CHECK(kpf_npoint(a, 7, 2, 0, &t) == KPF_CAP);
  CHECK(std::string(kpf_last_error()).find("unsupported n") != std::string::npos);
  kpf_coords_free(a);
}

TEST_CASE("classify through the C interface") {
  kpf_quad* x = nullptr;
  REQUIRE(kpf_quad_parse(R"({"band":0,"period":2,"a":[{"i":0,"j":0,"value":"1"},{"i":1,"j":1,"value":"-1"}],"b":[],"c":[],"central":"0"})", &x) == KPF_OK);
  char* out = nullptr;
  REQUIRE(kpf_classify(x, 1, KPF_FORMAT_JSON, &out) == KPF_OK);
  CHECK(take(out).find("\"C^(1)_1\"") != std::string::npos);
  kpf_quad_free(x);

  REQUIRE(kpf_quad_parse(R"({"band":0,"period":null,"a":[{"i":0,"j":0,"value":"1"}],"b":[],"c":[],"central":"0"})", &x) == KPF_OK);
  CHECK(kpf_classify(x, 1, KPF_FORMAT_TEXT, &out) == KPF_INVALID);
  CHECK(out == nullptr);
  kpf_quad_free(x);
}

TEST_CASE("cocycle and embed through the C interface") {
  kpf_loop* a = loop(R"({"size":2,"terms":[{"k":2,"matrix":[["0","1"],["0","0"]]}]})");
  kpf_loop* b = loop(R"({"size":2,"terms":[{"k":-2,"matrix":[["0","0"],["1","0"]]}]})");
  char* out = nullptr;
  REQUIRE(kpf_cocycle(a, b, KPF_COCYCLE_BOTH, KPF_FORMAT_TEXT, &out) == KPF_OK);
  CHECK(take(out) == "count: 2\nresidue: 2\n");
  REQUIRE(kpf_cocycle(a, b, KPF_COCYCLE_COUNT, KPF_FORMAT_JSON, &out) == KPF_OK);
  CHECK(take(out).find("\"count\": \"2\"") != std::string::npos);
  REQUIRE(kpf_embed(a, KPF_FORMAT_JSON, &out) == KPF_OK);
  CHECK(take(out).find("\"period\": 2") != std::string::npos);

  kpf_loop* c = loop(R"({"size":1,"terms":[]})");
  CHECK(kpf_cocycle(a, c, KPF_COCYCLE_BOTH, KPF_FORMAT_TEXT, &out) == KPF_INVALID);
  kpf_loop_free(a);
  kpf_loop_free(b);
  kpf_loop_free(c);
}

TEST_CASE("puncture through the C interface") {
  kpf_series* tau = nullptr;
  REQUIRE(kpf_series_parse(R"({"weight_cut":4,"terms":[{"exponents":[],"value":"1"}]})", &tau) == KPF_OK);
  kpf_puncture* p = nullptr;
  REQUIRE(kpf_puncture_parse(R"({"h":2,"E_plus":[1,3],"E_plus0":[1,3]})", &p) == KPF_OK);
  kpf_series* r = nullptr;
  REQUIRE(kpf_check_puncture(tau, p, &r) == KPF_OK);
  char* text = nullptr;
  REQUIRE(kpf_series_format(r, KPF_FORMAT_TEXT, &text) == KPF_OK);
  CHECK(take(text) == "1/4*T1^2\n");
  kpf_series_free(r);
  kpf_series_free(tau);
  kpf_puncture_free(p);
}

TEST_CASE("selftest through the C interface") {
  char* report = nullptr;
  int passed = -1;
  REQUIRE(kpf_selftest(3, 0, 1, &report, &passed) == KPF_OK);
  CHECK(passed == 1);
  CHECK(take(report).find("selftest: PASS") != std::string::npos);
  REQUIRE(kpf_selftest(3, 1, 1, &report, &passed) == KPF_OK);
  CHECK(passed == 0);
  CHECK(take(report).find("selftest: FAIL") != std::string::npos);
  CHECK(kpf_selftest(KPF_MAX_ENERGY + 1, 0, 1, &report, &passed) == KPF_CAP);
}

TEST_CASE("freeing null handles is a no-op") {
  kpf_coords_free(nullptr);
  kpf_quad_free(nullptr);
  kpf_loop_free(nullptr);
  kpf_series_free(nullptr);
  kpf_table_free(nullptr);
  kpf_puncture_free(nullptr);
  kpf_string_free(nullptr);
  CHECK(std::string(kpf_version()).size() > 0);
}
