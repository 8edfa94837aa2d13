// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include <lch.h>

#include <doctest.h>

#include <cstring>
#include <string>

namespace {

struct Engine {
  lch_engine* e = lch_engine_new();
  ~Engine() { lch_engine_free(e); }
};

std::string run_text(lch_engine* e, const char* text, int* rc_out = nullptr) {
  char* out = nullptr;
  int rc = lch_engine_run(e, text, &out);
  if (rc_out) *rc_out = rc;
  std::string s = out ? out : "";
  lch_free(out);
  return s;
}

}  // namespace

TEST_CASE("version and lifecycle") {
  CHECK(std::strlen(lch_version()) >= 5);
  Engine eng;
  REQUIRE(eng.e != nullptr);
  CHECK(std::string(lch_engine_last_error(eng.e)) == "");
}

TEST_CASE("a session runs through the c surface") {
  Engine eng;
  int rc = -1;
  std::string out = run_text(eng.e,
                             "ring S = zp(32003)[x,y];\n"
                             "ideal I = x^2, x*y;\n"
                             "compute assprimes quotient(S, I);\n",
                             &rc);
  CHECK(rc == 0);
  CHECK(out.find("\"status\": \"ok\"") != std::string::npos);
  CHECK(out.find("\"brief\": \"(x);(x,y)\"") != std::string::npos);
  CHECK(std::string(lch_engine_last_error(eng.e)) == "");
}

TEST_CASE("status classes surface unchanged") {
  Engine eng;
  int rc = -1;
  run_text(eng.e, "ideal I = x;\n", &rc);
  CHECK(rc == 2);
  CHECK(std::string(lch_engine_last_error(eng.e)).find("line 1") !=
        std::string::npos);

  run_text(eng.e, "ring S = zp(4)[x];\n", &rc);
  CHECK(rc == 4);

  run_text(eng.e,
           "ring S = zp(32003)[x,y];\n"
           "ideal I = x;\n"
           "compute asslch(I, S, S, k=-1, l=2);\n",
           &rc);
  CHECK(rc == 3);

  // a failing run still renders a report with the error object
  std::string out = run_text(eng.e, "ideal I = x;\n", &rc);
  CHECK(out.find("\"undeclared-name\"") != std::string::npos);
}

TEST_CASE("options validate and apply") {
  Engine eng;
  CHECK(lch_engine_set_option(eng.e, "format", "yaml") == 2);
  CHECK(lch_engine_set_option(eng.e, "window", "1") == 2);
  CHECK(lch_engine_set_option(eng.e, "range", "5..2") == 2);
  CHECK(lch_engine_set_option(eng.e, "range", "x..y") == 2);
  CHECK(lch_engine_set_option(eng.e, "t-range", "0..2") == 2);
  CHECK(lch_engine_set_option(eng.e, "no-such-key", "1") == 2);

  CHECK(lch_engine_set_option(eng.e, "format", "text") == 0);
  CHECK(lch_engine_set_option(eng.e, "range", "0..2") == 0);
  CHECK(lch_engine_set_option(eng.e, "window", "2") == 0);
  CHECK(lch_engine_set_option(eng.e, "timeout-secs", "0") == 0);

  int rc = -1;
  std::string out = run_text(eng.e,
                             "ring S = zp(32003)[x,y];\n"
                             "ideal I = x;\n"
                             "graded G = rees(I, S);\n"
                             "compute stabilize ass(G);\n",
                             &rc);
  CHECK(rc == 0);
  CHECK(out.find("engine: lch") != std::string::npos);  // text format
  CHECK(out.find("range: [0, 2]") != std::string::npos);
}

TEST_CASE("seed changes stay deterministic") {
  const char* text =
      "ring S = zp(32003)[x,y];\n"
      "ideal K = x, y;\n"
      "compute depthk(K, S, -1);\n";
  Engine a, b;
  lch_engine_set_seed(a.e, 7);
  lch_engine_set_seed(b.e, 7);
  CHECK(run_text(a.e, text) == run_text(b.e, text));
  lch_engine_set_seed(b.e, 4242);
  std::string other = run_text(b.e, text);
  CHECK(other.find("\"depth\": 2") != std::string::npos);
}

TEST_CASE("null arguments are tolerated") {
  CHECK(lch_engine_run(nullptr, "x", nullptr) == 2);
  Engine eng;
  CHECK(lch_engine_run(eng.e, nullptr, nullptr) == 2);
  CHECK(lch_engine_set_option(eng.e, nullptr, "1") == 2);
  CHECK(std::string(lch_engine_last_error(nullptr)) == "");
  lch_engine_set_seed(nullptr, 1);  // no crash
  lch_engine_free(nullptr);
}
