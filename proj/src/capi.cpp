// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include "lch.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "error.hpp"
#include "session.hpp"

struct lch_engine {
  lch::SessionOptions opt;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

bool parse_long(const std::string& s, long& out) {
  if (s.empty()) return false;
  size_t used = 0;
  try {
    out = std::stol(s, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == s.size();
}

bool parse_range(const std::string& s, long& lo, long& hi) {
  size_t dots = s.find("..");
  if (dots == std::string::npos) return false;
  return parse_long(s.substr(0, dots), lo) &&
         parse_long(s.substr(dots + 2), hi) && lo <= hi;
}

}  // namespace

extern "C" {

const char* lch_version(void) { return lch::kEngineVersion; }

lch_engine* lch_engine_new(void) {
  try {
    return new lch_engine();
  } catch (const std::exception&) {
    return nullptr;
  }
}

void lch_engine_free(lch_engine* e) { delete e; }

void lch_engine_set_seed(lch_engine* e, uint64_t seed) {
  if (e) e->opt.seed = seed;
}

int lch_engine_set_option(lch_engine* e, const char* key, const char* value) {
  if (!e || !key || !value) return 2;
  std::string k = key, v = value;
  if (k == "format") {
    if (v != "json" && v != "text") return 2;
    e->opt.format = v;
    return 0;
  }
  if (k == "range") {
    long lo, hi;
    if (!parse_range(v, lo, hi) || lo < 0) return 2;
    e->opt.range_lo = lo;
    e->opt.range_hi = hi;
    e->opt.range_set = true;
    return 0;
  }
  if (k == "window") {
    long w;
    if (!parse_long(v, w) || w < 2) return 2;
    e->opt.window = w;
    e->opt.window_set = true;
    return 0;
  }
  if (k == "t-range") {
    long lo, hi;
    if (!parse_range(v, lo, hi) || lo < 1) return 2;
    e->opt.t_lo = lo;
    e->opt.t_hi = hi;
    e->opt.t_set = true;
    return 0;
  }
  if (k == "timeout-secs") {
    long t;
    if (!parse_long(v, t) || t < 0) return 2;
    e->opt.timeout_secs = t;
    return 0;
  }
  return 2;
}

int lch_engine_run(lch_engine* e, const char* text, char** out) {
  if (out) *out = nullptr;
  if (!e || !text) return 2;
  try {
    lch::SessionResult res = lch::run_session(text, e->opt);
    e->last_error = res.exit_code == 0
                        ? std::string()
                        : res.report["error"]["message"].get<std::string>();
    if (out) *out = dup_string(res.rendered);
    return res.exit_code;
  } catch (const std::exception& ex) {
    e->last_error = ex.what();
    return 3;
  }
}

const char* lch_engine_last_error(const lch_engine* e) {
  return e ? e->last_error.c_str() : "";
}

void lch_free(char* p) { std::free(p); }

}  // extern "C"
