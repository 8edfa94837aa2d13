// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end.  Reads a session script, runs it through the C
// interface, prints the report.  The process exit status is the status
// class documented in lch.h (0 ok, 2 input, 3 math, 4 field).
#include <lch.h>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

bool read_all(const std::string& path, std::string& text) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lch: associated primes of local cohomology modules, exactly.\n"
      "Runs a session script of declarations and compute/check commands\n"
      "and emits a deterministic report."};
  app.set_version_flag("--version", std::string(lch_version()));

  std::string session_path;
  app.add_option("session", session_path, "Session file, or - for stdin")
      ->required();

  uint64_t seed = 42;
  app.add_option("--seed", seed, "Seed for all randomized choices")
      ->envname("LCH_SEED");
  std::string format = "json";
  app.add_option("--format", format, "Report format: json or text")
      ->envname("LCH_FORMAT");
  std::string out_path;
  app.add_option("--out", out_path, "Write the report to this file")
      ->envname("LCH_OUT");
  std::string range;
  auto* orange =
      app.add_option("--range", range,
                     "Default L..H sampling range for stabilize commands")
          ->envname("LCH_RANGE");
  long window = 3;
  auto* owindow =
      app.add_option("--window", window,
                     "Default stability window (at least 2)")
          ->envname("LCH_WINDOW");
  std::string t_range;
  auto* otrange =
      app.add_option("--t-range", t_range,
                     "Default L..H power range for oracle checks")
          ->envname("LCH_T_RANGE");
  long timeout_secs = 0;
  auto* otimeout =
      app.add_option("--timeout-secs", timeout_secs,
                     "Abort a session after this many seconds (0 = off)")
          ->envname("LCH_TIMEOUT_SECS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string text;
  if (!read_all(session_path, text)) {
    std::cerr << "lch: cannot read '" << session_path << "'\n";
    return 2;
  }

  lch_engine* eng = lch_engine_new();
  if (!eng) {
    std::cerr << "lch: out of memory\n";
    return 3;
  }
  auto set = [&](const char* key, const std::string& value) {
    if (lch_engine_set_option(eng, key, value.c_str()) == 0) return true;
    std::cerr << "lch: bad value '" << value << "' for " << key << "\n";
    return false;
  };
  lch_engine_set_seed(eng, seed);
  bool ok = set("format", format);
  if (ok && orange->count() > 0) ok = set("range", range);
  if (ok && owindow->count() > 0) ok = set("window", std::to_string(window));
  if (ok && otrange->count() > 0) ok = set("t-range", t_range);
  if (ok && otimeout->count() > 0)
    ok = set("timeout-secs", std::to_string(timeout_secs));
  if (!ok) {
    lch_engine_free(eng);
    return 2;
  }

  char* out = nullptr;
  int rc = lch_engine_run(eng, text.c_str(), &out);
  std::string rendered = out ? out : "";
  lch_free(out);
  if (rc != 0) std::cerr << "lch: " << lch_engine_last_error(eng) << "\n";
  lch_engine_free(eng);

  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "lch: cannot write '" << out_path << "'\n";
      return 2;
    }
    f << rendered;
  }
  return rc;
}
