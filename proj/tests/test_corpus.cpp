// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
//
// Golden corpus: every session in corpus/ must reproduce its committed
// .golden.json byte for byte, exit with the class its outcome implies,
// and (when it succeeds) reparse its own canonical echo to the same
// report.
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "session.hpp"

using namespace lch;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_class_of_name(const std::string& name) {
  for (int c = 0; c <= int(Errc::internal); ++c)
    if (name == errc_name(Errc(c))) return exit_class(Errc(c));
  FAIL("unknown error code ", name);
  return -1;
}

std::vector<fs::path> corpus_sessions() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(CORPUS_DIR))
    if (e.path().extension() == ".lch") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("corpus sessions reproduce their goldens") {
  auto files = corpus_sessions();
  REQUIRE(files.size() >= 21);
  size_t ok_count = 0;
  for (const auto& f : files) {
    CAPTURE(f.string());
    fs::path golden = f;
    golden.replace_extension(".golden.json");
    REQUIRE(fs::exists(golden));
    auto res = run_session(slurp(f), SessionOptions{});
    CHECK(res.rendered == slurp(golden));
    if (res.report["status"] == "ok") {
      ++ok_count;
      CHECK(res.exit_code == 0);
    } else {
      CHECK(res.exit_code ==
            exit_class_of_name(res.report["error"]["code"]));
    }
  }
  CHECK(ok_count >= 12);
}

TEST_CASE("successful corpus sessions round trip through their echoes") {
  for (const auto& f : corpus_sessions()) {
    CAPTURE(f.string());
    auto res = run_session(slurp(f), SessionOptions{});
    if (res.report["status"] != "ok") continue;
    std::string canon;
    for (const auto& e : res.echoes) canon += e + "\n";
    auto again = run_session(canon, SessionOptions{});
    CHECK(again.echoes == res.echoes);
    CHECK(again.report["reports"] == res.report["reports"]);
    CHECK(again.report["declarations"] == res.report["declarations"]);
  }
}

TEST_CASE("every error class appears in the corpus") {
  std::vector<int> seen;
  for (const auto& f : corpus_sessions()) {
    auto res = run_session(slurp(f), SessionOptions{});
    seen.push_back(res.exit_code);
  }
  for (int cls : {0, 2, 3, 4})
    CHECK(std::count(seen.begin(), seen.end(), cls) >= 1);
}
