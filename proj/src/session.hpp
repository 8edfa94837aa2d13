// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

namespace lch {

inline constexpr const char* kEngineVersion = "0.1.0";

// Defaults and command-line overrides for session execution.  A clause
// written on a command beats the option here, which beats the built-in
// default (range 0..12, window 3, t 1..3).
struct SessionOptions {
  uint64_t seed = 42;
  std::string format = "json";  // "json" or "text"
  long range_lo = 0;
  long range_hi = 12;
  bool range_set = false;
  long window = 3;
  bool window_set = false;
  long t_lo = 1;
  long t_hi = 3;
  bool t_set = false;
  long timeout_secs = 0;  // 0 disables the budget
};

struct SessionResult {
  nlohmann::json report;             // full canonical report tree
  std::string rendered;              // serialized per the chosen format
  std::vector<std::string> echoes;   // canonical per-statement print
  int exit_code = 0;                 // 0 ok, 2 parse, 3 math, 4 field
};

// Parses and executes a session: declarations bind names in order,
// commands run immediately and append reports.  Execution stops at the
// first failure; reports produced before it are kept and the error is
// recorded with its source location.
SessionResult run_session(const std::string& text, const SessionOptions& opt);

}  // namespace lch
