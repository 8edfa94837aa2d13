// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace lch {

// Error taxonomy shared by the engine and the CLI.  The CLI maps each code to
// a process exit status: parse-class errors -> 2, unsupported field -> 4,
// everything else (math-domain) -> 3.
enum class Errc {
  parse_error,
  undeclared_name,
  malformed_input,
  context_mismatch,
  unsupported_field,
  field_too_small,
  not_local,
  not_in_ideal,
  no_avoider,
  not_a_sequence,
  exceeds_depth,
  no_top,
  too_many_permutations,
  decomposition_incomplete,
  inconclusive,
  unsupported_input,
  timeout,
  internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "parse-error";
    case Errc::undeclared_name: return "undeclared-name";
    case Errc::malformed_input: return "malformed-input";
    case Errc::context_mismatch: return "context-mismatch";
    case Errc::unsupported_field: return "unsupported-field";
    case Errc::field_too_small: return "field-too-small";
    case Errc::not_local: return "not-local";
    case Errc::not_in_ideal: return "not-in-ideal";
    case Errc::no_avoider: return "no-avoider";
    case Errc::not_a_sequence: return "not-a-sequence";
    case Errc::exceeds_depth: return "exceeds-depth";
    case Errc::no_top: return "no-top";
    case Errc::too_many_permutations: return "too-many-permutations";
    case Errc::decomposition_incomplete: return "decomposition-incomplete";
    case Errc::inconclusive: return "inconclusive";
    case Errc::unsupported_input: return "unsupported-input";
    case Errc::timeout: return "timeout";
    case Errc::internal: return "internal";
  }
  return "internal";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

// Process exit status class for an error code, per the taxonomy comment.
inline int exit_class(Errc c) {
  switch (c) {
    case Errc::parse_error:
    case Errc::undeclared_name:
    case Errc::malformed_input:
    case Errc::context_mismatch:
      return 2;
    case Errc::unsupported_field:
      return 4;
    default:
      return 3;
  }
}

}  // namespace lch
