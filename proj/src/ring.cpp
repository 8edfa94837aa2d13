// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include "ring.hpp"

#include <set>

#include "error.hpp"

namespace lch {

RingPtr make_ring(const CoeffField& field, std::vector<std::string> vars) {
  if (vars.empty())
    fail(Errc::malformed_input, "ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) fail(Errc::malformed_input, "empty variable name");
    if (!seen.insert(v).second)
      fail(Errc::malformed_input, "duplicate variable name " + v);
  }
  return std::make_shared<Ring>(field, std::move(vars),
                                MonomialOrder::grevlex());
}

RingPtr make_derived_ring(const RingPtr& base, std::vector<std::string> vars,
                          MonomialOrder order) {
  return std::make_shared<Ring>(base->field(), std::move(vars), order);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (a != b)
    fail(Errc::context_mismatch,
         std::string(where) + ": operands live in different ring contexts");
}

}  // namespace lch
