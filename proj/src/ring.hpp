// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "coeff.hpp"
#include "monomial.hpp"

namespace lch {

// Immutable ring context: coefficient field, ordered variable list, monomial
// order.  Contexts are shared by pointer; two objects live in the same
// context only if they hold the same Ring instance, and operations reject
// mixed contexts.  Canonical (user-facing) contexts always use grevlex.
class Ring {
 public:
  Ring(CoeffField field, std::vector<std::string> vars, MonomialOrder order)
      : field_(std::move(field)), vars_(std::move(vars)), order_(order) {}

  const CoeffField& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return int(vars_.size()); }
  const MonomialOrder& order() const { return order_; }

  int var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return int(i);
    return -1;
  }

 private:
  CoeffField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(const CoeffField& field, std::vector<std::string> vars);

// Same field, new variable list / order; for internal elimination contexts.
RingPtr make_derived_ring(const RingPtr& base, std::vector<std::string> vars,
                          MonomialOrder order);

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

}  // namespace lch
