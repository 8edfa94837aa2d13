// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include "graded.hpp"

namespace lch {

// Canonical JSON pieces.  nlohmann::json keeps object keys sorted, so a
// fixed construction order yields byte-identical serializations; none of
// the emitters below record wall-clock data.
nlohmann::json json_of_extint(const ExtInt& v);
nlohmann::json json_of_polys(const Ring& R, const std::vector<Poly>& fs);
nlohmann::json json_of_prime(const PrimeIdeal& p);
nlohmann::json json_of_assset(const AssSet& s);
nlohmann::json json_of_depth(const DepthResult& d, const Ring& R);
nlohmann::json json_of_theorem_sets(const TheoremSetResult& r, const Ring& R);
nlohmann::json json_of_power_invariance(const PowerInvarianceReport& r);
nlohmann::json json_of_bn_star(const BnStarResult& r);
nlohmann::json json_of_stabilization(const StabilizationReport& rep);
nlohmann::json json_of_theorem_stabilization(const TheoremStabilization& t);
nlohmann::json json_of_common_sequence(const CommonSequenceResult& r,
                                       const Ring& R);

// Plain-text rendering of a report tree: objects as indented key lines,
// scalar arrays inline, object arrays as dashed blocks.
std::string render_text(const nlohmann::json& j);

}  // namespace lch
