// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include "report.hpp"

#include "textio.hpp"

namespace lch {

nlohmann::json json_of_extint(const ExtInt& v) {
  if (v.is_finite()) return v.value();
  return "infinity";
}

nlohmann::json json_of_polys(const Ring& R, const std::vector<Poly>& fs) {
  auto out = nlohmann::json::array();
  for (const auto& f : fs) out.push_back(poly_to_string(R, f));
  return out;
}

nlohmann::json json_of_prime(const PrimeIdeal& p) {
  nlohmann::json j;
  j["dim"] = p.dim;
  j["gens"] = json_of_polys(*p.ideal.ring(), p.ideal.gb());
  return j;
}

nlohmann::json json_of_assset(const AssSet& s) {
  auto out = nlohmann::json::array();
  for (const auto& p : s.items()) out.push_back(json_of_prime(p));
  return out;
}

nlohmann::json json_of_depth(const DepthResult& d, const Ring& R) {
  nlohmann::json j;
  j["depth"] = json_of_extint(d.depth);
  j["witness"] = json_of_polys(R, d.witness);
  return j;
}

nlohmann::json json_of_theorem_sets(const TheoremSetResult& r, const Ring& R) {
  nlohmann::json j;
  j["k"] = r.k;
  j["l"] = r.l;
  j["depth"] = json_of_extint(r.depth_value);
  j["guaranteed"] = r.guaranteed;
  j["witness"] = json_of_polys(R, r.witness);
  auto by_j = nlohmann::json::array();
  for (const auto& s : r.sets_by_j) by_j.push_back(json_of_assset(s));
  j["sets_by_j"] = by_j;
  j["union"] = json_of_assset(r.union_set);
  j["brief"] = assset_brief(r.union_set);
  return j;
}

nlohmann::json json_of_power_invariance(const PowerInvarianceReport& r) {
  nlohmann::json j;
  j["base_union"] = json_of_assset(r.base_union);
  j["powered_union"] = json_of_assset(r.powered_union);
  j["equal"] = r.equal;
  j["max_variant"] = r.max_variant;
  if (r.max_variant) {
    j["base_with_max"] = json_of_assset(r.base_with_max);
    j["powered_with_max"] = json_of_assset(r.powered_with_max);
    j["equal_with_max"] = r.equal_with_max;
  }
  return j;
}

nlohmann::json json_of_bn_star(const BnStarResult& r) {
  nlohmann::json j;
  j["star"] = json_of_assset(r.star);
  j["ext_union"] = json_of_assset(r.ext_union);
  j["contained"] = r.contained;
  return j;
}

nlohmann::json json_of_stabilization(const StabilizationReport& rep) {
  nlohmann::json j;
  j["quantity"] = rep.quantity;
  j["range"] = nlohmann::json::array({rep.n_lo, rep.n_hi});
  j["window"] = rep.window;
  auto samples = nlohmann::json::array();
  for (size_t i = 0; i < rep.values.size(); ++i) {
    nlohmann::json s;
    s["n"] = rep.n_lo + long(i);
    s["value"] = rep.values[i];
    samples.push_back(std::move(s));
  }
  j["samples"] = samples;
  if (!rep.sets.empty()) {
    auto sets = nlohmann::json::array();
    for (const auto& s : rep.sets) sets.push_back(json_of_assset(s));
    j["sets"] = sets;
  }
  j["onset"] = rep.onset;
  j["verdict"] =
      rep.stable_in_window ? "stable-in-window" : "not-stable-in-window";
  j["stable_value"] = rep.stable_value;
  return j;
}

nlohmann::json json_of_theorem_stabilization(const TheoremStabilization& t) {
  nlohmann::json j = json_of_stabilization(t.report);
  auto& samples = j["samples"];
  for (size_t i = 0; i < samples.size(); ++i) {
    int st = t.status[i];
    samples[i]["status"] =
        st == 0 ? "certified" : (st == 1 ? "unproven" : "declined");
    int om = t.oracle_match[i];
    samples[i]["oracle"] =
        om == 1 ? "equal" : (om == 0 ? "differs" : "skipped");
  }
  return j;
}

nlohmann::json json_of_common_sequence(const CommonSequenceResult& r,
                                       const Ring& R) {
  nlohmann::json j;
  j["eventual_depth"] = json_of_extint(r.eventual_depth);
  j["tail_from"] = r.tail_from;
  j["sequence"] = json_of_polys(R, r.xs);
  auto table = nlohmann::json::array();
  for (size_t i = 0; i < r.ns.size(); ++i) {
    nlohmann::json row;
    row["n"] = r.ns[i];
    row["fail_index"] = r.fail_index[i];
    table.push_back(std::move(row));
  }
  j["table"] = table;
  return j;
}

namespace {

bool all_scalar(const nlohmann::json& a) {
  for (const auto& e : a)
    if (e.is_object() || e.is_array()) return false;
  return true;
}

std::string scalar_str(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_node(const nlohmann::json& j, int indent, std::string& out) {
  std::string pad(size_t(indent) * 2, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const auto& v = it.value();
      if (v.is_object() || (v.is_array() && !all_scalar(v))) {
        out += pad + it.key() + ":\n";
        render_node(v, indent + 1, out);
      } else if (v.is_array()) {
        out += pad + it.key() + ": [";
        for (size_t i = 0; i < v.size(); ++i)
          out += (i ? ", " : "") + scalar_str(v[i]);
        out += "]\n";
      } else {
        out += pad + it.key() + ": " + scalar_str(v) + "\n";
      }
    }
    return;
  }
  if (j.is_array()) {
    if (j.empty()) {
      out += pad + "(none)\n";
      return;
    }
    for (const auto& e : j) {
      out += pad + "-\n";
      render_node(e, indent + 1, out);
    }
    return;
  }
  out += pad + scalar_str(j) + "\n";
}

}  // namespace

std::string render_text(const nlohmann::json& j) {
  std::string out;
  render_node(j, 0, out);
  return out;
}

}  // namespace lch
