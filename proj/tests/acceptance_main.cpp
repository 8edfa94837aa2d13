// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate.  Eight criteria, one PASS/FAIL line each; the exit
// status is the number of failures.  Everything here is exact: set
// equality of primes, equality of reduced bases, byte equality of
// reports.  The two timed criteria also enforce their wall-clock budget.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "graded.hpp"
#include "session.hpp"
#include "textio.hpp"

using namespace lch;
namespace fs = std::filesystem;

namespace {

constexpr uint64_t kSeed = 42;
constexpr uint64_t kAltSeed = 4242;

struct Instance {
  std::string name;
  Ideal I;
  ModulePresentation N;
  bool cyclic_target;  // N == S/K for the K below
  Ideal K;
};

Poly P(const RingPtr& R, const std::string& s) {
  return parse_poly_string(*R, s);
}

Ideal ID(const RingPtr& R, const std::vector<std::string>& gens) {
  std::vector<Poly> gs;
  for (const auto& g : gens) gs.push_back(P(R, g));
  return Ideal(R, gs);
}

// The committed instance set: mirrors the sessions under corpus/.  All
// over F_32003, at most 3 variables, at most 3 ideal generators, at most
// 2 ambient module generators.
std::vector<Instance> corpus_instances() {
  auto R2 = make_ring(CoeffField::prime(32003), {"x", "y"});
  auto R3 = make_ring(CoeffField::prime(32003), {"x", "y", "z"});
  auto zero2 = ID(R2, {});
  auto zero3 = ID(R3, {});
  auto cyc = [](const Ideal& K) { return ModulePresentation::cyclic(K); };

  std::vector<Instance> out;
  out.push_back({"principal-free", ID(R2, {"x"}),
                 ModulePresentation::free_module(R2, 1), false, zero2});
  out.push_back({"principal-transient", ID(R2, {"x"}), cyc(ID(R2, {"x*y"})),
                 true, ID(R2, {"x*y"})});
  out.push_back({"thickened-line", ID(R2, {"y"}), cyc(ID(R2, {"x^2"})), true,
                 ID(R2, {"x^2"})});
  out.push_back({"maximal-free", ID(R2, {"x", "y"}),
                 ModulePresentation::free_module(R2, 1), false, zero2});
  out.push_back({"embedded-point", ID(R2, {"x^2", "x*y"}),
                 ModulePresentation::free_module(R2, 1), false, zero2});
  out.push_back({"three-lines", ID(R2, {"x^2*y + x*y^2"}),
                 ModulePresentation::free_module(R2, 1), false, zero2});
  out.push_back({"avoidance-random", ID(R2, {"x", "y"}),
                 cyc(ID(R2, {"x^2*y + x*y^2"})), true,
                 ID(R2, {"x^2*y + x*y^2"})});
  out.push_back(
      {"split-sum", ID(R2, {"x", "y"}),
       ModulePresentation(R2, 2, {{P(R2, "x"), poly_zero()},
                                  {poly_zero(), P(R2, "y")}}),
       false, zero2});
  out.push_back({"mixed-module", ID(R2, {"y"}), cyc(ID(R2, {"x^2", "x*y"})),
                 true, ID(R2, {"x^2", "x*y"})});
  out.push_back({"diagonal-on-transient", ID(R2, {"x + y"}),
                 cyc(ID(R2, {"x*y"})), true, ID(R2, {"x*y"})});
  out.push_back({"nilpotent-generator", ID(R2, {"x^2"}), cyc(ID(R2, {"x*y"})),
                 true, ID(R2, {"x*y"})});
  out.push_back({"coordinate-planes", ID(R3, {"x*y", "x*z"}),
                 ModulePresentation::free_module(R3, 1), false, zero3});
  out.push_back({"hypersurface-target", ID(R3, {"x", "y", "z"}),
                 cyc(ID(R3, {"x*y"})), true, ID(R3, {"x*y"})});
  out.push_back({"partial-system", ID(R3, {"x", "y"}),
                 ModulePresentation::free_module(R3, 1), false, zero3});
  return out;
}

struct Family {
  std::string name;
  GradedModulePresentation G;
  Ideal I;
};

std::vector<Family> corpus_families() {
  auto R = make_ring(CoeffField::prime(32003), {"x", "y"});
  auto F1 = ModulePresentation::free_module(R, 1);
  std::vector<Family> out;
  out.push_back({"rees-free", make_family(FamilyKind::rees, ID(R, {"x"}), F1),
                 ID(R, {"x"})});
  out.push_back({"rees-transient",
                 make_family(FamilyKind::rees, ID(R, {"x"}),
                             ModulePresentation::cyclic(ID(R, {"x*y"}))),
                 ID(R, {"x"})});
  out.push_back({"assgr-jump",
                 make_family(FamilyKind::assoc_graded, ID(R, {"x"}),
                             ModulePresentation::cyclic(ID(R, {"x*y"}))),
                 ID(R, {"x"})});
  out.push_back({"rees-thickened",
                 make_family(FamilyKind::rees, ID(R, {"y"}),
                             ModulePresentation::cyclic(ID(R, {"x^2"}))),
                 ID(R, {"y"})});
  out.push_back({"rees-embedded",
                 make_family(FamilyKind::rees, ID(R, {"x^2", "x*y"}), F1),
                 ID(R, {"x^2", "x*y"})});
  auto A = free_graded_algebra(R, {"u"});
  GradedModulePresentation T(A, {0, 0},
                             {{poly_zero(), parse_poly_string(*A.ext, "u")},
                              {poly_zero(), parse_poly_string(*A.ext, "x")},
                              {poly_zero(), parse_poly_string(*A.ext, "y")}});
  out.push_back({"custom-socle", std::move(T), ID(R, {"x", "y"})});
  return out;
}

std::vector<std::string> strs(const Ring& R, const std::vector<Poly>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(poly_to_string(R, f));
  return out;
}

bool ideal_eq(const Ideal& a, const Ideal& b) {
  return ideal_key(a) == ideal_key(b);
}

// All tuples in {1..top}^len, lexicographic.
std::vector<std::vector<long>> tuples(long top, size_t len) {
  std::vector<std::vector<long>> out{{}};
  for (size_t i = 0; i < len; ++i) {
    std::vector<std::vector<long>> next;
    for (const auto& t : out)
      for (long v = 1; v <= top; ++v) {
        auto u = t;
        u.push_back(v);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int failures = 0;

void criterion(int num, const char* label,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::printf("%s %d: %s%s%s\n", ok ? "PASS" : "FAIL", num, label,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

long l_cap(const ExtInt& r, int nvars) {
  if (!r.is_finite()) return nvars;
  return r.value();
}

}  // namespace

int main() {
  auto instances = corpus_instances();
  auto families = corpus_families();

  criterion(1, "oracle equality across k, l, t and generator powers",
            [&](std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const auto& ins : instances) {
      int nv = ins.I.ring()->nvars();
      size_t s = ins.I.gens().size();
      for (long k = -1; k <= 1 && ok; ++k) {
        ExtInt r = depth_k(ins.I, ins.N, k, kSeed).depth;
        for (long l = 1; l <= l_cap(r, nv) && ok; ++l) {
          auto M = ModulePresentation::free_module(ins.I.ring(), 1);
          TheoremSetResult f = ass_lch_formula(ins.I, M, ins.N, k, l, kSeed);
          for (long t = 1; t <= 3 && ok; ++t) {
            AssSet o = ext_ass_sets(ins.I, ins.N, k, l, t, kSeed);
            if (!f.union_set.set_equals(o)) {
              detail = ins.name + " k=" + std::to_string(k) +
                       " l=" + std::to_string(l) + " t=" + std::to_string(t);
              ok = false;
            }
          }
          for (const auto& tp : tuples(2, s)) {
            AssSet o = ext_ass_sets_powers(ins.I, tp, ins.N, k, l, kSeed);
            if (!f.union_set.set_equals(o)) {
              detail = ins.name + " k=" + std::to_string(k) +
                       " l=" + std::to_string(l) + " (power tuple)";
              ok = false;
              break;
            }
          }
        }
      }
    }
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    if (secs >= 15 * 60) {
      detail = "sweep took " + std::to_string(secs) + "s";
      ok = false;
    }
    return ok;
  });

  criterion(2, "witness independence between seeds 42 and 4242",
            [&](std::string& detail) {
    bool diverged = false;
    for (const auto& ins : instances) {
      int nv = ins.I.ring()->nvars();
      for (long k = -1; k <= 1; ++k) {
        ExtInt r = depth_k(ins.I, ins.N, k, kSeed).depth;
        for (long l = 1; l <= l_cap(r, nv); ++l) {
          auto M = ModulePresentation::free_module(ins.I.ring(), 1);
          auto a = ass_lch_formula(ins.I, M, ins.N, k, l, kSeed);
          auto b = ass_lch_formula(ins.I, M, ins.N, k, l, kAltSeed);
          if (!a.union_set.set_equals(b.union_set)) {
            detail = "unions differ on " + ins.name;
            return false;
          }
          if (strs(*ins.I.ring(), a.witness) !=
              strs(*ins.I.ring(), b.witness))
            diverged = true;
        }
      }
    }
    if (!diverged) detail = "no instance produced distinct witnesses";
    return diverged;
  });

  criterion(3, "power invariance of the union over exponent tuples",
            [&](std::string& detail) {
    for (const auto& ins : instances) {
      for (long k = -1; k <= 1; ++k) {
        DepthResult d = depth_k(ins.I, ins.N, k, kSeed);
        if (d.witness.empty()) continue;
        for (const auto& e : tuples(3, d.witness.size())) {
          auto rep = power_invariance_check(d.witness, ins.N, k, e, kSeed);
          if (!rep.equal || (rep.max_variant && !rep.equal_with_max)) {
            detail = ins.name + " k=" + std::to_string(k);
            return false;
          }
        }
      }
    }
    return true;
  });

  criterion(4, "greedy depth agrees with the Ext characterization",
            [&](std::string& detail) {
    for (const auto& ins : instances) {
      for (long k = -1; k <= 1; ++k) {
        ExtInt greedy = depth_k(ins.I, ins.N, k, kSeed).depth;
        ExtInt oracle = depth_k_ext_oracle(ins.I, ins.N, k);
        if (!(greedy == oracle)) {
          detail = ins.name + " k=" + std::to_string(k) + ": greedy " +
                   greedy.str() + " vs oracle " + oracle.str();
          return false;
        }
      }
    }
    return true;
  });

  criterion(5, "associated primes match the definition-level oracle",
            [&](std::string& detail) {
    for (const auto& ins : instances) {
      AssSet got = associated_primes(ins.N, kSeed);
      std::vector<Ideal> candidates;
      for (const auto& p : got.items()) candidates.push_back(p.ideal);
      for (const auto& p : minimal_primes(ins.N.annihilator(), kSeed))
        candidates.push_back(p.ideal);
      std::vector<std::string> vars;
      auto R = ins.I.ring();
      std::vector<Poly> mg;
      for (int v = 0; v < R->nvars(); ++v) mg.push_back(poly_var(*R, v));
      candidates.push_back(Ideal(R, mg));
      for (const auto& c : candidates) {
        if (is_associated_oracle(c, ins.N) != got.contains(c)) {
          detail = ins.name + ": disagreement at (" + ideal_key(c) + ")";
          return false;
        }
      }
    }
    auto R2 = make_ring(CoeffField::prime(32003), {"x", "y"});
    AssSet pinned = associated_primes(
        ModulePresentation::cyclic(ID(R2, {"x^2", "x*y"})), kSeed);
    if (assset_brief(pinned) != "(x);(x,y)") {
      detail = "thickened-axis set came out as " + assset_brief(pinned);
      return false;
    }
    return true;
  });

  criterion(6, "every family stabilizes in window 3 by degree 12",
            [&](std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& fam : families) {
      auto a = stabilize_ass(fam.G, 0, 12, 3, kSeed);
      if (!a.stable_in_window) {
        detail = fam.name + ": Ass not stable";
        return false;
      }
      auto d = stabilize_depth_k(fam.G, fam.I, -1, 0, 12, 3, kSeed);
      if (!d.stable_in_window) {
        detail = fam.name + ": depth not stable";
        return false;
      }
      auto M = ModulePresentation::free_module(fam.I.ring(), 1);
      auto th = stabilize_theorem_sets(fam.G, fam.I, M, -1, 1, 0, 12, 3, kSeed);
      if (!th.report.stable_in_window) {
        detail = fam.name + ": theorem sets not stable";
        return false;
      }
      auto cs = common_sequence(fam.G, fam.I, -1, 0, 12, 3, kSeed);
      for (size_t i = 0; i < cs.ns.size(); ++i) {
        if (cs.ns[i] >= cs.tail_from && cs.fail_index[i] != 0) {
          detail = fam.name + ": sequence fails at n=" +
                   std::to_string(cs.ns[i]);
          return false;
        }
      }
    }
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    if (secs >= 10 * 60) {
      detail = "suite took " + std::to_string(secs) + "s";
      return false;
    }
    return true;
  });

  criterion(7, "resolutions, Ext vanishing and Hom identification",
            [&](std::string& detail) {
    for (const auto& ins : instances) {
      auto R = ins.I.ring();
      int nv = R->nvars();
      const ModulePresentation quot = ModulePresentation::cyclic(ins.I);
      for (const ModulePresentation* Mp : {&ins.N, &quot}) {
        const ModulePresentation& M = *Mp;
        const Resolution& res = M.resolution(nv + 1);
        for (size_t kk = 0; kk + 1 < res.diffs.size(); ++kk) {
          for (const auto& col : res.diffs[kk + 1]) {
            std::vector<Poly> acc(size_t(res.ranks[kk]), poly_zero());
            for (size_t i = 0; i < col.size(); ++i)
              for (size_t rrow = 0; rrow < acc.size(); ++rrow)
                acc[rrow] = poly_add(
                    *R, acc[rrow],
                    poly_mul(*R, col[i], res.diffs[kk][i][rrow]));
            for (const auto& entry : acc)
              if (!entry.is_zero()) {
                detail = ins.name + ": differential square is nonzero";
                return false;
              }
          }
        }
      }
      for (int j = nv + 1; j <= nv + 2; ++j) {
        if (!ext_module(j, quot, ins.N).is_zero_module()) {
          detail = ins.name + ": Ext^" + std::to_string(j) + " nonzero";
          return false;
        }
      }
      ModulePresentation h = ext_module(0, quot, ins.N);
      if (ins.cyclic_target) {
        Ideal KJ = colon(ins.K, ins.I);
        Ideal expect = colon(ins.K, KJ);
        if (!ideal_eq(h.annihilator(), expect)) {
          detail = ins.name + ": Hom annihilator mismatch";
          return false;
        }
        bool hom_zero = ideal_eq(KJ, ins.K);
        if (h.is_zero_module() != hom_zero) {
          detail = ins.name + ": Hom vanishing mismatch";
          return false;
        }
      } else if (!h.is_zero_module()) {
        // ideal is nonzero on a torsion-free target, so Hom must vanish
        detail = ins.name + ": Hom from a quotient into a free module";
        return false;
      }
    }
    return true;
  });

  criterion(8, "byte-identical reports on repeated corpus runs",
            [&](std::string& detail) {
    size_t n = 0;
    for (const auto& e : fs::directory_iterator(CORPUS_DIR)) {
      if (e.path().extension() != ".lch") continue;
      ++n;
      std::string text = slurp(e.path());
      auto a = run_session(text, SessionOptions{});
      auto b = run_session(text, SessionOptions{});
      if (a.rendered != b.rendered || a.exit_code != b.exit_code) {
        detail = e.path().filename().string() + ": runs differ";
        return false;
      }
      fs::path golden = e.path();
      golden.replace_extension(".golden.json");
      if (fs::exists(golden) && a.rendered != slurp(golden)) {
        detail = e.path().filename().string() + ": drifted from golden";
        return false;
      }
    }
    if (n < 12) {
      detail = "corpus too small: " + std::to_string(n);
      return false;
    }
    return true;
  });

  return failures;
}
