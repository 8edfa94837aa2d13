// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "theorems.hpp"

namespace lch {

// A standard graded algebra over the base polynomial ring: the extended
// ring lists the base variables first, then m generators of degree one,
// and the relation list cuts the algebra out of that polynomial cover.
// Base variables have degree zero.  Each relation must be homogeneous of
// positive degree in the graded block.
struct GradedAlgebraSpec {
  RingPtr base;
  RingPtr ext;
  int m = 0;
  std::vector<Poly> relations;
};

// Degree of a monomial of the extended ring in the graded block.
long graded_degree(const GradedAlgebraSpec& A, const Monomial& mono);

// Degree of a polynomial when all its terms share one graded-block degree,
// nullopt when they do not (or when f is zero).
std::optional<long> graded_homogeneous_degree(const GradedAlgebraSpec& A,
                                              const Poly& f);

// Polynomial cover with no relations.  The supplied names become the
// degree-one generators; they must be fresh and pairwise distinct.
GradedAlgebraSpec free_graded_algebra(const RingPtr& base,
                                      const std::vector<std::string>& names);

// A finitely generated graded module over a GradedAlgebraSpec, presented
// by generators with chosen degrees and relation columns over the
// extended ring.  Every column must be homogeneous: all nonzero entries
// land the column in one total degree.  Columns of the algebra's own
// relation ideal are implied and need not be listed.
class GradedModulePresentation {
 public:
  GradedModulePresentation(GradedAlgebraSpec algebra,
                           std::vector<long> gen_degrees,
                           std::vector<Vec> rel_cols);

  const GradedAlgebraSpec& algebra() const { return algebra_; }
  const std::vector<long>& gen_degrees() const { return gen_degrees_; }
  const std::vector<Vec>& rel_cols() const { return rel_cols_; }
  const std::vector<long>& col_degrees() const { return col_degrees_; }

 private:
  GradedAlgebraSpec algebra_;
  std::vector<long> gen_degrees_;
  std::vector<Vec> rel_cols_;
  std::vector<long> col_degrees_;
};

// Same algebra on both sides; generators and columns concatenate.
GradedModulePresentation graded_direct_sum(const GradedModulePresentation& a,
                                           const GradedModulePresentation& b);

// The degree-n piece as a module over the base ring.  Generators are the
// monomials of the graded block times the module generators landing in
// degree n; relations are all graded-block multiples of the listed
// columns and of the algebra relations that land in degree n.
ModulePresentation graded_component(const GradedModulePresentation& N, long n);

enum class FamilyKind {
  rees,          // components I^n M
  assoc_graded,  // components I^n M / I^{n+1} M
};

// Blowup-style family of a cyclic module M = R/J along the ideal I: the
// algebra is the subalgebra R[I t] of R[t] presented on one degree-one
// generator per listed generator of I, and the module collects the pieces
// named by the kind.  Kernels come from one elimination of t; for cyclic
// coefficients no saturation is needed.  Non-cyclic M is not supported.
GradedModulePresentation make_family(FamilyKind kind, const Ideal& I,
                                     const ModulePresentation& M);

// Record of a quantity sampled along n = n_lo..n_hi.  values holds the
// canonical one-line rendering per sample; sets or depths mirror it in
// structured form when the quantity is set- or depth-valued.  onset is
// the least sampled n from which the value never changes again within
// the range; the verdict asks for the last `window` samples to agree.
struct StabilizationReport {
  std::string quantity;
  long n_lo = 0;
  long n_hi = 0;
  long window = 2;
  std::vector<std::string> values;
  std::vector<AssSet> sets;
  std::vector<ExtInt> depths;
  long onset = 0;
  bool stable_in_window = false;
  std::string stable_value;
};

// Ass of each graded component.  pre: 0 <= n_lo <= n_hi, window >= 2.
StabilizationReport stabilize_ass(const GradedModulePresentation& N,
                                  long n_lo, long n_hi, long window,
                                  uint64_t seed);

// Filtered depth of I on each graded component.
StabilizationReport stabilize_depth_k(const GradedModulePresentation& N,
                                      const Ideal& I, long k, long n_lo,
                                      long n_hi, long window, uint64_t seed);

// One polynomial sequence valid across the whole tail of the family:
// greedy avoidance against the pooled bad primes of every component from
// the depth onset on.  fail_index lists, per sampled n, the first step
// where the sequence leaves the filtered regular condition (0 = valid).
// Raises inconclusive when the depth never settles inside the window.
struct CommonSequenceResult {
  std::vector<Poly> xs;
  ExtInt eventual_depth;
  long tail_from = 0;
  std::vector<long> ns;
  std::vector<long> fail_index;
};
CommonSequenceResult common_sequence(const GradedModulePresentation& N,
                                     const Ideal& I, long k, long n_lo,
                                     long n_hi, long window, uint64_t seed);

// The dimension-filtered union of Ass Ext^j(M/IM, component) over j <= l,
// computed through the quotient-chain formula at every sampled n.  status
// per sample: 0 = certified, 1 = computed past a finite guarantee,
// 2 = declined (l exceeds the filtered depth; value rendered "declined").
// oracle_match compares each computed sample against the direct Ext-module
// set at exponent one: 1 equal, 0 different, -1 not compared.
struct TheoremStabilization {
  StabilizationReport report;
  std::vector<int> status;
  std::vector<int> oracle_match;
};
TheoremStabilization stabilize_theorem_sets(const GradedModulePresentation& GN,
                                            const Ideal& I,
                                            const ModulePresentation& M,
                                            long k, long l, long n_lo,
                                            long n_hi, long window,
                                            uint64_t seed);

}  // namespace lch
