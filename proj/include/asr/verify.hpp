#pragma once

#include <string>
#include <vector>

namespace asr {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Catalan cardinalities of the half, reduced and symbol families for even
// D in [0, d_max].
std::vector<CheckResult> verify_counts(int d_max);

// enumerate_sets(D, All) against the power-set oracle, even D in [0, min(d_max, 8)],
// and against the pruned depth-first route up to d_max.
std::vector<CheckResult> verify_oracle(int d_max);

// All composition-to-identity laws along the bijection chain, exhaustive.
std::vector<CheckResult> verify_roundtrip(int d_max);

// Injectivity of the marking vector, agreement of its two evaluation routes,
// compatibility with the row sums, and the symbol factorization.
std::vector<CheckResult> verify_epsilon(int d_max);

// The subspace-pair suite: the pair map is a bijection, odd parts biject the
// half and reduced families onto the realizable subspaces, maximal partners
// are unique, and fibre dimensions grow by the adjoined-subset size.
std::vector<CheckResult> verify_lattice(int d_max);

// The worked row-shift examples.
std::vector<CheckResult> verify_shift_examples();

// Structural checks over the tabulated exceptional-family records.
std::vector<CheckResult> verify_exceptional();

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace asr
