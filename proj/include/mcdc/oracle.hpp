#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mcdc/runtime.hpp"

namespace mcdc {

/// (condition index, outcome) pairs shown to independently affect the
/// decision.
using CoveredOutcomes = std::set<std::pair<int, bool>>;

using TestSuite = std::vector<InputVector>;

/// Brute-force ground truth for one vector: a condition on the path is
/// covered iff flipping it, with the other evaluated conditions held fixed,
/// can flip the decision for some assignment of the short-circuited
/// conditions. Conditions off the path are never covered.
/// Throws LengthMismatch.
CoveredOutcomes flip_covered(const IndexedExpr& e, const Bdd& b,
                             const InputVector& v);

/// Outcomes recorded by an instrumented run, for comparison against the
/// oracle.
CoveredOutcomes recorded_outcomes(const ExecutionRecord& r);

struct Mismatch {
  InputVector vector;
  CoveredOutcomes expected;  // flip oracle
  CoveredOutcomes actual;    // instrumentation
};

/// Compare the table-driven runtime against the flip oracle over a vector
/// set: exhaustive for N <= 20, a fixed-seed sample otherwise. Empty result
/// means agreement.
std::vector<Mismatch> differential_check(const IndexedExpr& e);

/// Same comparison over caller-supplied vectors.
std::vector<Mismatch> differential_check(const IndexedExpr& e, const Bdd& b,
                                         const MaskingTable& m,
                                         const TestSuite& vectors);

struct SuiteResult {
  TestSuite vectors;
  bool complete = false;
  CoveredOutcomes uncovered;  // empty iff complete
};

/// Greedy oracle-driven suite construction. Candidates are all 2^N vectors
/// for N <= 20, a fixed-seed sample otherwise; ties break to the numerically
/// smallest vector (condition 1 most significant). The returned suite is
/// re-verified against the oracle.
SuiteResult generate_suite(const IndexedExpr& e, const Bdd& b,
                           const MaskingTable& m);

/// Deterministic random decision text: a binary &&/|| tree with exactly
/// n_conditions leaves labeled c1..cn, each negated with probability 1/4.
std::string random_expr(std::uint64_t seed, int n_conditions);

} // namespace mcdc
