#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mcdc/masking.hpp"

namespace mcdc {

/// One instrumented run. The pre-mask bitsets record every edge taken
/// (condition coverage); the post-mask bitsets have the masked contributions
/// voided (masking MC/DC).
struct ExecutionRecord {
  std::vector<Edge> path;
  Target outcome = Target::terminal(false);
  ConditionMask pre_mask_t, pre_mask_f;
  ConditionMask post_mask_t, post_mask_f;
};

/// Walk the BDD for one input vector, applying the per-edge mask updates
/// before recording each outcome bit. Throws LengthMismatch.
ExecutionRecord execute(const Bdd& b, const MaskingTable& m,
                        const InputVector& v);

/// Global coverage state for one decision: independence arrays, the edges and
/// terminals seen, and a run count. Value type; combine with merge().
class CoverageAccumulator {
public:
  explicit CoverageAccumulator(const Bdd& b);

  void add(const ExecutionRecord& r);

  const ConditionMask& global_t() const { return global_t_; }
  const ConditionMask& global_f() const { return global_f_; }
  const std::set<std::pair<int, bool>>& edges_taken() const {
    return edges_taken_;
  }
  bool terminal_reached(bool value) const {
    return value ? reached_true_ : reached_false_;
  }
  std::uint64_t executions() const { return executions_; }
  int condition_count() const { return condition_count_; }

  /// Component-wise union; executions sum. Throws IncompatibleAccumulators
  /// when the operands come from different decisions.
  friend CoverageAccumulator merge(const CoverageAccumulator& a,
                                   const CoverageAccumulator& b);

  bool operator==(const CoverageAccumulator&) const = default;

private:
  int condition_count_;
  std::uint64_t structure_hash_;
  ConditionMask global_t_, global_f_;
  std::set<std::pair<int, bool>> edges_taken_;  // (source, outcome)
  bool reached_false_ = false;
  bool reached_true_ = false;
  std::uint64_t executions_ = 0;
};

struct CoverageReport {
  struct ConditionRow {
    int index = 0;
    std::string label;
    bool negated = false;
    bool independent_true = false;
    bool independent_false = false;
  };

  std::string decision;
  int condition_count = 0;
  std::vector<ConditionRow> rows;
  int terminals_reached = 0;   // 0..2
  int edges_covered = 0;
  int edge_total = 0;          // 2N
  int independence_bits = 0;   // set bits across both independence arrays
  double decision_percent = 0.0;
  double condition_percent = 0.0;
  double mcdc_percent = 0.0;
};

CoverageReport report(const IndexedExpr& e, const Bdd& b,
                      const CoverageAccumulator& acc);

/// Stable text rendering: header, per-condition table, summary lines.
std::string render_report(const CoverageReport& r);

} // namespace mcdc
