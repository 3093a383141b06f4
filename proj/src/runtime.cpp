#include "mcdc/runtime.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "mcdc/errors.hpp"

namespace mcdc {

ExecutionRecord execute(const Bdd& b, const MaskingTable& m,
                        const InputVector& v) {
  if (static_cast<int>(v.size()) != b.condition_count())
    throw LengthMismatch(b.condition_count(), static_cast<int>(v.size()));
  const int n = b.condition_count();
  ExecutionRecord r;
  r.pre_mask_t = r.pre_mask_f = ConditionMask(n);
  r.post_mask_t = r.post_mask_f = ConditionMask(n);
  Target current = Target::vertex(1);
  while (!current.is_terminal()) {
    int vertex = current.index();
    bool outcome = v[vertex - 1];
    ConditionMask mask = m.mask(vertex, outcome);
    r.post_mask_t.remove(mask);
    r.post_mask_f.remove(mask);
    (outcome ? r.post_mask_t : r.post_mask_f).set(vertex);
    (outcome ? r.pre_mask_t : r.pre_mask_f).set(vertex);
    Target next = b.successor(vertex, outcome);
    r.path.push_back({vertex, outcome, next});
    current = next;
  }
  r.outcome = current;
  return r;
}

CoverageAccumulator::CoverageAccumulator(const Bdd& b)
    : condition_count_(b.condition_count()),
      structure_hash_(b.structure_hash()),
      global_t_(b.condition_count()),
      global_f_(b.condition_count()) {}

void CoverageAccumulator::add(const ExecutionRecord& r) {
  if (r.post_mask_t.width() != condition_count_)
    throw IncompatibleAccumulators();
  global_t_.merge(r.post_mask_t);
  global_f_.merge(r.post_mask_f);
  for (const Edge& e : r.path) edges_taken_.insert({e.source, e.outcome});
  (r.outcome.terminal_value() ? reached_true_ : reached_false_) = true;
  ++executions_;
}

CoverageAccumulator merge(const CoverageAccumulator& a,
                          const CoverageAccumulator& b) {
  if (a.condition_count_ != b.condition_count_
      || a.structure_hash_ != b.structure_hash_)
    throw IncompatibleAccumulators();
  CoverageAccumulator out = a;
  out.global_t_.merge(b.global_t_);
  out.global_f_.merge(b.global_f_);
  out.edges_taken_.insert(b.edges_taken_.begin(), b.edges_taken_.end());
  out.reached_false_ = out.reached_false_ || b.reached_false_;
  out.reached_true_ = out.reached_true_ || b.reached_true_;
  out.executions_ += b.executions_;
  return out;
}

namespace {

void collect_rows(const IndexedExpr::Node& node,
                  std::vector<CoverageReport::ConditionRow>& rows) {
  if (node.kind == IndexedExpr::Node::Kind::Condition) {
    rows.push_back({node.index, node.label, node.negated, false, false});
    return;
  }
  for (const auto& c : node.children) collect_rows(c, rows);
}

double percent(int num, int den) {
  return den == 0 ? 0.0 : 100.0 * num / den;
}

std::string format_percent(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", p);
  return buf;
}

} // namespace

CoverageReport report(const IndexedExpr& e, const Bdd& b,
                      const CoverageAccumulator& acc) {
  if (b.condition_count() != acc.condition_count()
      || e.condition_count != acc.condition_count())
    throw IncompatibleAccumulators();
  CoverageReport r;
  r.decision = to_string(e);
  r.condition_count = e.condition_count;
  collect_rows(e.root, r.rows);
  for (auto& row : r.rows) {
    row.independent_true = acc.global_t().test(row.index);
    row.independent_false = acc.global_f().test(row.index);
  }
  r.terminals_reached = (acc.terminal_reached(false) ? 1 : 0)
                        + (acc.terminal_reached(true) ? 1 : 0);
  r.edges_covered = static_cast<int>(acc.edges_taken().size());
  r.edge_total = 2 * e.condition_count;
  r.independence_bits = acc.global_t().count() + acc.global_f().count();
  r.decision_percent = percent(r.terminals_reached, 2);
  r.condition_percent = percent(r.edges_covered, r.edge_total);
  r.mcdc_percent = percent(r.independence_bits, r.edge_total);
  return r;
}

std::string render_report(const CoverageReport& r) {
  std::ostringstream out;
  out << "decision: " << r.decision << "\n";
  out << "conditions: " << r.condition_count << "\n";
  std::size_t w0 = std::string("condition").size();
  for (const auto& row : r.rows) {
    std::size_t len = 1 + std::to_string(row.index).size()
                      + (row.negated ? 1 : 0);
    w0 = std::max(w0, len);
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size() + 2, ' ');
  };
  out << pad("condition", w0) << pad("true covered", 12) << "false covered\n";
  for (const auto& row : r.rows) {
    std::string name = (row.negated ? "!x" : "x") + std::to_string(row.index);
    out << pad(name, w0) << pad(row.independent_true ? "yes" : "no", 12)
        << (row.independent_false ? "yes" : "no") << "\n";
  }
  out << "decision: " << r.terminals_reached << "/2\n";
  out << "condition: " << r.edges_covered << "/" << r.edge_total << "\n";
  out << "mcdc: " << r.independence_bits << "/" << r.edge_total << " ("
      << format_percent(r.mcdc_percent) << ")\n";
  return out.str();
}

} // namespace mcdc
