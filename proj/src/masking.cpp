#include "mcdc/masking.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "mcdc/errors.hpp"

namespace mcdc {

int ConditionMask::count() const { return std::popcount(bits_); }

std::vector<int> ConditionMask::members() const {
  std::vector<int> out;
  for (int i = 1; i <= width_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

std::string ConditionMask::to_string() const {
  std::string out(width_, '0');
  for (int i = 1; i <= width_; ++i)
    if (test(i)) out[i - 1] = '1';
  return out;
}

ConditionMask MaskingTable::mask(int source, bool outcome) const {
  auto it = entries_.find({source, outcome});
  if (it == entries_.end()) return ConditionMask(width_);
  return it->second;
}

void MaskingTable::add(int source, bool outcome, const ConditionMask& mask) {
  if (mask.empty()) return;
  auto [it, inserted] = entries_.try_emplace({source, outcome}, mask);
  if (!inserted) it->second.merge(mask);
}

std::vector<std::pair<Edge, ConditionMask>>
MaskingTable::entries(const Bdd& b) const {
  std::vector<std::pair<Edge, ConditionMask>> out;
  out.reserve(entries_.size());
  for (const auto& [key, mask] : entries_) {
    auto [source, outcome] = key;
    out.push_back({{source, outcome, b.successor(source, outcome)}, mask});
  }
  return out;
}

namespace {

// In-degree per target; index 0..N-1 for vertices, N for terminal 0,
// N+1 for terminal 1.
std::vector<int> in_degrees(const Bdd& b) {
  const int n = b.condition_count();
  std::vector<int> deg(n + 2, 0);
  auto slot = [n](Target t) {
    return t.is_terminal() ? n + (t.terminal_value() ? 1 : 0) : t.index() - 1;
  };
  for (int v = 1; v <= n; ++v) {
    deg[slot(b.then_successor(v))]++;
    deg[slot(b.else_successor(v))]++;
  }
  return deg;
}

std::vector<int> predecessors(const Bdd& b, Target x) {
  std::vector<int> preds;
  for (int v = 1; v <= b.condition_count(); ++v)
    if (b.then_successor(v) == x || b.else_successor(v) == x)
      preds.push_back(v);
  return preds;
}

} // namespace

std::vector<Target> pseudo_terminals(const Bdd& b) {
  const int n = b.condition_count();
  std::vector<int> deg = in_degrees(b);
  std::vector<Target> out;
  for (int v = 1; v <= n; ++v)
    if (deg[v - 1] >= 2) out.push_back(Target::vertex(v));
  if (deg[n] >= 2) out.push_back(Target::terminal(false));
  if (deg[n + 1] >= 2) out.push_back(Target::terminal(true));
  return out;
}

std::vector<MaskingTriple> triples(const Bdd& b, Target x) {
  std::vector<int> preds = predecessors(b, x);
  if (preds.size() < 2) throw NotAPseudoTerminal(x.name());
  std::vector<MaskingTriple> out;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    int low = preds[i];
    Target escape = b.then_successor(low) == x ? b.else_successor(low)
                                               : b.then_successor(low);
    for (std::size_t j = i + 1; j < preds.size(); ++j)
      out.push_back({x, escape, low, preds[j]});
  }
  std::sort(out.begin(), out.end(), [](const MaskingTriple& a,
                                       const MaskingTriple& b) {
    if (a.low_pred != b.low_pred) return a.low_pred < b.low_pred;
    return a.high_pred < b.high_pred;
  });
  return out;
}

std::vector<int> collect_masked(const Bdd& b, const MaskingTriple& t) {
  const int n = b.condition_count();
  std::vector<bool> removed(n + 2, false);
  auto slot = [n](Target x) {
    return x.is_terminal() ? n + (x.terminal_value() ? 1 : 0) : x.index() - 1;
  };
  removed[slot(t.pseudo_terminal)] = true;
  removed[slot(t.escape)] = true;
  // Successors always have a higher index, so one descending pass peels all
  // leaves.
  std::vector<int> collected;
  for (int v = n; v >= 1; --v) {
    if (removed[v - 1]) continue;
    if (removed[slot(b.then_successor(v))] && removed[slot(b.else_successor(v))]) {
      removed[v - 1] = true;
      collected.push_back(v);
    }
  }
  std::reverse(collected.begin(), collected.end());
  return collected;
}

MaskingTable build_table(const Bdd& b) {
  MaskingTable table(b.condition_count());
  // The collected set depends only on which pair of targets is removed, so
  // memoize on (x, escape) across triples.
  std::map<std::pair<Target, Target>, ConditionMask> memo;
  for (Target x : pseudo_terminals(b)) {
    for (const MaskingTriple& t : triples(b, x)) {
      auto key = std::make_pair(t.pseudo_terminal, t.escape);
      auto it = memo.find(key);
      if (it == memo.end()) {
        ConditionMask mask(b.condition_count());
        for (int v : collect_masked(b, t)) mask.set(v);
        it = memo.emplace(key, mask).first;
      }
      bool outcome = b.then_successor(t.high_pred) == x;
      table.add(t.high_pred, outcome, it->second);
    }
  }
  return table;
}

std::string render_table(const Bdd& b, const MaskingTable& m) {
  std::vector<std::array<std::string, 3>> rows;
  rows.push_back({"edge", "masked conditions", "bitmask"});
  for (const auto& [edge, mask] : m.entries(b)) {
    std::string edge_text = "(x" + std::to_string(edge.source) + ", "
                            + edge.target.name() + ")";
    std::string conditions;
    for (int v : mask.members()) {
      if (!conditions.empty()) conditions += ", ";
      conditions += "x" + std::to_string(v);
    }
    rows.push_back({edge_text, conditions, mask.to_string()});
  }
  std::size_t w0 = 0, w1 = 0;
  for (const auto& r : rows) {
    w0 = std::max(w0, r[0].size());
    w1 = std::max(w1, r[1].size());
  }
  std::ostringstream out;
  for (const auto& r : rows) {
    out << r[0] << std::string(w0 - r[0].size() + 2, ' ')
        << r[1] << std::string(w1 - r[1].size() + 2, ' ')
        << r[2] << "\n";
  }
  return out.str();
}

} // namespace mcdc
