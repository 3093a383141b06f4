#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mcdc/bdd.hpp"

namespace mcdc {

/// Fixed-width set of condition indices. Bit i-1 set means condition i is a
/// member; rendered with condition 1 leftmost.
class ConditionMask {
public:
  ConditionMask() = default;
  explicit ConditionMask(int width) : width_(width) {}

  void set(int condition) { bits_ |= std::uint64_t{1} << (condition - 1); }
  bool test(int condition) const {
    return (bits_ >> (condition - 1)) & 1;
  }
  void merge(const ConditionMask& other) { bits_ |= other.bits_; }
  void remove(const ConditionMask& other) { bits_ &= ~other.bits_; }

  std::uint64_t bits() const { return bits_; }
  int width() const { return width_; }
  int count() const;
  bool empty() const { return bits_ == 0; }
  bool subset_of(const ConditionMask& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  std::vector<int> members() const;
  std::string to_string() const;

  bool operator==(const ConditionMask&) const = default;

private:
  std::uint64_t bits_ = 0;
  int width_ = 0;
};

/// One element of P(x): predecessors (low_pred, high_pred) of the
/// pseudo-terminal with low_pred < high_pred, and escape the other successor
/// of low_pred.
struct MaskingTriple {
  Target pseudo_terminal = Target::terminal(false);  // x
  Target escape = Target::terminal(false);           // x_e
  int low_pred = 0;                                  // x_n
  int high_pred = 0;                                 // x_m

  bool operator==(const MaskingTriple&) const = default;
};

/// Edge -> set of conditions voided when the edge is taken. Absent edges mean
/// the empty mask. Iteration is by source vertex, then edge before else edge.
class MaskingTable {
public:
  explicit MaskingTable(int width) : width_(width) {}

  ConditionMask mask(int source, bool outcome) const;
  void add(int source, bool outcome, const ConditionMask& mask);

  int width() const { return width_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  /// Entries in iteration order, with targets resolved against the BDD.
  std::vector<std::pair<Edge, ConditionMask>> entries(const Bdd& b) const;

  bool operator==(const MaskingTable&) const = default;

private:
  struct KeyOrder {
    bool operator()(const std::pair<int, bool>& a,
                    const std::pair<int, bool>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return a.second > b.second;  // then edge first
    }
  };

  int width_;
  std::map<std::pair<int, bool>, ConditionMask, KeyOrder> entries_;
};

/// Vertices and terminals with in-degree >= 2, in ascending order (terminals
/// last).
std::vector<Target> pseudo_terminals(const Bdd& b);

/// P(x): all ordered predecessor pairs of x with the escape successor.
/// Throws NotAPseudoTerminal.
std::vector<MaskingTriple> triples(const Bdd& b, Target x);

/// Leaf peeling for one triple: mark x and the escape removed, then
/// repeatedly remove vertices whose successors are all removed. Returns the
/// collected condition indices, ascending.
std::vector<int> collect_masked(const Bdd& b, const MaskingTriple& t);

/// Full masking table: union of collected sets over all pseudo-terminals and
/// triples, keyed by the (high_pred -> x) edge. Peeling results are memoized
/// per (x, escape).
MaskingTable build_table(const Bdd& b);

/// Aligned text table with columns edge / masked conditions / bitmask.
std::string render_table(const Bdd& b, const MaskingTable& m);

} // namespace mcdc
