#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mcdc/expr.hpp"

namespace mcdc {

/// A vertex index (1..N) or one of the two terminals. Terminals order after
/// every vertex, so the BDD ordering invariant is `successor > source` across
/// the board.
class Target {
public:
  static Target vertex(int index) { return Target(index); }
  static Target terminal(bool value) { return Target(value ? kTrue : kFalse); }

  bool is_terminal() const { return code_ >= kFalse; }
  bool terminal_value() const { return code_ == kTrue; }
  int index() const { return code_; }  // valid for vertices only

  /// "x3", "0", "1" -- the notation used in tables and diagnostics.
  std::string name() const;

  auto operator<=>(const Target&) const = default;

private:
  explicit Target(int code) : code_(code) {}

  static constexpr int kFalse = 1 << 30;
  static constexpr int kTrue = kFalse + 1;

  int code_;
};

struct Edge {
  int source = 0;  // vertex index
  bool outcome = false;  // true => then edge
  Target target = Target::terminal(false);

  auto operator<=>(const Edge&) const = default;
};

struct Violation {
  enum class Rule { NotOrdered, RedundantTest, Unreachable, DanglingPath };

  Rule rule;
  int vertex;

  bool operator==(const Violation&) const = default;
};

/// Reduced ordered BDD over condition occurrences 1..N. Vertex i tests
/// condition i (polarity included); the then edge is the true outcome of the
/// condition. Immutable after construction.
class Bdd {
public:
  /// Direct construction from successor tables; used by lower() and by tests
  /// that need deliberately broken structures.
  Bdd(int condition_count,
      std::vector<std::pair<Target, Target>> successors,
      std::vector<bool> negated = {});

  int condition_count() const { return condition_count_; }
  Target then_successor(int vertex) const { return successors_[vertex - 1].first; }
  Target else_successor(int vertex) const { return successors_[vertex - 1].second; }
  Target successor(int vertex, bool outcome) const {
    return outcome ? then_successor(vertex) : else_successor(vertex);
  }
  bool negated(int vertex) const;

  /// FNV-1a over N and the successor tables; used to pair accumulators with
  /// the decision they were built from.
  std::uint64_t structure_hash() const;

  bool operator==(const Bdd&) const = default;

private:
  int condition_count_;
  std::vector<std::pair<Target, Target>> successors_;
  std::vector<bool> negated_;
};

struct Path {
  std::vector<Edge> edges;
  Target terminal = Target::terminal(false);
};

/// Continuation lowering of a normalized expression: conjunctions chain
/// through their tail on true, disjunctions on false, the root continues to
/// the terminals. Reduced and ordered by construction.
Bdd lower(const IndexedExpr& e);

/// Structural check; empty result means all BDD invariants hold.
std::vector<Violation> validate(const Bdd& b);

/// Root-to-terminal walk for an input vector. Short-circuited conditions do
/// not appear. Throws LengthMismatch.
Path path(const Bdd& b, const InputVector& v);

/// Deterministic Graphviz rendering: solid then edges, dashed else edges,
/// boxed terminals, `!`-prefixed labels for negated conditions.
std::string to_dot(const Bdd& b);

} // namespace mcdc
