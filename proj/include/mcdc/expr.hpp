#pragma once

#include <string>
#include <vector>

#include "mcdc/errors.hpp"

namespace mcdc {

/// Parsed decision expression, as written in the source text.
///
/// Conjunction/Disjunction nodes are n-ary (children >= 2, source order);
/// adjacent applications of the same operator are flattened during parsing.
/// Leaves are always identifiers; constant true/false is rejected.
struct Expr {
  enum class Kind { Condition, Negation, Conjunction, Disjunction };

  Kind kind = Kind::Condition;
  std::string label;           // Condition only
  std::vector<Expr> children;  // Negation: exactly 1; Conjunction/Disjunction: >= 2

  static Expr condition(std::string label);
  static Expr negation(Expr child);
  static Expr conjunction(std::vector<Expr> children);
  static Expr disjunction(std::vector<Expr> children);

  bool operator==(const Expr&) const = default;
};

/// Decision with negations pushed onto the leaves and every condition
/// occurrence numbered 1..N in left-to-right order. Repeated identifiers get
/// distinct indices.
struct IndexedExpr {
  struct Node {
    enum class Kind { Condition, Conjunction, Disjunction };

    Kind kind = Kind::Condition;
    // Condition only:
    std::string label;
    bool negated = false;
    int index = 0;  // 1..N
    // Conjunction/Disjunction only:
    std::vector<Node> children;

    bool operator==(const Node&) const = default;
  };

  Node root;
  int condition_count = 0;  // N, 1..64

  bool operator==(const IndexedExpr&) const = default;
};

/// A vector of condition *outcomes*: element i-1 is the value condition i
/// evaluates to, with its polarity already applied.
using InputVector = std::vector<bool>;

/// Parse expression text. Grammar: identifiers [A-Za-z_][A-Za-z0-9_]*,
/// `!` > `&&` > `||`, parentheses, left-associative binary operators.
/// Throws SyntaxError or EmptyInput.
Expr parse(const std::string& text);

/// Eliminate Negation nodes (De Morgan push-down, double-negation removal)
/// and assign occurrence indices. Throws TooManyConditions when N > 64.
IndexedExpr normalize(const Expr& e);

/// Truth value of the decision under the given condition outcomes.
/// Throws LengthMismatch.
bool evaluate(const IndexedExpr& e, const InputVector& v);

/// Render back to expression text (with `!` on negated leaves).
std::string to_string(const IndexedExpr& e);

} // namespace mcdc
