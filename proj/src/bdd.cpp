#include "mcdc/bdd.hpp"

#include <sstream>

#include "mcdc/errors.hpp"

namespace mcdc {

std::string Target::name() const {
  if (code_ == kFalse) return "0";
  if (code_ == kTrue) return "1";
  return "x" + std::to_string(code_);
}

Bdd::Bdd(int condition_count,
         std::vector<std::pair<Target, Target>> successors,
         std::vector<bool> negated)
    : condition_count_(condition_count),
      successors_(std::move(successors)),
      negated_(std::move(negated)) {
  if (static_cast<int>(successors_.size()) != condition_count_)
    throw InvariantViolation("successor table size does not match N");
  if (negated_.empty()) negated_.assign(condition_count_, false);
}

bool Bdd::negated(int vertex) const { return negated_[vertex - 1]; }

std::uint64_t Bdd::structure_hash() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(condition_count_));
  for (const auto& [then_s, else_s] : successors_) {
    mix(static_cast<std::uint64_t>(then_s.index()));
    mix(static_cast<std::uint64_t>(else_s.index()));
  }
  return h;
}

namespace {

using Node = IndexedExpr::Node;

class Lowering {
public:
  explicit Lowering(int n)
      : successors_(n, {Target::terminal(false), Target::terminal(false)}),
        negated_(n, false) {}

  // Returns the entry vertex of the lowered subtree: evaluation continues at
  // on_true when the subtree is true, on_false otherwise.
  Target lower_node(const Node& node, Target on_true, Target on_false) {
    switch (node.kind) {
    case Node::Kind::Condition:
      successors_[node.index - 1] = {on_true, on_false};
      negated_[node.index - 1] = node.negated;
      return Target::vertex(node.index);
    case Node::Kind::Conjunction: {
      Target next = on_true;
      for (auto it = node.children.rbegin(); it != node.children.rend(); ++it)
        next = lower_node(*it, next, on_false);
      return next;
    }
    case Node::Kind::Disjunction: {
      Target next = on_false;
      for (auto it = node.children.rbegin(); it != node.children.rend(); ++it)
        next = lower_node(*it, on_true, next);
      return next;
    }
    }
    throw InvariantViolation("unreachable node kind");
  }

  Bdd finish(int n) && {
    return Bdd(n, std::move(successors_), std::move(negated_));
  }

private:
  std::vector<std::pair<Target, Target>> successors_;
  std::vector<bool> negated_;
};

} // namespace

Bdd lower(const IndexedExpr& e) {
  if (e.condition_count < 1 || e.condition_count > 64)
    throw InvariantViolation("condition count out of range");
  Lowering lowering(e.condition_count);
  Target root = lowering.lower_node(e.root, Target::terminal(true),
                                    Target::terminal(false));
  if (root != Target::vertex(1))
    throw InvariantViolation("root is not the first condition");
  return std::move(lowering).finish(e.condition_count);
}

std::vector<Violation> validate(const Bdd& b) {
  std::vector<Violation> out;
  const int n = b.condition_count();
  for (int v = 1; v <= n; ++v) {
    for (bool outcome : {true, false}) {
      Target s = b.successor(v, outcome);
      if (s.is_terminal()) continue;
      if (s.index() < 1 || s.index() > n)
        out.push_back({Violation::Rule::DanglingPath, v});
      else if (s.index() <= v)
        out.push_back({Violation::Rule::NotOrdered, v});
    }
    if (b.then_successor(v) == b.else_successor(v))
      out.push_back({Violation::Rule::RedundantTest, v});
  }
  // Reachability from the root; successors already range-checked above.
  std::vector<bool> reached(n + 1, false);
  reached[1] = true;
  for (int v = 1; v <= n; ++v) {
    if (!reached[v]) continue;
    for (bool outcome : {true, false}) {
      Target s = b.successor(v, outcome);
      if (!s.is_terminal() && s.index() > v && s.index() <= n)
        reached[s.index()] = true;
    }
  }
  for (int v = 2; v <= n; ++v)
    if (!reached[v]) out.push_back({Violation::Rule::Unreachable, v});
  return out;
}

Path path(const Bdd& b, const InputVector& v) {
  if (static_cast<int>(v.size()) != b.condition_count())
    throw LengthMismatch(b.condition_count(), static_cast<int>(v.size()));
  Path p;
  Target current = Target::vertex(1);
  while (!current.is_terminal()) {
    int vertex = current.index();
    bool outcome = v[vertex - 1];
    Target next = b.successor(vertex, outcome);
    p.edges.push_back({vertex, outcome, next});
    current = next;
  }
  p.terminal = current;
  return p;
}

std::string to_dot(const Bdd& b) {
  std::ostringstream out;
  auto node_id = [](Target t) {
    if (t.is_terminal()) return std::string(t.terminal_value() ? "t1" : "t0");
    return "n" + std::to_string(t.index());
  };
  out << "digraph bdd {\n";
  for (int v = 1; v <= b.condition_count(); ++v)
    out << "  n" << v << " [label=\"" << (b.negated(v) ? "!" : "")
        << "x" << v << "\"];\n";
  out << "  t0 [label=\"0\", shape=box];\n";
  out << "  t1 [label=\"1\", shape=box];\n";
  for (int v = 1; v <= b.condition_count(); ++v) {
    out << "  n" << v << " -> " << node_id(b.then_successor(v))
        << " [style=solid];\n";
    out << "  n" << v << " -> " << node_id(b.else_successor(v))
        << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace mcdc
