#include <doctest.h>

#include "corpus.hpp"
#include "mcdc/bdd.hpp"
#include "mcdc/oracle.hpp"

using namespace mcdc;

namespace {

const Target kT0 = Target::terminal(false);
const Target kT1 = Target::terminal(true);

} // namespace

TEST_CASE("lower a two-condition disjunction") {
  corpus::Decision d = corpus::make("a || b");
  CHECK(d.bdd.then_successor(1) == kT1);
  CHECK(d.bdd.else_successor(1) == Target::vertex(2));
  CHECK(d.bdd.then_successor(2) == kT1);
  CHECK(d.bdd.else_successor(2) == kT0);
}

TEST_CASE("lower a single condition") {
  corpus::Decision d = corpus::make("a");
  CHECK(d.bdd.then_successor(1) == kT1);
  CHECK(d.bdd.else_successor(1) == kT0);
}

TEST_CASE("lower gives embedded subexpressions shared continuations") {
  // x4 and terminal 1 both end up with in-degree >= 2.
  corpus::Decision d = corpus::make("a || b && c || e");
  auto in_degree = [&](Target t) {
    int deg = 0;
    for (int v = 1; v <= d.bdd.condition_count(); ++v) {
      if (d.bdd.then_successor(v) == t) ++deg;
      if (d.bdd.else_successor(v) == t) ++deg;
    }
    return deg;
  };
  CHECK(in_degree(Target::vertex(4)) >= 2);
  CHECK(in_degree(kT1) >= 2);
}

TEST_CASE("lower records leaf polarity") {
  corpus::Decision d = corpus::make("!a && b");
  CHECK(d.bdd.negated(1));
  CHECK_FALSE(d.bdd.negated(2));
}

TEST_CASE("validate accepts lowered corpus BDDs") {
  for (const Expr& raw : corpus::structural_corpus(4))
    CHECK(validate(corpus::make(raw).bdd).empty());
}

TEST_CASE("validate flags broken structures") {
  Bdd redundant(1, {{kT0, kT0}});
  auto v1 = validate(redundant);
  REQUIRE(v1.size() == 1);
  CHECK(v1[0] == Violation{Violation::Rule::RedundantTest, 1});

  Bdd unordered(2, {{Target::vertex(2), kT0}, {Target::vertex(1), kT1}});
  auto v2 = validate(unordered);
  REQUIRE(v2.size() == 1);
  CHECK(v2[0] == Violation{Violation::Rule::NotOrdered, 2});

  Bdd dangling(2, {{Target::vertex(2), kT0}, {Target::vertex(9), kT1}});
  auto v3 = validate(dangling);
  REQUIRE(v3.size() == 1);
  CHECK(v3[0] == Violation{Violation::Rule::DanglingPath, 2});

  Bdd unreachable(3, {{kT1, kT0}, {kT1, kT0}, {kT1, kT0}});
  auto v4 = validate(unreachable);
  REQUIRE(v4.size() == 2);
  CHECK(v4[0] == Violation{Violation::Rule::Unreachable, 2});
  CHECK(v4[1] == Violation{Violation::Rule::Unreachable, 3});
}

TEST_CASE("path follows the worked five-condition example") {
  corpus::Decision d = corpus::make("(a || b) && (c || d) && e");
  Path p = path(d.bdd, {0, 1, 0, 0, 1});
  REQUIRE(p.edges.size() == 4);
  CHECK(p.edges[0] == Edge{1, false, Target::vertex(2)});
  CHECK(p.edges[1] == Edge{2, true, Target::vertex(3)});
  CHECK(p.edges[2] == Edge{3, false, Target::vertex(4)});
  CHECK(p.edges[3] == Edge{4, false, kT0});
  CHECK(p.terminal == kT0);
}

TEST_CASE("path takes shortcut edges") {
  corpus::Decision d = corpus::make("a || b");
  Path p = path(d.bdd, {1, 0});
  REQUIRE(p.edges.size() == 1);
  CHECK(p.edges[0] == Edge{1, true, kT1});

  corpus::Decision one = corpus::make("a");
  Path q = path(one.bdd, {1});
  REQUIRE(q.edges.size() == 1);
  CHECK(q.terminal == kT1);

  CHECK_THROWS_AS(path(d.bdd, {1}), LengthMismatch);
}

TEST_CASE("path agrees with evaluate and stays ordered") {
  for (const Expr& raw : corpus::structural_corpus(4)) {
    corpus::Decision d = corpus::make(raw);
    for (const InputVector& v : corpus::all_vectors(d.expr.condition_count)) {
      Path p = path(d.bdd, v);
      CHECK(p.terminal.terminal_value() == evaluate(d.expr, v));
      for (std::size_t i = 1; i < p.edges.size(); ++i)
        CHECK(p.edges[i].source > p.edges[i - 1].source);
    }
  }
}

TEST_CASE("every vertex lies on some path") {
  for (int seed = 0; seed < 50; ++seed) {
    corpus::Decision d = corpus::make(random_expr(seed, 1 + seed % 8));
    std::vector<bool> seen(d.expr.condition_count + 1, false);
    for (const InputVector& v : corpus::all_vectors(d.expr.condition_count))
      for (const Edge& e : path(d.bdd, v).edges) seen[e.source] = true;
    for (int i = 1; i <= d.expr.condition_count; ++i) CHECK(seen[i]);
  }
}

TEST_CASE("negating the decision flips terminals and branch directions") {
  for (int seed = 0; seed < 100; ++seed) {
    std::string text = random_expr(seed, 1 + seed % 8);
    corpus::Decision d = corpus::make(text);
    corpus::Decision nd = corpus::make("!(" + text + ")");
    REQUIRE(nd.expr.condition_count == d.expr.condition_count);
    auto transform = [](Target t) {
      if (!t.is_terminal()) return t;
      return Target::terminal(!t.terminal_value());
    };
    for (int v = 1; v <= d.bdd.condition_count(); ++v) {
      bool flipped = nd.bdd.negated(v) != d.bdd.negated(v);
      CHECK(flipped);  // a whole-decision negation reaches every leaf
      CHECK(nd.bdd.then_successor(v) == transform(d.bdd.else_successor(v)));
      CHECK(nd.bdd.else_successor(v) == transform(d.bdd.then_successor(v)));
    }
  }
}

TEST_CASE("to_dot structure and determinism") {
  corpus::Decision one = corpus::make("a");
  std::string dot = to_dot(one.bdd);
  CHECK(dot.find("n1 [label=\"x1\"]") != std::string::npos);
  CHECK(dot.find("t0 [label=\"0\", shape=box]") != std::string::npos);
  CHECK(dot.find("n1 -> t1 [style=solid]") != std::string::npos);
  CHECK(dot.find("n1 -> t0 [style=dashed]") != std::string::npos);

  corpus::Decision orx = corpus::make("a || b");
  std::string dot2 = to_dot(orx.bdd);
  CHECK(dot2.find("n1 -> n2 [style=dashed]") != std::string::npos);
  CHECK(to_dot(orx.bdd) == dot2);

  corpus::Decision neg = corpus::make("!a");
  CHECK(to_dot(neg.bdd).find("label=\"!x1\"") != std::string::npos);
}
