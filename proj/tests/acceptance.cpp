// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Built on the same helpers as the unit tests plus the installed CLI
// binary.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "mcdc/oracle.hpp"

using namespace mcdc;

namespace {

int failures = 0;

void report_line(int number, const std::string& title, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": "
            << title << "\n";
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string run_cli(const std::string& args, int& status) {
  std::string command = std::string(MCDC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return "";
  }
  std::string output;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    output.append(buf.data(), got);
  status = WEXITSTATUS(pclose(pipe));
  return output;
}

InputVector random_vector(std::mt19937_64& rng, int n) {
  InputVector v(n);
  for (int i = 0; i < n; ++i) v[i] = rng() & 1;
  return v;
}

// -- criteria ---------------------------------------------------------------

void criterion_1() {
  auto start = std::chrono::steady_clock::now();
  int status = 0;
  std::string out = run_cli("analyze \"(a||b)&&(c||d)&&e\"", status);
  bool ok = status == 0
            && out.find("(x2, x3)  x1                 10000") != std::string::npos
            && out.find("(x4, x5)  x3                 00100") != std::string::npos
            && out.find("(x4, 0)   x1, x2             11000") != std::string::npos
            && out.find("(x5, 0)   x1, x2, x3, x4     11110") != std::string::npos;
  ok = ok && seconds_since(start) < 1.0;
  report_line(1, "golden masking table for ((x1||x2)&&(x3||x4)&&x5)", ok);
}

void criterion_2() {
  corpus::Decision d = corpus::make("(a || b) && (c || d) && e");
  ExecutionRecord r = execute(d.bdd, d.table, {0, 1, 0, 0, 1});
  bool ok = r.pre_mask_f.to_string() == "10110"
            && r.pre_mask_t.to_string() == "01000"
            && recorded_outcomes(r) == CoveredOutcomes{{3, false}, {4, false}};
  report_line(2, "golden execution of vector (0 1 0 0 1)", ok);
}

void criterion_3() {
  corpus::Decision d = corpus::make("a || b || c");
  bool ok = d.table.mask(3, true).members() == std::vector<int>{1, 2}
            && d.table.mask(2, true).members() == std::vector<int>{1};
  report_line(3, "golden 3-OR masking entries (x3,1)~{x1,x2}, (x2,1)~{x1}", ok);
}

void criterion_4() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (const Expr& raw : corpus::structural_corpus(4)) {
    corpus::Decision d = corpus::make(raw);
    ok = ok && differential_check(d.expr, d.bdd, d.table,
                                  corpus::all_vectors(d.expr.condition_count))
                   .empty();
  }
  for (int i = 0; i < 1000 && ok; ++i) {
    int n = 1 + i % 10;
    corpus::Decision d = corpus::make(random_expr(1000 + i, n));
    ok = differential_check(d.expr, d.bdd, d.table, corpus::all_vectors(n))
             .empty();
  }
  ok = ok && seconds_since(start) < 60.0;
  report_line(4, "instrumentation equals flip oracle on the full corpus", ok);
}

void criterion_5() {
  bool ok = true;
  for (const Expr& raw : corpus::structural_corpus(4))
    ok = ok && validate(corpus::make(raw).bdd).empty();

  std::mt19937_64 rng(5);
  int pairs = 0;
  while (pairs < 100000 && ok) {
    corpus::Decision d = corpus::make(random_expr(rng(), 1 + rng() % 10));
    ok = ok && validate(d.bdd).empty();
    for (int j = 0; j < 50 && pairs < 100000; ++j, ++pairs) {
      InputVector v = random_vector(rng, d.expr.condition_count);
      Path p = path(d.bdd, v);
      ok = ok && p.terminal.terminal_value() == evaluate(d.expr, v);
      for (std::size_t i = 1; i < p.edges.size(); ++i)
        ok = ok && p.edges[i].source > p.edges[i - 1].source;
    }
  }
  report_line(5, "structural invariants over 1e5 randomized pairs", ok);
}

void criterion_6() {
  bool ok = true;
  for (int i = 0; i < 1000 && ok; ++i) {
    std::string text = random_expr(6000 + i, 1 + i % 10);
    corpus::Decision d = corpus::make(text);
    corpus::Decision nd = corpus::make("!(" + text + ")");
    ok = nd.expr.condition_count == d.expr.condition_count;
    auto swap_terminal = [](Target t) {
      return t.is_terminal() ? Target::terminal(!t.terminal_value()) : t;
    };
    for (int v = 1; v <= d.bdd.condition_count() && ok; ++v) {
      bool flipped = nd.bdd.negated(v) != d.bdd.negated(v);
      Target expect_then = swap_terminal(
          flipped ? d.bdd.else_successor(v) : d.bdd.then_successor(v));
      Target expect_else = swap_terminal(
          flipped ? d.bdd.then_successor(v) : d.bdd.else_successor(v));
      ok = nd.bdd.then_successor(v) == expect_then
           && nd.bdd.else_successor(v) == expect_else;
    }
  }
  report_line(6, "De Morgan isomorphism for 1000 negated expressions", ok);
}

void criterion_7() {
  bool ok = true;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500 && ok; ++i) {
    corpus::Decision d = corpus::make(random_expr(rng(), 1 + rng() % 8));
    CoverageAccumulator whole(d.bdd), left(d.bdd), right(d.bdd);
    int suite_size = 1 + static_cast<int>(rng() % 12);
    for (int j = 0; j < suite_size; ++j) {
      ExecutionRecord r =
          execute(d.bdd, d.table, random_vector(rng, d.expr.condition_count));
      whole.add(r);
      (rng() & 1 ? left : right).add(r);
    }
    ok = merge(left, right) == whole;
  }
  report_line(7, "merged split accumulators equal the single pass (500 cases)", ok);
}

void criterion_8() {
  bool ok = true;
  auto lower_bound = [](int n) {
    return static_cast<std::size_t>(std::ceil(2.0 * std::sqrt(n)));
  };
  for (const Expr& raw : corpus::structural_corpus(4)) {
    corpus::Decision d = corpus::make(raw);
    int n = d.expr.condition_count;
    CoveredOutcomes reachable;
    for (const InputVector& v : corpus::all_vectors(n))
      for (auto o : flip_covered(d.expr, d.bdd, v)) reachable.insert(o);
    SuiteResult s = generate_suite(d.expr, d.bdd, d.table);
    if (reachable.size() == 2 * static_cast<std::size_t>(n)) {
      ok = ok && s.complete && s.vectors.size() >= lower_bound(n);
    } else {
      ok = ok && !s.complete;
    }
  }
  for (int n = 2; n <= 10 && ok; ++n) {
    for (const char* op : {"&&", "||"}) {
      corpus::Decision d = corpus::make(corpus::chain(n, op));
      SuiteResult s = generate_suite(d.expr, d.bdd, d.table);
      ok = ok && s.complete
           && s.vectors.size() <= static_cast<std::size_t>(n) + 1
           && s.vectors.size() >= lower_bound(n);
    }
  }
  report_line(8, "generated suites complete and within the size bounds", ok);
}

void criterion_9() {
  bool ok = true;
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200 && ok; ++i) {
    // Single-operator chains with random polarities lower to tree BDDs.
    int n = 1 + static_cast<int>(rng() % 10);
    std::string op = (rng() & 1) ? "&&" : "||";
    std::string text;
    for (int c = 1; c <= n; ++c) {
      if (c > 1) text += " " + op + " ";
      if (rng() % 4 == 0) text += "!";
      text += "c" + std::to_string(c);
    }
    corpus::Decision d = corpus::make(text);
    for (Target pt : pseudo_terminals(d.bdd)) ok = ok && pt.is_terminal();

    // Random suite grown until it covers every edge.
    std::set<std::pair<int, bool>> edges;
    CoveredOutcomes covered;
    auto vectors = corpus::all_vectors(n);
    std::shuffle(vectors.begin(), vectors.end(), rng);
    for (const InputVector& v : vectors) {
      if (edges.size() == 2 * static_cast<std::size_t>(n)) break;
      Path p = path(d.bdd, v);
      bool adds = false;
      for (const Edge& e : p.edges)
        if (!edges.count({e.source, e.outcome})) adds = true;
      if (!adds) continue;
      for (const Edge& e : p.edges) edges.insert({e.source, e.outcome});
      for (auto o : flip_covered(d.expr, d.bdd, v)) covered.insert(o);
    }
    ok = ok && edges.size() == 2 * static_cast<std::size_t>(n)
         && covered.size() == 2 * static_cast<std::size_t>(n);
  }
  report_line(9, "edge coverage implies MC/DC on 200 tree-BDD decisions", ok);
}

void criterion_10() {
  bool rejected = false;
  try {
    corpus::make(corpus::chain(65, "&&"));
  } catch (const TooManyConditions&) {
    rejected = true;
  }

  auto start = std::chrono::steady_clock::now();
  corpus::Decision d = corpus::make(corpus::chain(64, "&&"));
  std::mt19937_64 rng(10);
  CoverageAccumulator acc(d.bdd);
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    InputVector v = random_vector(rng, 64);
    ExecutionRecord r = execute(d.bdd, d.table, v);
    ok = ok && recorded_outcomes(r) == flip_covered(d.expr, d.bdd, v);
    acc.add(r);
  }
  ok = ok && rejected && seconds_since(start) < 1.0;
  report_line(10, "65 conditions rejected, 64-condition chain runs in time", ok);
}

} // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
