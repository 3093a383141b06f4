#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mcdc/oracle.hpp"
#include "mcdc/vectors.hpp"

namespace {

struct Decision {
  mcdc::IndexedExpr expr;
  mcdc::Bdd bdd;
  mcdc::MaskingTable table;
};

Decision analyze_expression(const std::string& text) {
  mcdc::IndexedExpr e = mcdc::normalize(mcdc::parse(text));
  mcdc::Bdd b = mcdc::lower(e);
  return {e, b, mcdc::build_table(b)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string vertex_name(const mcdc::Bdd& b, int v) {
  return (b.negated(v) ? "!x" : "x") + std::to_string(v);
}

int cmd_analyze(const std::string& text) {
  Decision d = analyze_expression(text);
  std::cout << "decision: " << mcdc::to_string(d.expr) << "\n";
  std::cout << "conditions: " << d.expr.condition_count << "\n";
  std::cout << "bdd:\n";
  for (int v = 1; v <= d.bdd.condition_count(); ++v)
    std::cout << "  " << vertex_name(d.bdd, v) << ": then -> "
              << d.bdd.then_successor(v).name() << ", else -> "
              << d.bdd.else_successor(v).name() << "\n";
  std::cout << "pseudo-terminals:";
  for (mcdc::Target t : mcdc::pseudo_terminals(d.bdd))
    std::cout << " " << t.name();
  std::cout << "\n";
  std::cout << "masking table:\n" << mcdc::render_table(d.bdd, d.table);
  return 0;
}

int cmd_dot(const std::string& text) {
  Decision d = analyze_expression(text);
  std::cout << mcdc::to_dot(d.bdd);
  return 0;
}

int cmd_run(const std::string& text, const std::string& vectors_path) {
  Decision d = analyze_expression(text);
  auto vectors = mcdc::parse_vectors(read_file(vectors_path),
                                     d.expr.condition_count);
  mcdc::CoverageAccumulator acc(d.bdd);
  for (const auto& v : vectors) acc.add(mcdc::execute(d.bdd, d.table, v));
  mcdc::CoverageReport r = mcdc::report(d.expr, d.bdd, acc);
  std::cout << mcdc::render_report(r);
  return r.independence_bits == r.edge_total ? 0 : 2;
}

void print_outcomes(std::ostream& out, const mcdc::CoveredOutcomes& outcomes) {
  out << "{";
  bool first = true;
  for (auto [index, value] : outcomes) {
    if (!first) out << ", ";
    first = false;
    out << "x" << index << "=" << (value ? 1 : 0);
  }
  out << "}";
}

int cmd_check(const std::string& text, const std::string& vectors_path,
              bool exhaustive) {
  Decision d = analyze_expression(text);
  std::vector<mcdc::Mismatch> mismatches;
  if (!vectors_path.empty()) {
    auto vectors = mcdc::parse_vectors(read_file(vectors_path),
                                       d.expr.condition_count);
    mismatches = mcdc::differential_check(d.expr, d.bdd, d.table, vectors);
  } else {
    (void)exhaustive;  // exhaustive for N <= 20 either way
    mismatches = mcdc::differential_check(d.expr);
  }
  for (const auto& m : mismatches) {
    std::cout << "mismatch on";
    for (bool bit : m.vector) std::cout << " " << (bit ? 1 : 0);
    std::cout << ": oracle ";
    print_outcomes(std::cout, m.expected);
    std::cout << ", instrumentation ";
    print_outcomes(std::cout, m.actual);
    std::cout << "\n";
  }
  std::cout << mismatches.size() << " mismatches\n";
  return mismatches.empty() ? 0 : 2;
}

int cmd_generate(const std::string& text, const std::string& out_path) {
  Decision d = analyze_expression(text);
  mcdc::SuiteResult suite = mcdc::generate_suite(d.expr, d.bdd, d.table);
  std::string rendered = mcdc::format_vectors(suite.vectors);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << rendered;
  }
  if (!suite.complete) {
    std::cerr << "warning: full coverage unreachable, uncovered outcomes: ";
    print_outcomes(std::cerr, suite.uncovered);
    std::cerr << "\n";
    return 2;
  }
  return 0;
}

int cmd_fuzz(int conditions, int iterations, std::uint64_t seed) {
  int failures = 0;
  for (int i = 0; i < iterations; ++i) {
    std::string text = mcdc::random_expr(seed + i, conditions);
    mcdc::IndexedExpr e = mcdc::normalize(mcdc::parse(text));
    auto mismatches = mcdc::differential_check(e);
    if (!mismatches.empty()) {
      ++failures;
      std::cout << "FAIL (seed " << seed + i << "): " << text << "\n";
    }
  }
  std::cout << iterations << " iterations, " << failures << " failures\n";
  return failures == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Masking MC/DC analysis for Boolean decisions"};
  app.require_subcommand(1);

  std::string expr_text, vectors_path, out_path;
  bool exhaustive = false;
  int conditions = 6, iterations = 100;
  std::uint64_t seed = 0;

  auto* analyze = app.add_subcommand("analyze", "Print BDD and masking table");
  analyze->add_option("expr", expr_text, "decision expression")->required();

  auto* dot = app.add_subcommand("dot", "Print the BDD as Graphviz DOT");
  dot->add_option("expr", expr_text, "decision expression")->required();

  auto* run = app.add_subcommand("run", "Execute test vectors and report coverage");
  run->add_option("expr", expr_text, "decision expression")->required();
  run->add_option("--vectors", vectors_path, "vector file")->required();

  auto* check = app.add_subcommand("check", "Differential check against the flip oracle");
  check->add_option("expr", expr_text, "decision expression")->required();
  auto* check_vec = check->add_option("--vectors", vectors_path, "vector file");
  check->add_flag("--exhaustive", exhaustive, "check all 2^N vectors")
      ->excludes(check_vec);

  auto* generate = app.add_subcommand("generate", "Generate an oracle-verified suite");
  generate->add_option("expr", expr_text, "decision expression")->required();
  generate->add_option("--out", out_path, "output vector file");

  auto* fuzz = app.add_subcommand("fuzz", "Random differential testing");
  fuzz->add_option("--conditions", conditions, "conditions per expression");
  fuzz->add_option("--iterations", iterations, "number of expressions");
  fuzz->add_option("--seed", seed, "base seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(expr_text);
    if (app.got_subcommand(dot)) return cmd_dot(expr_text);
    if (app.got_subcommand(run)) return cmd_run(expr_text, vectors_path);
    if (app.got_subcommand(check)) return cmd_check(expr_text, vectors_path, exhaustive);
    if (app.got_subcommand(generate)) return cmd_generate(expr_text, out_path);
    if (app.got_subcommand(fuzz)) return cmd_fuzz(conditions, iterations, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
