#include "mcdc/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "mcdc/errors.hpp"

namespace mcdc {

namespace {

// Three-valued condition assignment: fixed to an outcome, or free.
enum class Tri : unsigned char { False, True, Free };

struct Reach {
  bool can_false;
  bool can_true;
};

// Which decision values are reachable for some choice of the free conditions.
// Condition occurrences are independent, so children combine pointwise.
Reach reachable(const IndexedExpr::Node& n, const std::vector<Tri>& vals) {
  using Kind = IndexedExpr::Node::Kind;
  switch (n.kind) {
  case Kind::Condition: {
    Tri t = vals[n.index - 1];
    return {t != Tri::True, t != Tri::False};
  }
  case Kind::Conjunction: {
    Reach r{false, true};
    for (const auto& c : n.children) {
      Reach cr = reachable(c, vals);
      r.can_false = r.can_false || cr.can_false;
      r.can_true = r.can_true && cr.can_true;
    }
    return r;
  }
  case Kind::Disjunction: {
    Reach r{true, false};
    for (const auto& c : n.children) {
      Reach cr = reachable(c, vals);
      r.can_false = r.can_false && cr.can_false;
      r.can_true = r.can_true || cr.can_true;
    }
    return r;
  }
  }
  return {false, false};
}

} // namespace

CoveredOutcomes flip_covered(const IndexedExpr& e, const Bdd& b,
                             const InputVector& v) {
  Path p = path(b, v);
  bool base = p.terminal.terminal_value();
  // Conditions skipped by short circuiting are unconstrained; only the
  // evaluated ones are pinned to their outcomes.
  std::vector<Tri> vals(e.condition_count, Tri::Free);
  for (const Edge& edge : p.edges)
    vals[edge.source - 1] = edge.outcome ? Tri::True : Tri::False;
  CoveredOutcomes out;
  for (const Edge& edge : p.edges) {
    bool outcome = v[edge.source - 1];
    vals[edge.source - 1] = outcome ? Tri::False : Tri::True;
    Reach r = reachable(e.root, vals);
    if (base ? r.can_false : r.can_true) out.insert({edge.source, outcome});
    vals[edge.source - 1] = outcome ? Tri::True : Tri::False;
  }
  return out;
}

CoveredOutcomes recorded_outcomes(const ExecutionRecord& r) {
  CoveredOutcomes out;
  for (int i : r.post_mask_t.members()) out.insert({i, true});
  for (int i : r.post_mask_f.members()) out.insert({i, false});
  return out;
}

namespace {

constexpr int kExhaustiveLimit = 20;
constexpr int kSampleCount = 4096;

InputVector from_number(std::uint64_t u, int n) {
  // Condition 1 is the most significant position.
  InputVector v(n);
  for (int i = 0; i < n; ++i) v[i] = (u >> (n - 1 - i)) & 1;
  return v;
}

TestSuite candidate_vectors(int n) {
  TestSuite out;
  if (n <= kExhaustiveLimit) {
    std::uint64_t total = std::uint64_t{1} << n;
    out.reserve(total);
    for (std::uint64_t u = 0; u < total; ++u) out.push_back(from_number(u, n));
  } else {
    std::mt19937_64 rng(0x6d63646373756974ull);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < kSampleCount; ++i)
      seen.insert(rng() & ((n == 64) ? ~std::uint64_t{0}
                                     : ((std::uint64_t{1} << n) - 1)));
    for (std::uint64_t u : seen) out.push_back(from_number(u, n));
  }
  return out;
}

} // namespace

std::vector<Mismatch> differential_check(const IndexedExpr& e, const Bdd& b,
                                         const MaskingTable& m,
                                         const TestSuite& vectors) {
  std::vector<Mismatch> out;
  for (const InputVector& v : vectors) {
    CoveredOutcomes expected = flip_covered(e, b, v);
    CoveredOutcomes actual = recorded_outcomes(execute(b, m, v));
    if (expected != actual) out.push_back({v, expected, actual});
  }
  return out;
}

std::vector<Mismatch> differential_check(const IndexedExpr& e) {
  Bdd b = lower(e);
  MaskingTable m = build_table(b);
  return differential_check(e, b, m, candidate_vectors(e.condition_count));
}

SuiteResult generate_suite(const IndexedExpr& e, const Bdd& b,
                           const MaskingTable& m) {
  (void)m;  // scoring goes through the oracle, not the instrumented runtime
  const int n = e.condition_count;
  TestSuite candidates = candidate_vectors(n);

  // (post-mask t, f) contribution per candidate; the instrumented runtime and
  // the flip oracle agree (differential_check), but score with the oracle so
  // the suite is correct even against a buggy table.
  struct Scored {
    ConditionMask t, f;
  };
  std::vector<Scored> contributions;
  contributions.reserve(candidates.size());
  for (const InputVector& v : candidates) {
    Scored s{ConditionMask(n), ConditionMask(n)};
    for (auto [index, outcome] : flip_covered(e, b, v))
      (outcome ? s.t : s.f).set(index);
    contributions.push_back(s);
  }

  SuiteResult result;
  ConditionMask got_t(n), got_f(n);
  const int target = 2 * n;
  while (got_t.count() + got_f.count() < target) {
    int best = -1;
    int best_gain = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      ConditionMask new_t = contributions[i].t;
      ConditionMask new_f = contributions[i].f;
      new_t.remove(got_t);
      new_f.remove(got_f);
      int gain = new_t.count() + new_f.count();
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) break;  // no candidate makes progress
    got_t.merge(contributions[best].t);
    got_f.merge(contributions[best].f);
    result.vectors.push_back(candidates[best]);
  }

  // Independent re-verification of the chosen suite.
  ConditionMask check_t(n), check_f(n);
  for (const InputVector& v : result.vectors)
    for (auto [index, outcome] : flip_covered(e, b, v))
      (outcome ? check_t : check_f).set(index);
  for (int i = 1; i <= n; ++i) {
    if (!check_t.test(i)) result.uncovered.insert({i, true});
    if (!check_f.test(i)) result.uncovered.insert({i, false});
  }
  result.complete = result.uncovered.empty();
  return result;
}

namespace {

struct ExprGen {
  std::mt19937_64 rng;
  int next_label = 1;

  std::string gen(int leaves) {
    if (leaves == 1) {
      std::string leaf;
      if (rng() % 4 == 0) leaf += '!';
      leaf += "c" + std::to_string(next_label++);
      return leaf;
    }
    int left = 1 + static_cast<int>(rng() % (leaves - 1));
    const char* op = (rng() % 2 == 0) ? " && " : " || ";
    std::string lhs = gen(left);
    std::string rhs = gen(leaves - left);
    return "(" + lhs + op + rhs + ")";
  }
};

} // namespace

std::string random_expr(std::uint64_t seed, int n_conditions) {
  if (n_conditions < 1 || n_conditions > 64)
    throw InvariantViolation("condition count out of range");
  ExprGen gen{std::mt19937_64(seed * 0x9e3779b97f4a7c15ull
                              + static_cast<std::uint64_t>(n_conditions))};
  return gen.gen(n_conditions);
}

} // namespace mcdc
