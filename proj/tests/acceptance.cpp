// Copyright 2026 The comsoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion. Expected values for the
// worked examples are fixed; everything else is checked against the
// independent brute-force oracles in test_support.hpp.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "comsoc/hedonic.hpp"
#include "comsoc/multiwinner.hpp"
#include "comsoc/oracles.hpp"
#include "comsoc/profile.hpp"
#include "worked_examples.hpp"
#include "test_support.hpp"

using namespace comsoc;

namespace {

// Pinned limits.
constexpr double kExampleSeconds = 1.0;
constexpr double kCrossSolverSeconds = 60.0;
constexpr double kColorCodingDelta = 1e-3;
constexpr double kAbsentDisagreementRate = 0.01;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Check {
  Outcome& out;
  void operator()(bool ok, const std::string& what) {
    if (ok) return;
    if (out.pass) out.detail = what;
    out.pass = false;
  }
};

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
  return s + "}";
}

// Optimal committees of size k as found by scanning every committee with the
// library's objective, cross-checked against the independent oracle.
std::pair<Rational, std::set<std::vector<int>>> optima(const PreferenceProfile& p, Rule rule, int k, Check& check) {
  std::optional<Rational> best;
  std::set<std::vector<int>> at;
  for (const auto& w : support::subsets(p.num_alternatives(), k)) {
    Rational v = committee_objective(p, rule, w);
    check(v == support::brute_objective(p, rule, w), "objective mismatch on " + join(w));
    if (!best || better_objective(rule, v, *best)) {
      best = v;
      at.clear();
    }
    if (v == *best) at.insert(w);
  }
  return {*best, at};
}

Outcome linear_example() {
  Outcome o;
  Check check{o};
  auto p = fixtures::rules_linear();
  auto [monroe, mw] = optima(p, Rule::monroe, 2, check);
  check(monroe == Rational(3), "Monroe optimum " + monroe.str());
  check(mw == std::set<std::vector<int>>{{1, 3}, {2, 3}}, "Monroe optimal committees differ");
  auto [cc, cw] = optima(p, Rule::cc, 2, check);
  check(cc == Rational(0), "CC optimum " + cc.str());
  check(cw == std::set<std::vector<int>>{{0, 3}}, "CC optimal committees differ");
  MultiWinnerInstance in{p, 2, std::nullopt};
  check(solve_by_committee_enumeration(in, Rule::monroe).objective == Rational(3), "Monroe solver");
  check(solve_by_committee_enumeration(in, Rule::cc).committee == std::vector<int>{0, 3}, "CC solver");
  if (o.pass) o.detail = "Monroe 3 at {2,4},{3,4}; CC 0 at {1,4}";
  return o;
}

Outcome approval_example() {
  Outcome o;
  Check check{o};
  auto p = fixtures::rules_approval();
  for (Rule r : {Rule::monroe, Rule::cc}) {
    auto [v, w] = optima(p, r, 2, check);
    check(v == Rational(0), to_string(r) + " optimum " + v.str());
    check(w == std::set<std::vector<int>>{{0, 4}, {1, 4}}, to_string(r) + " optimal committees differ");
  }
  auto [mav, mw] = optima(p, Rule::mav, 2, check);
  check(mav == Rational(3), "MAV optimum " + mav.str());
  for (const auto& w : mw) check(w[0] == 0 || w[0] == 1, "MAV optimum without a1 or a2: " + join(w));
  auto [pav, pw] = optima(p, Rule::pav, 2, check);
  check(pav == Rational(6), "PAV optimum " + pav.str());
  check(pw == std::set<std::vector<int>>{{0, 1}}, "PAV optimum not unique at {1,2}");
  if (o.pass) o.detail = "Monroe/CC 0 at {1,5},{2,5}; MAV 3 (" + std::to_string(mw.size()) + " optima); PAV 6 at {1,2}";
  return o;
}

// Whether the single-agent witness (agent moving to target) passes the
// library's witness check.
bool has_witness(const HedonicInstance& h, const Partition& p, WitnessKind kind, int agent,
                 const std::vector<int>& target) {
  return check_witness(h, p, Witness{kind, {agent}, target});
}

Outcome fa_example() {
  Outcome o;
  Check check{o};
  auto h = fixtures::friends_fa();
  auto grand = Partition::grand(4);
  for (Concept c : {Concept::nash, Concept::individual, Concept::core, Concept::strict_core})
    check(!verify(h, grand, c), "grand coalition fails " + to_string(c));
  Partition p(4, {{0, 1, 2}, {3}});
  check(!verify(h, p, Concept::strict_core), "{1,2,3},{4} fails strict core");
  check(!support::brute_blocking(h, p, true), "oracle finds a weakly blocking coalition");
  auto w = verify(h, p, Concept::nash);
  check(w.has_value(), "{1,2,3},{4} passes Nash");
  check(has_witness(h, p, WitnessKind::envy, 3, {0, 1, 2}), "agent 4 envy witness rejected");
  if (o.pass)
    o.detail = "agent 4 envying {1,2,3} is a valid Nash witness; lexicographic first is agent " +
               std::to_string(w->agents[0] + 1) + " -> " + join(*w->target);
  return o;
}

Outcome ea_example() {
  Outcome o;
  Check check{o};
  auto h = fixtures::friends_ea();
  check(!brute_force_hedonic(h, Concept::nash), "a Nash-stable partition exists");
  check(!brute_force_hedonic(h, Concept::strict_core), "a strictly core-stable partition exists");
  int nash = 0, strict = 0;
  support::each_partition(4, [&](const Partition& q) {
    nash += !verify(h, q, Concept::nash);
    strict += !support::brute_blocking(h, q, true);
  });
  check(nash == 0 && strict == 0, "partition scan finds a stable partition");
  Partition p(4, {{0, 1}, {2}, {3}});
  check(!verify(h, p, Concept::core), "{1,2},{3},{4} fails core");
  check(!verify(h, p, Concept::individual), "{1,2},{3},{4} fails individual stability");
  auto w = verify(h, p, Concept::strict_core);
  check(w && w->agents == std::vector<int>{0, 2}, "strict-core witness is not {1,3}");
  check(w && check_witness(h, p, *w), "strict-core witness rejected");
  if (o.pass) o.detail = "no Nash or strict-core partition; strict-core witness {1,3}";
  return o;
}

Outcome additive_example() {
  Outcome o;
  Check check{o};
  auto h = fixtures::additive_four();
  auto singles = Partition::singletons(4);
  check(!verify(h, singles, Concept::core), "singletons fail core");
  auto w = verify(h, singles, Concept::individual);
  check(w.has_value(), "singletons pass individual stability");
  check(has_witness(h, singles, WitnessKind::blocking_tuple, 1, {3}), "tuple (2,{4}) rejected");
  Partition p(4, {{0, 1, 3}, {2}});
  check(!verify(h, p, Concept::strict_core), "{1,2,4},{3} fails strict core");
  check(!verify(h, p, Concept::nash), "{1,2,4},{3} fails Nash");
  if (o.pass)
    o.detail = "(2,{4}) is a valid blocking tuple; lexicographic first is (" + std::to_string(w->agents[0] + 1) +
               "," + join(*w->target) + ")";
  return o;
}

Outcome cross_solver() {
  Outcome o;
  Check check{o};
  std::mt19937_64 rng(600);
  const auto start = std::chrono::steady_clock::now();
  int runs = 0;
  for (int t = 0; t < 200; ++t) {
    const int m = 2 + static_cast<int>(rng() % 7), n = 1 + static_cast<int>(rng() % 8);
    const int k = 1 + static_cast<int>(rng() % std::min(4, m));
    const Rule rule = static_cast<Rule>(rng() % 4);
    const bool linear = (rule == Rule::monroe || rule == Rule::cc) && rng() % 3 != 0;
    auto p = linear ? support::random_linear(rng, m, n)
                    : support::random_approval(rng, m, n, 1 + static_cast<int>(rng() % m));
    if (rule == Rule::monroe && n < k) continue;
    const std::string tag = " (instance " + std::to_string(t) + ", " + to_string(rule) + ")";
    MultiWinnerInstance in{p, k, std::nullopt};
    const Rational opt = support::brute_optimum(p, rule, k);
    auto e = solve_by_committee_enumeration(in, rule);
    check(e.objective == opt && verify_solution(in, e), "enumeration" + tag);
    ++runs;
    if (rule == Rule::cc) {
      auto s = solve_cc_by_voter_partition(in);
      check(s.objective == opt && verify_solution(in, s), "voter partition" + tag);
      ++runs;
      if (linear) {
        MultiWinnerInstance yes{p, k, opt}, no{p, k, opt - Rational(1)};
        auto y = solve_cc_xp_misrep(yes);
        check(y && y->objective == opt, "xp-misrep at the optimum" + tag);
        if (opt > Rational(0)) check(!solve_cc_xp_misrep(no), "xp-misrep below the optimum" + tag);
        ++runs;
      }
    }
    if (rule == Rule::pav) {
      MultiWinnerInstance yes{p, k, opt}, no{p, k, opt + Rational(1, 840)};
      auto y = solve_pav_score_xp(yes);
      check(y && y->objective == opt, "xp-score at the optimum" + tag);
      check(!solve_pav_score_xp(no), "xp-score above the optimum" + tag);
      auto kern = pav_kernelize(yes);
      if (kern.verdict == KernelVerdict::yes) {
        check(kern.witness->objective >= opt, "kernel witness" + tag);
      } else {
        auto r = solve_pav_score_xp(*kern.reduced_instance);
        check(r.has_value(), "kernel plus xp-score" + tag);
      }
      runs += 2;
    }
    if (rule == Rule::mav) {
      for (Structure st : {Structure::sp, Structure::sc}) {
        auto cert = deletion_distance(p, st, DeletionMode::alternatives, m);
        if (!cert) continue;
        auto s = solve_mav_with_deletion_set(in, cert->removed);
        check(s.objective == opt && verify_solution(in, s), "MAV with deletion set" + tag);
        ++runs;
        break;
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check(secs < kCrossSolverSeconds, "suite took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = std::to_string(runs) + " solver runs agree with the oracle";
  return o;
}

Outcome kernel_soundness() {
  Outcome o;
  Check check{o};
  std::mt19937_64 rng(700);
  int yes = 0, reduced = 0;
  for (int t = 0; t < 200; ++t) {
    const int m = 3 + static_cast<int>(rng() % 6), n = 2 + static_cast<int>(rng() % 7);
    const int k = 1 + static_cast<int>(rng() % std::min(4, m));
    auto p = support::random_approval(rng, m, n, 1 + static_cast<int>(rng() % 3));
    const Rational opt = support::brute_optimum(p, Rule::pav, k);
    static const Rational shifts[] = {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 3),
                                      Rational(1)};
    Rational s = opt + shifts[rng() % 6];
    if (s < Rational(0)) s = Rational(0);
    MultiWinnerInstance in{p, k, s};
    const bool truth = opt >= s;
    auto out = pav_kernelize(in);
    const std::string tag = " (instance " + std::to_string(t) + ")";
    if (out.verdict == KernelVerdict::yes) {
      ++yes;
      check(truth, "kernel says yes on a no-instance" + tag);
      check(out.witness && pav_score(p, out.witness->committee) >= s, "kernel witness below S" + tag);
    } else {
      ++reduced;
      const auto& r = *out.reduced_instance;
      const bool reduced_truth = support::brute_optimum(r.profile, Rule::pav, r.k) >= *r.bound;
      check(reduced_truth == truth, "reduced instance changes the answer" + tag);
    }
  }
  if (o.pass) o.detail = std::to_string(yes) + " yes verdicts, " + std::to_string(reduced) + " reduced, all sound";
  return o;
}

Outcome greedy_lemma() {
  Outcome o;
  std::mt19937_64 rng(800);
  int failures = 0;
  for (int t = 0; t < 500; ++t) {
    const int m = 2 + static_cast<int>(rng() % 9), n = 1 + static_cast<int>(rng() % 10);
    const int k = 1 + static_cast<int>(rng() % m);
    auto p = support::random_approval(rng, m, n, 1 + static_cast<int>(rng() % m), false);
    // S anywhere in (0, min(k, n)], fractional values included.
    const int cap = std::min(k, n);
    Rational s(1 + static_cast<std::int64_t>(rng() % (2 * cap)), 2);
    MultiWinnerInstance in{p, k, s};
    auto g = pav_greedy_small_score(in);
    if (!(support::brute_objective(p, Rule::pav, g.committee) >= s) ||
        static_cast<int>(g.committee.size()) != k)
      ++failures;
  }
  o.pass = failures == 0;
  o.detail = std::to_string(failures) + " failures in 500";
  return o;
}

Outcome identities() {
  Outcome o;
  std::mt19937_64 rng(900);
  int failures = 0;
  for (int t = 0; t < 1000; ++t) {
    const int m = 1 + static_cast<int>(rng() % 10), n = 1 + static_cast<int>(rng() % 10);
    const int k = 1 + static_cast<int>(rng() % m);
    auto p = support::random_approval(rng, m, n, m);
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> w(all.begin(), all.begin() + k);
    std::sort(w.begin(), w.end());
    std::vector<int> assignment(n);
    for (int& a : assignment) a = w[rng() % k];
    if (misrepresentation(p, Rule::cc, w, assignment) + approval_assignment_score(p, assignment) != n) ++failures;
    if (mav_distance(p, w) + mav_score(p, w) != m) ++failures;
  }
  o.pass = failures == 0;
  o.detail = std::to_string(failures) + " failures in 1000 samples";
  return o;
}

Outcome stability_lattice() {
  Outcome o;
  std::mt19937_64 rng(1000);
  int violations = 0, stable_nash = 0, stable_strict = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 6);
    HedonicInstance h;
    switch (rng() % 3) {
      case 0: h = support::random_additive(rng, n, 3, 0.6, rng() % 2 == 0); break;
      case 1: h = support::random_fe(rng, n, 0.35, HedonicModel::fa); break;
      default: h = support::random_fe(rng, n, 0.35, HedonicModel::ea); break;
    }
    // Half the pairs use a stable partition when one exists, so the
    // implications are exercised on their premises too.
    std::optional<Partition> p;
    if (t % 2) p = brute_force_hedonic(h, rng() % 2 ? Concept::nash : Concept::strict_core);
    if (!p) p = support::random_partition(rng, n);
    const bool nash = !verify(h, *p, Concept::nash);
    const bool is = !verify(h, *p, Concept::individual);
    const bool core = !verify(h, *p, Concept::core);
    const bool strict = !verify(h, *p, Concept::strict_core);
    stable_nash += nash;
    stable_strict += strict;
    if ((nash && !is) || (strict && !is) || (strict && !core)) ++violations;
  }
  o.pass = violations == 0;
  o.detail = std::to_string(violations) + " violations; " + std::to_string(stable_nash) + " Nash-stable and " +
             std::to_string(stable_strict) + " strictly core-stable pairs";
  return o;
}

Outcome scc_partition() {
  Outcome o;
  Check check{o};
  std::mt19937_64 rng(1100);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng() % 8);
    auto h = support::random_fe(rng, n, 0.05 + 0.05 * static_cast<double>(rng() % 8), HedonicModel::fa);
    auto p = fa_scc_partition(h);
    check(!support::brute_blocking(h, p, true), "weakly blocking coalition on instance " + std::to_string(t));
    check(!verify(h, p, Concept::strict_core), "verifier rejects instance " + std::to_string(t));
  }
  if (o.pass) o.detail = "100 instances strictly core stable";
  return o;
}

Outcome nash_dynamics() {
  Outcome o;
  Check check{o};
  std::mt19937_64 rng(1200);
  std::int64_t most = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng() % 8);
    auto h = support::random_additive(rng, n, 5, 0.6, true);
    std::int64_t umax = 0;
    for (auto [i, j, u] : h.utility_arcs()) umax = std::max<std::int64_t>(umax, std::llabs(u));
    auto res = nash_search_symmetric(h);
    const std::string tag = " on instance " + std::to_string(t);
    check(res.moves <= static_cast<std::int64_t>(n) * n * umax, "too many moves" + tag);
    for (std::size_t i = 1; i < res.welfare.size(); ++i)
      check(res.welfare[i] > res.welfare[i - 1], "welfare did not increase" + tag);
    // Nash stability from the definition: nobody prefers another coalition or solitude.
    for (int i = 0; i < n; ++i) {
      const auto here = support::brute_value(h, i, support::members(res.partition.coalition_of(i))).first;
      check(here >= 0, "agent prefers solitude" + tag);
      for (const auto& c : res.partition.coalitions()) {
        if (std::find(c.begin(), c.end(), i) != c.end()) continue;
        auto joined = c;
        joined.push_back(i);
        check(support::brute_value(h, i, joined).first <= here, "agent envies a coalition" + tag);
      }
    }
    most = std::max(most, res.moves);
  }
  if (o.pass) o.detail = "all stable; at most " + std::to_string(most) + " moves";
  return o;
}

Partition capped_partition(std::mt19937_64& rng, int n, int cap) {
  std::vector<int> agents(n);
  std::iota(agents.begin(), agents.end(), 0);
  std::shuffle(agents.begin(), agents.end(), rng);
  std::vector<std::vector<int>> blocks;
  for (std::size_t i = 0; i < agents.size();) {
    const int s = 1 + static_cast<int>(rng() % cap);
    blocks.emplace_back();
    for (int j = 0; j < s && i < agents.size(); ++j) blocks.back().push_back(agents[i++]);
  }
  return Partition(n, blocks);
}

Outcome color_coding() {
  Outcome o;
  std::mt19937_64 rng(1300);
  int tested = 0, false_witness = 0, absent = 0, found = 0, checks = 0;
  while (tested < 100) {
    const int n = 4 + static_cast<int>(rng() % 9);
    HedonicInstance h;
    Partition p;
    if (tested % 2) {
      std::tie(h, p) = support::cyclic_blocks_fa(rng, n, 4, 0.15);
    } else {
      h = support::random_fe(rng, n, 0.18, HedonicModel::fa);
      p = capped_partition(rng, n, 4);
    }
    if (p.kappa() > 4 || measure_parameters(h).feedback.size() > 3) continue;
    ++tested;
    for (auto mode : {BlockingMode::strict, BlockingMode::weak}) {
      ColorCodingOptions opt;
      opt.mode = mode;
      opt.delta = kColorCodingDelta;
      opt.seed = 2024;
      auto cc = fa_core_verify_colorcoded(h, p, opt);
      auto exact = fa_core_verify_bounded(h, p, mode);
      ++checks;
      if (cc) {
        ++found;
        if (!exact || !check_witness(h, p, *cc)) ++false_witness;
      } else if (exact) {
        ++absent;
      }
    }
  }
  const double rate = static_cast<double>(absent) / checks;
  o.pass = false_witness == 0 && rate <= kAbsentDisagreementRate;
  std::ostringstream s;
  s << checks << " checks on 100 instances, " << found << " witnesses, " << false_witness
    << " witness disagreements, absent rate " << rate;
  o.detail = s.str();
  return o;
}

bool brute_clique(const Graph& g, int h) {
  std::vector<std::uint32_t> adj(g.n, 0);
  for (auto [a, b] : g.edges) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  for (std::uint32_t s = 0; s < (1u << g.n); ++s) {
    if (__builtin_popcount(s) != h) continue;
    bool ok = true;
    for (int v = 0; v < g.n && ok; ++v)
      if (s >> v & 1u) ok = (adj[v] | (1u << v) | ~s) == ~0u;
    if (ok) return true;
  }
  return false;
}

Outcome reduction() {
  Outcome o;
  Check check{o};
  int cases = 0, yes = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : nonisomorphic_graphs(n))
      for (int h = 2; h <= 4 && h <= n; ++h) {
        auto in = clique_to_cc_instance(CliqueInput{g, h});
        const bool expected = brute_clique(g, h);
        const bool got = solve_cc_xp_misrep(in).has_value();
        check(got == expected, "disagreement on a " + std::to_string(n) + "-vertex graph, h=" + std::to_string(h));
        ++cases;
        yes += expected;
      }
  if (o.pass) o.detail = std::to_string(cases) + " (graph, h) cases, " + std::to_string(yes) + " with a clique";
  return o;
}

Outcome recognition() {
  Outcome o;
  Check check{o};
  std::mt19937_64 rng(1500);
  int sp = 0, sc = 0;
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + static_cast<int>(rng() % 6), n = 1 + static_cast<int>(rng() % 6);
    auto p = t % 2 ? support::random_linear(rng, m, n)
                   : support::random_approval(rng, m, n, 1 + static_cast<int>(rng() % m));
    const std::string tag = " on instance " + std::to_string(t);
    auto a = recognize_sp(p);
    auto b = support::brute_sp(p);
    check(a.has_value() == b.has_value(), "SP verdict" + tag);
    if (a) check(support::sp_along(p, a->order), "SP axis" + tag);
    auto c = recognize_sc(p);
    auto d = support::brute_sc(p);
    check(c.has_value() == d.has_value(), "SC verdict" + tag);
    if (c) check(support::sc_along(p, c->order), "SC axis" + tag);
    sp += a.has_value();
    sc += c.has_value();
  }
  if (o.pass) o.detail = std::to_string(sp) + " SP and " + std::to_string(sc) + " SC profiles of 200, all match";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
  double seconds;  // 0 = no time limit of its own
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "rule optima on the linear example", linear_example, kExampleSeconds},
      {2, "rule optima on the approval example", approval_example, kExampleSeconds},
      {3, "friend-appreciation example verifiers", fa_example, kExampleSeconds},
      {4, "enemy-aversion example verifiers", ea_example, kExampleSeconds},
      {5, "additive example verifiers", additive_example, kExampleSeconds},
      {6, "cross-solver equivalence", cross_solver, kCrossSolverSeconds},
      {7, "kernel soundness", kernel_soundness, 0},
      {8, "greedy small-score guarantee", greedy_lemma, 0},
      {9, "misrepresentation/score identities", identities, 0},
      {10, "stability implications", stability_lattice, 0},
      {11, "SCC partition is strictly core stable", scc_partition, 0},
      {12, "symmetric Nash dynamics", nash_dynamics, 0},
      {13, "color-coding agrees with bounded verifier", color_coding, 0},
      {14, "clique reduction correctness", reduction, 0},
      {15, "recognition against permutation search", recognition, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.seconds > 0 && secs >= c.seconds) {
      out.pass = false;
      out.detail += " (over the " + std::to_string(c.seconds) + " s limit)";
    }
    failed += !out.pass;
    std::printf("%s %2d %s: %s [%.3f s]\n", out.pass ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
