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

#include <algorithm>
#include <limits>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/successive_shortest_path_nonnegative_weights.hpp>
#include <boost/graph/find_flow_cost.hpp>

#include "mw_internal.hpp"

namespace comsoc {

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::monroe: return "monroe";
    case Rule::cc: return "cc";
    case Rule::mav: return "mav";
    case Rule::pav: return "pav";
  }
  return "?";
}

Rule parse_rule(const std::string& name) {
  if (name == "monroe") return Rule::monroe;
  if (name == "cc") return Rule::cc;
  if (name == "mav") return Rule::mav;
  if (name == "pav") return Rule::pav;
  throw DomainError("unknown rule '" + name + "'");
}

void MultiWinnerInstance::validate() const {
  const int m = profile.num_alternatives();
  if (k < 1 || k > m)
    throw DomainError("committee size " + std::to_string(k) + " outside [1, " +
                      std::to_string(m) + "]");
  if (bound && *bound < Rational(0)) throw DomainError("bound must be non-negative");
}

namespace detail {

void check_committee(const PreferenceProfile& profile, std::span<const int> committee) {
  std::vector<char> seen(profile.num_alternatives(), 0);
  for (int a : committee) {
    if (a < 0 || a >= profile.num_alternatives())
      throw DomainError("committee member " + std::to_string(a + 1) + " out of range");
    if (seen[a]) throw DomainError("committee lists alternative " + std::to_string(a + 1) + " twice");
    seen[a] = 1;
  }
}

}  // namespace detail

namespace {

// Cost of serving voter i by alternative a: rank for linear profiles,
// 0/1 for approve/disapprove otherwise.
std::int64_t serve_cost(const PreferenceProfile& p, int voter, int alt) {
  if (p.is_linear()) return p.rank(voter, alt);
  return p.approves(voter, alt) ? 0 : 1;
}

std::vector<int> sorted_copy(std::span<const int> committee) {
  std::vector<int> c(committee.begin(), committee.end());
  std::sort(c.begin(), c.end());
  return c;
}

// Proportional assignment as a min-cost flow. The window lower bound is
// enforced by pricing capacity beyond floor(n/k) with a penalty larger than any
// real assignment cost, so every optimum saturates the floor arcs first.
// allowed[i] restricts voter i to one committee position, or -1 for any.
std::optional<std::int64_t> monroe_flow_cost(const PreferenceProfile& p,
                                             const std::vector<int>& committee,
                                             const std::vector<int>& allowed) {
  using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
  using Graph = boost::adjacency_list<
      boost::vecS, boost::vecS, boost::directedS, boost::no_property,
      boost::property<boost::edge_capacity_t, long,
                      boost::property<boost::edge_residual_capacity_t, long,
                                      boost::property<boost::edge_reverse_t, Traits::edge_descriptor,
                                                      boost::property<boost::edge_weight_t, long>>>>>;
  const int n = p.num_voters();
  const int k = static_cast<int>(committee.size());
  const int lo = n / k;
  const int hi = (n + k - 1) / k;
  std::int64_t max_cost = p.is_linear() ? p.num_alternatives() : 1;
  const long penalty = static_cast<long>(max_cost * n + 1);

  Graph g(n + k + 2);
  const int s = n + k, t = n + k + 1;
  auto cap = boost::get(boost::edge_capacity, g);
  auto rev = boost::get(boost::edge_reverse, g);
  auto weight = boost::get(boost::edge_weight, g);
  auto add = [&](int u, int v, long c, long w) {
    auto e = boost::add_edge(u, v, g).first;
    auto r = boost::add_edge(v, u, g).first;
    cap[e] = c;
    cap[r] = 0;
    weight[e] = w;
    weight[r] = -w;
    rev[e] = r;
    rev[r] = e;
  };
  for (int i = 0; i < n; ++i) {
    add(s, i, 1, 0);
    for (int j = 0; j < k; ++j)
      if (allowed[i] < 0 || allowed[i] == j) add(i, n + j, 1, serve_cost(p, i, committee[j]));
  }
  for (int j = 0; j < k; ++j) {
    if (lo > 0) add(n + j, t, lo, 0);
    if (hi > lo) add(n + j, t, hi - lo, penalty);
  }
  boost::successive_shortest_path_nonnegative_weights(g, s, t);
  auto resid = boost::get(boost::edge_residual_capacity, g);
  long flow = 0;
  for (auto [it, end] = boost::out_edges(s, g); it != end; ++it) flow += cap[*it] - resid[*it];
  if (flow != n) return std::nullopt;
  long total = boost::find_flow_cost(g);
  long slack_units = n - static_cast<long>(k) * lo;
  // More penalty units than necessary means the floor could not be met.
  if (total >= penalty * (slack_units + 1)) return std::nullopt;
  return total - penalty * slack_units;
}

void require_monroe_size(const PreferenceProfile& p, std::size_t k) {
  if (k == 0) throw DomainError("empty committee");
  if (static_cast<std::size_t>(p.num_voters()) < k)
    throw DomainError("Monroe needs at least as many voters as committee members (n=" +
                      std::to_string(p.num_voters()) + ", k=" + std::to_string(k) + ")");
}

std::int64_t cc_cost(const PreferenceProfile& p, const std::vector<int>& committee,
                     std::vector<int>* assignment) {
  std::int64_t total = 0;
  if (assignment) assignment->assign(p.num_voters(), committee.empty() ? -1 : committee[0]);
  for (int i = 0; i < p.num_voters(); ++i) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int a : committee) {
      std::int64_t c = serve_cost(p, i, a);
      if (c < best) {
        best = c;
        if (assignment) (*assignment)[i] = a;
      }
    }
    total += best;
  }
  return total;
}

}  // namespace

std::int64_t misrepresentation(const PreferenceProfile& profile, Rule rule,
                               std::span<const int> committee, std::span<const int> assignment) {
  if (rule != Rule::monroe && rule != Rule::cc)
    throw ContractError("misrepresentation with an assignment is defined for Monroe and CC");
  detail::check_committee(profile, committee);
  if (static_cast<int>(assignment.size()) != profile.num_voters())
    throw DomainError("assignment covers " + std::to_string(assignment.size()) + " of " +
                      std::to_string(profile.num_voters()) + " voters");
  std::int64_t total = 0;
  for (int i = 0; i < profile.num_voters(); ++i) {
    if (std::find(committee.begin(), committee.end(), assignment[i]) == committee.end())
      throw DomainError("voter " + std::to_string(i + 1) + " is assigned outside the committee");
    total += serve_cost(profile, i, assignment[i]);
  }
  return total;
}

std::int64_t approval_assignment_score(const PreferenceProfile& profile,
                                       std::span<const int> assignment) {
  if (!profile.is_approval()) throw UnsupportedKind("score^A needs an approval profile");
  if (static_cast<int>(assignment.size()) != profile.num_voters())
    throw DomainError("assignment is not total");
  std::int64_t s = 0;
  for (int i = 0; i < profile.num_voters(); ++i)
    if (profile.approves(i, assignment[i])) ++s;
  return s;
}

std::int64_t mav_distance(const PreferenceProfile& profile, std::span<const int> committee) {
  if (!profile.is_approval()) throw UnsupportedKind("MAV needs an approval profile");
  detail::check_committee(profile, committee);
  std::int64_t worst = 0;
  for (int i = 0; i < profile.num_voters(); ++i) {
    std::int64_t inside = 0;
    for (int a : committee)
      if (profile.approves(i, a)) ++inside;
    std::int64_t d = static_cast<std::int64_t>(profile.approval_set(i).size()) - inside +
                     static_cast<std::int64_t>(committee.size()) - inside;
    worst = std::max(worst, d);
  }
  return worst;
}

std::int64_t mav_score(const PreferenceProfile& profile, std::span<const int> committee) {
  return profile.num_alternatives() - mav_distance(profile, committee);
}

Rational pav_score(const PreferenceProfile& profile, std::span<const int> committee) {
  if (!profile.is_approval()) throw UnsupportedKind("PAV needs an approval profile");
  detail::check_committee(profile, committee);
  std::vector<int> tally(committee.size() + 1, 0);
  for (int i = 0; i < profile.num_voters(); ++i) {
    int c = 0;
    for (int a : committee)
      if (profile.approves(i, a)) ++c;
    ++tally[c];
  }
  Rational total;
  for (std::size_t c = 1; c < tally.size(); ++c)
    if (tally[c] != 0) total += harmonic(static_cast<int>(c)) * Rational(tally[c]);
  return total;
}

std::vector<int> optimal_assignment(const PreferenceProfile& profile, Rule rule,
                                    std::span<const int> committee_in) {
  detail::check_committee(profile, committee_in);
  std::vector<int> committee = sorted_copy(committee_in);
  if (committee.empty()) throw DomainError("empty committee");
  if (rule == Rule::cc) {
    std::vector<int> a;
    cc_cost(profile, committee, &a);
    return a;
  }
  if (rule != Rule::monroe) throw ContractError("assignments exist for Monroe and CC only");
  require_monroe_size(profile, committee.size());
  const int n = profile.num_voters();
  std::vector<int> allowed(n, -1);
  const auto best = monroe_flow_cost(profile, committee, allowed);
  if (!best) throw Error("internal: no proportional assignment");
  // Fix voters one at a time to the smallest member that keeps the optimum.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < static_cast<int>(committee.size()); ++j) {
      allowed[i] = j;
      auto c = monroe_flow_cost(profile, committee, allowed);
      if (c && *c == *best) break;
    }
  }
  std::vector<int> a(n);
  for (int i = 0; i < n; ++i) a[i] = committee[allowed[i]];
  return a;
}

std::int64_t optimal_assignment_cost(const PreferenceProfile& profile, Rule rule,
                                     std::span<const int> committee_in) {
  std::vector<int> committee = sorted_copy(committee_in);
  if (committee.empty()) throw DomainError("empty committee");
  if (rule == Rule::cc) return cc_cost(profile, committee, nullptr);
  if (rule != Rule::monroe) throw ContractError("assignments exist for Monroe and CC only");
  require_monroe_size(profile, committee.size());
  auto c = monroe_flow_cost(profile, committee, std::vector<int>(profile.num_voters(), -1));
  if (!c) throw Error("internal: no proportional assignment");
  return *c;
}

Rational committee_objective(const PreferenceProfile& profile, Rule rule,
                             std::span<const int> committee) {
  switch (rule) {
    case Rule::monroe:
    case Rule::cc: return optimal_assignment_cost(profile, rule, committee);
    case Rule::mav: return mav_distance(profile, committee);
    case Rule::pav: return pav_score(profile, committee);
  }
  return 0;
}

CommitteeSolution make_solution(const PreferenceProfile& profile, Rule rule,
                                std::vector<int> committee) {
  std::sort(committee.begin(), committee.end());
  CommitteeSolution s;
  s.rule = rule;
  if (rule == Rule::monroe || rule == Rule::cc) {
    s.assignment = optimal_assignment(profile, rule, committee);
    s.objective = misrepresentation(profile, rule, committee, *s.assignment);
  } else {
    s.objective = committee_objective(profile, rule, committee);
  }
  s.committee = std::move(committee);
  return s;
}

bool better_objective(Rule rule, const Rational& objective, const Rational& incumbent) {
  return rule == Rule::pav ? objective > incumbent : objective < incumbent;
}

bool verify_solution(const MultiWinnerInstance& instance, const CommitteeSolution& solution) {
  const auto& p = instance.profile;
  try {
    if (static_cast<int>(solution.committee.size()) != instance.k) return false;
    detail::check_committee(p, solution.committee);
    bool wants_assignment = solution.rule == Rule::monroe || solution.rule == Rule::cc;
    if (wants_assignment != solution.assignment.has_value()) return false;
    if (wants_assignment) {
      const auto& a = *solution.assignment;
      Rational rho = misrepresentation(p, solution.rule, solution.committee, a);
      if (rho != solution.objective) return false;
      if (solution.rule == Rule::monroe) {
        const int n = p.num_voters(), k = instance.k;
        for (int member : solution.committee) {
          int load = static_cast<int>(std::count(a.begin(), a.end(), member));
          if (load < n / k || load > (n + k - 1) / k) return false;
        }
      }
      return true;
    }
    return committee_objective(p, solution.rule, solution.committee) == solution.objective;
  } catch (const Error&) {
    return false;
  }
}

namespace detail {

CommitteeEvaluator::CommitteeEvaluator(const PreferenceProfile& profile, Rule rule)
    : p_(profile), rule_(rule) {
  if ((rule == Rule::mav || rule == Rule::pav) && !profile.is_approval())
    throw UnsupportedKind(to_string(rule) + " needs an approval profile");
  if (rule == Rule::pav)
    for (int c = 0; c <= profile.num_alternatives(); ++c) harmonic_.push_back(harmonic(c));
  if (profile.is_approval() && profile.num_alternatives() <= 64)
    for (int i = 0; i < profile.num_voters(); ++i) {
      std::uint64_t bits = 0;
      for (int a : profile.approval_set(i)) bits |= std::uint64_t{1} << a;
      voter_bits_.push_back(bits);
    }
}

Rational CommitteeEvaluator::evaluate(const std::vector<int>& committee) const {
  switch (rule_) {
    case Rule::monroe:
    case Rule::cc: return optimal_assignment_cost(p_, rule_, committee);
    case Rule::mav:
    case Rule::pav: {
      if (voter_bits_.empty() && p_.num_voters() > 0) return committee_objective(p_, rule_, committee);
      std::uint64_t w = 0;
      for (int a : committee) w |= std::uint64_t{1} << a;
      if (rule_ == Rule::mav) {
        int worst = 0;
        for (std::uint64_t v : voter_bits_) worst = std::max(worst, popcount64(v ^ w));
        return worst;
      }
      std::vector<int> tally(committee.size() + 1, 0);
      for (std::uint64_t v : voter_bits_) ++tally[popcount64(v & w)];
      Rational total;
      for (std::size_t c = 1; c < tally.size(); ++c)
        if (tally[c] != 0) total += harmonic_[c] * Rational(tally[c]);
      return total;
    }
  }
  return 0;
}

}  // namespace detail

}  // namespace comsoc
