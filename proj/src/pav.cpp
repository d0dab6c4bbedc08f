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
#include <cmath>
#include <map>

#include "mw_internal.hpp"

namespace comsoc {

namespace {

void require_pav(const MultiWinnerInstance& instance) {
  instance.validate();
  if (!instance.profile.is_approval()) throw UnsupportedKind("PAV needs an approval profile");
  if (!instance.bound) throw ContractError("PAV decision needs a score bound S");
}

int nonempty_voters(const PreferenceProfile& p) {
  int c = 0;
  for (int i = 0; i < p.num_voters(); ++i)
    if (!p.approval_set(i).empty()) ++c;
  return c;
}

std::vector<int> first_k(int k) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  return c;
}

std::vector<int> pad(std::vector<int> members, int m, int k) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<char> used(m, 0);
  for (int a : members) used[a] = 1;
  for (int a = 0; a < m && static_cast<int>(members.size()) < k; ++a)
    if (!used[a]) members.push_back(a);
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::vector<int>> supporters(const PreferenceProfile& p) {
  std::vector<std::vector<int>> s(p.num_alternatives());
  for (int i = 0; i < p.num_voters(); ++i)
    for (int a : p.approval_set(i)) s[a].push_back(i);
  return s;
}

}  // namespace

CommitteeSolution pav_greedy_small_score(const MultiWinnerInstance& instance) {
  require_pav(instance);
  const auto& p = instance.profile;
  const int m = p.num_alternatives(), k = instance.k;
  const int n_active = nonempty_voters(p);
  if (*instance.bound > Rational(std::min(k, n_active)))
    throw ContractError("greedy needs S <= min(k, number of voters with nonempty ballots)");

  auto supp = supporters(p);
  std::vector<char> covered(p.num_voters(), 0), used(m, 0);
  std::vector<int> committee;
  for (int step = 0; step < k; ++step) {
    int pick = -1;
    // Prefer an alternative whose supporters are all still uncovered.
    for (int a = 0; a < m && pick < 0; ++a) {
      if (used[a] || supp[a].empty()) continue;
      bool fresh = std::none_of(supp[a].begin(), supp[a].end(), [&](int v) { return covered[v]; });
      if (fresh) pick = a;
    }
    // Otherwise anything reaching a still uncovered voter.
    for (int a = 0; a < m && pick < 0; ++a) {
      if (used[a]) continue;
      if (std::any_of(supp[a].begin(), supp[a].end(), [&](int v) { return !covered[v]; })) pick = a;
    }
    for (int a = 0; a < m && pick < 0; ++a)
      if (!used[a]) pick = a;
    used[pick] = 1;
    committee.push_back(pick);
    for (int v : supp[pick]) covered[v] = 1;
  }
  CommitteeSolution s = make_solution(p, Rule::pav, committee);
  if (s.objective < *instance.bound) throw Error("internal: greedy committee below the bound");
  return s;
}

namespace {

// Exact search over how many alternatives of each supporter-set type to take.
// Alternatives with equal supporter sets are interchangeable for PAV, so the
// smallest indices of a type are used.
std::optional<std::vector<int>> type_search(const PreferenceProfile& p, int k, const Rational& s,
                                            NodeCounter& counter) {
  const int n = p.num_voters();
  auto supp = supporters(p);
  std::map<std::vector<int>, std::vector<int>> by_type;
  for (int a = 0; a < p.num_alternatives(); ++a) by_type[supp[a]].push_back(a);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> types(by_type.begin(), by_type.end());
  std::vector<Rational> h;
  for (int c = 0; c <= k; ++c) h.push_back(harmonic(c));

  std::vector<int> count(n, 0), take(types.size(), 0);
  // Each remaining seat adds at most one point per nonempty voter.
  const int active = nonempty_voters(p);
  auto score = [&]() {
    Rational t;
    for (int i = 0; i < n; ++i) t += h[count[i]];
    return t;
  };
  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, std::size_t t, int left) -> bool {
    counter.tick();
    Rational cur = score();
    if (cur >= s) {
      std::vector<int> members;
      for (std::size_t u = 0; u < t; ++u)
        for (int j = 0; j < take[u]; ++j) members.push_back(types[u].second[j]);
      found = pad(members, p.num_alternatives(), k);
      return true;
    }
    if (t == types.size() || left == 0) return false;
    if (cur + Rational(static_cast<std::int64_t>(left) * active) < s) return false;
    const int cap = std::min(left, static_cast<int>(types[t].second.size()));
    for (int c = cap; c >= 0; --c) {
      take[t] = c;
      for (int v : types[t].first) count[v] += c;
      bool ok = self(self, t + 1, left - c);
      for (int v : types[t].first) count[v] -= c;
      if (ok) return true;
    }
    take[t] = 0;
    return false;
  };
  rec(rec, 0, k);
  return found;
}

}  // namespace

std::optional<CommitteeSolution> solve_pav_score_xp(const MultiWinnerInstance& instance,
                                                    const SearchLimits& limits) {
  require_pav(instance);
  const auto& p = instance.profile;
  const Rational& s = *instance.bound;
  const int k = instance.k, n = p.num_voters();
  const int active = nonempty_voters(p);
  if (s <= Rational(0)) return make_solution(p, Rule::pav, first_k(k));
  if (s <= Rational(std::min(k, active))) return pav_greedy_small_score(instance);

  NodeCounter counter(limits);
  std::optional<std::vector<int>> committee;
  if (s >= Rational(n)) {
    committee = type_search(p, k, s, counter);
  } else {
    detail::CommitteeEvaluator eval(p, Rule::pav);
    detail::for_each_combination(p.num_alternatives(), k, [&](const std::vector<int>& c) {
      counter.tick();
      if (eval.evaluate(c) >= s) {
        committee = c;
        return false;
      }
      return true;
    });
  }
  if (!committee) return std::nullopt;
  CommitteeSolution sol = make_solution(p, Rule::pav, *committee);
  if (sol.objective < s) throw Error("internal: PAV witness below the bound");
  return sol;
}

namespace {

class Kernelizer {
 public:
  explicit Kernelizer(const MultiWinnerInstance& instance)
      : in_(instance), p_(instance.profile), s_(*instance.bound), k_(instance.k),
        m_(p_.num_alternatives()), supp_(supporters(p_)), keep_(m_, 1) {}

  KernelOutcome run() {
    const int active = nonempty_voters(p_);
    if (s_ <= Rational(0)) return yes(first_k(k_), "zero bound");

    // (1) one alternative alone reaches the bound.
    for (int a = 0; a < m_; ++a)
      if (Rational(static_cast<std::int64_t>(supp_[a].size())) >= s_)
        return yes(pad({a}, m_, k_), "single alternative with at least S supporters");

    // (2) small bound: greedy coverage.
    if (s_ <= Rational(std::min(k_, active))) {
      auto g = pav_greedy_small_score(in_);
      return yes(g.committee, "greedy coverage for S <= min(k, n)");
    }

    // (3) S >= n: only approved alternatives matter and there are at most n*b.
    if (s_ >= Rational(active)) {
      for (int a = 0; a < m_; ++a) keep_[a] = !supp_[a].empty();
      trace_.push_back("bound at least n: keep approved alternatives");
      return reduced();
    }

    // (4) at most k alternatives per supporter set.
    std::map<std::vector<int>, int> seen;
    for (int a = 0; a < m_; ++a)
      if (++seen[supp_[a]] > k_) keep_[a] = 0;
    trace_.push_back("cap identical supporter sets at k");

    // (5) L-rule. ln 1 = 0, so with k = 1 no alternative qualifies.
    const std::int64_t s_ceil = s_.ceil();
    const std::int64_t l_threshold =
        k_ >= 2 ? static_cast<std::int64_t>(std::ceil(s_.to_double() / std::log(k_) - 1e-12))
                : std::numeric_limits<std::int64_t>::max();
    std::vector<int> large;
    for (int a = 0; a < m_; ++a)
      if (keep_[a] && static_cast<std::int64_t>(supp_[a].size()) >= l_threshold) large.push_back(a);
    if (static_cast<int>(large.size()) >= k_) {
      large.resize(k_);
      auto out = yes(large, "k alternatives each with at least S/ln k supporters");
      if (out.verdict == KernelVerdict::yes) return out;
    }

    // (6) M_l levels: k pairwise disjoint alternatives with l >= S/k supporters.
    const std::int64_t s_over_k = (s_ / Rational(k_)).ceil();
    for (std::int64_t l = std::max<std::int64_t>(s_over_k, 1); l < l_threshold && l < s_ceil; ++l) {
      auto d = disjoint_greedy([&](int a) { return static_cast<std::int64_t>(supp_[a].size()) == l; });
      if (static_cast<int>(d.size()) >= k_) {
        d.resize(k_);
        return yes(d, "k disjoint alternatives at supporter level " + std::to_string(l));
      }
    }

    // (7) T_j levels below S/k, from the top down.
    for (std::int64_t j = s_over_k - 1; j >= 1; --j) {
      std::vector<char> high_voter(p_.num_voters(), 0);
      for (int a = 0; a < m_; ++a)
        if (keep_[a] && static_cast<std::int64_t>(supp_[a].size()) > j)
          for (int v : supp_[a]) high_voter[v] = 1;
      auto in_y = [&](int a) {
        if (!keep_[a] || static_cast<std::int64_t>(supp_[a].size()) != j) return false;
        return std::none_of(supp_[a].begin(), supp_[a].end(), [&](int v) { return high_voter[v]; });
      };
      auto d = disjoint_greedy(in_y);
      // Enough disjoint spares at level j let any committee member with at
      // most j supporters be exchanged for an untouched spare.
      const std::int64_t needed = static_cast<std::int64_t>(k_ - 1) * j + 1;
      if (static_cast<std::int64_t>(d.size()) >= needed) {
        std::vector<char> in_d(m_, 0);
        for (int a : d) in_d[a] = 1;
        for (int a = 0; a < m_; ++a) {
          auto sz = static_cast<std::int64_t>(supp_[a].size());
          if (!keep_[a]) continue;
          if (sz < j || (in_y(a) && !in_d[a])) keep_[a] = 0;
        }
        trace_.push_back("level " + std::to_string(j) + ": keep " + std::to_string(d.size()) +
                         " disjoint spares, drop lower levels");
        break;
      }
    }
    return reduced();
  }

 private:
  template <class Pred>
  std::vector<int> disjoint_greedy(Pred pred) const {
    std::vector<char> taken(p_.num_voters(), 0);
    std::vector<int> d;
    for (int a = 0; a < m_; ++a) {
      if (!keep_[a] || !pred(a)) continue;
      if (std::any_of(supp_[a].begin(), supp_[a].end(), [&](int v) { return taken[v]; })) continue;
      for (int v : supp_[a]) taken[v] = 1;
      d.push_back(a);
    }
    return d;
  }

  KernelOutcome yes(std::vector<int> committee, const std::string& why) {
    KernelOutcome out;
    CommitteeSolution sol = make_solution(p_, Rule::pav, std::move(committee));
    if (sol.objective < s_) {
      // Certification failed; let the caller continue reducing instead.
      out.verdict = KernelVerdict::reduced;
      return out;
    }
    trace_.push_back(why);
    out.verdict = KernelVerdict::yes;
    out.witness = std::move(sol);
    out.trace = trace_;
    return out;
  }

  KernelOutcome reduced() {
    std::vector<int> kept;
    for (int a = 0; a < m_; ++a)
      if (keep_[a]) kept.push_back(a);
    int k = k_;
    int approved_kept = 0;
    for (int a : kept)
      if (!supp_[a].empty()) ++approved_kept;
    // With at least as many seats as approved alternatives, taking all of them
    // is optimal, so the seat count shrinks to match.
    if (approved_kept <= k) {
      std::erase_if(kept, [&](int a) { return supp_[a].empty(); });
      k = std::max(1, approved_kept);
    }
    // Keep enough alternatives to seat a committee.
    for (int a = 0; a < m_ && static_cast<int>(kept.size()) < k; ++a)
      if (std::find(kept.begin(), kept.end(), a) == kept.end()) kept.push_back(a);
    std::sort(kept.begin(), kept.end());

    PreferenceProfile restricted = p_.restrict_alternatives(kept);
    std::vector<int> empty_voters;
    for (int i = 0; i < restricted.num_voters(); ++i)
      if (restricted.approval_set(i).empty()) empty_voters.push_back(i);
    KernelOutcome out;
    out.verdict = KernelVerdict::reduced;
    out.reduced_instance = MultiWinnerInstance{restricted.without_voters(empty_voters), k, s_};
    out.alt_map = kept;
    out.trace = trace_;
    return out;
  }

  const MultiWinnerInstance& in_;
  const PreferenceProfile& p_;
  Rational s_;
  int k_, m_;
  std::vector<std::vector<int>> supp_;
  std::vector<char> keep_;
  std::vector<std::string> trace_;
};

}  // namespace

KernelOutcome pav_kernelize(const MultiWinnerInstance& instance) {
  require_pav(instance);
  return Kernelizer(instance).run();
}

}  // namespace comsoc
