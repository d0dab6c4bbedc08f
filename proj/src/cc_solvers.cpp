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
#include <unordered_map>

#include "mw_internal.hpp"

namespace comsoc {

namespace {

std::vector<int> pad_committee(std::vector<int> members, int m, int k) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<char> used(m, 0);
  for (int a : members) used[a] = 1;
  for (int a = 0; a < m && static_cast<int>(members.size()) < k; ++a)
    if (!used[a]) members.push_back(a);
  std::sort(members.begin(), members.end());
  return members;
}

std::int64_t serve_cost(const PreferenceProfile& p, int voter, int alt) {
  if (p.is_linear()) return p.rank(voter, alt);
  return p.approves(voter, alt) ? 0 : 1;
}

}  // namespace

CommitteeSolution solve_by_committee_enumeration(const MultiWinnerInstance& instance, Rule rule,
                                                 const SearchLimits& limits) {
  instance.validate();
  const auto& p = instance.profile;
  detail::CommitteeEvaluator eval(p, rule);
  NodeCounter counter(limits);
  std::optional<std::vector<int>> best;
  Rational best_value;
  detail::for_each_combination(p.num_alternatives(), instance.k, [&](const std::vector<int>& c) {
    counter.tick();
    Rational v = eval.evaluate(c);
    if (!best || better_objective(rule, v, best_value)) {
      best = c;
      best_value = v;
    }
    return true;
  });
  return make_solution(p, rule, *best);
}

CommitteeSolution solve_cc_by_voter_partition(const MultiWinnerInstance& instance,
                                              const SearchLimits& limits) {
  instance.validate();
  const auto& p = instance.profile;
  const int n = p.num_voters(), m = p.num_alternatives(), k = instance.k;

  if (k >= n) {
    // Every voter gets a favorite of their own.
    std::vector<int> favorites;
    for (int i = 0; i < n; ++i) {
      if (p.is_linear()) favorites.push_back(p.order(i)[0]);
      else if (!p.approval_set(i).empty()) favorites.push_back(p.approval_set(i)[0]);
    }
    return make_solution(p, Rule::cc, pad_committee(favorites, m, k));
  }

  // Restricted-growth enumeration of voter partitions into at most k blocks;
  // block_cost[b][a] is the cost of serving block b by alternative a.
  NodeCounter counter(limits);
  std::vector<std::vector<std::int64_t>> block_cost(k, std::vector<std::int64_t>(m, 0));
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<int> best_committee;
  int blocks = 0;

  auto leaf = [&]() {
    std::int64_t total = 0;
    std::vector<int> members;
    for (int b = 0; b < blocks; ++b) {
      auto it = std::min_element(block_cost[b].begin(), block_cost[b].end());
      total += *it;
      members.push_back(static_cast<int>(it - block_cost[b].begin()));
    }
    if (total > best) return;
    std::vector<int> committee = pad_committee(members, m, k);
    if (total < best || committee < best_committee) {
      best = total;
      best_committee = std::move(committee);
    }
  };

  auto rec = [&](auto&& self, int voter) -> void {
    counter.tick();
    if (voter == n) {
      leaf();
      return;
    }
    auto place = [&](int b) {
      for (int a = 0; a < m; ++a) block_cost[b][a] += serve_cost(p, voter, a);
      self(self, voter + 1);
      for (int a = 0; a < m; ++a) block_cost[b][a] -= serve_cost(p, voter, a);
    };
    for (int b = 0; b < blocks; ++b) place(b);
    if (blocks < k) {
      ++blocks;
      place(blocks - 1);
      --blocks;
    }
  };
  rec(rec, 0);
  return make_solution(p, Rule::cc, best_committee);
}

namespace {

// Branch and bound behind solve_cc_xp_misrep. Identical voters are merged
// into weighted groups and alternatives that every voter ranks below some
// other alternative are dropped (swapping them out never hurts CC). For each
// group in turn we guess the best committee member it will see: walking its
// ranking, each undecided alternative is either taken (cost = weight * rank)
// or excluded, and excluded ones stay out for later groups.
class CcXpSearch {
 public:
  CcXpSearch(const PreferenceProfile& p, int k, std::int64_t budget, const SearchLimits& limits)
      : p_(p), m_(p.num_alternatives()), k_(k), budget_(budget), counter_(limits) {
    build_groups();
    state_.assign(m_, kUndecided);
  }

  std::optional<std::vector<int>> run() {
    if (dfs(0, budget_)) {
      std::vector<int> members;
      for (int a = 0; a < m_; ++a)
        if (state_[a] == kIn) members.push_back(a);
      return pad_committee(members, m_, k_);
    }
    return std::nullopt;
  }

 private:
  static constexpr char kUndecided = 0, kIn = 1, kOut = 2;

  struct Group {
    int weight;
    std::vector<std::pair<int, int>> options;  // (rank, alternative), undominated only
  };

  void build_groups() {
    const int n = p_.num_voters();
    std::vector<char> dominated(m_, 0);
    for (int x = 0; x < m_; ++x)
      for (int y = 0; y < m_ && !dominated[x]; ++y) {
        if (y == x) continue;
        bool all = n > 0;
        for (int i = 0; i < n && all; ++i) all = p_.prefers(i, y, x);
        if (all) dominated[x] = 1;
      }
    std::vector<std::vector<int>> rankings;
    std::vector<int> weights;
    for (int i = 0; i < n; ++i) {
      std::vector<int> o(p_.order(i).begin(), p_.order(i).end());
      auto it = std::find(rankings.begin(), rankings.end(), o);
      if (it == rankings.end()) {
        rankings.push_back(std::move(o));
        weights.push_back(1);
      } else {
        ++weights[it - rankings.begin()];
      }
    }
    for (std::size_t g = 0; g < rankings.size(); ++g) {
      Group grp{weights[g], {}};
      for (int r = 0; r < m_; ++r)
        if (!dominated[rankings[g][r]]) grp.options.emplace_back(r, rankings[g][r]);
      groups_.push_back(std::move(grp));
    }
    std::stable_sort(groups_.begin(), groups_.end(),
                     [](const Group& a, const Group& b) { return a.weight > b.weight; });
    memo_enabled_ = m_ <= 64;
  }

  // Cost every remaining group pays at least, given current exclusions.
  std::int64_t lower_bound(std::size_t from) const {
    std::int64_t lb = 0;
    for (std::size_t g = from; g < groups_.size(); ++g)
      for (auto [r, a] : groups_[g].options)
        if (state_[a] != kOut) {
          lb += static_cast<std::int64_t>(groups_[g].weight) * r;
          break;
        }
    return lb;
  }

  struct Key {
    std::size_t group;
    std::uint64_t in, out;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = k.group * 0x9e3779b97f4a7c15ULL;
      h ^= k.in + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= k.out + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    }
  };

  Key key(std::size_t g) const {
    Key key{g, 0, 0};
    for (int a = 0; a < m_; ++a) {
      if (state_[a] == kIn) key.in |= std::uint64_t{1} << a;
      if (state_[a] == kOut) key.out |= std::uint64_t{1} << a;
    }
    return key;
  }

  bool dfs(std::size_t g, std::int64_t budget) {
    counter_.tick();
    if (g == groups_.size()) return true;
    if (lower_bound(g) > budget) return false;
    std::optional<Key> memo_key;
    if (memo_enabled_) {
      memo_key = key(g);
      auto it = failed_.find(*memo_key);
      if (it != failed_.end() && it->second >= budget) return false;
    }
    bool found = false;
    std::vector<int> excluded_here;
    const Group& grp = groups_[g];
    for (auto [r, a] : grp.options) {
      std::int64_t cost = static_cast<std::int64_t>(grp.weight) * r;
      if (cost > budget) break;
      if (state_[a] == kOut) continue;
      if (state_[a] == kIn) {
        found = dfs(g + 1, budget - cost);
        break;
      }
      if (in_count_ < k_) {
        state_[a] = kIn;
        ++in_count_;
        found = dfs(g + 1, budget - cost);
        if (found) break;
        --in_count_;
      }
      state_[a] = kOut;
      excluded_here.push_back(a);
    }
    if (found) return true;
    for (int a : excluded_here) state_[a] = kUndecided;
    if (memo_key) {
      auto& slot = failed_[*memo_key];
      slot = std::max(slot, budget);
    }
    return false;
  }

  const PreferenceProfile& p_;
  int m_, k_;
  std::int64_t budget_;
  NodeCounter counter_;
  std::vector<Group> groups_;
  std::vector<char> state_;
  int in_count_ = 0;
  bool memo_enabled_ = false;
  std::unordered_map<Key, std::int64_t, KeyHash> failed_;
};

}  // namespace

std::optional<CommitteeSolution> solve_cc_xp_misrep(const MultiWinnerInstance& instance,
                                                    const SearchLimits& limits) {
  instance.validate();
  const auto& p = instance.profile;
  if (!p.is_linear())
    throw UnsupportedKind("the misrepresentation XP search needs a linear profile");
  if (!instance.bound) throw ContractError("the misrepresentation XP search needs a bound R");
  // Misrepresentation is integral, so rho <= R iff rho <= floor(R).
  std::int64_t budget = instance.bound->num() / instance.bound->den();
  CcXpSearch search(p, instance.k, budget, limits);
  auto committee = search.run();
  if (!committee) return std::nullopt;
  CommitteeSolution s = make_solution(p, Rule::cc, *committee);
  if (s.objective > *instance.bound) throw Error("internal: XP witness exceeds the bound");
  return s;
}

}  // namespace comsoc
