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

#pragma once

// Independent brute-force predicates and random instance builders shared by
// the unit tests and the acceptance runner. Nothing here calls the library's
// own recognizers or solvers.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "comsoc/hedonic.hpp"
#include "comsoc/multiwinner.hpp"
#include "comsoc/profile.hpp"

namespace support {

using comsoc::PreferenceProfile;

inline PreferenceProfile random_linear(std::mt19937_64& rng, int m, int n) {
  std::vector<std::vector<int>> orders(n, std::vector<int>(m));
  for (auto& o : orders) {
    std::iota(o.begin(), o.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
  }
  return PreferenceProfile::linear(m, orders);
}

inline PreferenceProfile random_approval(std::mt19937_64& rng, int m, int n, int b,
                                         bool allow_empty = true) {
  std::vector<std::vector<int>> sets(n);
  std::uniform_int_distribution<int> size(allow_empty ? 0 : 1, b);
  for (auto& s : sets) {
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    s.assign(all.begin(), all.begin() + std::min(m, size(rng)));
  }
  return PreferenceProfile::approval(m, sets);
}

// Single-peaked along `axis`: every voter's ranks fall to the peak and rise after.
inline bool sp_along(const PreferenceProfile& p, const std::vector<int>& axis) {
  for (int v = 0; v < p.num_voters(); ++v) {
    if (p.is_approval()) {
      std::vector<int> pos;
      for (int i = 0; i < static_cast<int>(axis.size()); ++i)
        if (p.approves(v, axis[i])) pos.push_back(i);
      if (!pos.empty() && pos.back() - pos.front() + 1 != static_cast<int>(pos.size())) return false;
    } else {
      int i = 0;
      const int m = static_cast<int>(axis.size());
      while (i + 1 < m && p.rank(v, axis[i + 1]) < p.rank(v, axis[i])) ++i;
      while (i + 1 < m && p.rank(v, axis[i + 1]) > p.rank(v, axis[i])) ++i;
      if (i != m - 1) return false;
    }
  }
  return true;
}

inline bool sc_along(const PreferenceProfile& p, const std::vector<int>& voters) {
  const int m = p.num_alternatives();
  if (p.is_approval()) {
    for (int a = 0; a < m; ++a) {
      std::vector<int> pos;
      for (int i = 0; i < static_cast<int>(voters.size()); ++i)
        if (p.approves(voters[i], a)) pos.push_back(i);
      if (!pos.empty() && pos.back() - pos.front() + 1 != static_cast<int>(pos.size())) return false;
    }
    return true;
  }
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      int changes = 0;
      for (std::size_t i = 1; i < voters.size(); ++i)
        if (p.prefers(voters[i], a, b) != p.prefers(voters[i - 1], a, b)) ++changes;
      if (changes > 1) return false;
    }
  return true;
}

// First axis in lexicographic order accepted by the predicate, by trying all
// permutations.
template <typename Pred>
std::optional<std::vector<int>> first_permutation(int size, Pred pred) {
  std::vector<int> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (pred(perm)) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

inline std::optional<std::vector<int>> brute_sp(const PreferenceProfile& p) {
  return first_permutation(p.num_alternatives(), [&](const auto& a) { return sp_along(p, a); });
}

inline std::optional<std::vector<int>> brute_sc(const PreferenceProfile& p) {
  return first_permutation(p.num_voters(), [&](const auto& a) { return sc_along(p, a); });
}

// All k-subsets of {0..m-1} in lexicographic order.
inline std::vector<std::vector<int>> subsets(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int a = from; a < m; ++a) {
      cur.push_back(a);
      self(self, a + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Brute-force objective of a committee, independent of the library.
// Monroe tries every proportional assignment; fine for n <= 8.
inline comsoc::Rational brute_objective(const PreferenceProfile& p, comsoc::Rule rule,
                                        const std::vector<int>& w) {
  using comsoc::Rational;
  using comsoc::Rule;
  const int n = p.num_voters();
  auto cost = [&](int v, int a) -> long {
    return p.is_linear() ? p.rank(v, a) : (p.approves(v, a) ? 0 : 1);
  };
  switch (rule) {
    case Rule::cc: {
      long total = 0;
      for (int v = 0; v < n; ++v) {
        long best = 1L << 40;
        for (int a : w) best = std::min(best, cost(v, a));
        total += best;
      }
      return Rational(total);
    }
    case Rule::monroe: {
      const int k = static_cast<int>(w.size());
      const int lo = n / k, hi = (n + k - 1) / k;
      std::vector<int> load(k, 0);
      long best = 1L << 40;
      auto rec = [&](auto&& self, int v, long acc) -> void {
        if (acc >= best) return;
        if (v == n) {
          for (int c : load)
            if (c < lo) return;
          best = acc;
          return;
        }
        for (int j = 0; j < k; ++j) {
          if (load[j] == hi) continue;
          ++load[j];
          self(self, v + 1, acc + cost(v, w[j]));
          --load[j];
        }
      };
      rec(rec, 0, 0);
      return Rational(best);
    }
    case Rule::mav: {
      long worst = 0;
      std::set<int> ws(w.begin(), w.end());
      for (int v = 0; v < n; ++v) {
        auto s = p.approval_set(v);
        std::set<int> vs(s.begin(), s.end());
        long d = 0;
        for (int a : vs) d += !ws.count(a);
        for (int a : ws) d += !vs.count(a);
        worst = std::max(worst, d);
      }
      return Rational(worst);
    }
    case Rule::pav: {
      Rational total;
      for (int v = 0; v < n; ++v) {
        int c = 0;
        for (int a : w) c += p.approves(v, a);
        for (int j = 1; j <= c; ++j) total += Rational(1, j);
      }
      return total;
    }
  }
  return {};
}

inline bool minimizes(comsoc::Rule rule) { return rule != comsoc::Rule::pav; }

// Best objective over all committees of size k.
inline comsoc::Rational brute_optimum(const PreferenceProfile& p, comsoc::Rule rule, int k) {
  std::optional<comsoc::Rational> best;
  for (const auto& w : subsets(p.num_alternatives(), k)) {
    auto v = brute_objective(p, rule, w);
    if (!best || (minimizes(rule) ? v < *best : v > *best)) best = v;
  }
  return *best;
}

inline comsoc::HedonicInstance random_additive(std::mt19937_64& rng, int n, int umax,
                                               double density, bool symmetric) {
  std::vector<comsoc::HedonicInstance::UtilityArc> arcs;
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> val(-umax, umax);
  for (int i = 0; i < n; ++i)
    for (int j = symmetric ? i + 1 : 0; j < n; ++j) {
      if (i == j || !keep(rng)) continue;
      int u = val(rng);
      if (u == 0) continue;
      arcs.emplace_back(i, j, u);
      if (symmetric) arcs.emplace_back(j, i, u);
    }
  return comsoc::HedonicInstance::additive(n, arcs);
}

inline comsoc::HedonicInstance random_fe(std::mt19937_64& rng, int n, double density,
                                         comsoc::HedonicModel model) {
  std::vector<std::pair<int, int>> arcs;
  std::bernoulli_distribution keep(density);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && keep(rng)) arcs.emplace_back(i, j);
  return comsoc::HedonicInstance::friends_enemies(n, model, arcs);
}

inline comsoc::Partition random_partition(std::mt19937_64& rng, int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(blocks.size()));
    int b = pick(rng);
    if (b == static_cast<int>(blocks.size())) blocks.push_back({});
    blocks[b].push_back(i);
  }
  return comsoc::Partition(n, blocks);
}

// Friend-appreciation game whose non-singleton coalitions in the returned
// partition are friendship cycles, so blocking coalitions cannot simply be
// split off; extra arcs appear with probability `density`.
inline std::pair<comsoc::HedonicInstance, comsoc::Partition> cyclic_blocks_fa(std::mt19937_64& rng,
                                                                              int n, int cap,
                                                                              double density) {
  std::vector<int> agents(n);
  std::iota(agents.begin(), agents.end(), 0);
  std::shuffle(agents.begin(), agents.end(), rng);
  std::vector<std::vector<int>> blocks;
  std::uniform_int_distribution<int> size(1, cap);
  for (std::size_t i = 0; i < agents.size();) {
    int s = size(rng);
    blocks.emplace_back();
    for (int j = 0; j < s && i < agents.size(); ++j) blocks.back().push_back(agents[i++]);
  }
  std::set<std::pair<int, int>> arcs;
  for (const auto& c : blocks)
    if (c.size() > 1)
      for (std::size_t i = 0; i < c.size(); ++i) arcs.emplace(c[i], c[(i + 1) % c.size()]);
  std::bernoulli_distribution keep(density);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && keep(rng)) arcs.emplace(i, j);
  return {comsoc::HedonicInstance::friends_enemies(
              n, comsoc::HedonicModel::fa, std::vector<std::pair<int, int>>(arcs.begin(), arcs.end())),
          comsoc::Partition(n, blocks)};
}

// Hedonic valuation recomputed from the definitions.
inline std::pair<long, long> brute_value(const comsoc::HedonicInstance& h, int i,
                                         const std::vector<int>& coalition) {
  long sum = 0, fr = 0, en = 0;
  for (int j : coalition) {
    if (j == i) continue;
    if (h.is_additive()) {
      sum += h.utility(i, j);
    } else if (h.friends(i) & comsoc::bit(j)) {
      ++fr;
    } else {
      ++en;
    }
  }
  if (h.is_additive()) return {sum, 0};
  if (h.model() == comsoc::HedonicModel::fa) return {fr, -en};
  return {-en, fr};
}

inline std::vector<int> members(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

// Exhaustive search for a (weakly) blocking coalition of size in [lo, hi].
inline bool brute_blocking(const comsoc::HedonicInstance& h, const comsoc::Partition& part,
                           bool weak, int lo = 1, int hi = 64) {
  const int n = h.num_agents();
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    auto b = members(s);
    int size = static_cast<int>(b.size());
    if (size < lo || size > hi) continue;
    bool ok = true, gain = false;
    for (int i : b) {
      auto now = brute_value(h, i, members(part.coalition_of(i)));
      auto then = brute_value(h, i, b);
      if (then > now) gain = true;
      else if (!weak || then < now) ok = false;
    }
    if (ok && gain) return true;
  }
  return false;
}

// Every set partition of n agents, by recursive block assignment.
template <typename Fn>
void each_partition(int n, Fn fn) {
  std::vector<std::vector<int>> blocks;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      fn(comsoc::Partition(n, blocks));
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(i);
      self(self, i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({i});
    self(self, i + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
}

}  // namespace support
