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
#include <cstdlib>

#include "hedonic_internal.hpp"

namespace comsoc {

std::int64_t utilitarian_welfare(const HedonicInstance& instance, const Partition& partition) {
  if (!instance.is_additive()) throw UnsupportedKind("utilitarian welfare needs additive utilities");
  std::int64_t w = 0;
  for (int i = 0; i < instance.num_agents(); ++i)
    w += instance.value(i, partition.coalition_of(i)).primary;
  return w;
}

NashSearchResult nash_search_symmetric(const HedonicInstance& instance,
                                       const NashSearchOptions& options) {
  if (!instance.is_additive() || !instance.symmetric())
    throw ContractError("Nash dynamics need symmetric additive utilities");
  const int n = instance.num_agents();
  for (auto [i, j, u] : instance.utility_arcs())
    if (std::llabs(u) > options.utility_cap)
      throw ContractError("utility " + std::to_string(u) + " exceeds the configured cap of " +
                          std::to_string(options.utility_cap));

  NashSearchResult result;
  result.partition = Partition::singletons(n);
  result.welfare.push_back(utilitarian_welfare(instance, result.partition));
  // With symmetric utilities a deviation gaining g raises welfare by 2g, so
  // improving moves cannot cycle.
  while (auto w = verify(instance, result.partition, Concept::nash)) {
    const int i = w->agents[0];
    const Coalition target = to_mask(*w->target);
    std::vector<Coalition> next;
    for (Coalition c : result.partition.masks()) {
      if (c == target) continue;
      Coalition rest = c & ~bit(i);
      if (rest) next.push_back(rest);
    }
    next.push_back(target | bit(i));
    result.partition = Partition::from_masks(n, next);
    ++result.moves;
    std::int64_t welfare = utilitarian_welfare(instance, result.partition);
    if (welfare <= result.welfare.back()) throw Error("internal: Nash move did not raise welfare");
    result.welfare.push_back(welfare);
  }
  return result;
}

std::optional<Partition> ea_nash_exist_fas(const HedonicInstance& instance,
                                           const SearchLimits& limits) {
  if (instance.model() != HedonicModel::ea)
    throw UnsupportedKind("this search needs an enemy-aversion instance");
  const int n = instance.num_agents();
  // In a Nash stable partition nobody has an enemy in their coalition (going
  // alone would be better), so coalitions are cliques of mutual friends and
  // agents without a mutual friend stay alone.
  auto mutual = [&](int a, int b) {
    return (instance.friends(a) & bit(b)) && (instance.friends(b) & bit(a));
  };
  std::vector<int> active;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && mutual(i, j)) {
        active.push_back(i);
        break;
      }
  NodeCounter counter(limits);
  std::vector<Coalition> blocks;
  std::optional<Partition> found;
  auto rec = [&](auto&& self, std::size_t at) -> bool {
    counter.tick();
    if (at == active.size()) {
      std::vector<Coalition> masks = blocks;
      Coalition covered = 0;
      for (Coalition b : blocks) covered |= b;
      for (int i = 0; i < n; ++i)
        if (!(covered & bit(i))) masks.push_back(bit(i));
      Partition p = Partition::from_masks(n, masks);
      if (!verify(instance, p, Concept::nash)) {
        found = std::move(p);
        return true;
      }
      return false;
    }
    const int a = active[at];
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      bool clique = true;
      for (Coalition m = blocks[b]; m && clique; m &= m - 1) clique = mutual(a, lowest_bit(m));
      if (!clique) continue;
      blocks[b] |= bit(a);
      if (self(self, at + 1)) return true;
      blocks[b] &= ~bit(a);
    }
    blocks.push_back(bit(a));
    if (self(self, at + 1)) return true;
    blocks.pop_back();
    return false;
  };
  rec(rec, 0);
  return found;
}

}  // namespace comsoc
