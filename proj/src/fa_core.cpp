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

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

#include "hedonic_internal.hpp"

namespace comsoc {

std::optional<Witness> fa_unbounded_blocking(const HedonicInstance& instance,
                                             const Partition& partition, BlockingMode mode) {
  detail::require_fa(instance);
  detail::current_values(instance, partition);
  const int n = instance.num_agents();
  // In a coalition larger than kappa an agent has more enemies than at home
  // unless it gains friends, so in both modes every member of a large
  // blocking coalition needs strictly more friends than it has now. Peeling
  // agents that fail this leaves the greatest set where all of them gain; it
  // contains every large blocking coalition and blocks itself.
  std::vector<int> home_friends(n);
  for (int i = 0; i < n; ++i)
    home_friends[i] = popcount64(instance.friends(i) & partition.coalition_of(i));
  Coalition s = n == 64 ? ~Coalition{0} : (bit(n) - 1);
  bool changed = true;
  while (changed && s) {
    changed = false;
    for (Coalition m = s; m; m &= m - 1) {
      int i = lowest_bit(m);
      if (popcount64(instance.friends(i) & s) <= home_friends[i]) {
        s &= ~bit(i);
        changed = true;
      }
    }
  }
  if (popcount64(s) <= partition.kappa()) return std::nullopt;
  return detail::coalition_witness(s, mode);
}

std::optional<Witness> fa_core_verify_bounded(const HedonicInstance& instance,
                                              const Partition& partition, BlockingMode mode,
                                              const SearchLimits& limits) {
  if (auto w = fa_unbounded_blocking(instance, partition, mode)) return w;
  const int bound = partition.kappa() + (mode == BlockingMode::weak ? 1 : 0);
  NodeCounter counter(limits);
  auto b = detail::search_blocking(instance, partition, mode, bound, counter);
  if (!b) return std::nullopt;
  return detail::coalition_witness(*b, mode);
}

Partition fa_scc_partition(const HedonicInstance& instance) {
  detail::require_fa(instance);
  const int n = instance.num_agents();
  boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS> g(n);
  for (auto [i, j] : instance.friendship_arcs()) boost::add_edge(i, j, g);
  std::vector<int> component(n);
  int count = boost::strong_components(g, component.data());
  std::vector<Coalition> masks(count, 0);
  for (int i = 0; i < n; ++i) masks[component[i]] |= bit(i);
  return Partition::from_masks(n, masks);
}

}  // namespace comsoc
