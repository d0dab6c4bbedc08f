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

#include "hedonic_internal.hpp"

namespace comsoc {

namespace detail {

std::vector<Valuation> current_values(const HedonicInstance& instance, const Partition& partition) {
  if (partition.num_agents() != instance.num_agents())
    throw DomainError("partition covers " + std::to_string(partition.num_agents()) +
                      " agents, instance has " + std::to_string(instance.num_agents()));
  std::vector<Valuation> v(instance.num_agents());
  for (int i = 0; i < instance.num_agents(); ++i) v[i] = instance.value(i, partition.coalition_of(i));
  return v;
}

bool is_blocking(const HedonicInstance& instance, const std::vector<Valuation>& current,
                 Coalition b, BlockingMode mode) {
  if (b == 0) return false;
  bool strict_gain = false;
  for (Coalition m = b; m; m &= m - 1) {
    int i = lowest_bit(m);
    Valuation v = instance.value(i, b);
    if (v > current[i]) {
      strict_gain = true;
    } else if (mode == BlockingMode::strict || v < current[i]) {
      return false;
    }
  }
  return strict_gain;
}

std::optional<Coalition> search_blocking(const HedonicInstance& instance, const Partition& partition,
                                         BlockingMode mode, int max_size, NodeCounter& counter) {
  const int n = instance.num_agents();
  auto current = current_values(instance, partition);
  std::vector<char> can_gain(n, 0);
  std::vector<int> pool;
  for (int i = 0; i < n; ++i) {
    can_gain[i] = current[i] < instance.best_possible(i);
    if (mode == BlockingMode::weak || can_gain[i]) pool.push_back(i);
  }
  bool any_gain = std::any_of(can_gain.begin(), can_gain.end(), [](char c) { return c != 0; });
  if (!any_gain) return std::nullopt;
  const int p = static_cast<int>(pool.size());
  max_size = std::min(max_size, p);
  for (int s = 1; s <= max_size; ++s) {
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      counter.tick();
      Coalition b = 0;
      bool gain = false;
      for (int i : idx) {
        b |= bit(pool[i]);
        gain = gain || can_gain[pool[i]];
      }
      if (gain && is_blocking(instance, current, b, mode)) return b;
      int i = s - 1;
      while (i >= 0 && idx[i] == p - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

Witness coalition_witness(Coalition b, BlockingMode mode) {
  return Witness{mode == BlockingMode::strict ? WitnessKind::blocking_coalition
                                              : WitnessKind::weakly_blocking_coalition,
                 to_agents(b), std::nullopt};
}

void require_fa(const HedonicInstance& instance) {
  if (instance.model() != HedonicModel::fa)
    throw UnsupportedKind("this verifier needs a friend-appreciation instance");
}

}  // namespace detail

namespace {

// Deviation targets: the empty coalition first, then the partition's coalitions.
std::vector<Coalition> targets(const Partition& partition) {
  std::vector<Coalition> t{0};
  t.insert(t.end(), partition.masks().begin(), partition.masks().end());
  return t;
}

bool envies(const HedonicInstance& h, const Partition& p, int i, Coalition b) {
  Coalition own = p.coalition_of(i);
  if (b & bit(i)) return false;
  if (b != 0 && std::find(p.masks().begin(), p.masks().end(), b) == p.masks().end()) return false;
  return h.value(i, b | bit(i)) > h.value(i, own);
}

bool tuple_blocks(const HedonicInstance& h, const Partition& p, int i, Coalition b) {
  if (!envies(h, p, i, b)) return false;
  for (Coalition m = b; m; m &= m - 1) {
    int j = lowest_bit(m);
    if (h.value(j, b | bit(i)) < h.value(j, b)) return false;
  }
  return true;
}

}  // namespace

std::vector<Witness> blocking_tuples(const HedonicInstance& instance, const Partition& partition) {
  detail::current_values(instance, partition);
  std::vector<Witness> out;
  for (int i = 0; i < instance.num_agents(); ++i)
    for (Coalition b : targets(partition))
      if (tuple_blocks(instance, partition, i, b))
        out.push_back({WitnessKind::blocking_tuple, {i}, to_agents(b)});
  return out;
}

std::optional<Witness> verify(const HedonicInstance& instance, const Partition& partition,
                              Concept stability, const SearchLimits& limits) {
  auto current = detail::current_values(instance, partition);
  const int n = instance.num_agents();
  switch (stability) {
    case Concept::nash:
      for (int i = 0; i < n; ++i)
        for (Coalition b : targets(partition))
          if (envies(instance, partition, i, b))
            return Witness{WitnessKind::envy, {i}, to_agents(b)};
      return std::nullopt;
    case Concept::individual:
      for (int i = 0; i < n; ++i)
        for (Coalition b : targets(partition))
          if (tuple_blocks(instance, partition, i, b))
            return Witness{WitnessKind::blocking_tuple, {i}, to_agents(b)};
      return std::nullopt;
    case Concept::core:
    case Concept::strict_core: {
      BlockingMode mode = stability == Concept::core ? BlockingMode::strict : BlockingMode::weak;
      NodeCounter counter(limits);
      auto b = detail::search_blocking(instance, partition, mode, n, counter);
      if (!b) return std::nullopt;
      return detail::coalition_witness(*b, mode);
    }
  }
  return std::nullopt;
}

bool check_witness(const HedonicInstance& instance, const Partition& partition,
                   const Witness& witness) {
  if (partition.num_agents() != instance.num_agents()) return false;
  const int n = instance.num_agents();
  for (int a : witness.agents)
    if (a < 0 || a >= n) return false;
  if (witness.target)
    for (int a : *witness.target)
      if (a < 0 || a >= n) return false;
  switch (witness.kind) {
    case WitnessKind::envy:
    case WitnessKind::blocking_tuple: {
      if (witness.agents.size() != 1 || !witness.target) return false;
      Coalition b = to_mask(*witness.target);
      if (static_cast<std::size_t>(popcount64(b)) != witness.target->size()) return false;
      int i = witness.agents[0];
      return witness.kind == WitnessKind::envy ? envies(instance, partition, i, b)
                                               : tuple_blocks(instance, partition, i, b);
    }
    case WitnessKind::blocking_coalition:
    case WitnessKind::weakly_blocking_coalition: {
      if (witness.target) return false;
      Coalition b = to_mask(witness.agents);
      if (static_cast<std::size_t>(popcount64(b)) != witness.agents.size()) return false;
      auto current = detail::current_values(instance, partition);
      return detail::is_blocking(instance, current, b,
                                 witness.kind == WitnessKind::blocking_coalition
                                     ? BlockingMode::strict
                                     : BlockingMode::weak);
    }
  }
  return false;
}

}  // namespace comsoc
