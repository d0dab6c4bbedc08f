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
#include <sstream>

#include "comsoc/hedonic.hpp"

namespace comsoc {

std::string to_string(HedonicModel model) {
  switch (model) {
    case HedonicModel::additive: return "additive";
    case HedonicModel::fa: return "fa";
    case HedonicModel::ea: return "ea";
  }
  return "?";
}

std::string to_string(Concept stability) {
  switch (stability) {
    case Concept::nash: return "nash";
    case Concept::individual: return "individual";
    case Concept::core: return "core";
    case Concept::strict_core: return "strict_core";
  }
  return "?";
}

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::blocking_coalition: return "blocking_coalition";
    case WitnessKind::weakly_blocking_coalition: return "weakly_blocking_coalition";
    case WitnessKind::blocking_tuple: return "blocking_tuple";
    case WitnessKind::envy: return "envy";
  }
  return "?";
}

Coalition to_mask(std::span<const int> agents) {
  Coalition m = 0;
  for (int a : agents) {
    if (a < 0 || a >= kMaxAgents) throw DomainError("agent index out of range");
    m |= bit(a);
  }
  return m;
}

std::vector<int> to_agents(Coalition mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(lowest_bit(mask));
    mask &= mask - 1;
  }
  return out;
}

namespace {

void check_agent_count(int n) {
  if (n < 1 || n > kMaxAgents)
    throw DomainError("agent count " + std::to_string(n) + " outside [1, " +
                      std::to_string(kMaxAgents) + "]");
}

void check_arc(int n, int i, int j) {
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw DomainError("arc (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                      ") references an unknown agent");
  if (i == j) throw DomainError("self-arc at agent " + std::to_string(i + 1));
}

}  // namespace

HedonicInstance HedonicInstance::additive(int n, const std::vector<UtilityArc>& arcs) {
  check_agent_count(n);
  HedonicInstance h;
  h.n_ = n;
  h.model_ = HedonicModel::additive;
  h.util_.assign(static_cast<std::size_t>(n) * n, 0);
  std::vector<char> set(static_cast<std::size_t>(n) * n, 0);
  for (auto [i, j, u] : arcs) {
    check_arc(n, i, j);
    if (u > kMaxUtility || u < -kMaxUtility)
      throw DomainError("utility " + std::to_string(u) + " exceeds the supported magnitude");
    auto idx = static_cast<std::size_t>(i) * n + j;
    if (set[idx])
      throw DomainError("utility for (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                        ") given twice");
    set[idx] = 1;
    h.util_[idx] = u;
  }
  return h;
}

HedonicInstance HedonicInstance::friends_enemies(int n, HedonicModel model,
                                                 const std::vector<std::pair<int, int>>& arcs) {
  check_agent_count(n);
  if (model == HedonicModel::additive)
    throw DomainError("friends_enemies needs model fa or ea");
  HedonicInstance h;
  h.n_ = n;
  h.model_ = model;
  h.friends_.assign(n, 0);
  for (auto [i, j] : arcs) {
    check_arc(n, i, j);
    if (h.friends_[i] & bit(j))
      throw DomainError("friendship arc (" + std::to_string(i + 1) + ", " +
                        std::to_string(j + 1) + ") given twice");
    h.friends_[i] |= bit(j);
  }
  return h;
}

bool HedonicInstance::symmetric() const {
  if (!is_additive()) return false;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (utility(i, j) != utility(j, i)) return false;
  return true;
}

std::vector<HedonicInstance::UtilityArc> HedonicInstance::utility_arcs() const {
  std::vector<UtilityArc> out;
  if (!is_additive()) return out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (utility(i, j) != 0) out.emplace_back(i, j, utility(i, j));
  return out;
}

std::vector<std::pair<int, int>> HedonicInstance::friendship_arcs() const {
  std::vector<std::pair<int, int>> out;
  if (is_additive()) return out;
  for (int i = 0; i < n_; ++i)
    for (int j : to_agents(friends_[i])) out.emplace_back(i, j);
  return out;
}

Coalition HedonicInstance::out_neighbors(int i) const {
  if (!is_additive()) return friends_[i];
  Coalition m = 0;
  for (int j = 0; j < n_; ++j)
    if (utility(i, j) != 0) m |= bit(j);
  return m;
}

Valuation HedonicInstance::value(int agent, Coalition coalition) const {
  Coalition others = coalition & ~bit(agent);
  if (is_additive()) {
    std::int64_t s = 0;
    const std::int64_t* row = &util_[static_cast<std::size_t>(agent) * n_];
    for (Coalition m = others; m; m &= m - 1) s += row[lowest_bit(m)];
    return {s, 0};
  }
  std::int64_t f = popcount64(others & friends_[agent]);
  std::int64_t e = popcount64(others) - f;
  if (model_ == HedonicModel::fa) return {f, -e};
  return {-e, f};
}

Valuation HedonicInstance::best_possible(int agent) const {
  if (is_additive()) {
    std::int64_t s = 0;
    for (int j = 0; j < n_; ++j) s += std::max<std::int64_t>(0, utility(agent, j));
    return {s, 0};
  }
  std::int64_t f = popcount64(friends_[agent]);
  if (model_ == HedonicModel::fa) return {f, 0};
  return {0, f};
}

Partition::Partition(int n, std::vector<std::vector<int>> coalitions) : n_(n) {
  check_agent_count(n);
  owner_.assign(n, -1);
  for (auto& c : coalitions) {
    if (c.empty()) throw DomainError("empty coalition");
    std::sort(c.begin(), c.end());
  }
  std::sort(coalitions.begin(), coalitions.end());
  for (std::size_t idx = 0; idx < coalitions.size(); ++idx) {
    for (int a : coalitions[idx]) {
      if (a < 0 || a >= n) throw DomainError("agent " + std::to_string(a + 1) + " out of range");
      if (owner_[a] >= 0)
        throw DomainError("agent " + std::to_string(a + 1) + " appears in two coalitions");
      owner_[a] = static_cast<int>(idx);
    }
  }
  for (int a = 0; a < n; ++a)
    if (owner_[a] < 0) throw DomainError("agent " + std::to_string(a + 1) + " is in no coalition");
  coalitions_ = std::move(coalitions);
  for (const auto& c : coalitions_) masks_.push_back(to_mask(c));
}

Partition Partition::from_masks(int n, const std::vector<Coalition>& masks) {
  std::vector<std::vector<int>> c;
  for (Coalition m : masks) c.push_back(to_agents(m));
  return Partition(n, std::move(c));
}

Partition Partition::singletons(int n) {
  std::vector<std::vector<int>> c;
  for (int i = 0; i < n; ++i) c.push_back({i});
  return Partition(n, std::move(c));
}

Partition Partition::grand(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return Partition(n, {all});
}

int Partition::kappa() const {
  std::size_t k = 0;
  for (const auto& c : coalitions_) k = std::max(k, c.size());
  return static_cast<int>(k);
}

std::string Partition::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coalitions_.size(); ++i) {
    if (i) os << ",";
    os << "{";
    for (std::size_t j = 0; j < coalitions_[i].size(); ++j) os << (j ? "," : "") << coalitions_[i][j] + 1;
    os << "}";
  }
  return os.str();
}

Preference compare(const HedonicInstance& instance, int agent, Coalition s, Coalition t) {
  if (agent < 0 || agent >= instance.num_agents())
    throw DomainError("agent " + std::to_string(agent + 1) + " out of range");
  if (!(s & bit(agent)) || !(t & bit(agent)))
    throw DomainError("agent " + std::to_string(agent + 1) + " must belong to both coalitions");
  Valuation vs = instance.value(agent, s), vt = instance.value(agent, t);
  if (vs > vt) return Preference::prefers;
  if (vs < vt) return Preference::dispreferred;
  return Preference::indifferent;
}

Preference compare(const HedonicInstance& instance, int agent, std::span<const int> s,
                   std::span<const int> t) {
  return compare(instance, agent, to_mask(s), to_mask(t));
}

}  // namespace comsoc
