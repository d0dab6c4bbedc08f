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

// Worked examples used across the test suites, 0-based.

#include "comsoc/hedonic.hpp"
#include "comsoc/profile.hpp"

namespace fixtures {

using comsoc::PreferenceProfile;

// Four alternatives, three voters; single-peaked along a1 a2 a3 a4 and
// single-crossing along v1 v2 v3.
inline PreferenceProfile small_linear() {
  return PreferenceProfile::linear(4, {{2, 3, 1, 0}, {1, 2, 3, 0}, {0, 1, 2, 3}});
}

inline PreferenceProfile small_approval() {
  return PreferenceProfile::approval(4, {{1, 2}, {0}, {2, 3}});
}

// Five alternatives, four voters, used for the k = 2 rule comparison.
inline PreferenceProfile rules_linear() {
  return PreferenceProfile::linear(
      5, {{0, 1, 2, 3, 4}, {3, 2, 1, 4, 0}, {3, 2, 4, 1, 0}, {3, 4, 2, 1, 0}});
}

inline PreferenceProfile rules_approval() {
  return PreferenceProfile::approval(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1}, {4}});
}

// Four alternatives, five voters: neither single-peaked nor single-crossing.
inline PreferenceProfile cyclic_approval() {
  return PreferenceProfile::approval(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {0, 3}});
}

// Additive game on four agents.
inline comsoc::HedonicInstance additive_four() {
  return comsoc::HedonicInstance::additive(
      4, {{0, 1, 2}, {0, 2, -2}, {1, 3, 1}, {1, 2, -1}, {2, 0, 1}, {2, 3, -1}});
}

inline std::vector<std::pair<int, int>> friendship_arcs() {
  return {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {3, 1}, {2, 3}};
}

inline comsoc::HedonicInstance friends_fa() {
  return comsoc::HedonicInstance::friends_enemies(4, comsoc::HedonicModel::fa, friendship_arcs());
}

inline comsoc::HedonicInstance friends_ea() {
  return comsoc::HedonicInstance::friends_enemies(4, comsoc::HedonicModel::ea, friendship_arcs());
}

}  // namespace fixtures
