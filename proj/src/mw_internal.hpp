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

#include <cstdint>
#include <vector>

#include "comsoc/multiwinner.hpp"

namespace comsoc::detail {

// Visits all k-subsets of {0..m-1} in lexicographic order; stops early when
// the visitor returns false. Returns false iff stopped early.
template <class Visit>
bool for_each_combination(int m, int k, Visit&& visit) {
  if (k < 0 || k > m) return true;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (!visit(static_cast<const std::vector<int>&>(c))) return false;
    int i = k - 1;
    while (i >= 0 && c[i] == m - k + i) --i;
    if (i < 0) return true;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// Per-committee objective evaluation for enumeration-style solvers. PAV
// values are exact; every other rule is an integer.
class CommitteeEvaluator {
 public:
  CommitteeEvaluator(const PreferenceProfile& profile, Rule rule);
  Rational evaluate(const std::vector<int>& committee) const;

 private:
  const PreferenceProfile& p_;
  Rule rule_;
  std::vector<Rational> harmonic_;         // PAV
  std::vector<std::uint64_t> voter_bits_;  // approval sets as masks when m <= 64
};

// Throws DomainError unless committee is a set of valid alternatives.
void check_committee(const PreferenceProfile& profile, std::span<const int> committee);

}  // namespace comsoc::detail
