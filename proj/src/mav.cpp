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

#include "mw_internal.hpp"

namespace comsoc {

namespace {

int worst_distance(const PreferenceProfile& p, const std::vector<int>& committee,
                   std::span<const int> offsets) {
  int worst = 0;
  std::vector<char> in(p.num_alternatives(), 0);
  for (int a : committee) in[a] = 1;
  for (int i = 0; i < p.num_voters(); ++i) {
    int inside = 0;
    for (int a : p.approval_set(i))
      if (in[a]) ++inside;
    int d = static_cast<int>(p.approval_set(i).size()) - inside +
            static_cast<int>(committee.size()) - inside;
    worst = std::max(worst, offsets[i] + d);
  }
  return worst;
}

}  // namespace

std::vector<int> exact_mav_inner_solver(const PreferenceProfile& residual, int seats,
                                        std::span<const int> offsets) {
  std::vector<int> best;
  int best_value = std::numeric_limits<int>::max();
  detail::for_each_combination(residual.num_alternatives(), seats, [&](const std::vector<int>& c) {
    int v = worst_distance(residual, c, offsets);
    if (v < best_value) {
      best_value = v;
      best = c;
    }
    return true;
  });
  return best;
}

CommitteeSolution solve_mav_with_deletion_set(const MultiWinnerInstance& instance,
                                              std::span<const int> deleted_in,
                                              const MavInnerSolver& inner) {
  instance.validate();
  const auto& p = instance.profile;
  if (!p.is_approval()) throw UnsupportedKind("MAV needs an approval profile");
  detail::check_committee(p, deleted_in);
  std::vector<int> deleted(deleted_in.begin(), deleted_in.end());
  std::sort(deleted.begin(), deleted.end());

  PreferenceProfile residual = p.without_alternatives(deleted);
  if (!recognize_sp(residual) && !recognize_sc(residual))
    throw ContractError("profile without the deletion set is neither single-peaked nor single-crossing");

  std::vector<int> survivors;
  {
    std::vector<char> gone(p.num_alternatives(), 0);
    for (int a : deleted) gone[a] = 1;
    for (int a = 0; a < p.num_alternatives(); ++a)
      if (!gone[a]) survivors.push_back(a);
  }
  const int d = static_cast<int>(deleted.size());
  const int n = p.num_voters();
  const int k = instance.k;

  std::optional<std::vector<int>> best;
  std::int64_t best_value = 0;
  // Guess which deleted alternatives sit inside the committee.
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << d); ++f) {
    const int inside = popcount64(f);
    const int seats = k - inside;
    if (seats < 0 || seats > residual.num_alternatives()) continue;
    std::vector<int> offsets(n, 0);
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < d; ++t) {
        bool approved = p.approves(i, deleted[t]);
        bool chosen = (f >> t) & 1u;
        if (approved != chosen) ++offsets[i];
      }
    std::vector<int> part = inner(residual, seats, offsets);
    if (static_cast<int>(part.size()) != seats)
      throw ContractError("inner MAV solver returned the wrong number of seats");
    std::vector<int> committee;
    for (int t = 0; t < d; ++t)
      if ((f >> t) & 1u) committee.push_back(deleted[t]);
    for (int a : part) committee.push_back(survivors.at(a));
    std::sort(committee.begin(), committee.end());
    std::int64_t value = mav_distance(p, committee);
    if (!best || value < best_value || (value == best_value && committee < *best)) {
      best = std::move(committee);
      best_value = value;
    }
  }
  return make_solution(p, Rule::mav, *best);
}

}  // namespace comsoc
