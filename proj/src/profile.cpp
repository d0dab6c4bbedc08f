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
#include <string>

#include "comsoc/profile.hpp"

namespace comsoc {

PreferenceProfile PreferenceProfile::linear(int m, std::vector<std::vector<int>> orders) {
  if (m < 0) throw DomainError("negative alternative count");
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const auto& o = orders[i];
    if (static_cast<int>(o.size()) != m)
      throw DomainError("voter " + std::to_string(i + 1) + " ranks " +
                        std::to_string(o.size()) + " alternatives, expected " +
                        std::to_string(m));
    std::vector<char> seen(m, 0);
    for (int a : o) {
      if (a < 0 || a >= m)
        throw DomainError("voter " + std::to_string(i + 1) + " ranks unknown alternative " +
                          std::to_string(a + 1));
      if (seen[a])
        throw DomainError("voter " + std::to_string(i + 1) + " ranks alternative " +
                          std::to_string(a + 1) + " twice");
      seen[a] = 1;
    }
  }
  PreferenceProfile p;
  p.kind_ = ProfileKind::linear;
  p.m_ = m;
  p.voters_ = std::move(orders);
  p.index();
  return p;
}

PreferenceProfile PreferenceProfile::approval(int m, std::vector<std::vector<int>> sets) {
  if (m < 0) throw DomainError("negative alternative count");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto& s = sets[i];
    std::sort(s.begin(), s.end());
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] < 0 || s[j] >= m)
        throw DomainError("voter " + std::to_string(i + 1) + " approves unknown alternative " +
                          std::to_string(s[j] + 1));
      if (j > 0 && s[j] == s[j - 1])
        throw DomainError("voter " + std::to_string(i + 1) + " approves alternative " +
                          std::to_string(s[j] + 1) + " twice");
    }
  }
  PreferenceProfile p;
  p.kind_ = ProfileKind::approval;
  p.m_ = m;
  p.voters_ = std::move(sets);
  p.index();
  return p;
}

void PreferenceProfile::index() {
  const int n = num_voters();
  if (kind_ == ProfileKind::linear) {
    pos_.assign(static_cast<std::size_t>(n) * m_, 0);
    for (int i = 0; i < n; ++i)
      for (int r = 0; r < m_; ++r) pos_[i * m_ + voters_[i][r]] = r;
  } else {
    member_.assign(static_cast<std::size_t>(n) * m_, 0);
    for (int i = 0; i < n; ++i)
      for (int a : voters_[i]) member_[i * m_ + a] = 1;
  }
}

std::span<const int> PreferenceProfile::order(int voter) const {
  if (kind_ != ProfileKind::linear) throw UnsupportedKind("profile has no rankings");
  return voters_.at(voter);
}

std::span<const int> PreferenceProfile::approval_set(int voter) const {
  if (kind_ != ProfileKind::approval) throw UnsupportedKind("profile has no approval sets");
  return voters_.at(voter);
}

int PreferenceProfile::max_approval_size() const {
  if (kind_ != ProfileKind::approval) throw UnsupportedKind("profile has no approval sets");
  std::size_t b = 0;
  for (const auto& s : voters_) b = std::max(b, s.size());
  return static_cast<int>(b);
}

PreferenceProfile PreferenceProfile::without_voters(std::span<const int> removed) const {
  std::vector<char> drop(num_voters(), 0);
  for (int v : removed) drop.at(v) = 1;
  std::vector<std::vector<int>> rest;
  for (int i = 0; i < num_voters(); ++i)
    if (!drop[i]) rest.push_back(voters_[i]);
  return kind_ == ProfileKind::linear ? linear(m_, std::move(rest)) : approval(m_, std::move(rest));
}

PreferenceProfile PreferenceProfile::without_alternatives(std::span<const int> removed) const {
  std::vector<char> drop(m_, 0);
  for (int a : removed) drop.at(a) = 1;
  std::vector<int> keep;
  for (int a = 0; a < m_; ++a)
    if (!drop[a]) keep.push_back(a);
  return restrict_alternatives(keep);
}

PreferenceProfile PreferenceProfile::restrict_alternatives(std::span<const int> keep) const {
  std::vector<int> renum(m_, -1);
  for (std::size_t j = 0; j < keep.size(); ++j) renum.at(keep[j]) = static_cast<int>(j);
  std::vector<std::vector<int>> rest;
  rest.reserve(voters_.size());
  for (const auto& v : voters_) {
    std::vector<int> row;
    for (int a : v)
      if (renum[a] >= 0) row.push_back(renum[a]);
    rest.push_back(std::move(row));
  }
  const int mm = static_cast<int>(keep.size());
  return kind_ == ProfileKind::linear ? linear(mm, std::move(rest)) : approval(mm, std::move(rest));
}

int rank(const PreferenceProfile& profile, int voter, int alt) {
  if (!profile.is_linear()) throw UnsupportedKind("rank is defined for linear profiles only");
  if (voter < 0 || voter >= profile.num_voters())
    throw DomainError("voter index " + std::to_string(voter + 1) + " out of range");
  if (alt < 0 || alt >= profile.num_alternatives())
    throw DomainError("alternative index " + std::to_string(alt + 1) + " out of range");
  return profile.rank(voter, alt);
}

namespace {

bool is_permutation_of(std::span<const int> order, int count) {
  if (static_cast<int>(order.size()) != count) return false;
  std::vector<char> seen(count, 0);
  for (int x : order) {
    if (x < 0 || x >= count || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace

bool is_single_peaked_along(const PreferenceProfile& profile, std::span<const int> alt_order) {
  const int m = profile.num_alternatives();
  if (!is_permutation_of(alt_order, m)) return false;
  if (profile.is_linear()) {
    // Unimodal along the axis: once preference drops it keeps dropping.
    for (int i = 0; i < profile.num_voters(); ++i) {
      bool falling = false;
      for (int p = 1; p < m; ++p) {
        bool worse = profile.rank(i, alt_order[p]) > profile.rank(i, alt_order[p - 1]);
        if (falling && !worse) return false;
        if (worse) falling = true;
      }
    }
    return true;
  }
  std::vector<int> pos(m);
  for (int p = 0; p < m; ++p) pos[alt_order[p]] = p;
  for (int i = 0; i < profile.num_voters(); ++i) {
    auto s = profile.approval_set(i);
    if (s.empty()) continue;
    int lo = m, hi = -1;
    for (int a : s) {
      lo = std::min(lo, pos[a]);
      hi = std::max(hi, pos[a]);
    }
    if (hi - lo + 1 != static_cast<int>(s.size())) return false;
  }
  return true;
}

bool is_single_crossing_along(const PreferenceProfile& profile, std::span<const int> voter_order) {
  const int n = profile.num_voters();
  const int m = profile.num_alternatives();
  if (!is_permutation_of(voter_order, n)) return false;
  if (profile.is_linear()) {
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        int changes = 0;
        for (int p = 1; p < n; ++p)
          if (profile.prefers(voter_order[p], a, b) != profile.prefers(voter_order[p - 1], a, b))
            ++changes;
        if (changes > 1) return false;
      }
    return true;
  }
  // Supporters of each alternative form a contiguous run of the voter order.
  for (int a = 0; a < m; ++a) {
    int runs = 0;
    for (int p = 0; p < n; ++p)
      if (profile.approves(voter_order[p], a) && (p == 0 || !profile.approves(voter_order[p - 1], a)))
        ++runs;
    if (runs > 1) return false;
  }
  return true;
}

bool verify_axis(const PreferenceProfile& profile, const Axis& axis) {
  return axis.target == AxisTarget::alternatives
             ? is_single_peaked_along(profile, axis.order)
             : is_single_crossing_along(profile, axis.order);
}

}  // namespace comsoc
