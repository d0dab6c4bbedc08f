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
#include <cstdint>
#include <numeric>

#include "comsoc/profile.hpp"

namespace comsoc {

namespace {

// Depth-first search over orderings of `count` <= 20 elements in lexicographic
// order. Feasibility of extending a prefix must depend only on (placed set,
// last element), so failed states are memoized and the first complete order
// found is the lexicographically smallest valid one.
template <class Model>
class LexOrderSearch {
 public:
  LexOrderSearch(int count, Model& model)
      : count_(count), model_(model), failed_((std::size_t{1} << count) * count, false) {}

  std::optional<std::vector<int>> run() {
    std::vector<int> seq;
    if (dfs(0, -1, seq)) return seq;
    return std::nullopt;
  }

 private:
  bool dfs(std::uint32_t mask, int last, std::vector<int>& seq) {
    if (static_cast<int>(seq.size()) == count_) return true;
    if (last >= 0 && failed_[static_cast<std::size_t>(mask) * count_ + last]) return false;
    for (int c = 0; c < count_; ++c) {
      if (mask >> c & 1u) continue;
      if (!model_.can_append(mask, last, c)) continue;
      model_.push(last, c);
      seq.push_back(c);
      if (dfs(mask | (1u << c), c, seq)) return true;
      seq.pop_back();
      model_.pop();
    }
    if (last >= 0) failed_[static_cast<std::size_t>(mask) * count_ + last] = true;
    return false;
  }

  int count_;
  Model& model_;
  std::vector<bool> failed_;
};

// Linear single-peakedness, built left to right. A voter is "rising" while the
// last placed alternative is the best placed so far; once falling, every later
// alternative must be worse than the previous one.
class LinearSpModel {
 public:
  explicit LinearSpModel(const PreferenceProfile& p) : p_(p) {
    stack_.push_back(std::vector<char>(p.num_voters(), 1));
  }
  bool can_append(std::uint32_t, int last, int c) const {
    if (last < 0) return true;
    const auto& rising = stack_.back();
    for (int v = 0; v < p_.num_voters(); ++v)
      if (!rising[v] && p_.rank(v, c) < p_.rank(v, last)) return false;
    return true;
  }
  void push(int last, int c) {
    auto next = stack_.back();
    if (last >= 0)
      for (int v = 0; v < p_.num_voters(); ++v)
        if (p_.rank(v, c) > p_.rank(v, last)) next[v] = 0;
    stack_.push_back(std::move(next));
  }
  void pop() { stack_.pop_back(); }

 private:
  const PreferenceProfile& p_;
  std::vector<std::vector<char>> stack_;
};

// Consecutive ones for every row (a bitmask over columns) under the column
// order being built.
class ConsecutiveOnesModel {
 public:
  explicit ConsecutiveOnesModel(std::vector<std::uint32_t> rows) : rows_(std::move(rows)) {}
  bool can_append(std::uint32_t placed, int last, int c) const {
    if (last < 0) return true;
    const std::uint32_t lb = 1u << last, cb = 1u << c;
    for (std::uint32_t r : rows_) {
      if ((r & lb) && !(r & cb) && (r & ~placed)) return false;   // leaving an unfinished row
      if ((r & cb) && !(r & lb) && (r & placed)) return false;    // re-entering a started row
    }
    return true;
  }
  void push(int, int) {}
  void pop() {}

 private:
  std::vector<std::uint32_t> rows_;
};

std::optional<std::vector<int>> consecutive_ones_order(int columns,
                                                       std::vector<std::uint32_t> rows) {
  if (columns == 0) return std::vector<int>{};
  if (columns > kMaxApprovalColumns)
    throw ResourceLimit("approval recognition supports at most " +
                        std::to_string(kMaxApprovalColumns) + " columns, got " +
                        std::to_string(columns));
  // Rows with at most one entry constrain nothing.
  std::erase_if(rows, [](std::uint32_t r) { return popcount64(r) <= 1; });
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  ConsecutiveOnesModel model(std::move(rows));
  return LexOrderSearch<ConsecutiveOnesModel>(columns, model).run();
}

// Two-ended placement for linear profiles with many alternatives. Every voter's
// worst remaining alternative must sit at an end of the remaining interval, so
// at most two candidates exist per step and each has at most two sides.
class TwoEndedSp {
 public:
  explicit TwoEndedSp(const PreferenceProfile& p)
      : p_(p), m_(p.num_alternatives()), remaining_(m_, 1) {}

  std::optional<std::vector<int>> run() {
    if (dfs(m_)) return result_;
    return std::nullopt;
  }

 private:
  int worst_remaining(int v) const {
    auto o = p_.order(v);
    for (int r = m_ - 1; r >= 0; --r)
      if (remaining_[o[r]]) return o[r];
    return -1;
  }

  // Necessary condition: the placed ends, read as one sequence, stay unimodal
  // for every voter.
  bool ends_unimodal() const {
    std::vector<int> seq = left_;
    for (auto it = right_.rbegin(); it != right_.rend(); ++it) seq.push_back(*it);
    for (int v = 0; v < p_.num_voters(); ++v) {
      bool falling = false;
      for (std::size_t i = 1; i < seq.size(); ++i) {
        bool worse = p_.rank(v, seq[i]) > p_.rank(v, seq[i - 1]);
        if (falling && !worse) return false;
        if (worse) falling = true;
      }
    }
    return true;
  }

  bool dfs(int left) {
    if (++nodes_ > kNodeCap) throw ResourceLimit("single-peaked placement search too large");
    if (left == 0) {
      result_ = assemble();
      return is_single_peaked_along(p_, result_);
    }
    std::vector<int> worst;
    for (int v = 0; v < p_.num_voters(); ++v) {
      int w = worst_remaining(v);
      if (std::find(worst.begin(), worst.end(), w) == worst.end()) worst.push_back(w);
    }
    if (worst.empty()) {
      // No voters: any order works; place ascending.
      for (int a = 0; a < m_; ++a)
        if (remaining_[a]) worst.push_back(a);
      worst.resize(1);
    }
    if (worst.size() > 2) return false;
    std::sort(worst.begin(), worst.end());
    if (worst.size() == 2) {
      for (int flip = 0; flip < 2; ++flip) {
        int a = worst[flip], b = worst[1 - flip];
        if (place(a, b, left)) return true;
      }
      return false;
    }
    int w = worst[0];
    return place(w, -1, left) || place(-1, w, left);
  }

  bool place(int l, int r, int left) {
    int used = 0;
    if (l >= 0) { left_.push_back(l); remaining_[l] = 0; ++used; }
    if (r >= 0) { right_.push_back(r); remaining_[r] = 0; ++used; }
    bool ok = ends_unimodal() && dfs(left - used);
    if (l >= 0) { left_.pop_back(); remaining_[l] = 1; }
    if (r >= 0) { right_.pop_back(); remaining_[r] = 1; }
    return ok;
  }

  std::vector<int> assemble() const {
    std::vector<int> axis = left_;
    for (auto it = right_.rbegin(); it != right_.rend(); ++it) axis.push_back(*it);
    return axis;
  }

  static constexpr std::uint64_t kNodeCap = 50'000'000;
  const PreferenceProfile& p_;
  int m_;
  std::vector<char> remaining_;
  std::vector<int> left_, right_, result_;
  std::uint64_t nodes_ = 0;
};

std::vector<int> lex_min_with_reverse(std::vector<int> order) {
  std::vector<int> rev(order.rbegin(), order.rend());
  return std::min(order, rev);
}

std::optional<std::vector<int>> linear_sc_order(const PreferenceProfile& p) {
  const int n = p.num_voters();
  const int m = p.num_alternatives();
  if (n == 0) return std::vector<int>{};
  auto disagreement = [&](int u, int v) {
    int d = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (p.prefers(u, a, b) != p.prefers(v, a, b)) ++d;
    return d;
  };
  // The voter farthest from voter 0 must be an end of any single-crossing
  // order; sorting by distance from it recovers the order up to identical
  // voters, which must be contiguous.
  int end = 0, best = -1;
  for (int v = 0; v < n; ++v) {
    int d = disagreement(0, v);
    if (d > best) { best = d; end = v; }
  }
  std::vector<int> dist(n);
  for (int v = 0; v < n; ++v) dist[v] = disagreement(end, v);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] < dist[b]; });
  if (!is_single_crossing_along(p, order)) return std::nullopt;

  // Blocks of equal distance are identical voters; the lexicographically
  // smallest order lists each block ascending, in one of two orientations.
  std::vector<std::vector<int>> blocks;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || dist[order[i]] != dist[order[i - 1]]) blocks.emplace_back();
    blocks.back().push_back(order[i]);
  }
  std::vector<int> fwd, bwd;
  for (const auto& b : blocks) fwd.insert(fwd.end(), b.begin(), b.end());
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) bwd.insert(bwd.end(), it->begin(), it->end());
  return std::min(fwd, bwd);
}

}  // namespace

std::optional<Axis> recognize_sp(const PreferenceProfile& profile) {
  const int m = profile.num_alternatives();
  std::optional<std::vector<int>> order;
  if (profile.is_linear()) {
    if (m <= 20) {
      LinearSpModel model(profile);
      order = LexOrderSearch<LinearSpModel>(m, model).run();
    } else {
      order = TwoEndedSp(profile).run();
      if (order) order = lex_min_with_reverse(*order);
    }
  } else {
    std::vector<std::uint32_t> rows;
    if (m <= kMaxApprovalColumns)
      for (int v = 0; v < profile.num_voters(); ++v) {
        std::uint32_t r = 0;
        for (int a : profile.approval_set(v)) r |= 1u << a;
        rows.push_back(r);
      }
    order = consecutive_ones_order(m, std::move(rows));
  }
  if (!order) return std::nullopt;
  Axis axis{AxisTarget::alternatives, std::move(*order)};
  if (!verify_axis(profile, axis)) throw Error("internal: recognized axis fails verification");
  return axis;
}

std::optional<Axis> recognize_sc(const PreferenceProfile& profile) {
  const int n = profile.num_voters();
  std::optional<std::vector<int>> order;
  if (profile.is_linear()) {
    order = linear_sc_order(profile);
  } else {
    std::vector<std::uint32_t> rows;
    if (n <= kMaxApprovalColumns)
      for (int a = 0; a < profile.num_alternatives(); ++a) {
        std::uint32_t r = 0;
        for (int v = 0; v < n; ++v)
          if (profile.approves(v, a)) r |= 1u << v;
        rows.push_back(r);
      }
    order = consecutive_ones_order(n, std::move(rows));
  }
  if (!order) return std::nullopt;
  Axis axis{AxisTarget::voters, std::move(*order)};
  if (!verify_axis(profile, axis)) throw Error("internal: recognized axis fails verification");
  return axis;
}

}  // namespace comsoc
