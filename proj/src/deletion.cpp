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

#include "comsoc/profile.hpp"

namespace comsoc {

namespace {

class DeletionSearch {
 public:
  DeletionSearch(const PreferenceProfile& p, Structure s, DeletionMode mode,
                 const SearchLimits& limits)
      : p_(p), structure_(s), mode_(mode), counter_(limits),
        total_(mode == DeletionMode::voters ? p.num_voters() : p.num_alternatives()) {}

  // Residual profile keeping exactly the listed elements of the deletion dimension.
  PreferenceProfile keep_only(const std::vector<int>& keep) const {
    if (mode_ == DeletionMode::alternatives) return p_.restrict_alternatives(keep);
    std::vector<int> drop;
    std::size_t j = 0;
    for (int v = 0; v < total_; ++v) {
      if (j < keep.size() && keep[j] == v) ++j;
      else drop.push_back(v);
    }
    return p_.without_voters(drop);
  }

  std::optional<Axis> recognize(const std::vector<int>& keep) {
    counter_.tick();
    PreferenceProfile r = keep_only(keep);
    return structure_ == Structure::sp ? recognize_sp(r) : recognize_sc(r);
  }

  // Inclusion-minimal subset of `keep` whose profile is still not structured.
  std::vector<int> obstruction(std::vector<int> keep) {
    for (std::size_t i = 0; i < keep.size();) {
      std::vector<int> smaller = keep;
      smaller.erase(smaller.begin() + static_cast<long>(i));
      if (!recognize(smaller)) keep = std::move(smaller);
      else ++i;
    }
    return keep;
  }

  std::optional<std::vector<int>> search(int budget) {
    for (int d = 0; d <= budget; ++d) {
      best_.reset();
      std::vector<char> deleted(total_, 0), forbidden(total_, 0);
      dfs(deleted, forbidden, d);
      if (best_) return best_;
    }
    return std::nullopt;
  }

 private:
  void dfs(std::vector<char>& deleted, std::vector<char>& forbidden, int depth) {
    std::vector<int> keep;
    for (int e = 0; e < total_; ++e)
      if (!deleted[e]) keep.push_back(e);
    if (recognize(keep)) {
      std::vector<int> removed;
      for (int e = 0; e < total_; ++e)
        if (deleted[e]) removed.push_back(e);
      if (!best_ || removed < *best_) best_ = std::move(removed);
      return;
    }
    if (depth == 0) return;
    // Any deletion set must hit every obstruction. Branch on its members,
    // forbidding earlier siblings so each set is generated once.
    std::vector<int> obs = obstruction(keep);
    std::vector<int> newly_forbidden;
    for (int e : obs) {
      if (forbidden[e]) continue;
      deleted[e] = 1;
      dfs(deleted, forbidden, depth - 1);
      deleted[e] = 0;
      forbidden[e] = 1;
      newly_forbidden.push_back(e);
    }
    for (int e : newly_forbidden) forbidden[e] = 0;
  }

  const PreferenceProfile& p_;
  Structure structure_;
  DeletionMode mode_;
  NodeCounter counter_;
  int total_;
  std::optional<std::vector<int>> best_;
};

}  // namespace

std::optional<DeletionCertificate> deletion_distance(const PreferenceProfile& profile,
                                                     Structure structure, DeletionMode mode,
                                                     int budget, const SearchLimits& limits) {
  const int total = mode == DeletionMode::voters ? profile.num_voters()
                                                 : profile.num_alternatives();
  if (budget < 0 || budget > total)
    throw ContractError("deletion budget " + std::to_string(budget) + " outside [0, " +
                        std::to_string(total) + "]");
  DeletionSearch search(profile, structure, mode, limits);
  auto removed = search.search(budget);
  if (!removed) return std::nullopt;

  DeletionCertificate cert;
  cert.mode = mode;
  cert.removed = *removed;
  PreferenceProfile residual = mode == DeletionMode::voters
                                   ? profile.without_voters(cert.removed)
                                   : profile.without_alternatives(cert.removed);
  auto axis = structure == Structure::sp ? recognize_sp(residual) : recognize_sc(residual);
  if (!axis) throw Error("internal: deletion set does not certify");

  // Map residual indices back to the original numbering.
  bool renumbered = (mode == DeletionMode::voters) == (axis->target == AxisTarget::voters);
  if (renumbered) {
    std::vector<int> survivors;
    std::vector<char> gone(total, 0);
    for (int e : cert.removed) gone[e] = 1;
    for (int e = 0; e < total; ++e)
      if (!gone[e]) survivors.push_back(e);
    for (int& x : axis->order) x = survivors[x];
  }
  cert.axis = std::move(*axis);
  return cert;
}

bool verify_deletion_certificate(const PreferenceProfile& profile, Structure structure,
                                 const DeletionCertificate& cert) {
  const int total = cert.mode == DeletionMode::voters ? profile.num_voters()
                                                      : profile.num_alternatives();
  std::vector<char> gone(total, 0);
  for (int e : cert.removed) {
    if (e < 0 || e >= total || gone[e]) return false;
    gone[e] = 1;
  }
  PreferenceProfile residual = cert.mode == DeletionMode::voters
                                   ? profile.without_voters(cert.removed)
                                   : profile.without_alternatives(cert.removed);
  AxisTarget want = structure == Structure::sp ? AxisTarget::alternatives : AxisTarget::voters;
  if (cert.axis.target != want) return false;
  Axis local = cert.axis;
  bool renumbered = (cert.mode == DeletionMode::voters) == (want == AxisTarget::voters);
  if (renumbered) {
    std::vector<int> local_index(total, -1);
    int next = 0;
    for (int e = 0; e < total; ++e)
      if (!gone[e]) local_index[e] = next++;
    for (int& x : local.order) {
      if (x < 0 || x >= total || local_index[x] < 0) return false;
      x = local_index[x];
    }
  }
  return verify_axis(residual, local);
}

}  // namespace comsoc
