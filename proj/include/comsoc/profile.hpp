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

#include <optional>
#include <span>
#include <vector>

#include "comsoc/common.hpp"

namespace comsoc {

enum class ProfileKind { linear, approval };

// n voters over m alternatives, either as linear rankings or approval sets.
// Alternatives and voters are 0-based here; file formats and CLI output are
// 1-based. Immutable after construction.
class PreferenceProfile {
 public:
  PreferenceProfile() = default;

  // orders[i] lists alternatives from most to least preferred.
  static PreferenceProfile linear(int m, std::vector<std::vector<int>> orders);
  // sets[i] lists the approved alternatives of voter i in any order.
  static PreferenceProfile approval(int m, std::vector<std::vector<int>> sets);

  ProfileKind kind() const { return kind_; }
  bool is_linear() const { return kind_ == ProfileKind::linear; }
  bool is_approval() const { return kind_ == ProfileKind::approval; }
  int num_alternatives() const { return m_; }
  int num_voters() const { return static_cast<int>(voters_.size()); }

  // Linear kind only.
  std::span<const int> order(int voter) const;
  int rank(int voter, int alt) const { return pos_[voter * m_ + alt]; }
  bool prefers(int voter, int a, int b) const { return rank(voter, a) < rank(voter, b); }

  // Approval kind only. Sets are sorted ascending.
  std::span<const int> approval_set(int voter) const;
  bool approves(int voter, int alt) const { return member_[voter * m_ + alt] != 0; }
  // Largest approval-set size (the parameter b).
  int max_approval_size() const;

  // Residual profile after removing voters or alternatives; alternatives are
  // renumbered densely in ascending original order.
  PreferenceProfile without_voters(std::span<const int> removed) const;
  PreferenceProfile without_alternatives(std::span<const int> removed) const;
  // Keeps only the listed alternatives (ascending), renumbered 0..|keep|-1.
  PreferenceProfile restrict_alternatives(std::span<const int> keep) const;

  friend bool operator==(const PreferenceProfile& a, const PreferenceProfile& b) {
    return a.kind_ == b.kind_ && a.m_ == b.m_ && a.voters_ == b.voters_;
  }

 private:
  void index();

  ProfileKind kind_ = ProfileKind::linear;
  int m_ = 0;
  std::vector<std::vector<int>> voters_;  // orders or sorted sets
  std::vector<int> pos_;                  // linear: n*m rank table
  std::vector<unsigned char> member_;     // approval: n*m membership table
};

// Checked rank query: number of alternatives the voter prefers to alt.
int rank(const PreferenceProfile& profile, int voter, int alt);

enum class AxisTarget { alternatives, voters };

struct Axis {
  AxisTarget target = AxisTarget::alternatives;
  std::vector<int> order;

  friend bool operator==(const Axis&, const Axis&) = default;
};

// Definitional predicates.
bool is_single_peaked_along(const PreferenceProfile& profile, std::span<const int> alt_order);
bool is_single_crossing_along(const PreferenceProfile& profile, std::span<const int> voter_order);
bool verify_axis(const PreferenceProfile& profile, const Axis& axis);

// Exact recognition. The returned axis is the lexicographically smallest valid
// one. Approval recognition is exponential in the number of columns and throws
// ResourceLimit above kMaxApprovalColumns; linear recognition is polynomial.
std::optional<Axis> recognize_sp(const PreferenceProfile& profile);
std::optional<Axis> recognize_sc(const PreferenceProfile& profile);

inline constexpr int kMaxApprovalColumns = 20;

enum class Structure { sp, sc };
enum class DeletionMode { voters, alternatives };

struct DeletionCertificate {
  DeletionMode mode = DeletionMode::voters;
  std::vector<int> removed;  // original indices, ascending
  Axis axis;                 // original indices of the surviving elements
};

// Minimum deletion set of size <= budget making the profile SP/SC, or nullopt.
// Among minimum sets the lexicographically smallest is returned.
std::optional<DeletionCertificate> deletion_distance(const PreferenceProfile& profile,
                                                     Structure structure, DeletionMode mode,
                                                     int budget,
                                                     const SearchLimits& limits = {});

// Checks a certificate from scratch against the original profile.
bool verify_deletion_certificate(const PreferenceProfile& profile, Structure structure,
                                 const DeletionCertificate& cert);

}  // namespace comsoc
