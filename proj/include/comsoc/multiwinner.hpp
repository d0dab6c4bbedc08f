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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "comsoc/common.hpp"
#include "comsoc/profile.hpp"

namespace comsoc {

enum class Rule { monroe, cc, mav, pav };

std::string to_string(Rule rule);
Rule parse_rule(const std::string& name);

struct MultiWinnerInstance {
  PreferenceProfile profile;
  int k = 1;
  // Misrepresentation bound R (Monroe, CC, MAV) or score bound S (PAV).
  std::optional<Rational> bound;

  // Throws DomainError unless 1 <= k <= m and the bound is non-negative.
  void validate() const;
};

struct CommitteeSolution {
  Rule rule = Rule::cc;
  std::vector<int> committee;               // ascending
  std::optional<std::vector<int>> assignment;  // voter -> member, Monroe and CC only
  Rational objective;                       // rho for Monroe/CC/MAV, score for PAV

  friend bool operator==(const CommitteeSolution&, const CommitteeSolution&) = default;
};

// Objectives. Committees are lists of distinct alternatives; assignments map
// every voter to an alternative of the committee.
std::int64_t misrepresentation(const PreferenceProfile& profile, Rule rule,
                               std::span<const int> committee, std::span<const int> assignment);
// Number of voters assigned an approved member; rho^A + score^A = n.
std::int64_t approval_assignment_score(const PreferenceProfile& profile,
                                       std::span<const int> assignment);
std::int64_t mav_distance(const PreferenceProfile& profile, std::span<const int> committee);
// score^M = m - rho^M.
std::int64_t mav_score(const PreferenceProfile& profile, std::span<const int> committee);
Rational pav_score(const PreferenceProfile& profile, std::span<const int> committee);

// Optimal assignment for a fixed committee. CC: per-voter best member (lowest
// index among equals). Monroe: minimum-cost proportional assignment, the
// lexicographically smallest among optimal ones. Monroe requires n >= k.
std::vector<int> optimal_assignment(const PreferenceProfile& profile, Rule rule,
                                    std::span<const int> committee);
// Value of the optimal assignment without materializing the lexicographic one.
std::int64_t optimal_assignment_cost(const PreferenceProfile& profile, Rule rule,
                                     std::span<const int> committee);

// Objective of a committee under its optimal assignment (or directly for MAV/PAV).
Rational committee_objective(const PreferenceProfile& profile, Rule rule,
                             std::span<const int> committee);
// Builds a full solution (assignment included where the rule has one).
CommitteeSolution make_solution(const PreferenceProfile& profile, Rule rule,
                                std::vector<int> committee);
// True iff `objective` is better than `incumbent` for the rule.
bool better_objective(Rule rule, const Rational& objective, const Rational& incumbent);

// Rechecks a solution from scratch: size, assignment range and proportionality,
// and the reported objective.
bool verify_solution(const MultiWinnerInstance& instance, const CommitteeSolution& solution);

CommitteeSolution solve_by_committee_enumeration(const MultiWinnerInstance& instance, Rule rule,
                                                 const SearchLimits& limits = {});

CommitteeSolution solve_cc_by_voter_partition(const MultiWinnerInstance& instance,
                                              const SearchLimits& limits = {});

// Decides whether a CC committee with rank-sum misrepresentation <= R exists.
std::optional<CommitteeSolution> solve_cc_xp_misrep(const MultiWinnerInstance& instance,
                                                    const SearchLimits& limits = {});

CommitteeSolution pav_greedy_small_score(const MultiWinnerInstance& instance);

// Decides whether a committee with PAV score >= S exists.
std::optional<CommitteeSolution> solve_pav_score_xp(const MultiWinnerInstance& instance,
                                                    const SearchLimits& limits = {});

enum class KernelVerdict { reduced, yes };

struct KernelOutcome {
  KernelVerdict verdict = KernelVerdict::reduced;
  std::optional<CommitteeSolution> witness;             // verdict yes, original indices
  std::optional<MultiWinnerInstance> reduced_instance;  // verdict reduced
  std::vector<int> alt_map;                             // reduced index -> original index
  std::vector<std::string> trace;                       // rules that fired, in order
};

KernelOutcome pav_kernelize(const MultiWinnerInstance& instance);

// Inner solver for MAV on a structured residual profile: given the residual,
// the number of seats to fill from it, and a per-voter distance offset, return
// the committee (residual indices) minimizing max_i offset_i + |V_i delta W|.
using MavInnerSolver = std::function<std::vector<int>(
    const PreferenceProfile& residual, int seats, std::span<const int> offsets)>;

// Exact inner solver by enumeration over residual committees.
std::vector<int> exact_mav_inner_solver(const PreferenceProfile& residual, int seats,
                                        std::span<const int> offsets);

CommitteeSolution solve_mav_with_deletion_set(const MultiWinnerInstance& instance,
                                              std::span<const int> deleted,
                                              const MavInnerSolver& inner = exact_mav_inner_solver);

}  // namespace comsoc
