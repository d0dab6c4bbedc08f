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
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "comsoc/common.hpp"

namespace comsoc {

enum class HedonicModel { additive, fa, ea };

std::string to_string(HedonicModel model);

// Agent sets are bitmasks over at most 64 agents, agent i at bit i.
using Coalition = std::uint64_t;

inline Coalition bit(int agent) { return Coalition{1} << agent; }
Coalition to_mask(std::span<const int> agents);
std::vector<int> to_agents(Coalition mask);

inline constexpr int kMaxAgents = 64;
inline constexpr std::int64_t kMaxUtility = 2147483647;

// An agent's valuation of a coalition, compared lexicographically.
// additive: (sum of utilities, 0); fa: (friends, -enemies); ea: (-enemies, friends).
struct Valuation {
  std::int64_t primary = 0;
  std::int64_t secondary = 0;
  friend auto operator<=>(const Valuation&, const Valuation&) = default;
};

class HedonicInstance {
 public:
  using UtilityArc = std::tuple<int, int, std::int64_t>;

  HedonicInstance() = default;
  // Utility arcs (i, j, u_i(j)); missing pairs are 0.
  static HedonicInstance additive(int n, const std::vector<UtilityArc>& arcs);
  // Friendship arcs (i, j): i considers j a friend; every other agent is an enemy.
  static HedonicInstance friends_enemies(int n, HedonicModel model,
                                         const std::vector<std::pair<int, int>>& arcs);

  int num_agents() const { return n_; }
  HedonicModel model() const { return model_; }
  bool is_additive() const { return model_ == HedonicModel::additive; }

  // Additive only.
  std::int64_t utility(int i, int j) const { return util_[static_cast<std::size_t>(i) * n_ + j]; }
  bool symmetric() const;
  std::vector<UtilityArc> utility_arcs() const;  // nonzero entries, row-major

  // Friend-enemy only.
  Coalition friends(int i) const { return friends_[i]; }
  std::vector<std::pair<int, int>> friendship_arcs() const;

  // Out-neighbours in the relevant graph: nonzero utility arcs or friendship arcs.
  Coalition out_neighbors(int i) const;

  Valuation value(int agent, Coalition coalition) const;
  // Best valuation the agent could ever reach.
  Valuation best_possible(int agent) const;

  friend bool operator==(const HedonicInstance&, const HedonicInstance&) = default;

 private:
  int n_ = 0;
  HedonicModel model_ = HedonicModel::additive;
  std::vector<std::int64_t> util_;
  std::vector<Coalition> friends_;
};

// Disjoint nonempty coalitions covering all agents, stored canonically:
// members ascending, coalitions ordered by smallest member.
class Partition {
 public:
  Partition() = default;
  Partition(int n, std::vector<std::vector<int>> coalitions);
  static Partition from_masks(int n, const std::vector<Coalition>& masks);
  static Partition singletons(int n);
  static Partition grand(int n);

  int num_agents() const { return n_; }
  const std::vector<std::vector<int>>& coalitions() const { return coalitions_; }
  const std::vector<Coalition>& masks() const { return masks_; }
  Coalition coalition_of(int agent) const { return masks_[owner_[agent]]; }
  int kappa() const;
  int size() const { return static_cast<int>(coalitions_.size()); }
  std::string str() const;  // 1-based, e.g. {1,2},{3}

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.n_ == b.n_ && a.coalitions_ == b.coalitions_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> coalitions_;
  std::vector<Coalition> masks_;
  std::vector<int> owner_;
};

enum class Preference { prefers, indifferent, dispreferred };

// How `agent` ranks S against T; both must contain the agent.
Preference compare(const HedonicInstance& instance, int agent, Coalition s, Coalition t);
Preference compare(const HedonicInstance& instance, int agent, std::span<const int> s,
                   std::span<const int> t);

enum class Concept { nash, individual, core, strict_core };
std::string to_string(Concept stability);

enum class WitnessKind { blocking_coalition, weakly_blocking_coalition, blocking_tuple, envy };
std::string to_string(WitnessKind kind);

// envy / blocking_tuple: agents = {i}, target = the coalition joined (empty
// for going alone). Coalition kinds: agents = the blocking set, no target.
struct Witness {
  WitnessKind kind = WitnessKind::envy;
  std::vector<int> agents;
  std::optional<std::vector<int>> target;
  friend bool operator==(const Witness&, const Witness&) = default;
};

// Checks a witness against the defining predicate from scratch.
bool check_witness(const HedonicInstance& instance, const Partition& partition,
                   const Witness& witness);

// Exact stability check. Returns the lexicographically first witness
// (coalitions: smallest size first), or nullopt when stable.
std::optional<Witness> verify(const HedonicInstance& instance, const Partition& partition,
                              Concept stability, const SearchLimits& limits = {});

// Every blocking tuple (i, B) with B in the partition or empty.
std::vector<Witness> blocking_tuples(const HedonicInstance& instance, const Partition& partition);

// Strict mode looks for coalitions where every member strictly improves
// (refuting core stability); weak mode for weakly blocking coalitions
// (refuting strict core stability).
enum class BlockingMode { strict, weak };

// Friend-appreciation only. Blocking coalitions larger than kappa, found by
// peeling agents with too few friends from the grand coalition.
std::optional<Witness> fa_unbounded_blocking(const HedonicInstance& instance,
                                             const Partition& partition, BlockingMode mode);

// Friend-appreciation only. Exact: peeling plus enumeration of coalitions up
// to size kappa (strict) or kappa + 1 (weak).
std::optional<Witness> fa_core_verify_bounded(const HedonicInstance& instance,
                                              const Partition& partition, BlockingMode mode,
                                              const SearchLimits& limits = {});

struct ColorCodingOptions {
  BlockingMode mode = BlockingMode::strict;
  double delta = 1e-3;
  std::uint64_t seed = 1;
  SearchLimits limits;
};

// Friend-appreciation only. Randomized verification; witnesses are always
// genuine, a nullopt answer is wrong with probability at most delta.
std::optional<Witness> fa_core_verify_colorcoded(const HedonicInstance& instance,
                                                 const Partition& partition,
                                                 const ColorCodingOptions& options = {});

// Strongly connected components of the friendship graph.
Partition fa_scc_partition(const HedonicInstance& instance);

struct NashSearchOptions {
  std::int64_t utility_cap = 1'000'000;  // max |u_i(j)| accepted
};

struct NashSearchResult {
  Partition partition;
  std::vector<std::int64_t> welfare;  // utilitarian welfare before the first and after each move
  std::int64_t moves = 0;
};

std::int64_t utilitarian_welfare(const HedonicInstance& instance, const Partition& partition);

NashSearchResult nash_search_symmetric(const HedonicInstance& instance,
                                       const NashSearchOptions& options = {});

std::optional<Partition> ea_nash_exist_fas(const HedonicInstance& instance,
                                           const SearchLimits& limits = {});

struct FeedbackSet {
  bool edges = false;                     // undirected edges of the mutual graph
  std::vector<std::pair<int, int>> arcs;  // removed arcs (or edges with i < j)
  bool certified = false;                 // proven minimum
  int size() const { return static_cast<int>(arcs.size()); }
};

struct ParameterReport {
  int max_degree = 0;
  int distinct_utilities = 0;
  FeedbackSet feedback;                  // arc set (additive, fa) or mutual edge set (ea)
  std::optional<FeedbackSet> nash_feedback;  // ea only: arc set of the digraph
  std::optional<int> kappa;
  std::optional<int> num_coalitions;
};

ParameterReport measure_parameters(const HedonicInstance& instance,
                                   const std::optional<Partition>& partition = std::nullopt);

// True iff removing the arcs (or both directions of the edges) leaves the
// relevant graph acyclic.
bool feedback_certifies(const HedonicInstance& instance, const FeedbackSet& feedback);

}  // namespace comsoc
