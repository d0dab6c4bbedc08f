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
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "comsoc/common.hpp"
#include "comsoc/hedonic.hpp"
#include "comsoc/multiwinner.hpp"
#include "comsoc/profile.hpp"

namespace comsoc {

// Set partitions of {0..n-1} in restricted-growth-string order, one at a time.
class PartitionStream {
 public:
  static constexpr int kMaxAgents = 12;

  explicit PartitionStream(int n);
  std::optional<Partition> next();

 private:
  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> rgs_;
  std::vector<int> prefix_max_;
};

std::vector<Partition> enumerate_partitions(int n);

inline constexpr int kMaxBruteForceAgents = 10;

// First partition in restricted-growth order that is stable under the concept.
std::optional<Partition> brute_force_hedonic(const HedonicInstance& instance, Concept stability,
                                             const SearchLimits& limits = {});

// Simple undirected graph on vertices 0..n-1, edges stored with i < j.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  static Graph make(int n, std::vector<std::pair<int, int>> edges);
  friend bool operator==(const Graph&, const Graph&) = default;
};

bool has_clique(const Graph& graph, int h);

// One representative per isomorphism class of graphs on n <= 7 vertices,
// each the edge set with the smallest adjacency code among its relabelings.
std::vector<Graph> nonisomorphic_graphs(int n);

struct CliqueInput {
  Graph graph;
  int h = 2;

  void validate() const;
};

// Size of the dummy blocks behind each vertex and edge alternative. `literal`
// uses n-hat and m-hat dummies; `padded` uses at least R, which is what makes
// any assignment beyond second place cost more than the bound.
enum class BlockerSizing { padded, literal };

// Linear CC instance deciding whether the graph has an h-clique. Alternatives
// are laid out per vertex (a_i, b_i, its blockers) and then per edge (c_j, its
// blockers); unmentioned alternatives follow in ascending index order.
MultiWinnerInstance clique_to_cc_instance(const CliqueInput& input,
                                          BlockerSizing sizing = BlockerSizing::padded);

struct RandomLinear {
  int m = 0, n = 0;
};
struct RandomApproval {
  int m = 0, n = 0, b = 0;
};
struct RandomAdditive {
  int n = 0;
  int umax = 1;
  double density = 0.5;
  bool symmetric = false;
};
struct RandomFe {
  int n = 0;
  double density = 0.5;
  HedonicModel model = HedonicModel::fa;
};

using Shape = std::variant<RandomLinear, RandomApproval, RandomAdditive, RandomFe>;

struct GeneratorSpec {
  std::uint64_t seed = 0;
  Shape shape;
};

inline constexpr const char* kGeneratorName = "mt19937_64-v1";

// "random_approval(5,5,2)", "random_additive(6,3,0.5,symmetric)", "random_fe(6,0.3,ea)".
Shape parse_shape(const std::string& text);
std::string to_string(const Shape& shape);

using Generated = std::variant<PreferenceProfile, HedonicInstance>;

// Draws only raw 64-bit outputs from mt19937_64 and maps them with fixed
// arithmetic, so the same spec yields the same instance on every platform.
Generated generate(const GeneratorSpec& spec);

// Deterministic draws on top of mt19937_64, shared by the generators.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t bits() { return engine_(); }
  // Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  // Uniform on [0, 1).
  double unit();
  bool chance(double p) { return unit() < p; }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))]);
  }

 private:
  std::mt19937_64 engine_;
};

Partition random_partition(Rng& rng, int n);

}  // namespace comsoc
