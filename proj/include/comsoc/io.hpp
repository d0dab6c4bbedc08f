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

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "comsoc/hedonic.hpp"
#include "comsoc/oracles.hpp"
#include "comsoc/profile.hpp"

namespace comsoc {

// Line-oriented text formats, 1-based indices, '#' starts a comment line.
//
//   linear m n       then n lines, each a permutation of 1..m, best first
//   approval m n     then n lines of approved indices (a line may be empty)
//   hedonic additive n     then lines "i j u"
//   hedonic fe fa|ea n     then friendship arcs "i j"
//   graph n m        then m edge lines "i j"
//   partition files list one coalition per line
//
// Every reader throws ParseError carrying the offending line number.

PreferenceProfile parse_profile(std::istream& in);
HedonicInstance parse_hedonic(std::istream& in);
Graph parse_graph(std::istream& in);
// With `agents` set, the coalitions must cover exactly agents 1..agents;
// otherwise the largest index seen fixes the agent count.
Partition parse_partition(std::istream& in, std::optional<int> agents = std::nullopt);

using ParsedFile = std::variant<PreferenceProfile, HedonicInstance, Partition, Graph>;

// Reads a file and picks the format from its first meaningful line.
ParsedFile parse_instance(const std::string& path);

PreferenceProfile read_profile(const std::string& path);
HedonicInstance read_hedonic(const std::string& path);
Graph read_graph(const std::string& path);
Partition read_partition(const std::string& path, std::optional<int> agents = std::nullopt);

void write_profile(std::ostream& out, const PreferenceProfile& profile);
void write_hedonic(std::ostream& out, const HedonicInstance& instance);
void write_graph(std::ostream& out, const Graph& graph);
void write_partition(std::ostream& out, const Partition& partition);

}  // namespace comsoc
