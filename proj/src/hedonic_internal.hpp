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

#include "comsoc/hedonic.hpp"

namespace comsoc::detail {

// Current valuations of every agent under the partition.
std::vector<Valuation> current_values(const HedonicInstance& instance, const Partition& partition);

// Whether B blocks (strict) or weakly blocks (weak) the partition.
bool is_blocking(const HedonicInstance& instance, const std::vector<Valuation>& current,
                 Coalition b, BlockingMode mode);

// Smallest-size-first, lexicographic search over coalitions of size at most
// max_size. Agents who cannot strictly gain are skipped in strict mode.
std::optional<Coalition> search_blocking(const HedonicInstance& instance, const Partition& partition,
                                         BlockingMode mode, int max_size, NodeCounter& counter);

Witness coalition_witness(Coalition b, BlockingMode mode);

void require_fa(const HedonicInstance& instance);

}  // namespace comsoc::detail
