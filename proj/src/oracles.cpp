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

#include "comsoc/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace comsoc {

PartitionStream::PartitionStream(int n) : n_(n) {
  if (n < 1) throw DomainError("partition stream needs at least one agent");
  if (n > kMaxAgents)
    throw ResourceLimit("enumerating partitions of " + std::to_string(n) + " agents exceeds the guard of " +
                        std::to_string(kMaxAgents));
}

std::optional<Partition> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    rgs_.assign(n_, 0);
    prefix_max_.assign(n_, 0);
  } else {
    // Increment the rightmost position that may grow: rgs[i] <= max(rgs[0..i-1]) + 1.
    int i = n_ - 1;
    while (i > 0 && rgs_[i] == prefix_max_[i - 1] + 1) --i;
    if (i == 0) {
      done_ = true;
      return std::nullopt;
    }
    ++rgs_[i];
    prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
    for (int j = i + 1; j < n_; ++j) {
      rgs_[j] = 0;
      prefix_max_[j] = prefix_max_[j - 1];
    }
  }
  std::vector<std::vector<int>> blocks(prefix_max_[n_ - 1] + 1);
  for (int i = 0; i < n_; ++i) blocks[rgs_[i]].push_back(i);
  return Partition(n_, std::move(blocks));
}

std::vector<Partition> enumerate_partitions(int n) {
  PartitionStream stream(n);
  std::vector<Partition> out;
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

std::optional<Partition> brute_force_hedonic(const HedonicInstance& instance, Concept stability,
                                             const SearchLimits& limits) {
  const int n = instance.num_agents();
  if (n > kMaxBruteForceAgents)
    throw ResourceLimit("brute force over partitions is limited to " +
                        std::to_string(kMaxBruteForceAgents) + " agents");
  NodeCounter counter(limits);
  PartitionStream stream(n);
  while (auto p = stream.next()) {
    counter.tick();
    if (!verify(instance, *p, stability, limits)) return p;
  }
  return std::nullopt;
}

Graph Graph::make(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw DomainError("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto& [i, j] : edges) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw DomainError("edge endpoint outside 1.." + std::to_string(n));
    if (i == j) throw DomainError("self-loop at vertex " + std::to_string(i + 1));
    if (i > j) std::swap(i, j);
    if (!seen.insert({i, j}).second)
      throw DomainError("duplicate edge " + std::to_string(i + 1) + "-" + std::to_string(j + 1));
  }
  return Graph{n, std::move(edges)};
}

bool has_clique(const Graph& graph, int h) {
  const int n = graph.n;
  if (h <= 0) return true;
  if (h > n) return false;
  std::vector<std::uint64_t> adj(n, 0);
  for (auto [i, j] : graph.edges) {
    adj[i] |= std::uint64_t{1} << j;
    adj[j] |= std::uint64_t{1} << i;
  }
  // Grow cliques in increasing vertex order.
  auto rec = [&](auto&& self, std::uint64_t candidates, int need) -> bool {
    if (need == 0) return true;
    if (popcount64(candidates) < need) return false;
    for (std::uint64_t c = candidates; c; c &= c - 1) {
      int v = lowest_bit(c);
      std::uint64_t later = c & ~((std::uint64_t{1} << (v + 1)) - 1);
      if (self(self, later & adj[v], need - 1)) return true;
    }
    return false;
  };
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return rec(rec, all, h);
}

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 1 || n > 7) throw ResourceLimit("graph classes are enumerated for 1..7 vertices only");
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  const int e = static_cast<int>(slots.size());
  std::vector<int> slot_of(n * n, 0);
  for (int s = 0; s < e; ++s) {
    slot_of[slots[s].first * n + slots[s].second] = s;
    slot_of[slots[s].second * n + slots[s].first] = s;
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  std::vector<char> seen(std::size_t{1} << e, 0);
  for (std::uint32_t code = 0; code < (std::uint32_t{1} << e); ++code) {
    if (seen[code]) continue;
    // Codes are visited in increasing order, so the first member of each
    // class is its smallest code.
    std::vector<std::pair<int, int>> edges;
    for (int s = 0; s < e; ++s)
      if (code >> s & 1u) edges.push_back(slots[s]);
    for (const auto& p : perms) {
      std::uint32_t image = 0;
      for (auto [i, j] : edges) image |= std::uint32_t{1} << slot_of[p[i] * n + p[j]];
      seen[image] = 1;
    }
    out.push_back(Graph{n, std::move(edges)});
  }
  return out;
}

void CliqueInput::validate() const {
  Graph::make(graph.n, graph.edges);
  if (h < 2 || h > graph.n)
    throw DomainError("clique size must lie in 2.." + std::to_string(graph.n));
}

MultiWinnerInstance clique_to_cc_instance(const CliqueInput& input, BlockerSizing sizing) {
  input.validate();
  const int nh = input.graph.n;
  const int mh = static_cast<int>(input.graph.edges.size());
  const int h = input.h;
  const int pairs = h * (h - 1) / 2;
  const std::int64_t r = h + 2LL * h * pairs;
  const int vertex_block = sizing == BlockerSizing::padded ? static_cast<int>(std::max<std::int64_t>(nh, r)) : nh;
  const int edge_block = sizing == BlockerSizing::padded ? static_cast<int>(std::max<std::int64_t>(mh, r)) : mh;

  // Alternative layout.
  std::vector<int> a(nh), b(nh), vstart(nh), c(mh), estart(mh);
  int next = 0;
  for (int i = 0; i < nh; ++i) {
    a[i] = next++;
    b[i] = next++;
    vstart[i] = next;
    next += vertex_block;
  }
  for (int j = 0; j < mh; ++j) {
    c[j] = next++;
    estart[j] = next;
    next += edge_block;
  }
  const int m = next;

  auto ballot = [&](std::vector<int> head) {
    std::vector<char> used(m, 0);
    for (int x : head) used[x] = 1;
    for (int x = 0; x < m; ++x)
      if (!used[x]) head.push_back(x);
    return head;
  };
  auto with_block = [](std::vector<int> head, int start, int size) {
    for (int x = start; x < start + size; ++x) head.push_back(x);
    return head;
  };

  std::vector<std::vector<int>> orders;
  for (int i = 0; i < nh; ++i) orders.push_back(ballot(with_block({b[i], a[i]}, vstart[i], vertex_block)));
  for (int j = 0; j < mh; ++j) {
    auto [u, s] = input.graph.edges[j];
    auto first = ballot(with_block({c[j], a[u]}, estart[j], edge_block));
    auto second = ballot(with_block({c[j], a[s]}, estart[j], edge_block));
    for (int t = 0; t < h; ++t) orders.push_back(first);
    for (int t = 0; t < h; ++t) orders.push_back(second);
  }
  // With fewer edges than the clique needs the formula drops below one seat;
  // such graphs have no h-clique and one seat cannot serve every vertex voter.
  const int k = std::max(1, mh - pairs + nh);
  return MultiWinnerInstance{PreferenceProfile::linear(m, std::move(orders)), k, Rational(r)};
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(bits());
  // Rejection keeps the draw unbiased and platform independent.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t x;
  do x = bits();
  while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

double Rng::unit() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

Partition random_partition(Rng& rng, int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) {
    auto pick = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(blocks.size())));
    if (pick == blocks.size()) blocks.emplace_back();
    blocks[pick].push_back(i);
  }
  return Partition(n, std::move(blocks));
}

namespace {

std::vector<std::string> call_args(const std::string& text, std::string& name) {
  auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') throw DomainError("malformed shape '" + text + "'");
  name = text.substr(0, open);
  std::vector<std::string> args;
  std::stringstream in(text.substr(open + 1, text.size() - open - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    args.push_back(item);
  }
  return args;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw DomainError("expected an integer, got '" + s + "'");
  return v;
}

double to_density(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || v < 0 || v > 1)
    throw DomainError("expected a density in [0,1], got '" + s + "'");
  return v;
}

std::string density_str(double d) {
  std::ostringstream out;
  out << d;
  return out.str();
}

}  // namespace

Shape parse_shape(const std::string& text) {
  std::string name;
  auto args = call_args(text, name);
  auto arity = [&](std::size_t want) {
    if (args.size() != want)
      throw DomainError(name + " takes " + std::to_string(want) + " arguments");
  };
  Shape shape;
  if (name == "random_linear") {
    arity(2);
    shape = RandomLinear{to_int(args[0]), to_int(args[1])};
  } else if (name == "random_approval") {
    arity(3);
    shape = RandomApproval{to_int(args[0]), to_int(args[1]), to_int(args[2])};
  } else if (name == "random_additive") {
    arity(4);
    if (args[3] != "symmetric" && args[3] != "asymmetric")
      throw DomainError("random_additive expects symmetric or asymmetric");
    shape = RandomAdditive{to_int(args[0]), to_int(args[1]), to_density(args[2]), args[3] == "symmetric"};
  } else if (name == "random_fe") {
    arity(3);
    if (args[2] != "fa" && args[2] != "ea") throw DomainError("random_fe expects fa or ea");
    shape = RandomFe{to_int(args[0]), to_density(args[1]), args[2] == "fa" ? HedonicModel::fa : HedonicModel::ea};
  } else {
    throw DomainError("unknown shape '" + name + "'");
  }
  return shape;
}

std::string to_string(const Shape& shape) {
  struct Printer {
    std::string operator()(const RandomLinear& s) const {
      return "random_linear(" + std::to_string(s.m) + "," + std::to_string(s.n) + ")";
    }
    std::string operator()(const RandomApproval& s) const {
      return "random_approval(" + std::to_string(s.m) + "," + std::to_string(s.n) + "," +
             std::to_string(s.b) + ")";
    }
    std::string operator()(const RandomAdditive& s) const {
      return "random_additive(" + std::to_string(s.n) + "," + std::to_string(s.umax) + "," +
             density_str(s.density) + "," + (s.symmetric ? "symmetric" : "asymmetric") + ")";
    }
    std::string operator()(const RandomFe& s) const {
      return "random_fe(" + std::to_string(s.n) + "," + density_str(s.density) + "," +
             to_string(s.model) + ")";
    }
  };
  return std::visit(Printer{}, shape);
}

Generated generate(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  struct Build {
    Rng& rng;
    Generated operator()(const RandomLinear& s) const {
      if (s.m < 1 || s.n < 0) throw DomainError("random_linear needs m >= 1 and n >= 0");
      std::vector<std::vector<int>> orders(s.n, std::vector<int>(s.m));
      for (auto& o : orders) {
        std::iota(o.begin(), o.end(), 0);
        rng.shuffle(o);
      }
      return PreferenceProfile::linear(s.m, std::move(orders));
    }
    Generated operator()(const RandomApproval& s) const {
      if (s.m < 1 || s.n < 0 || s.b < 0) throw DomainError("random_approval needs m >= 1, n, b >= 0");
      std::vector<std::vector<int>> sets(s.n);
      for (auto& set : sets) {
        std::vector<int> all(s.m);
        std::iota(all.begin(), all.end(), 0);
        rng.shuffle(all);
        auto size = rng.uniform(0, std::min(s.b, s.m));
        set.assign(all.begin(), all.begin() + size);
      }
      return PreferenceProfile::approval(s.m, std::move(sets));
    }
    Generated operator()(const RandomAdditive& s) const {
      if (s.n < 1 || s.n > kMaxAgents || s.umax < 1)
        throw DomainError("random_additive needs 1 <= n <= 64 and umax >= 1");
      std::vector<HedonicInstance::UtilityArc> arcs;
      for (int i = 0; i < s.n; ++i)
        for (int j = s.symmetric ? i + 1 : 0; j < s.n; ++j) {
          if (i == j || !rng.chance(s.density)) continue;
          // Nonzero value in [-umax, umax].
          std::int64_t u = rng.uniform(-s.umax, s.umax - 1);
          if (u >= 0) ++u;
          arcs.emplace_back(i, j, u);
          if (s.symmetric) arcs.emplace_back(j, i, u);
        }
      return HedonicInstance::additive(s.n, arcs);
    }
    Generated operator()(const RandomFe& s) const {
      if (s.n < 1 || s.n > kMaxAgents) throw DomainError("random_fe needs 1 <= n <= 64");
      std::vector<std::pair<int, int>> arcs;
      for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j)
          if (i != j && rng.chance(s.density)) arcs.emplace_back(i, j);
      return HedonicInstance::friends_enemies(s.n, s.model, arcs);
    }
  };
  return std::visit(Build{rng}, spec.shape);
}

}  // namespace comsoc
