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
#include <limits>
#include <numeric>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

#include "hedonic_internal.hpp"

namespace comsoc {

namespace {

constexpr int kExactComponentLimit = 20;

using Arc = std::pair<int, int>;

std::vector<Arc> relevant_arcs(const HedonicInstance& h) {
  std::vector<Arc> arcs;
  for (int i = 0; i < h.num_agents(); ++i)
    for (int j : to_agents(h.out_neighbors(i))) arcs.emplace_back(i, j);
  return arcs;
}

// Minimum feedback arc set of one strongly connected component via the
// ordering DP: f[S] is the fewest backward arcs when S forms the prefix.
std::vector<Arc> exact_component_fas(const std::vector<int>& verts, const std::vector<Arc>& arcs) {
  const int c = static_cast<int>(verts.size());
  std::vector<std::uint32_t> out(c, 0);
  for (auto [u, v] : arcs) {
    int a = static_cast<int>(std::find(verts.begin(), verts.end(), u) - verts.begin());
    int b = static_cast<int>(std::find(verts.begin(), verts.end(), v) - verts.begin());
    out[a] |= 1u << b;
  }
  const std::uint32_t full = (c == 32) ? ~0u : ((1u << c) - 1);
  std::vector<int> f(std::size_t{1} << c, std::numeric_limits<int>::max());
  std::vector<signed char> last(std::size_t{1} << c, -1);
  f[0] = 0;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (f[s] == std::numeric_limits<int>::max()) continue;
    for (int v = 0; v < c; ++v) {
      if (s >> v & 1u) continue;
      // Placing v after s turns its arcs into s backward.
      int cost = f[s] + popcount64(out[v] & s);
      std::uint32_t t = s | (1u << v);
      if (cost < f[t]) {
        f[t] = cost;
        last[t] = static_cast<signed char>(v);
      }
    }
    if (s == full) break;
  }
  std::vector<int> order;
  for (std::uint32_t s = full; s; s &= ~(1u << last[s])) order.push_back(last[s]);
  std::reverse(order.begin(), order.end());
  std::vector<int> pos(c);
  for (int i = 0; i < c; ++i) pos[order[i]] = i;
  std::vector<Arc> back;
  for (int a = 0; a < c; ++a)
    for (int b : to_agents(out[a]))
      if (pos[b] < pos[a]) back.emplace_back(verts[a], verts[b]);
  return back;
}

// Greedy ordering (sinks to the back, sources to the front, else the vertex
// with the largest out-minus-in degree) for components too large for the DP.
std::vector<Arc> heuristic_component_fas(const std::vector<int>& verts, const std::vector<Arc>& arcs) {
  std::set<int> left(verts.begin(), verts.end());
  std::vector<int> front, back;
  auto degree = [&](int v, bool outgoing) {
    int d = 0;
    for (auto [a, b] : arcs)
      if ((outgoing ? a : b) == v && left.count(outgoing ? b : a)) ++d;
    return d;
  };
  while (!left.empty()) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int v : std::vector<int>(left.begin(), left.end())) {
        if (degree(v, true) == 0) { back.push_back(v); left.erase(v); moved = true; }
        else if (degree(v, false) == 0) { front.push_back(v); left.erase(v); moved = true; }
      }
    }
    if (left.empty()) break;
    int best = *left.begin(), score = std::numeric_limits<int>::min();
    for (int v : left) {
      int s = degree(v, true) - degree(v, false);
      if (s > score) { score = s; best = v; }
    }
    front.push_back(best);
    left.erase(best);
  }
  std::vector<int> order = front;
  order.insert(order.end(), back.rbegin(), back.rend());
  std::vector<int> pos(*std::max_element(verts.begin(), verts.end()) + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::vector<Arc> out;
  for (auto [a, b] : arcs)
    if (pos[b] < pos[a]) out.emplace_back(a, b);
  return out;
}

FeedbackSet feedback_arc_set(int n, const std::vector<Arc>& arcs) {
  boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS> g(n);
  for (auto [i, j] : arcs) boost::add_edge(i, j, g);
  std::vector<int> comp(n);
  int count = boost::strong_components(g, comp.data());
  FeedbackSet fs;
  fs.certified = true;
  for (int c = 0; c < count; ++c) {
    std::vector<int> verts;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) verts.push_back(i);
    if (verts.size() < 2) continue;
    std::vector<Arc> inner;
    for (auto [i, j] : arcs)
      if (comp[i] == c && comp[j] == c) inner.emplace_back(i, j);
    std::vector<Arc> part;
    if (static_cast<int>(verts.size()) <= kExactComponentLimit) {
      part = exact_component_fas(verts, inner);
    } else {
      part = heuristic_component_fas(verts, inner);
      fs.certified = false;
    }
    fs.arcs.insert(fs.arcs.end(), part.begin(), part.end());
  }
  std::sort(fs.arcs.begin(), fs.arcs.end());
  return fs;
}

// Edges outside a spanning forest of the mutual-friendship graph.
FeedbackSet mutual_feedback_edges(const HedonicInstance& h) {
  const int n = h.num_agents();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  FeedbackSet fs;
  fs.edges = true;
  fs.certified = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!((h.friends(i) & bit(j)) && (h.friends(j) & bit(i)))) continue;
      int a = find(i), b = find(j);
      if (a == b) fs.arcs.emplace_back(i, j);
      else parent[a] = b;
    }
  return fs;
}

}  // namespace

bool feedback_certifies(const HedonicInstance& h, const FeedbackSet& feedback) {
  const int n = h.num_agents();
  std::set<Arc> removed(feedback.arcs.begin(), feedback.arcs.end());
  if (feedback.edges) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (!((h.friends(i) & bit(j)) && (h.friends(j) & bit(i)))) continue;
        if (removed.count({i, j})) continue;
        int a = find(i), b = find(j);
        if (a == b) return false;
        parent[a] = b;
      }
    return true;
  }
  boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS> g(n);
  for (auto arc : relevant_arcs(h))
    if (!removed.count(arc)) boost::add_edge(arc.first, arc.second, g);
  std::vector<int> comp(n);
  return boost::strong_components(g, comp.data()) == n;
}

ParameterReport measure_parameters(const HedonicInstance& instance,
                                   const std::optional<Partition>& partition) {
  const int n = instance.num_agents();
  ParameterReport r;
  std::vector<Coalition> in(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j : to_agents(instance.out_neighbors(i))) in[j] |= bit(i);
  for (int i = 0; i < n; ++i)
    r.max_degree = std::max(r.max_degree, popcount64(instance.out_neighbors(i) | in[i]));

  std::set<std::int64_t> values;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (instance.is_additive()) {
        values.insert(instance.utility(i, j));
      } else {
        // Friend/enemy models as additive utilities: friends n and enemies -1
        // (friend appreciation) or friends 1 and enemies -n (enemy aversion).
        bool fr = instance.friends(i) & bit(j);
        if (instance.model() == HedonicModel::fa) values.insert(fr ? n : -1);
        else values.insert(fr ? 1 : -n);
      }
    }
  r.distinct_utilities = static_cast<int>(values.size());

  auto arcs = relevant_arcs(instance);
  if (instance.model() == HedonicModel::ea) {
    r.feedback = mutual_feedback_edges(instance);
    r.nash_feedback = feedback_arc_set(n, arcs);
  } else {
    r.feedback = feedback_arc_set(n, arcs);
  }
  if (partition) {
    r.kappa = partition->kappa();
    r.num_coalitions = partition->size();
  }
  return r;
}

}  // namespace comsoc
