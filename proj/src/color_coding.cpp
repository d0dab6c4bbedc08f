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
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

#include "hedonic_internal.hpp"

namespace comsoc {

namespace {

// Strongly connected components of the friendship graph induced by `within`.
std::vector<Coalition> induced_components(const HedonicInstance& h, Coalition within) {
  std::vector<int> agents = to_agents(within);
  const int c = static_cast<int>(agents.size());
  boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS> g(c);
  for (int x = 0; x < c; ++x)
    for (int y = 0; y < c; ++y)
      if (x != y && (h.friends(agents[x]) & bit(agents[y]))) boost::add_edge(x, y, g);
  std::vector<int> comp(c);
  int count = c == 0 ? 0 : boost::strong_components(g, comp.data());
  std::vector<Coalition> out(count, 0);
  for (int x = 0; x < c; ++x) out[comp[x]] |= bit(agents[x]);
  std::sort(out.begin(), out.end(), [](Coalition a, Coalition b) { return to_agents(a) < to_agents(b); });
  return out;
}

// Phase two works on a guessed in-forest over q singleton slots. parent[u] is
// another slot or kRoot (the slot has a friend inside the non-singleton part);
// label[u] is the set of non-singleton members (by position) that count the
// slot's agent as one of their required friends.
constexpr int kRoot = -1;
constexpr int kMaxSlots = 6;

struct Pattern {
  std::vector<int> parent;
  std::vector<std::uint32_t> label;
  auto operator<=>(const Pattern&) const = default;
};

bool acyclic(const std::vector<int>& parent) {
  const int q = static_cast<int>(parent.size());
  for (int u = 0; u < q; ++u) {
    int steps = 0;
    for (int w = u; w != kRoot; w = parent[w])
      if (++steps > q) return false;
  }
  return true;
}

Pattern canonical(const Pattern& p) {
  const int q = static_cast<int>(p.parent.size());
  std::vector<int> perm(q);
  std::iota(perm.begin(), perm.end(), 0);
  Pattern best = p;
  do {
    Pattern c{std::vector<int>(q), std::vector<std::uint32_t>(q)};
    for (int u = 0; u < q; ++u) {
      c.parent[perm[u]] = p.parent[u] == kRoot ? kRoot : perm[p.parent[u]];
      c.label[perm[u]] = p.label[u];
    }
    best = std::min(best, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Children lists and a children-before-parents order of the slots.
struct Forest {
  std::vector<std::vector<int>> children;
  std::vector<int> roots;
  std::vector<int> post_order;
};

Forest forest_of(const Pattern& p) {
  const int q = static_cast<int>(p.parent.size());
  Forest f;
  f.children.resize(q);
  for (int u = 0; u < q; ++u) {
    if (p.parent[u] == kRoot) f.roots.push_back(u);
    else f.children[p.parent[u]].push_back(u);
  }
  auto visit = [&](auto&& self, int u) -> void {
    for (int w : f.children[u]) self(self, w);
    f.post_order.push_back(u);
  };
  for (int r : f.roots) visit(visit, r);
  return f;
}

// Families of colour subsets are 64-bit masks indexed by subset (q <= 6).
std::uint64_t disjoint_union(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  for (std::uint64_t x = a; x; x &= x - 1) {
    int s = lowest_bit(x);
    for (std::uint64_t y = b; y; y &= y - 1) {
      int t = lowest_bit(y);
      if ((s & t) == 0) out |= std::uint64_t{1} << (s | t);
    }
  }
  return out;
}

class ColorCodingVerifier {
 public:
  ColorCodingVerifier(const HedonicInstance& h, const Partition& p, const ColorCodingOptions& o)
      : h_(h), p_(p), opt_(o), counter_(o.limits), n_(h.num_agents()) {
    current_ = detail::current_values(h, p);
    for (const auto& c : p.coalitions()) {
      if (c.size() == 1) singles_ |= bit(c[0]);
      else non_singles_ |= to_mask(c);
    }
  }

  std::optional<Witness> run() {
    if (auto w = phase_one()) return w;
    return phase_two();
  }

 private:
  std::optional<Witness> phase_one() {
    // P1: a coalition whose friendship graph is not strongly connected loses
    // its sink component, whose members keep every friend and shed enemies.
    for (Coalition c : p_.masks()) {
      if (popcount64(c) < 2) continue;
      auto comps = induced_components(h_, c);
      if (comps.size() < 2) continue;
      for (Coalition s : comps) {
        bool sink = true;
        for (Coalition m = s; m && sink; m &= m - 1)
          if (h_.friends(lowest_bit(m)) & c & ~s) sink = false;
        if (sink && detail::is_blocking(h_, current_, s, opt_.mode))
          return detail::coalition_witness(s, opt_.mode);
      }
    }
    // P2: a friendship cycle among agents who are alone.
    for (Coalition s : induced_components(h_, singles_))
      if (popcount64(s) >= 2 && detail::is_blocking(h_, current_, s, opt_.mode))
        return detail::coalition_witness(s, opt_.mode);
    // P3: blocking coalitions larger than kappa.
    return fa_unbounded_blocking(h_, p_, opt_.mode);
  }

  std::optional<Witness> phase_two() {
    const int kappa = p_.kappa();
    std::vector<int> ns = to_agents(non_singles_);
    single_list_ = to_agents(singles_);
    // Any blocking coalition of size at most kappa contains a member of a
    // non-singleton coalition (otherwise phase one found a singleton cycle).
    const int max_ns = std::min<int>(kappa, static_cast<int>(ns.size()));
    for (int size = 1; size <= max_ns; ++size) {
      std::vector<int> idx(size);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        std::vector<int> members;
        for (int i : idx) members.push_back(ns[i]);
        for (int b = size; b <= kappa; ++b)
          if (auto w = try_shape(members, b)) return w;
        int i = size - 1;
        while (i >= 0 && idx[i] == static_cast<int>(ns.size()) - size + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    return std::nullopt;
  }

  // Looks for singleton agents completing `members` to a blocking coalition of size b.
  std::optional<Witness> try_shape(const std::vector<int>& members, int b) {
    counter_.tick();
    const Coalition core = to_mask(members);
    const int q = b - static_cast<int>(members.size());
    if (q == 0) {
      if (detail::is_blocking(h_, current_, core, opt_.mode))
        return detail::coalition_witness(core, opt_.mode);
      return std::nullopt;
    }
    if (q > popcount64(singles_)) return std::nullopt;
    if (q > kMaxSlots)
      throw ResourceLimit("color-coding supports at most " + std::to_string(kMaxSlots) +
                          " singleton slots");
    // Fewest singleton friends each member needs to prefer a size-b coalition.
    std::vector<int> need;
    for (int a : members) {
      const int inside = popcount64(h_.friends(a) & core);
      int r = -1;
      for (int x = 0; x <= q; ++x) {
        Valuation v{inside + x, -(b - 1 - inside - x)};
        bool ok = opt_.mode == BlockingMode::strict ? v > current_[a] : v >= current_[a];
        if (ok) {
          r = x;
          break;
        }
      }
      if (r < 0 || r > popcount64(h_.friends(a) & singles_)) return std::nullopt;
      need.push_back(r);
    }
    // Singletons that can be a root child: they have a friend among the members.
    Coalition rootable = 0;
    for (int s : single_list_)
      if (h_.friends(s) & core) rootable |= bit(s);
    if (!rootable) return std::nullopt;

    for (const Pattern& pat : patterns(q, need)) {
      auto allowed = slot_domains(pat, members, rootable);
      if (!allowed) continue;
      auto found = search_pattern(pat, *allowed, q);
      if (found) {
        Coalition blocker = core | *found;
        if (detail::is_blocking(h_, current_, blocker, opt_.mode))
          return detail::coalition_witness(blocker, opt_.mode);
        throw Error("internal: color-coding embedding is not blocking");
      }
    }
    return std::nullopt;
  }

  // All in-forest shapes with required-friend labels, up to slot relabeling.
  std::vector<Pattern> patterns(int q, const std::vector<int>& need) {
    std::set<Pattern> seen;
    std::vector<int> parent(q, kRoot);
    auto with_labels = [&](const std::vector<int>& par) {
      std::vector<std::uint32_t> label(q, 0);
      auto assign = [&](auto&& self, std::size_t member) -> void {
        if (member == need.size()) {
          seen.insert(canonical(Pattern{par, label}));
          return;
        }
        // Choose need[member] distinct slots for this member.
        auto choose = [&](auto&& pick, int from, int left) -> void {
          if (left == 0) {
            self(self, member + 1);
            return;
          }
          for (int u = from; u <= q - left; ++u) {
            label[u] |= 1u << member;
            pick(pick, u + 1, left - 1);
            label[u] &= ~(1u << member);
          }
        };
        choose(choose, 0, need[member]);
      };
      assign(assign, 0);
    };
    auto enumerate = [&](auto&& self, int u) -> void {
      if (u == q) {
        if (acyclic(parent)) with_labels(parent);
        return;
      }
      for (int w = kRoot; w < q; ++w) {
        if (w == u) continue;
        parent[u] = w;
        self(self, u + 1);
      }
    };
    enumerate(enumerate, 0);
    return {seen.begin(), seen.end()};
  }

  // Per-slot candidate singletons: friends of every member labelling the slot,
  // and root children must have a friend among the members.
  std::optional<std::vector<Coalition>> slot_domains(const Pattern& pat,
                                                     const std::vector<int>& members,
                                                     Coalition rootable) {
    const int q = static_cast<int>(pat.parent.size());
    std::vector<Coalition> dom(q, singles_);
    for (int u = 0; u < q; ++u) {
      for (std::size_t j = 0; j < members.size(); ++j)
        if (pat.label[u] >> j & 1u) dom[u] &= h_.friends(members[j]);
      if (pat.parent[u] == kRoot) dom[u] &= rootable;
      if (!dom[u]) return std::nullopt;
    }
    return dom;
  }

  std::size_t trials_for(int q) const {
    const double t = std::exp(static_cast<double>(q)) * q * std::log(1.0 / opt_.delta);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(t)));
  }

  // Random colourings shared by every pattern with the same slot count.
  const std::vector<std::vector<int>>& colorings(int q) {
    auto& c = colorings_[q];
    if (c.empty()) {
      std::mt19937_64 rng(opt_.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(q)));
      std::uniform_int_distribution<int> pick(0, q - 1);
      const std::size_t trials = trials_for(q);
      c.resize(trials, std::vector<int>(n_, 0));
      for (auto& col : c)
        for (int s : single_list_) col[s] = pick(rng);
    }
    return c;
  }

  std::optional<Coalition> search_pattern(const Pattern& pat, const std::vector<Coalition>& dom,
                                          int q) {
    Forest f = forest_of(pat);
    const std::uint64_t full = std::uint64_t{1} << ((1 << q) - 1);
    for (const auto& color : colorings(q)) {
      counter_.tick();
      // table[u][v]: colour sets on which the subtree of slot u embeds
      // colourfully with u mapped to singleton v.
      std::vector<std::vector<std::uint64_t>> table(q, std::vector<std::uint64_t>(n_, 0));
      for (int u : f.post_order) {
        for (Coalition m = dom[u]; m; m &= m - 1) {
          int v = lowest_bit(m);
          std::uint64_t fam = std::uint64_t{1} << (1 << color[v]);
          for (int w : f.children[u]) {
            std::uint64_t child = 0;
            for (int x : single_list_)
              if (h_.friends(x) & bit(v)) child |= table[w][x];
            fam = disjoint_union(fam, child);
            if (!fam) break;
          }
          table[u][v] = fam;
        }
      }
      std::uint64_t root = 1;  // the empty colour set
      for (int r : f.roots) {
        std::uint64_t child = 0;
        for (int x : single_list_) child |= table[r][x];
        root = disjoint_union(root, child);
        if (!root) break;
      }
      if (root & full) return embed(pat, dom);
    }
    return std::nullopt;
  }

  // A colourful embedding exists; recover one by plain backtracking.
  std::optional<Coalition> embed(const Pattern& pat, const std::vector<Coalition>& dom) {
    const int q = static_cast<int>(pat.parent.size());
    Forest f = forest_of(pat);
    std::vector<int> order(f.post_order.rbegin(), f.post_order.rend());  // parents first
    std::vector<int> phi(q, -1);
    Coalition used = 0;
    auto rec = [&](auto&& self, std::size_t at) -> bool {
      if (at == order.size()) return true;
      int u = order[at];
      for (Coalition m = dom[u] & ~used; m; m &= m - 1) {
        int v = lowest_bit(m);
        if (pat.parent[u] != kRoot && !(h_.friends(v) & bit(phi[pat.parent[u]]))) continue;
        phi[u] = v;
        used |= bit(v);
        if (self(self, at + 1)) return true;
        used &= ~bit(v);
      }
      return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return used;
  }

  const HedonicInstance& h_;
  const Partition& p_;
  ColorCodingOptions opt_;
  NodeCounter counter_;
  int n_;
  std::vector<Valuation> current_;
  Coalition singles_ = 0, non_singles_ = 0;
  std::vector<int> single_list_;
  std::vector<std::vector<std::vector<int>>> colorings_ =
      std::vector<std::vector<std::vector<int>>>(kMaxSlots + 1);
};

}  // namespace

std::optional<Witness> fa_core_verify_colorcoded(const HedonicInstance& instance,
                                                 const Partition& partition,
                                                 const ColorCodingOptions& options) {
  detail::require_fa(instance);
  if (!(options.delta > 0.0 && options.delta < 1.0))
    throw DomainError("delta must lie strictly between 0 and 1");
  return ColorCodingVerifier(instance, partition, options).run();
}

}  // namespace comsoc
