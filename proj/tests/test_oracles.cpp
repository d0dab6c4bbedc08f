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

#include "doctest.h"

#include <map>

#include "comsoc/oracles.hpp"
#include "worked_examples.hpp"
#include "test_support.hpp"

using namespace comsoc;

namespace {

// Bell numbers from the triangle recurrence.
std::vector<std::uint64_t> bell_numbers(int upto) {
  std::vector<std::uint64_t> bell{1};
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= upto; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    bell.push_back(next.front());
    row = next;
  }
  return bell;
}

std::string rgs_of(const Partition& p) {
  std::string s;
  for (int i = 0; i < p.num_agents(); ++i)
    for (int b = 0; b < p.size(); ++b)
      if (p.masks()[b] & bit(i)) s += static_cast<char>('0' + b);
  return s;
}

}  // namespace

TEST_CASE("partition counts follow the Bell numbers") {
  auto bell = bell_numbers(8);
  CHECK(enumerate_partitions(1).size() == 1);
  CHECK(enumerate_partitions(3).size() == 5);
  CHECK(enumerate_partitions(5).size() == 52);
  for (int n = 1; n <= 8; ++n) CHECK(enumerate_partitions(n).size() == bell[n]);
  CHECK_THROWS_AS(PartitionStream(13), ResourceLimit);
}

TEST_CASE("partitions are distinct and in restricted-growth order") {
  auto all = enumerate_partitions(5);
  std::vector<std::string> codes;
  for (const auto& p : all) codes.push_back(rgs_of(p));
  CHECK(std::is_sorted(codes.begin(), codes.end()));
  CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
  CHECK(all.front() == Partition::grand(5));
  CHECK(all.back() == Partition::singletons(5));
}

TEST_CASE("brute force on the friendship example") {
  CHECK_FALSE(brute_force_hedonic(fixtures::friends_ea(), Concept::nash));
  CHECK_FALSE(brute_force_hedonic(fixtures::friends_ea(), Concept::strict_core));
  auto fa = brute_force_hedonic(fixtures::friends_fa(), Concept::nash);
  REQUIRE(fa);
  CHECK(*fa == Partition::grand(4));
  auto big = HedonicInstance::friends_enemies(11, HedonicModel::fa, {});
  CHECK_THROWS_AS(brute_force_hedonic(big, Concept::nash), ResourceLimit);
}

TEST_CASE("brute force agrees with the specialised searches") {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + t % 5;
    auto ea = support::random_fe(rng, n, 0.4, HedonicModel::ea);
    CHECK(brute_force_hedonic(ea, Concept::nash).has_value() == ea_nash_exist_fas(ea).has_value());
    auto fa = support::random_fe(rng, n, 0.3, HedonicModel::fa);
    CHECK(brute_force_hedonic(fa, Concept::strict_core).has_value());
    auto sym = support::random_additive(rng, n, 4, 0.6, true);
    CHECK(brute_force_hedonic(sym, Concept::nash).has_value());
  }
}

TEST_CASE("graph classes up to isomorphism") {
  const std::map<int, std::size_t> known{{1, 1}, {2, 2}, {3, 4}, {4, 11}, {5, 34}, {6, 156}};
  for (auto [n, count] : known) CHECK(nonisomorphic_graphs(n).size() == count);
  CHECK_THROWS_AS(Graph::make(3, {{0, 0}}), DomainError);
  CHECK_THROWS_AS(Graph::make(3, {{0, 1}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(Graph::make(3, {{0, 3}}), DomainError);
}

TEST_CASE("clique oracle") {
  auto k4 = Graph::make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(has_clique(k4, 4));
  auto c4 = Graph::make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(has_clique(c4, 2));
  CHECK_FALSE(has_clique(c4, 3));
}

TEST_CASE("clique reduction on small graphs") {
  auto triangle = Graph::make(3, {{0, 1}, {1, 2}, {0, 2}});
  auto inst = clique_to_cc_instance({triangle, 3});
  CHECK(inst.k == 3);
  CHECK(*inst.bound == Rational(21));
  auto sol = solve_by_committee_enumeration(inst, Rule::cc);
  CHECK(sol.objective <= *inst.bound);
  CHECK(solve_cc_xp_misrep(inst));

  auto path = Graph::make(3, {{0, 1}, {1, 2}});
  auto no = clique_to_cc_instance({path, 3});
  CHECK(solve_by_committee_enumeration(no, Rule::cc).objective > *no.bound);

  auto edgeless = Graph::make(3, {});
  CHECK_FALSE(solve_cc_xp_misrep(clique_to_cc_instance({edgeless, 2})));

  CHECK_THROWS_AS(clique_to_cc_instance({triangle, 4}), DomainError);
  CHECK_THROWS_AS(clique_to_cc_instance({triangle, 1}), DomainError);
}

TEST_CASE("clique reduction layout") {
  auto g = Graph::make(2, {{0, 1}});
  auto inst = clique_to_cc_instance({g, 2});
  const auto& p = inst.profile;
  // R = 2 + 2*2*1 = 6, so vertex blocks and edge blocks hold 6 dummies.
  CHECK(p.num_alternatives() == 2 * 8 + 7);
  CHECK(p.num_voters() == 2 + 4);
  auto v0 = p.order(0);
  CHECK(v0[0] == 1);
  CHECK(v0[1] == 0);
  CHECK(v0[2] == 2);
  CHECK(v0[8] == 8);  // tail starts with b_1's neighbour a_2 in ascending order
  auto e0 = p.order(2);
  CHECK(e0[0] == 16);
  CHECK(e0[1] == 0);
  CHECK(e0[2] == 17);
  auto e1 = p.order(4);
  CHECK(e1[1] == 8);
}

TEST_CASE("literal blocker sizing is unsound") {
  // A path 2-1-3 plus an isolated vertex has no triangle, yet with blocks of
  // n-hat and m-hat dummies a committee stays within the bound.
  auto g = Graph::make(4, {{0, 1}, {0, 2}});
  CHECK_FALSE(has_clique(g, 3));
  auto literal = clique_to_cc_instance({g, 3}, BlockerSizing::literal);
  CHECK(literal.k == 3);
  CHECK(solve_by_committee_enumeration(literal, Rule::cc).objective <= *literal.bound);
  CHECK_FALSE(solve_cc_xp_misrep(clique_to_cc_instance({g, 3})));
}

TEST_CASE("clique reduction matches clique existence on five vertices") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : nonisomorphic_graphs(n))
      for (int h = 2; h <= std::min(4, n); ++h)
        CHECK(solve_cc_xp_misrep(clique_to_cc_instance({g, h})).has_value() == has_clique(g, h));
}

TEST_CASE("generator shapes round trip") {
  for (std::string s : {"random_linear(5,4)", "random_approval(5,5,2)",
                        "random_additive(6,3,0.5,symmetric)", "random_fe(6,0.3,ea)"})
    CHECK(to_string(parse_shape(s)) == s);
  CHECK_THROWS_AS(parse_shape("random_linear(5)"), DomainError);
  CHECK_THROWS_AS(parse_shape("mallows(5,4)"), DomainError);
  CHECK_THROWS_AS(parse_shape("random_fe(6,1.5,fa)"), DomainError);
}

TEST_CASE("generated instances respect their shapes") {
  auto p = std::get<PreferenceProfile>(generate({0, RandomApproval{5, 5, 2}}));
  CHECK(p.num_voters() == 5);
  CHECK(p.max_approval_size() <= 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto h = std::get<HedonicInstance>(generate({seed, RandomAdditive{7, 3, 0.6, true}}));
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        if (i != j) CHECK(h.utility(i, j) == h.utility(j, i));
    CHECK(h.symmetric());
  }
  GeneratorSpec spec{42, RandomFe{8, 0.3, HedonicModel::ea}};
  CHECK(std::get<HedonicInstance>(generate(spec)) == std::get<HedonicInstance>(generate(spec)));
  auto lin = std::get<PreferenceProfile>(generate({3, RandomLinear{6, 4}}));
  CHECK(lin == std::get<PreferenceProfile>(generate({3, RandomLinear{6, 4}})));
  CHECK_FALSE(lin == std::get<PreferenceProfile>(generate({4, RandomLinear{6, 4}})));
}

TEST_CASE("rng draws stay in range") {
  Rng rng(1);
  std::vector<int> hits(5, 0);
  for (int i = 0; i < 5000; ++i) {
    auto x = rng.uniform(-2, 2);
    REQUIRE(x >= -2);
    REQUIRE(x <= 2);
    ++hits[x + 2];
  }
  for (int h : hits) CHECK(h > 800);
  for (int i = 0; i < 1000; ++i) {
    double u = rng.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  auto part = random_partition(rng, 9);
  CHECK(part.num_agents() == 9);
}
