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

#include "comsoc/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace comsoc {

namespace {

using Code = ParseError::Code;

struct Line {
  int number = 0;
  std::string text;
};

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line that is not a comment. Blank lines are returned too when
  // `keep_blank`, since an empty approval ballot is meaningful.
  std::optional<Line> next(bool keep_blank) {
    std::string text;
    while (std::getline(in_, text)) {
      ++number_;
      if (!text.empty() && text.back() == '\r') text.pop_back();
      auto first = text.find_first_not_of(" \t");
      if (first != std::string::npos && text[first] == '#') continue;
      if (first == std::string::npos && !keep_blank) continue;
      return Line{number_, text};
    }
    return std::nullopt;
  }
  int line() const { return number_; }

 private:
  std::istream& in_;
  int number_ = 0;
};

std::vector<std::string> tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::int64_t integer(const std::string& t, int line) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != t.size()) throw ParseError(line, Code::syntax, "expected an integer, got '" + t + "'");
  return v;
}

// 1-based index in 1..limit, returned 0-based.
int index(const std::string& t, int limit, int line, const char* what) {
  std::int64_t v = integer(t, line);
  if (v < 1 || v > limit)
    throw ParseError(line, Code::index_range,
                     std::string(what) + " " + t + " outside 1.." + std::to_string(limit));
  return static_cast<int>(v - 1);
}

int count(const std::string& t, int line, const char* what) {
  std::int64_t v = integer(t, line);
  if (v < 0 || v > 1'000'000) throw ParseError(line, Code::header, std::string("bad ") + what + " '" + t + "'");
  return static_cast<int>(v);
}

Line header_line(LineReader& r, const char* expected) {
  auto h = r.next(false);
  if (!h) throw ParseError(r.line() + 1, Code::header, std::string("missing header, expected ") + expected);
  return *h;
}

void no_trailing(LineReader& r) {
  while (auto l = r.next(true))
    if (!tokens(l->text).empty()) throw ParseError(l->number, Code::count, "unexpected extra line");
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

}  // namespace

PreferenceProfile parse_profile(std::istream& in) {
  LineReader r(in);
  Line h = header_line(r, "'linear m n' or 'approval m n'");
  auto head = tokens(h.text);
  if (head.size() != 3 || (head[0] != "linear" && head[0] != "approval"))
    throw ParseError(h.number, Code::header, "expected 'linear m n' or 'approval m n'");
  const bool linear = head[0] == "linear";
  const int m = count(head[1], h.number, "alternative count");
  const int n = count(head[2], h.number, "voter count");
  if (m < 1) throw ParseError(h.number, Code::header, "need at least one alternative");

  std::vector<std::vector<int>> ballots;
  while (static_cast<int>(ballots.size()) < n) {
    auto l = r.next(!linear);
    if (!l)
      throw ParseError(r.line(), Code::count,
                       "expected " + std::to_string(n) + " voters, found " + std::to_string(ballots.size()));
    std::vector<int> ballot;
    std::set<int> seen;
    for (const auto& t : tokens(l->text)) {
      int a = index(t, m, l->number, "alternative");
      if (!seen.insert(a).second)
        throw ParseError(l->number, Code::duplicate_entry, "alternative " + t + " listed twice");
      ballot.push_back(a);
    }
    if (linear && static_cast<int>(ballot.size()) != m)
      throw ParseError(l->number, Code::missing,
                       "ranking lists " + std::to_string(ballot.size()) + " of " + std::to_string(m) +
                           " alternatives");
    ballots.push_back(std::move(ballot));
  }
  no_trailing(r);
  return linear ? PreferenceProfile::linear(m, std::move(ballots))
                : PreferenceProfile::approval(m, std::move(ballots));
}

HedonicInstance parse_hedonic(std::istream& in) {
  LineReader r(in);
  Line h = header_line(r, "'hedonic additive n' or 'hedonic fe fa|ea n'");
  auto head = tokens(h.text);
  bool additive = head.size() == 3 && head[0] == "hedonic" && head[1] == "additive";
  bool fe = head.size() == 4 && head[0] == "hedonic" && head[1] == "fe" && (head[2] == "fa" || head[2] == "ea");
  if (!additive && !fe) throw ParseError(h.number, Code::header, "expected 'hedonic additive n' or 'hedonic fe fa|ea n'");
  const int n = count(head.back(), h.number, "agent count");
  if (n < 1 || n > kMaxAgents)
    throw ParseError(h.number, Code::header, "agent count must lie in 1.." + std::to_string(kMaxAgents));

  std::set<std::pair<int, int>> seen;
  std::vector<HedonicInstance::UtilityArc> utilities;
  std::vector<std::pair<int, int>> arcs;
  while (auto l = r.next(false)) {
    auto t = tokens(l->text);
    if (t.size() != (additive ? 3u : 2u))
      throw ParseError(l->number, Code::syntax, additive ? "expected 'i j u'" : "expected 'i j'");
    int i = index(t[0], n, l->number, "agent");
    int j = index(t[1], n, l->number, "agent");
    if (i == j) throw ParseError(l->number, Code::index_range, "agent " + t[0] + " cannot rate itself");
    if (!seen.insert({i, j}).second)
      throw ParseError(l->number, Code::duplicate_entry, "arc " + t[0] + " " + t[1] + " given twice");
    if (additive) {
      std::int64_t u = integer(t[2], l->number);
      if (u > kMaxUtility || u < -kMaxUtility)
        throw ParseError(l->number, Code::index_range, "utility " + t[2] + " exceeds the supported magnitude");
      utilities.emplace_back(i, j, u);
    } else {
      arcs.emplace_back(i, j);
    }
  }
  if (additive) return HedonicInstance::additive(n, utilities);
  return HedonicInstance::friends_enemies(n, head[2] == "fa" ? HedonicModel::fa : HedonicModel::ea, arcs);
}

Graph parse_graph(std::istream& in) {
  LineReader r(in);
  Line h = header_line(r, "'graph n m'");
  auto head = tokens(h.text);
  if (head.size() != 3 || head[0] != "graph") throw ParseError(h.number, Code::header, "expected 'graph n m'");
  const int n = count(head[1], h.number, "vertex count");
  const int m = count(head[2], h.number, "edge count");
  if (n > 64) throw ParseError(h.number, Code::header, "at most 64 vertices are supported");
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> edges;
  while (static_cast<int>(edges.size()) < m) {
    auto l = r.next(false);
    if (!l)
      throw ParseError(r.line(), Code::count,
                       "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    auto t = tokens(l->text);
    if (t.size() != 2) throw ParseError(l->number, Code::syntax, "expected 'i j'");
    int i = index(t[0], n, l->number, "vertex");
    int j = index(t[1], n, l->number, "vertex");
    if (i == j) throw ParseError(l->number, Code::index_range, "self-loop at vertex " + t[0]);
    if (!seen.insert({std::min(i, j), std::max(i, j)}).second)
      throw ParseError(l->number, Code::duplicate_entry, "edge " + t[0] + " " + t[1] + " given twice");
    edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  no_trailing(r);
  return Graph::make(n, std::move(edges));
}

Partition parse_partition(std::istream& in, std::optional<int> agents) {
  LineReader r(in);
  std::vector<std::vector<int>> coalitions;
  std::vector<int> first_line;  // where each agent appeared
  const int limit = agents.value_or(kMaxAgents);
  int last = 0;
  while (auto l = r.next(false)) {
    last = l->number;
    std::vector<int> c;
    for (const auto& t : tokens(l->text)) {
      int a = index(t, limit, l->number, "agent");
      if (static_cast<int>(first_line.size()) <= a) first_line.resize(a + 1, 0);
      if (first_line[a] == l->number)
        throw ParseError(l->number, Code::duplicate_entry, "agent " + t + " listed twice in one coalition");
      if (first_line[a] != 0)
        throw ParseError(l->number, Code::overlapping_coalition,
                         "agent " + t + " already belongs to the coalition on line " + std::to_string(first_line[a]));
      first_line[a] = l->number;
      c.push_back(a);
    }
    coalitions.push_back(std::move(c));
  }
  const int n = agents.value_or(static_cast<int>(first_line.size()));
  if (n == 0) throw ParseError(last + 1, Code::missing, "partition lists no agents");
  first_line.resize(n, 0);
  for (int a = 0; a < n; ++a)
    if (first_line[a] == 0)
      throw ParseError(last + 1, Code::missing, "agent " + std::to_string(a + 1) + " is in no coalition");
  return Partition(n, std::move(coalitions));
}

ParsedFile parse_instance(const std::string& path) {
  std::string head;
  {
    auto in = open(path);
    LineReader r(in);
    if (auto l = r.next(false)) {
      auto t = tokens(l->text);
      if (!t.empty()) head = t[0];
    }
  }
  auto in = open(path);
  if (head == "linear" || head == "approval") return parse_profile(in);
  if (head == "hedonic") return parse_hedonic(in);
  if (head == "graph") return parse_graph(in);
  return parse_partition(in);
}

PreferenceProfile read_profile(const std::string& path) {
  auto in = open(path);
  return parse_profile(in);
}

HedonicInstance read_hedonic(const std::string& path) {
  auto in = open(path);
  return parse_hedonic(in);
}

Graph read_graph(const std::string& path) {
  auto in = open(path);
  return parse_graph(in);
}

Partition read_partition(const std::string& path, std::optional<int> agents) {
  auto in = open(path);
  return parse_partition(in, agents);
}

void write_profile(std::ostream& out, const PreferenceProfile& p) {
  out << (p.is_linear() ? "linear " : "approval ") << p.num_alternatives() << ' ' << p.num_voters() << '\n';
  for (int v = 0; v < p.num_voters(); ++v) {
    auto ballot = p.is_linear() ? p.order(v) : p.approval_set(v);
    for (std::size_t i = 0; i < ballot.size(); ++i) out << (i ? " " : "") << ballot[i] + 1;
    out << '\n';
  }
}

void write_hedonic(std::ostream& out, const HedonicInstance& h) {
  if (h.is_additive()) {
    out << "hedonic additive " << h.num_agents() << '\n';
    for (auto [i, j, u] : h.utility_arcs()) out << i + 1 << ' ' << j + 1 << ' ' << u << '\n';
  } else {
    out << "hedonic fe " << to_string(h.model()) << ' ' << h.num_agents() << '\n';
    for (auto [i, j] : h.friendship_arcs()) out << i + 1 << ' ' << j + 1 << '\n';
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.n << ' ' << g.edges.size() << '\n';
  for (auto [i, j] : g.edges) out << i + 1 << ' ' << j + 1 << '\n';
}

void write_partition(std::ostream& out, const Partition& p) {
  for (const auto& c : p.coalitions()) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i] + 1;
    out << '\n';
  }
}

}  // namespace comsoc
