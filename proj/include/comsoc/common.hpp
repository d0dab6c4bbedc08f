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

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace comsoc {

// Error hierarchy. Every failure raised by the library derives from Error so
// front ends can catch one type; the subclasses keep diagnostics distinct.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation (bad index, partial map).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Operation called on a profile or instance kind it does not support.
class UnsupportedKind : public Error {
 public:
  using Error::Error;
};

// Caller broke a documented precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Node budget, deadline, or size guard exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// Malformed input file. Each kind of defect has its own code so callers can
// tell them apart without matching on message text.
class ParseError : public Error {
 public:
  enum class Code { syntax, header, index_range, duplicate_entry, overlapping_coalition, missing, count };

  ParseError(int line, Code code, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line), code_(code) {}
  int line() const { return line_; }
  Code code() const { return code_; }

 private:
  int line_;
  Code code_;
};

std::string to_string(ParseError::Code code);

// Optional caps on exhaustive searches. A zero budget means unlimited.
struct SearchLimits {
  std::uint64_t node_budget = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static SearchLimits none() { return {}; }
};

// Counts search nodes against a SearchLimits and throws ResourceLimit once
// either the budget or the deadline is exhausted.
class NodeCounter {
 public:
  explicit NodeCounter(const SearchLimits& limits) : limits_(limits) {}

  void tick(std::uint64_t amount = 1) {
    nodes_ += amount;
    if (limits_.node_budget != 0 && nodes_ > limits_.node_budget)
      throw ResourceLimit("node budget of " + std::to_string(limits_.node_budget) +
                          " exceeded");
    if (limits_.deadline && nodes_ >= next_clock_check_) {
      next_clock_check_ = nodes_ + 4096;
      if (std::chrono::steady_clock::now() > *limits_.deadline)
        throw ResourceLimit("time limit exceeded");
    }
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  SearchLimits limits_;
  std::uint64_t nodes_ = 0;
  std::uint64_t next_clock_check_ = 0;
};

// Exact rational with 64-bit numerator and denominator, always normalized
// (gcd 1, positive denominator). Intermediate products use 128-bit integers;
// a result that does not fit 64 bits throws DomainError.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit on purpose
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Smallest integer >= this value.
  std::int64_t ceil() const;

  // Accepts "7", "-3", "13/2", "6.5".
  static Rational parse(const std::string& text);
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Harmonic number h(x) = 1 + 1/2 + ... + 1/x, h(0) = 0.
Rational harmonic(int x);

inline int popcount64(std::uint64_t x) { return __builtin_popcountll(x); }
inline int lowest_bit(std::uint64_t x) { return __builtin_ctzll(x); }

// Binomial coefficient saturating at UINT64_MAX.
std::uint64_t binomial_saturating(int n, int k);

}  // namespace comsoc
