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

#include "comsoc/common.hpp"

#include <cctype>
#include <limits>
#include <numeric>

namespace comsoc {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr auto lo = std::numeric_limits<std::int64_t>::min();
  constexpr auto hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) throw DomainError("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ +
                                 static_cast<__int128>(b.num_) * a.den_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ -
                                 static_cast<__int128>(b.num_) * a.den_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("rational division by zero");
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_,
                             static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::parse(const std::string& text) {
  auto fail = [&]() -> Rational { throw DomainError("not a rational number: '" + text + "'"); };
  if (text.empty()) return fail();
  std::size_t slash = text.find('/');
  std::size_t dot = text.find('.');
  try {
    if (slash != std::string::npos) {
      std::size_t used = 0;
      long long n = std::stoll(text.substr(0, slash), &used);
      if (used != slash) return fail();
      std::string ds = text.substr(slash + 1);
      long long d = std::stoll(ds, &used);
      if (used != ds.size()) return fail();
      return Rational(n, d);
    }
    if (dot != std::string::npos) {
      std::string ip = text.substr(0, dot);
      std::string fp = text.substr(dot + 1);
      bool neg = !ip.empty() && ip[0] == '-';
      if (neg) ip = ip.substr(1);
      if (fp.empty() || fp.size() > 15) return fail();
      for (char c : ip + fp)
        if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
      Rational r(ip.empty() ? 0 : std::stoll(ip));
      r += Rational(std::stoll(fp), scale);
      return neg ? Rational(0) - r : r;
    }
    std::size_t used = 0;
    long long n = std::stoll(text, &used);
    if (used != text.size()) return fail();
    return Rational(n);
  } catch (const std::logic_error&) {
    return fail();
  }
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational harmonic(int x) {
  Rational h;
  for (int j = 1; j <= x; ++j) h += Rational(1, j);
  return h;
}

std::uint64_t binomial_saturating(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::string to_string(ParseError::Code code) {
  switch (code) {
    case ParseError::Code::syntax: return "syntax";
    case ParseError::Code::header: return "header";
    case ParseError::Code::index_range: return "index_range";
    case ParseError::Code::duplicate_entry: return "duplicate_entry";
    case ParseError::Code::overlapping_coalition: return "overlapping_coalition";
    case ParseError::Code::missing: return "missing";
    case ParseError::Code::count: return "count";
  }
  return "syntax";
}

}  // namespace comsoc
