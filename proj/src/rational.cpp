// Copyright 2026 The motivekit Authors
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


#include "motivekit/rational.hpp"

#include <charconv>

#include "motivekit/errors.hpp"

namespace motivekit {

Rational::Rational(Int n, Int d) {
  if (d == 0) throw PreconditionError("rational with zero denominator");
  if (d < 0) {
    n = checkedSub(0, n);
    d = checkedSub(0, d);
  }
  const Int g = gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

Rational operator+(const Rational& a, const Rational& b) {
  const Int g = gcd(a.den_, b.den_);
  const Int n = checkedAdd(checkedMul(a.num_, b.den_ / g), checkedMul(b.num_, a.den_ / g));
  return Rational(n, checkedMul(a.den_ / g, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  const Int g1 = gcd(a.num_, b.den_);
  const Int g2 = gcd(b.num_, a.den_);
  if (g1 == 0 || g2 == 0) return Rational();
  return Rational(checkedMul(a.num_ / g1, b.num_ / g2), checkedMul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw PreconditionError("rational division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 l = static_cast<__int128>(a.num_) * b.den_;
  const __int128 r = static_cast<__int128>(b.num_) * a.den_;
  return l <=> r;
}

Rational Rational::modOne() const { return Rational(mod(num_, den_), den_); }

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

Int parseInt(std::string_view s, std::string_view whole) {
  Int v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw MalformedInput("bad rational '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parseInt(text, text));
  const Int d = parseInt(text.substr(slash + 1), text);
  if (d == 0) throw MalformedInput("zero denominator in '" + std::string(text) + "'");
  return Rational(parseInt(text.substr(0, slash), text), d);
}

}  // namespace motivekit
