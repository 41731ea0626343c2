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


#include "motivekit/polynomial.hpp"

#include <algorithm>

#include "motivekit/errors.hpp"

namespace motivekit {

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::monomial(Int c, std::size_t k) {
  std::vector<Int> v(k + 1, 0);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

Int IntPolynomial::eval(Int x) const {
  Int acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = checkedAdd(checkedMul(acc, x), c_[i]);
  return acc;
}

IntPolynomial IntPolynomial::substitutePower(std::size_t k) const {
  if (c_.empty()) return {};
  if (k == 0) {
    Int s = 0;
    for (Int c : c_) s = checkedAdd(s, c);
    return constant(s);
  }
  std::vector<Int> v((c_.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::shift(std::size_t k) const {
  if (c_.empty()) return {};
  std::vector<Int> v(k, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checkedAdd(a.coeff(i), b.coeff(i));
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checkedSub(a.coeff(i), b.coeff(i));
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<Int> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = checkedAdd(v[i + j], checkedMul(a.c_[i], b.c_[j]));
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(Int k, const IntPolynomial& a) {
  std::vector<Int> v(a.c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checkedMul(k, a.c_[i]);
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Int c = c_[i];
    if (!s.empty()) {
      s += c < 0 ? " - " : " + ";
      c = c < 0 ? -c : c;
    }
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c == -1) s += "-";
      else if (c != 1) s += std::to_string(c) + "*";
      s += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return s;
}

std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& a, const IntPolynomial& b) {
  const Int lead = b.leading();
  if (lead != 1 && lead != -1) throw PreconditionError("integer polynomial division needs a unit leading coefficient");
  std::vector<Int> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  if (r.size() <= db) return {IntPolynomial(), a};
  std::vector<Int> q(r.size() - db, 0);
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    const Int f = r[k] * lead;  // lead is its own inverse
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = checkedSub(r[k - db + j], checkedMul(f, b.coeff(j)));
  }
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

IntPolynomial exactQuotient(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.isZero()) throw PreconditionError("polynomial division is not exact");
  return q;
}

IntPolynomial geometricSum(std::size_t n) { return IntPolynomial(std::vector<Int>(n, 1)); }

// ---------------------------------------------------------------------------

RationalPolynomial::RationalPolynomial(const IntPolynomial& p) {
  for (Int c : p.coeffs()) c_.emplace_back(c);
}

void RationalPolynomial::trim() {
  while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

RationalPolynomial RationalPolynomial::monic() const {
  if (c_.empty()) return {};
  std::vector<Rational> v(c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c_[i] / c_.back();
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return RationalPolynomial(std::move(v));
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.isZero()) throw PreconditionError("polynomial division by zero");
  std::vector<Rational> r = a.c_;
  const std::size_t db = static_cast<std::size_t>(b.degree());
  if (r.size() <= db) return {RationalPolynomial(), a};
  std::vector<Rational> q(r.size() - db);
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].isZero()) continue;
    const Rational f = r[k] / b.leading();
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
  }
  return {RationalPolynomial(std::move(q)), RationalPolynomial(std::move(r))};
}

IntPolynomial RationalPolynomial::primitivePart() const {
  Int den = 1;
  for (const auto& c : c_) den = lcm(den, c.den());
  std::vector<Int> v(c_.size());
  Int content = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = checkedMul(c_[i].num(), den / c_[i].den());
    content = motivekit::gcd(content, v[i]);
  }
  if (content > 1)
    for (auto& x : v) x /= content;
  return IntPolynomial(std::move(v));
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a, y = b;
  while (!y.isZero()) {
    RationalPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

RationalPolynomial lcm(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.isZero() || b.isZero()) return {};
  auto [q, r] = divmod(a * b, gcd(a, b));
  return q.monic();
}

}  // namespace motivekit
