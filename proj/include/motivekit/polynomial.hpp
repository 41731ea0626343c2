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


#pragma once

// Dense univariate polynomials over Z and Q, constant term first.

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "motivekit/arith.hpp"
#include "motivekit/rational.hpp"

namespace motivekit {

/// Integer polynomial in canonical form (no trailing zeros). The zero
/// polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }
  explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPolynomial constant(Int c) { return IntPolynomial(std::vector<Int>{c}); }
  /// c * t^k
  static IntPolynomial monomial(Int c, std::size_t k);

  const std::vector<Int>& coeffs() const { return c_; }
  bool isZero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  Int leading() const { return c_.empty() ? 0 : c_.back(); }

  Int eval(Int x) const;
  /// p(t^k)
  IntPolynomial substitutePower(std::size_t k) const;
  /// t^k * p(t)
  IntPolynomial shift(std::size_t k) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(Int k, const IntPolynomial& a);
  IntPolynomial operator-() const { return (-1) * *this; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "c0 + c1*t + c2*t^2 + ..." skipping zero terms; "0" for zero.
  std::string str() const;

 private:
  void trim();
  std::vector<Int> c_;
};

/// Quotient and remainder of a by b, where b has leading coefficient +-1.
/// Throws PreconditionError otherwise.
std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& a, const IntPolynomial& b);

/// Remainder of a by b (leading coefficient +-1).
inline IntPolynomial remainder(const IntPolynomial& a, const IntPolynomial& b) { return divmod(a, b).second; }

/// Exact quotient a / b for b with leading coefficient +-1; throws
/// PreconditionError when the division leaves a remainder.
IntPolynomial exactQuotient(const IntPolynomial& a, const IntPolynomial& b);

/// 1 + t + ... + t^(n-1)
IntPolynomial geometricSum(std::size_t n);

/// Polynomial over Q in canonical form.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit RationalPolynomial(const IntPolynomial& p);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool isZero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }

  RationalPolynomial monic() const;

  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  friend std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                                  const RationalPolynomial& b);

  /// Scales by the lcm of denominators and divides by the content, yielding a
  /// primitive integer polynomial (sign preserved).
  IntPolynomial primitivePart() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd over Q[t].
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);
/// Monic lcm over Q[t].
RationalPolynomial lcm(const RationalPolynomial& a, const RationalPolynomial& b);

}  // namespace motivekit
