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

// Checked 64-bit integer helpers and small number theory.

#include <cstdint>
#include <utility>
#include <vector>

namespace motivekit {

using Int = std::int64_t;

/// (prime, exponent) pairs in increasing prime order.
using Factorization = std::vector<std::pair<Int, int>>;

Int checkedAdd(Int a, Int b);
Int checkedSub(Int a, Int b);
Int checkedMul(Int a, Int b);

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

/// Non-negative residue of a modulo m (m > 0).
Int mod(Int a, Int m);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
Int modInverse(Int a, Int m);

Int ipow(Int base, int exp);

bool isPrime(Int n);

/// Trial-division factorization of n >= 1; factorize(1) is empty.
Factorization factorize(Int n);

/// Distinct prime divisors of n >= 1.
std::vector<Int> primeDivisors(Int n);

/// Positive divisors of n >= 1 in increasing order.
std::vector<Int> divisors(Int n);

}  // namespace motivekit
