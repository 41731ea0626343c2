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

// Gaussian polynomials, exact evaluation at roots of unity, cyclic sieving,
// and the motivic decompositions of twisted flag and Severi-Brauer varieties.

#include <vector>

#include "motivekit/brauer.hpp"
#include "motivekit/caps.hpp"
#include "motivekit/motives.hpp"
#include "motivekit/polynomial.hpp"

namespace motivekit {

/// Degree n split into positive parts d_1 + ... + d_m = n.
struct GaussianSpec {
  Int n = 0;
  std::vector<Int> dims;

  /// Throws PreconditionError unless every part is positive and they sum to n.
  void validate() const;
};

/// The twisted Grassmannian Gr(d; A) of a degree-n algebra, as Flag(d, n - d).
GaussianSpec grassmannianSpec(Int n, Int d);

/// (n choose m)_t by the Pascal recursion. Requires 0 <= m <= n.
IntPolynomial gaussianBinomial(Int n, Int m);

/// prod_k (d_1 + ... + d_k choose d_k)_t.
IntPolynomial gaussianMultinomial(const GaussianSpec& spec);

/// d-th cyclotomic polynomial, by exact division of t^d - 1.
IntPolynomial cyclotomic(Int d);

/// p(w) for w a primitive d-th root of unity, as the constant remainder of p
/// modulo cyclotomic(d). Throws PreconditionError if the remainder is not
/// constant.
Int evalAtRootOfUnity(const IntPolynomial& p, Int d);

struct CspReport {
  bool holds = false;
  /// Indexed by rotation amount k = 0..n-1.
  std::vector<Int> fixedCounts;
  std::vector<Int> predicted;
};

/// Counts m-subsets of {0..n-1} fixed by each rotation and compares with
/// (n choose m)_t at the matching root of unity.
CspReport cspCheck(Int n, Int m, const Caps& caps = {});

/// Whether (t^l - 1) divides p(t^i) - p(t). Requires gcd(i, l) = 1.
bool congruenceCheck(const IntPolynomial& p, Int i, Int l);

/// Motive of Flag(d_1, ..., d_m; A): e * a with multiplicity coeff_e of the
/// Gaussian multinomial.
CsaMotive flagMotive(const BrauerClass& a, const GaussianSpec& spec);

/// Motive of SB(A) for deg(A) = deg: {0, a, ..., (deg - 1) a}.
CsaMotive sbMotive(const BrauerClass& a, Int deg);

struct FlagEquivalence {
  bool motivesIsomorphic = false;
  bool sameSubgroup = false;
};

/// Evaluates both criteria for Flag(spec; A) vs Flag(spec; B). Throws
/// InternalInconsistency if they disagree.
FlagEquivalence flagEquivalent(const BrauerClass& a, const BrauerClass& b, const GaussianSpec& spec);

}  // namespace motivekit
