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

// Grothendieck ring of the subcategory generated by U(A), ..., U(A^(per-1))
// for a class A of period per: Z[t] / <(1 - t) prod_i (1 + ... + t^(p_i^r_i - 1))>.

#include <vector>

#include "motivekit/arith.hpp"
#include "motivekit/polynomial.hpp"

namespace motivekit {

class K0Ring {
 public:
  /// Builds the ring for a period >= 1 (throws PreconditionError otherwise).
  explicit K0Ring(Int per);

  Int period() const { return per_; }
  const Factorization& factorization() const { return factorization_; }
  /// g(t); leading coefficient -1 and g(1) = 0.
  const IntPolynomial& generator() const { return generator_; }

  /// Z-rank of the quotient, i.e. deg g.
  Int rank() const { return generator_.degree(); }

  /// Unique remainder of p modulo g.
  IntPolynomial reduce(const IntPolynomial& p) const;

  /// Class of U(A^s_1) + ... + U(A^s_k): reduce(sum_j t^s_j).
  IntPolynomial classOf(const std::vector<Int>& exponents) const;

 private:
  Int per_;
  Factorization factorization_;
  IntPolynomial generator_;
};

/// Confirms that the primitive integer form of lcm_Q[t]{1 - t^(p_i^r_i)}
/// equals +-g(t). Requires per >= 2.
bool kernelIdentityCheck(Int per);

}  // namespace motivekit
