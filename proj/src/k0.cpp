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


#include "motivekit/k0.hpp"

#include "motivekit/errors.hpp"

namespace motivekit {

K0Ring::K0Ring(Int per) : per_(per) {
  if (per < 1) throw PreconditionError("K0 ring needs a positive period");
  factorization_ = factorize(per);
  generator_ = IntPolynomial{1, -1};
  for (auto [p, r] : factorization_) generator_ = generator_ * geometricSum(static_cast<std::size_t>(ipow(p, r)));
}

IntPolynomial K0Ring::reduce(const IntPolynomial& p) const { return remainder(p, generator_); }

IntPolynomial K0Ring::classOf(const std::vector<Int>& exponents) const {
  IntPolynomial sum;
  for (Int s : exponents) {
    if (s < 0) throw PreconditionError("K0 class exponents must be non-negative");
    sum = sum + IntPolynomial::monomial(1, static_cast<std::size_t>(s));
  }
  return reduce(sum);
}

bool kernelIdentityCheck(Int per) {
  if (per < 2) throw PreconditionError("kernelIdentityCheck needs per >= 2");
  const K0Ring ring(per);
  RationalPolynomial l(IntPolynomial::constant(1));
  for (auto [p, r] : ring.factorization()) {
    const auto q = static_cast<std::size_t>(ipow(p, r));
    l = lcm(l, RationalPolynomial(IntPolynomial::constant(1) - IntPolynomial::monomial(1, q)));
  }
  const IntPolynomial candidate = l.primitivePart();
  return candidate == ring.generator() || candidate == -ring.generator();
}

}  // namespace motivekit
