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


#include "motivekit/gaussian.hpp"

#include <bit>
#include <cstdint>

#include "motivekit/errors.hpp"

namespace motivekit {

void GaussianSpec::validate() const {
  if (n < 1) throw PreconditionError("flag spec needs a positive degree");
  Int sum = 0;
  for (Int d : dims) {
    if (d < 1) throw PreconditionError("flag spec parts must be positive");
    sum = checkedAdd(sum, d);
  }
  if (sum != n) throw PreconditionError("flag spec parts sum to " + std::to_string(sum) + ", not " + std::to_string(n));
}

GaussianSpec grassmannianSpec(Int n, Int d) {
  if (d < 1 || d >= n) throw PreconditionError("Grassmannian needs 1 <= d < n");
  return {n, {d, n - d}};
}

IntPolynomial gaussianBinomial(Int n, Int m) {
  if (n < 0 || m < 0 || m > n) throw PreconditionError("gaussianBinomial needs 0 <= m <= n");
  // row[k] holds (r choose k)_t for the current r
  std::vector<IntPolynomial> row{IntPolynomial::constant(1)};
  for (Int r = 1; r <= n; ++r) {
    std::vector<IntPolynomial> next(static_cast<std::size_t>(r) + 1);
    next[0] = IntPolynomial::constant(1);
    next[static_cast<std::size_t>(r)] = IntPolynomial::constant(1);
    for (Int k = 1; k < r; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      next[ku] = row[ku - 1] + row[ku].shift(ku);
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(m)];
}

IntPolynomial gaussianMultinomial(const GaussianSpec& spec) {
  spec.validate();
  IntPolynomial out = IntPolynomial::constant(1);
  Int partial = 0;
  for (Int d : spec.dims) {
    partial += d;
    out = out * gaussianBinomial(partial, d);
  }
  return out;
}

IntPolynomial cyclotomic(Int d) {
  if (d < 1) throw PreconditionError("cyclotomic index must be positive");
  IntPolynomial p = IntPolynomial::monomial(1, static_cast<std::size_t>(d)) - IntPolynomial::constant(1);
  for (Int e : divisors(d))
    if (e < d) p = exactQuotient(p, cyclotomic(e));
  return p;
}

Int evalAtRootOfUnity(const IntPolynomial& p, Int d) {
  const IntPolynomial r = remainder(p, cyclotomic(d));
  if (r.degree() > 0)
    throw PreconditionError("value at a primitive " + std::to_string(d) + "-th root of unity is not an integer");
  return r.coeff(0);
}

CspReport cspCheck(Int n, Int m, const Caps& caps) {
  if (n < 1 || m < 0 || m > n) throw PreconditionError("cspCheck needs n >= 1 and 0 <= m <= n");
  if (static_cast<std::uint64_t>(n) > caps.subsetBits || n > 62) throw CapExceeded("cspCheck ground set size", caps.subsetBits);
  const IntPolynomial poly = gaussianBinomial(n, m);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  CspReport report;
  report.fixedCounts.assign(static_cast<std::size_t>(n), 0);
  auto rotate = [&](std::uint64_t s, Int k) {
    return ((s << k) | (s >> (n - k))) & full;
  };
  // m-subsets as bitmasks in increasing order (Gosper's hack)
  std::uint64_t s = m == 0 ? 0 : (std::uint64_t{1} << m) - 1;
  while (true) {
    for (Int k = 0; k < n; ++k)
      if (rotate(s, k) == s) ++report.fixedCounts[static_cast<std::size_t>(k)];
    if (s == 0) break;
    const std::uint64_t low = s & (~s + 1);
    const std::uint64_t ripple = s + low;
    if (ripple > full) break;
    s = ripple | (((ripple ^ s) >> 2) / low);
    if (s > full) break;
  }
  report.holds = true;
  for (Int k = 0; k < n; ++k) {
    const Int order = n / gcd(n, k);
    report.predicted.push_back(evalAtRootOfUnity(poly, order));
    if (report.predicted.back() != report.fixedCounts[static_cast<std::size_t>(k)]) report.holds = false;
  }
  return report;
}

bool congruenceCheck(const IntPolynomial& p, Int i, Int l) {
  if (i < 1 || l < 1) throw PreconditionError("congruenceCheck needs positive i and l");
  if (gcd(i, l) != 1) throw PreconditionError("congruenceCheck needs gcd(i, l) = 1");
  const IntPolynomial modulus = IntPolynomial::monomial(1, static_cast<std::size_t>(l)) - IntPolynomial::constant(1);
  return remainder(p.substitutePower(static_cast<std::size_t>(i)) - p, modulus).isZero();
}

CsaMotive flagMotive(const BrauerClass& a, const GaussianSpec& spec) {
  return motiveFromPolynomial(a, gaussianMultinomial(spec));
}

CsaMotive sbMotive(const BrauerClass& a, Int deg) {
  if (deg < 1) throw PreconditionError("sbMotive needs a positive degree");
  return motiveFromPolynomial(a, geometricSum(static_cast<std::size_t>(deg)));
}

FlagEquivalence flagEquivalent(const BrauerClass& a, const BrauerClass& b, const GaussianSpec& spec) {
  requireSameModel(a, b);
  spec.validate();
  if (spec.n % index(a) != 0 || spec.n % index(b) != 0)
    throw PreconditionError("flagEquivalent needs both indices to divide the degree " + std::to_string(spec.n));
  FlagEquivalence out;
  out.motivesIsomorphic = isIsomorphic(flagMotive(a, spec), flagMotive(b, spec)).isomorphic;
  out.sameSubgroup = cyclicEqual(a, b).equal;
  if (out.motivesIsomorphic != out.sameSubgroup)
    throw InternalInconsistency("flagEquivalent: motive criterion and subgroup criterion disagree for " + a.str() +
                                " and " + b.str());
  return out;
}

}  // namespace motivekit
