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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motivekit/errors.hpp"
#include "motivekit/gaussian.hpp"

using namespace motivekit;

namespace {

Int binom(Int n, Int k) {
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// (n choose m)_t as prod (1 - t^(n-i)) / prod (1 - t^(i+1)), i < m.
IntPolynomial quotientFormula(Int n, Int m) {
  IntPolynomial num{1}, den{1};
  for (Int i = 0; i < m; ++i) {
    num = num * (IntPolynomial{1} - IntPolynomial::monomial(1, static_cast<std::size_t>(n - i)));
    den = den * (IntPolynomial{1} - IntPolynomial::monomial(1, static_cast<std::size_t>(i + 1)));
  }
  return exactQuotient(num, den);
}

}  // namespace

TEST_CASE("gaussianBinomial") {
  CHECK(gaussianBinomial(2, 1) == IntPolynomial{1, 1});
  CHECK(gaussianBinomial(4, 2) == IntPolynomial{1, 1, 2, 1, 1});
  CHECK(gaussianBinomial(7, 0) == IntPolynomial{1});
  CHECK_THROWS_AS(gaussianBinomial(2, 3), PreconditionError);
}

TEST_CASE("gaussianMultinomial") {
  CHECK(gaussianMultinomial({5, {1, 4}}) == IntPolynomial{1, 1, 1, 1, 1});
  CHECK(gaussianMultinomial({4, {2, 2}}) == IntPolynomial{1, 1, 2, 1, 1});
  CHECK(gaussianMultinomial({3, {1, 1, 1}}) == IntPolynomial{1, 2, 2, 1});
  CHECK_THROWS_AS(gaussianMultinomial({4, {1, 2}}), PreconditionError);
  CHECK_THROWS_AS(gaussianMultinomial({4, {0, 4}}), PreconditionError);
}

TEST_CASE("Gaussian polynomial properties") {
  for (Int n = 0; n <= 12; ++n)
    for (Int m = 0; m <= n; ++m) {
      const auto p = gaussianBinomial(n, m);
      CHECK(p == quotientFormula(n, m));
      CHECK(p.eval(1) == binom(n, m));
      const auto& c = p.coeffs();
      for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(c[i] >= 0);
        CHECK(c[i] == c[c.size() - 1 - i]);
      }
    }
  const auto tri = gaussianMultinomial({6, {1, 2, 3}});
  CHECK(tri.eval(1) == 60);
}

TEST_CASE("cyclotomic") {
  CHECK(cyclotomic(1) == IntPolynomial{-1, 1});
  CHECK(cyclotomic(4) == IntPolynomial{1, 0, 1});
  CHECK(cyclotomic(6) == IntPolynomial{1, -1, 1});
  CHECK(cyclotomic(105).degree() == 48);
}

TEST_CASE("evalAtRootOfUnity") {
  const auto p = gaussianBinomial(4, 2);
  CHECK(evalAtRootOfUnity(p, 1) == 6);
  CHECK(evalAtRootOfUnity(p, 2) == 2);
  CHECK(evalAtRootOfUnity(p, 4) == 0);
  CHECK_THROWS_AS(evalAtRootOfUnity(IntPolynomial{0, 1}, 3), PreconditionError);
}

TEST_CASE("cspCheck") {
  const auto r = cspCheck(4, 2);
  CHECK(r.holds);
  CHECK(r.fixedCounts == std::vector<Int>{6, 0, 2, 0});
  CHECK(r.predicted == std::vector<Int>{6, 0, 2, 0});
  const auto empty = cspCheck(5, 0);
  CHECK(empty.holds);
  CHECK(empty.fixedCounts == std::vector<Int>(5, 1));
  CHECK(cspCheck(10, 5).holds);
  Caps small;
  small.subsetBits = 8;
  CHECK_THROWS_AS(cspCheck(9, 3, small), CapExceeded);
}

TEST_CASE("congruenceCheck") {
  CHECK(congruenceCheck(gaussianBinomial(4, 2), 3, 4));
  CHECK(congruenceCheck(IntPolynomial{3, 1, 4, 1, 5}, 1, 7));
  CHECK(congruenceCheck(gaussianBinomial(6, 3), 5, 6));
  CHECK_FALSE(congruenceCheck(IntPolynomial{0, 1}, 2, 3));
  CHECK_THROWS_AS(congruenceCheck(IntPolynomial{1}, 2, 4), PreconditionError);
}

TEST_CASE("sieving through the group law") {
  // exponents of (n choose m)_{t^i} and (n choose m)_t agree modulo l
  for (Int n = 1; n <= 10; ++n)
    for (Int l = 1; l <= n; ++l) {
      if (n % l) continue;
      const auto a = BrauerModel::cyclic(l)->element(1);
      for (Int m = 0; m <= n; ++m) {
        const auto p = gaussianBinomial(n, m);
        for (Int i = 1; i <= l; ++i)
          if (gcd(i, l) == 1)
            CHECK(motiveFromPolynomial(a, p.substitutePower(static_cast<std::size_t>(i))) == motiveFromPolynomial(a, p));
      }
    }
}

TEST_CASE("flagMotive and sbMotive") {
  auto z5 = BrauerModel::cyclic(5);
  const auto a = z5->element(1);
  CHECK(flagMotive(a, {5, {1, 4}}) == CsaMotive(z5, z5->elements()));
  CHECK(flagMotive(z5->zero(), {4, {2, 2}}) == CsaMotive(z5, std::vector(6, z5->zero())));
  auto z2 = BrauerModel::cyclic(2);
  // coefficients (1,1,2,1,1) land on 0,1,0,1,0: four copies of 0, two of a
  CHECK(flagMotive(z2->element(1), {4, {2, 2}}) ==
        CsaMotive(z2, {z2->zero(), z2->zero(), z2->zero(), z2->zero(), z2->element(1), z2->element(1)}));
  CHECK(sbMotive(a, 1) == CsaMotive(z5, {z5->zero()}));
  auto z6 = BrauerModel::cyclic(6);
  CHECK(sbMotive(z6->element(1), 6) == CsaMotive(z6, z6->elements()));
  for (Int n = 2; n <= 8; ++n)
    for (const auto& c : z6->elements()) CHECK(sbMotive(c, n) == flagMotive(c, {n, {1, n - 1}}));
  CHECK(grassmannianSpec(5, 2).dims == std::vector<Int>{2, 3});
}

TEST_CASE("flagEquivalent") {
  auto z5 = BrauerModel::cyclic(5);
  const auto r = flagEquivalent(z5->element(1), z5->element(2), {5, {1, 4}});
  CHECK(r.motivesIsomorphic);
  CHECK(r.sameSubgroup);
  CHECK(flagEquivalent(z5->element(3), z5->element(3), {5, {2, 3}}).motivesIsomorphic);
  auto z4 = BrauerModel::cyclic(4);
  const auto no = flagEquivalent(z4->element(1), z4->element(2), {4, {1, 3}});
  CHECK_FALSE(no.motivesIsomorphic);
  CHECK_FALSE(no.sameSubgroup);
  // index 6 does not divide the degree 4
  auto z6 = BrauerModel::cyclic(6);
  CHECK_THROWS_AS(flagEquivalent(z6->element(1), z6->element(5), {4, {2, 2}}), PreconditionError);
}
