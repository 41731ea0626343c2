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

#include <random>

#include "motivekit/errors.hpp"
#include "motivekit/motives.hpp"

using namespace motivekit;

namespace {

BrauerModel::Ptr z(Int n) { return BrauerModel::cyclic(n); }

CsaMotive mot(Int n, std::vector<Int> exps) {
  auto m = z(n);
  std::vector<BrauerClass> cs;
  for (Int e : exps) cs.push_back(m->element(e));
  return CsaMotive(m, cs);
}

std::vector<Int> randomExps(std::mt19937_64& rng, Int n, std::size_t maxSize) {
  std::vector<Int> out(std::uniform_int_distribution<std::size_t>(1, maxSize)(rng));
  for (auto& v : out) v = std::uniform_int_distribution<Int>(0, n - 1)(rng);
  return out;
}

std::vector<Int> concat(std::vector<Int> a, const std::vector<Int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST_CASE("homMultiplier") {
  CHECK(homMultiplier(z(6)->element(2), z(6)->element(2)) == 1);
  CHECK(homMultiplier(z(2)->element(0), z(2)->element(1)) == 2);
  CHECK(homMultiplier(z(6)->element(1), z(6)->element(5)) == 3);
}

TEST_CASE("lambdaOrder") {
  const auto two = lambdaOrder({z(2)->element(0), z(2)->element(1)});
  CHECK(two.mu == IntMatrix{{1, 2}, {2, 1}});
  CHECK(lambdaOrder({z(5)->element(3)}).mu == IntMatrix{{1}});
  const auto four = lambdaOrder({z(4)->element(0), z(4)->element(1), z(4)->element(2)});
  CHECK(four.mu == IntMatrix{{1, 4, 2}, {4, 1, 4}, {2, 4, 1}});
  CHECK(four.satisfiesInvariants());
  CHECK_THROWS_AS(lambdaOrder({}), PreconditionError);
}

TEST_CASE("compose") {
  const CsaMotive m = mot(2, {1});
  const MorphismMatrix f(m, m, {{2}}), g(m, m, {{2}});
  CHECK(compose(f, g).entries() == IntMatrix{{4}});
  CHECK(compose(MorphismMatrix::identity(m), g).entries() == g.entries());
  CHECK_THROWS_AS(MorphismMatrix(mot(2, {0}), m, {{1}}), PreconditionError);  // 1 is not in 2Z

  SUBCASE("divisibility closure on random valid morphisms") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> v(-3, 3);
    for (int t = 0; t < 100; ++t) {
      const CsaMotive a = mot(12, randomExps(rng, 12, 3)), b = mot(12, randomExps(rng, 12, 3)),
                      c = mot(12, randomExps(rng, 12, 3));
      auto randomMorphism = [&](const CsaMotive& src, const CsaMotive& dst) {
        IntMatrix e(dst.size(), std::vector<Int>(src.size()));
        for (std::size_t i = 0; i < dst.size(); ++i)
          for (std::size_t j = 0; j < src.size(); ++j)
            e[i][j] = v(rng) * homMultiplier(src.classes()[j], dst.classes()[i]);
        return MorphismMatrix(src, dst, e);
      };
      CHECK_NOTHROW(compose(randomMorphism(b, c), randomMorphism(a, b)));
    }
  }
}

TEST_CASE("isIsomorphic examples") {
  const auto d = isIsomorphic(mot(6, {0, 1}), mot(6, {3, 4}));
  CHECK(d.isomorphic);
  CHECK(d.witness.at(2) == std::vector<std::size_t>{1, 0});
  CHECK(d.witness.at(3) == std::vector<std::size_t>{0, 1});  // 3-parts are {0, 4} on both sides
  const auto self = isIsomorphic(mot(6, {1, 2, 5}), mot(6, {1, 2, 5}));
  CHECK(self.isomorphic);
  for (const auto& [p, perm] : self.witness) CHECK(perm == std::vector<std::size_t>{0, 1, 2});
  CHECK_FALSE(isIsomorphic(mot(6, {1}), mot(6, {5})).isomorphic);
  CHECK_FALSE(isIsomorphic(mot(6, {0, 1}), mot(6, {0, 2})).isomorphic);
}

TEST_CASE("bruteForceIso examples") {
  const auto same = bruteForceIso(mot(6, {0}), mot(6, {0}), 1);
  CHECK(same.found);
  CHECK(*same.forward == IntMatrix{{1}});
  const auto none = bruteForceIso(mot(6, {1}), mot(6, {5}), 36);
  CHECK_FALSE(none.found);
  CHECK(none.provedAbsent);
  CHECK(bruteForceIso(mot(6, {0, 1}), mot(6, {3, 4}), 12).found);
  Caps tiny;
  tiny.search = 3;
  CHECK_THROWS_AS(bruteForceIso(mot(6, {0, 1}), mot(6, {3, 4}), 36, tiny), CapExceeded);
}

TEST_CASE("summandClasses") {
  CHECK(summandClasses(mot(6, {1, 2})) ==
        std::vector{z(6)->element(1), z(6)->element(2), z(6)->element(4), z(6)->element(5)});
  CHECK(summandClasses(mot(6, {3})) == std::vector{z(6)->element(3)});
  CHECK(summandClasses(mot(6, {0, 0})) == std::vector{z(6)->element(0)});
  CHECK_THROWS_AS(summandClasses(CsaMotive(z(6))), PreconditionError);
}

TEST_CASE("tensor") {
  CHECK(tensor(mot(6, {1, 4}), mot(6, {0})) == mot(6, {1, 4}));
  CHECK(tensor(mot(6, {1}), mot(6, {5})) == mot(6, {0}));
  CHECK(tensor(mot(6, {0, 1}), mot(6, {0, 1})) == mot(6, {0, 1, 1, 2}));
}

TEST_CASE("motiveFromPolynomial and relations") {
  const auto a = z(6)->element(1);
  CHECK(motiveFromPolynomial(a, IntPolynomial{1}) == mot(6, {0}));
  const IntPolynomial pa{1, 2, 2, 1};
  CHECK(periodPolynomial(6) == pa);
  CHECK(motiveFromPolynomial(a, pa) == mot(6, {0, 1, 1, 2, 2, 3}));
  CHECK(motiveFromPolynomial(a, pa.shift(1)) == mot(6, {1, 2, 2, 3, 3, 4}));
  CHECK_THROWS_AS(motiveFromPolynomial(a, IntPolynomial{1, -1}), PreconditionError);

  CHECK(verifyRelation1(a));
  CHECK(verifyRelation1(z(6)->zero()));
  CHECK(verifyRelation1(z(30)->element(1)));

  CHECK(verifyRelation2(z(6)->element(3), z(6)->element(2), z(6)->element(1)));
  CHECK(verifyRelation2(z(6)->element(0), z(6)->element(4), z(6)->element(5)));
  CHECK(verifyRelation2(z(6)->element(3), z(6)->element(2), z(6)->element(0)));
  CHECK_THROWS_AS(verifyRelation2(z(6)->element(1), z(6)->element(2), z(6)->element(0)), PreconditionError);
}

TEST_CASE("sigmaRing") {
  const auto empty = sigmaRing(z(6), {});
  CHECK(empty.subgroup == std::vector{z(6)->zero()});
  CHECK(empty.multipliers == std::vector<Int>{1});
  CHECK(sigmaRing(z(2), {z(2)->element(1)}).multipliers == std::vector<Int>{1, 2});
  CHECK(sigmaRing(z(6), {z(6)->element(1)}).multipliers == std::vector<Int>{1, 6, 3, 2, 3, 6});
}

TEST_CASE("pLocalIso") {
  CHECK(pLocalIso(mot(6, {1}), mot(6, {3}), 2));
  CHECK_FALSE(pLocalIso(mot(6, {1}), mot(6, {3}), 3));
  CHECK(pLocalIso(mot(6, {1, 2}), mot(6, {1, 2}), 5));
}

TEST_CASE("properties on random motives over Z/12") {
  std::mt19937_64 rng(1);
  auto m12 = z(12);
  for (int t = 0; t < 300; ++t) {
    const auto x = randomExps(rng, 12, 3), y = randomExps(rng, 12, 3), w = randomExps(rng, 12, 3);
    const CsaMotive mx = mot(12, x), my = mot(12, y), mw = mot(12, w);
    const bool xy = isIsomorphic(mx, my).isomorphic;
    CHECK(isIsomorphic(mx, mx).isomorphic);
    CHECK(isIsomorphic(my, mx).isomorphic == xy);
    if (xy && isIsomorphic(my, mw).isomorphic) CHECK(isIsomorphic(mx, mw).isomorphic);

    bool local = true;
    for (Int p : relevantPrimes(mx, my)) local = local && pLocalIso(mx, my, p);
    CHECK(local == xy);

    if (isIsomorphic(mot(12, concat(x, w)), mot(12, concat(y, w))).isomorphic) CHECK(xy);

    if (xy) CHECK(subgroupGenerated(m12, mx.classes()) == subgroupGenerated(m12, my.classes()));

    const auto summands = summandClasses(mx);
    const auto sub = subgroupGenerated(m12, mx.classes());
    for (const auto& c : mx.classes()) CHECK(std::binary_search(summands.begin(), summands.end(), c));
    for (const auto& c : summands) CHECK(std::binary_search(sub.begin(), sub.end(), c));

    CHECK(lambdaOrder(mx.classes()).satisfiesInvariants());
    CHECK(tensor(directSum(mx, mw), my) == directSum(tensor(mx, my), tensor(mw, my)));
  }
}

TEST_CASE("summands of a subgroup are its own classes") {
  auto m = z(12);
  for (Int g : {1, 2, 3, 4, 6}) {
    const auto sub = subgroupGenerated(m, {m->element(g)});
    CHECK(summandClasses(CsaMotive(m, sub)) == sub);
  }
}

TEST_CASE("isomorphism witnesses agree with explicit matrices") {
  // every isomorphic pair over Z/6 with two summands has a small unimodular witness
  for (Int a = 0; a < 6; ++a)
    for (Int b = a; b < 6; ++b)
      for (Int c = 0; c < 6; ++c)
        for (Int d = c; d < 6; ++d) {
          const auto m = mot(6, {a, b}), n = mot(6, {c, d});
          const auto r = bruteForceIso(m, n, 36);
          CHECK(r.found == isIsomorphic(m, n).isomorphic);
          if (!r.found) CHECK(r.provedAbsent);
        }
}
