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
#include "motivekit/gsets.hpp"

using namespace motivekit;

namespace {

Element el(const FiniteGroup::Ptr& g, const std::string& cycles) { return g->elementOf(parseCycles(cycles, g->degree())); }

Subgroup gen(const FiniteGroup::Ptr& g, std::initializer_list<const char*> cycles) {
  std::vector<Element> gens;
  for (const char* c : cycles) gens.push_back(el(g, c));
  return Subgroup::generatedBy(g, gens);
}

std::vector<Int> randomValues(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> v(-3, 3);
  std::vector<Int> out(n);
  for (auto& x : out) x = v(rng);
  return out;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.size(), std::vector<Int>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

TEST_CASE("permutation parsing") {
  CHECK(parseCycles("(1 2 3)", 4) == Permutation{1, 2, 0, 3});
  CHECK(parseCycles("(1,2)(3,4)", 4) == Permutation{1, 0, 3, 2});
  CHECK(parseCycles("()", 2) == Permutation{0, 1});
  CHECK(formatCycles({1, 2, 0, 3}) == "(1 2 3)");
  CHECK(formatCycles({0, 1}) == "()");
  CHECK_THROWS_AS(parseCycles("(1 5)", 4), MalformedInput);
  CHECK_THROWS_AS(parseCycles("(1 2)(2 3)", 4), MalformedInput);
  CHECK_THROWS_AS(parseCycles("1 2", 4), MalformedInput);
}

TEST_CASE("named groups") {
  const std::vector<std::pair<const char*, std::size_t>> orders{{"S3", 6}, {"D4", 8}, {"Q8", 8}, {"A4", 12}, {"S4", 24}, {"C5", 5}};
  const std::vector<std::size_t> subgroupCounts{6, 10, 6, 10, 30, 2};
  for (std::size_t i = 0; i < orders.size(); ++i) {
    auto g = FiniteGroup::named(orders[i].first);
    CHECK(g->order() == orders[i].second);
    CHECK(g->verifyAxioms(1));
    CHECK(g->permutation(FiniteGroup::identity()) == parseCycles("()", g->degree()));
    CHECK(allSubgroups(g).size() == subgroupCounts[i]);
  }
  // Q8 has a single involution
  auto q8 = FiniteGroup::quaternion();
  std::size_t involutions = 0;
  for (Element x = 0; x < q8->order(); ++x) involutions += q8->elementOrder(x) == 2;
  CHECK(involutions == 1);
  CHECK_THROWS_AS(FiniteGroup::named("X9"), MalformedInput);
}

TEST_CASE("composition is right to left") {
  auto s3 = FiniteGroup::symmetric(3);
  const Element a = el(s3, "(1 2)"), b = el(s3, "(2 3)");
  // (1 2)(2 3) sends 3 -> 2 -> 1
  CHECK(s3->mul(a, b) == el(s3, "(1 2 3)"));
  CHECK(s3->conjugate(el(s3, "(1 2)"), el(s3, "(1 3)")) == el(s3, "(2 3)"));
}

TEST_CASE("subgroups") {
  auto s3 = FiniteGroup::named("S3");
  const Subgroup a3 = gen(s3, {"(1 2 3)"});
  CHECK(a3.order() == 3);
  CHECK(a3.isNormal());
  CHECK_FALSE(gen(s3, {"(1 2)"}).isNormal());
  CHECK(gen(s3, {"(1 2)"}).intersect(a3) == Subgroup::trivial(s3));
  CHECK_THROWS_AS(Subgroup::fromElements(s3, {0, el(s3, "(1 2 3)")}), PreconditionError);
}

TEST_CASE("orbits") {
  auto s3 = FiniteGroup::named("S3");
  CHECK(orbits(*GSet::trivial(s3, 4)).count() == 4);
  CHECK(orbits(*GSet::regular(s3)).count() == 1);
  const auto x = GSet::cosets(gen(s3, {"(1 2)"}));
  CHECK(orbits(*GSet::product(*x, *x)).count() == 2);
  CHECK(stabilizer(*x, 0) == gen(s3, {"(1 2)"}));
}

TEST_CASE("doubleCosets") {
  auto s3 = FiniteGroup::named("S3");
  const auto g = Subgroup::whole(s3);
  CHECK(doubleCosets(g, g).count() == 1);
  CHECK(doubleCosets(Subgroup::trivial(s3), Subgroup::trivial(s3)).count() == 6);
  const auto h = gen(s3, {"(1 2)"});
  const auto dc = doubleCosets(h, h);
  CHECK(dc.count() == 2);
  CHECK(dc.cosets[0].size() == 2);
  CHECK(dc.cosets[1].size() == 4);
}

TEST_CASE("convolution examples") {
  auto s3 = FiniteGroup::named("S3");
  const auto h = gen(s3, {"(1 2)"});
  const auto x = GSet::cosets(h);
  const auto id = CovMorphism::identity(x);
  IntMatrix off(3, std::vector<Int>(3, 1));
  for (int i = 0; i < 3; ++i) off[i][i] = 0;
  const auto alpha = CovMorphism::fromFunction(x, x, off);
  CHECK(convolveCov(alpha, id) == alpha);
  CHECK(convolveCov(id, alpha) == alpha);
  const auto sq = convolveCov(alpha, alpha).table();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(sq[i][j] == (i == j ? 2 : 1));

  const auto other = HeckMorphism::indicator(h, h, el(s3, "(1 3)"));
  const auto hsq = convolveHeck(other, other);
  CHECK(hsq.values() == std::vector<Int>{2, 1});
  CHECK(convolveHeck(other, HeckMorphism::identity(h)) == other);
  CHECK(convolveHeck(HeckMorphism::identity(h), other) == other);
  CHECK(heckToCov(HeckMorphism::identity(h)) == id);
  CHECK(covToPerm(id) == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("covToPerm on the regular G-set is right translation") {
  auto d4 = FiniteGroup::named("D4");
  const auto r = GSet::regular(d4);
  for (Element g = 0; g < d4->order(); ++g) {
    const auto m = covToPerm(CovMorphism::orbitIndicator(r, r, FiniteGroup::identity(), g));
    for (Element x = 0; x < d4->order(); ++x)
      for (Element y = 0; y < d4->order(); ++y) CHECK(m[y][x] == (y == d4->mul(x, g) ? 1 : 0));
  }
}

TEST_CASE("category laws and functor fidelity") {
  std::mt19937_64 rng(2);
  for (const char* name : {"S3", "D4", "Q8", "A4", "S4"}) {
    auto g = FiniteGroup::named(name);
    const auto subs = allSubgroups(g);
    std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
    for (int t = 0; t < 30; ++t) {
      const auto &h = subs[pick(rng)], &k = subs[pick(rng)], &l = subs[pick(rng)], &m = subs[pick(rng)];
      const HeckMorphism a(h, k, randomValues(doubleCosets(h, k).count(), rng));
      const HeckMorphism b(k, l, randomValues(doubleCosets(k, l).count(), rng));
      const HeckMorphism c(l, m, randomValues(doubleCosets(l, m).count(), rng));
      CHECK(convolveHeck(convolveHeck(a, b), c) == convolveHeck(a, convolveHeck(b, c)));
      CHECK(convolveHeck(HeckMorphism::identity(h), a) == a);
      CHECK(convolveHeck(a, HeckMorphism::identity(k)) == a);

      const auto ca = heckToCov(a), cb = heckToCov(b), cc = heckToCov(c);
      CHECK(convolveCov(convolveCov(ca, cb), cc) == convolveCov(ca, convolveCov(cb, cc)));
      CHECK(heckToCov(convolveHeck(a, b)) == convolveCov(ca, cb));
      CHECK(covToPerm(convolveCov(ca, cb)) == mul(covToPerm(cb), covToPerm(ca)));
      CHECK(covToHeck(ca, h, k) == a);
      // faithfulness: distinct morphisms give distinct matrices
      const HeckMorphism a2(h, k, randomValues(a.values().size(), rng));
      CHECK((covToPerm(heckToCov(a2)) == covToPerm(ca)) == (a2 == a));
    }
  }
}

TEST_CASE("character functor") {
  auto s3 = FiniteGroup::named("S3");
  const CharacterFunctor f;
  CHECK(f.classes(Subgroup::whole(s3)).size() == 2);  // S3 abelianizes to C2
  CHECK(f.classes(gen(s3, {"(1 2 3)"})).size() == 3);
  auto q8 = FiniteGroup::quaternion();
  CHECK(f.classes(Subgroup::whole(q8)).size() == 4);
  std::vector<Rational> bad(6);
  bad[el(s3, "(1 2)")] = Rational(1, 3);
  CHECK_THROWS_AS(CharacterFunctor::character(Subgroup::whole(s3), bad), PreconditionError);
  for (const auto& chi : f.classes(Subgroup::whole(s3)))
    CHECK_NOTHROW(CharacterFunctor::character(Subgroup::whole(s3), chi.values));
}

TEST_CASE("decorated index tables") {
  auto s3 = FiniteGroup::named("S3");
  const CharacterFunctor f;
  const TrivialFunctor trivial;
  const auto a3 = gen(s3, {"(1 2 3)"});
  FunctorClass chi;
  for (const auto& c : f.classes(a3))
    if (c.values[el(s3, "(1 2 3)")] == Rational(1, 3)) chi = c;
  const HeckObject x{a3, chi};
  const auto table = heckPrimeIndexTable(x, x, f);
  const auto dc = doubleCosets(a3, a3);
  CHECK(table[dc.cosetOf[FiniteGroup::identity()]] == 1);
  CHECK(table[dc.cosetOf[el(s3, "(1 2)")]] == 3);

  std::vector<Int> alpha(2, 0);
  CHECK(validateConstrained(alpha, table));
  CHECK(validateConstrained(HeckMorphism::identity(a3).values(), table));
  alpha[dc.cosetOf[el(s3, "(1 2)")]] = 1;
  CHECK_FALSE(validateConstrained(alpha, table));
  alpha[dc.cosetOf[el(s3, "(1 2)")]] = 3;
  CHECK(validateConstrained(alpha, table));

  for (const char* name : {"S3", "D4", "A4"}) {
    auto g = FiniteGroup::named(name);
    for (const auto& h : allSubgroups(g))
      for (const auto& k : allSubgroups(g)) {
        const auto t = heckPrimeIndexTable({h, trivial.zero(h)}, {k, trivial.zero(k)}, trivial);
        CHECK(std::all_of(t.begin(), t.end(), [](Int v) { return v == 1; }));
        const auto z = heckPrimeIndexTable({h, f.zero(h)}, {k, f.zero(k)}, f);
        CHECK(std::all_of(z.begin(), z.end(), [](Int v) { return v == 1; }));
      }
    for (const auto& h : allSubgroups(g))
      for (const auto& c : f.classes(h))
        CHECK(heckPrimeIndexTable({h, c}, {h, c}, f)[0] == 1);  // identity coset
  }
}

TEST_CASE("Cov' tables agree with Heck' tables on coset spaces") {
  const CharacterFunctor f;
  std::mt19937_64 rng(8);
  for (const char* name : {"S3", "D4", "A4"}) {
    auto g = FiniteGroup::named(name);
    const auto subs = allSubgroups(g);
    for (const auto& h : subs)
      for (const auto& k : subs) {
        const auto ch = f.classes(h), ck = f.classes(k);
        const HeckObject x{h, ch[rng() % ch.size()]}, y{k, ck[rng() % ck.size()]};
        const auto heck = heckPrimeIndexTable(x, y, f);
        const auto cov = covPrimeIndexTable(toCovObject(x), toCovObject(y), f);
        // orbit of (H, gK) corresponds to the double coset HgK
        const auto sx = GSet::cosets(h), sy = GSet::cosets(k);
        const auto prod = orbits(*GSet::product(*sx, *sy));
        const auto dc = doubleCosets(h, k);
        for (std::size_t d = 0; d < dc.count(); ++d) {
          const std::uint32_t point = sy->act(dc.representative(d), 0);
          CHECK(cov[prod.orbitOf[point]] == heck[d]);
        }
      }
  }
}

TEST_CASE("retraction") {
  auto s3 = FiniteGroup::named("S3");
  std::vector<GSet::Ptr> objs{GSet::regular(s3), GSet::trivial(s3, 2), GSet::cosets(gen(s3, {"(1 2)"}))};
  const auto r = centerRetraction(objs, CharacterFunctor{}, 1, 3);
  CHECK(r.ok);
  CHECK(r.objectsChecked == 3);
  CHECK(r.morphismsChecked == 27);
}
