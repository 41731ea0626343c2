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


#include "motivekit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <optional>

#include "motivekit/errors.hpp"
#include "motivekit/gaussian.hpp"
#include "motivekit/json_io.hpp"
#include "motivekit/k0.hpp"

namespace motivekit::cli {

namespace {

using json_io::OJson;
using json_io::parse;

struct Result {
  OJson json;
  std::string text;
};

Result fromJson(OJson j) {
  std::string t = j.dump();
  return {std::move(j), std::move(t)};
}
Result fromBool(bool b) { return {OJson(b), b ? "true" : "false"}; }
Result fromInt(Int v) { return {OJson(v), std::to_string(v)}; }
Result fromClass(const BrauerClass& c) { return {json_io::classToJson(c), c.str()}; }
Result fromMotive(const CsaMotive& m) { return {json_io::motiveToJson(m), m.str()}; }
Result fromPoly(const IntPolynomial& p) { return {json_io::polynomialToJson(p), p.str()}; }
Result fromClasses(const std::vector<BrauerClass>& cs) {
  Result r{OJson::array(), "["};
  for (std::size_t i = 0; i < cs.size(); ++i) {
    r.json.push_back(json_io::classToJson(cs[i]));
    r.text += (i ? ", " : "") + cs[i].str();
  }
  r.text += "]";
  return r;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  IntMatrix c(a.size(), std::vector<Int>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) c[i][j] = checkedAdd(c[i][j], checkedMul(a[i][k], b[k][j]));
  return c;
}

OJson cyclesOf(const FiniteGroup& g, const std::vector<Element>& els) {
  OJson out = OJson::array();
  for (Element e : els) out.push_back(formatCycles(g.permutation(e)));
  return out;
}

/// The unique character of `u` taking the given values ({"(1 2 3)":"1/3",...}).
FunctorClass decorationFromJson(const std::string& text, const Subgroup& u, const BrauerFunctor& f) {
  if (text.empty()) return f.zero(u);
  const auto j = parse(text);
  if (!j.is_object()) throw MalformedInput("decoration: expected an object of element values");
  std::vector<std::pair<Element, Rational>> given;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw MalformedInput("decoration: values must be \"p/q\" strings");
    given.emplace_back(json_io::elementFromJson(k, u.group()), Rational::parse(v.get<std::string>()).modOne());
  }
  std::optional<FunctorClass> match;
  for (auto& cand : f.classes(u)) {
    const bool ok = std::all_of(given.begin(), given.end(), [&](const auto& gv) {
      return u.contains(gv.first) && cand.values[gv.first] == gv.second;
    });
    if (!ok) continue;
    if (match) throw PreconditionError("decoration: values do not determine a unique character");
    match = std::move(cand);
  }
  if (!match) throw PreconditionError("decoration: no character of the subgroup takes these values");
  return *match;
}

std::unique_ptr<BrauerFunctor> functorNamed(const std::string& name) {
  if (name == "character") return std::make_unique<CharacterFunctor>();
  if (name == "trivial") return std::make_unique<TrivialFunctor>();
  throw MalformedInput("unknown functor '" + name + "'");
}

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string model, cls, a, b, c, left, mid, right, classes, poly, f, g, exponents;
  std::string group, h, k, l, alpha, beta, adec, bdec, functor = "character";
  Int per = 0, n = 0, m = 0, p = 0, i = 0, lmod = 0, bound = 36, deg = 0, d = 0;
  std::vector<Int> dims;
  std::size_t samples = 5;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  const Caps caps = Caps::fromEnvironment();

  CLI::App app{"Exact computations with Brauer classes, CSA motives, K0 rings, Gaussian polynomials and G-sets",
               "motivekit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", o.seed, "Seed for randomized checks");

  std::vector<std::pair<CLI::App*, std::function<Result()>>> leaves;
  auto group = [&](const std::string& name, const std::string& desc) {
    auto* sub = app.add_subcommand(name, desc);
    sub->require_subcommand(1);
    sub->fallthrough();
    return sub;
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, std::function<Result()> fn) {
    auto* sub = parent->add_subcommand(name, desc);
    leaves.emplace_back(sub, std::move(fn));
    return sub;
  };

  // Lazily parsed arguments.
  auto model = [&]() -> BrauerModel::Ptr {
    return o.model.empty() ? nullptr : json_io::modelFromJson(parse(o.model), caps);
  };
  auto cls = [&](const std::string& text, const BrauerModel::Ptr& fallback) {
    return json_io::classFromJson(parse(text), fallback, caps);
  };
  auto classPair = [&](const std::string& x, const std::string& y) {
    auto mdl = model();
    BrauerClass ca = cls(x, mdl);
    BrauerClass cb = cls(y, mdl ? mdl : ca.model());
    return std::pair{ca, cb};
  };
  auto motive = [&](const std::string& text, const BrauerModel::Ptr& fallback) {
    return json_io::motiveFromJson(parse(text), fallback, caps);
  };
  auto motivePair = [&] {
    auto mdl = model();
    CsaMotive ml = motive(o.left, mdl);
    CsaMotive mr = motive(o.right, mdl ? mdl : ml.model());
    return std::pair{ml, mr};
  };
  auto finiteGroup = [&] {
    if (!o.group.empty() && o.group[0] != '{' && o.group[0] != '"') return FiniteGroup::named(o.group);
    return json_io::groupFromJson(parse(o.group));
  };
  auto subgroup = [&](const FiniteGroup::Ptr& grp, const std::string& text) {
    if (text == "whole" || text == "trivial") return json_io::subgroupFromJson(json_io::Json(text), grp);
    return json_io::subgroupFromJson(parse(text), grp);
  };
  auto ints = [&](const std::string& text) {
    return json_io::intsFromJson(parse(text));
  };

  // ---- brauer
  auto* brauer = group("brauer", "Brauer group arithmetic");
  auto* s = leaf(brauer, "add", "Sum of two classes", [&] {
    auto [x, y] = classPair(o.a, o.b);
    return fromClass(x + y);
  });
  s->add_option("--model", o.model);
  s->add_option("--a", o.a)->required();
  s->add_option("--b", o.b)->required();
  s = leaf(brauer, "period", "Order of a class", [&] { return fromInt(period(cls(o.cls, model()))); });
  s->add_option("--model", o.model);
  s->add_option("--class", o.cls)->required();
  s = leaf(brauer, "index", "Index of a class", [&] { return fromInt(index(cls(o.cls, model()))); });
  s->add_option("--model", o.model);
  s->add_option("--class", o.cls)->required();
  s = leaf(brauer, "ppart", "p-primary part of a class", [&] { return fromClass(pPrimaryPart(cls(o.cls, model()), o.p)); });
  s->add_option("--model", o.model);
  s->add_option("--class", o.cls)->required();
  s->add_option("--p", o.p)->required();
  s = leaf(brauer, "subgroup", "Subgroup generated by classes", [&] {
    auto mdl = model();
    auto cs = json_io::classesFromJson(parse(o.classes), mdl, caps);
    if (!mdl) {
      if (cs.empty()) throw MalformedInput("subgroup: empty class list needs a --model");
      mdl = cs.front().model();
    }
    return fromClasses(subgroupGenerated(mdl, cs, caps));
  });
  s->add_option("--model", o.model);
  s->add_option("--classes", o.classes)->required();
  s = leaf(brauer, "cyclic-equal", "Whether two classes generate the same subgroup", [&] {
    auto [x, y] = classPair(o.a, o.b);
    const auto e = cyclicEqual(x, y);
    return fromJson(OJson{{"equal", e.equal}, {"multiplier", e.multiplier ? OJson(*e.multiplier) : OJson(nullptr)}});
  });
  s->add_option("--model", o.model);
  s->add_option("--a", o.a)->required();
  s->add_option("--b", o.b)->required();
  s = leaf(brauer, "elements", "All elements of a finite model", [&] {
    auto mdl = model();
    if (!mdl) throw MalformedInput("elements: --model is required");
    return fromClasses(mdl->elements());
  });
  s->add_option("--model", o.model)->required();

  // ---- motive
  auto* mot = group("motive", "Motives of central simple algebras");
  s = leaf(mot, "iso", "Decide isomorphism of two motives", [&] {
    auto [x, y] = motivePair();
    return fromJson(json_io::isoDecisionToJson(isIsomorphic(x, y)));
  });
  s->add_option("--model", o.model);
  s->add_option("--left", o.left)->required();
  s->add_option("--right", o.right)->required();
  s = leaf(mot, "plocal", "p-local isomorphism", [&] {
    auto [x, y] = motivePair();
    return fromBool(pLocalIso(x, y, o.p));
  });
  s->add_option("--model", o.model);
  s->add_option("--left", o.left)->required();
  s->add_option("--right", o.right)->required();
  s->add_option("--p", o.p)->required();
  s = leaf(mot, "brute", "Search for an explicit isomorphism", [&] {
    auto [x, y] = motivePair();
    const auto r = bruteForceIso(x, y, o.bound, caps);
    OJson j{{"found", r.found}, {"provedAbsent", r.provedAbsent}, {"nodes", r.nodes}};
    j["forward"] = r.forward ? OJson(*r.forward) : OJson(nullptr);
    j["backward"] = r.backward ? OJson(*r.backward) : OJson(nullptr);
    return fromJson(j);
  });
  s->add_option("--model", o.model);
  s->add_option("--left", o.left)->required();
  s->add_option("--right", o.right)->required();
  s->add_option("--bound", o.bound);
  s = leaf(mot, "summands", "Classes of indecomposable summands", [&] {
    return fromClasses(summandClasses(motive(o.left, model()), caps));
  });
  s->add_option("--model", o.model);
  s->add_option("--motive,--left", o.left)->required();
  s = leaf(mot, "lambda", "Endomorphism order multipliers", [&] {
    const auto lo = lambdaOrder(json_io::classesFromJson(parse(o.classes), model(), caps));
    OJson cs = OJson::array();
    for (const auto& c : lo.classes) cs.push_back(json_io::classToJson(c));
    return fromJson(OJson{{"classes", cs}, {"mu", lo.mu}, {"valid", lo.satisfiesInvariants()}});
  });
  s->add_option("--model", o.model);
  s->add_option("--classes", o.classes)->required();
  s = leaf(mot, "tensor", "Tensor product of motives", [&] {
    auto [x, y] = motivePair();
    return fromMotive(tensor(x, y));
  });
  s->add_option("--model", o.model);
  s->add_option("--left", o.left)->required();
  s->add_option("--right", o.right)->required();
  s = leaf(mot, "sum", "Direct sum of motives", [&] {
    auto [x, y] = motivePair();
    return fromMotive(directSum(x, y));
  });
  s->add_option("--model", o.model);
  s->add_option("--left", o.left)->required();
  s->add_option("--right", o.right)->required();
  s = leaf(mot, "hom", "Multiplier of Hom between two simple summands", [&] {
    auto [x, y] = classPair(o.a, o.b);
    return fromInt(homMultiplier(x, y));
  });
  s->add_option("--model", o.model);
  s->add_option("--a", o.a)->required();
  s->add_option("--b", o.b)->required();
  s = leaf(mot, "compose", "Compose morphisms f: mid -> right after g: left -> mid", [&] {
    auto mdl = model();
    CsaMotive ml = motive(o.left, mdl);
    mdl = mdl ? mdl : ml.model();
    const MorphismMatrix fm(motive(o.mid, mdl), motive(o.right, mdl), json_io::matrixFromJson(parse(o.f)));
    const MorphismMatrix gm(ml, motive(o.mid, mdl), json_io::matrixFromJson(parse(o.g)));
    return fromJson(OJson{{"entries", compose(fm, gm).entries()}});
  });
  s->add_option("--model", o.model);
  s->add_option("--left", o.left)->required();
  s->add_option("--mid", o.mid)->required();
  s->add_option("--right", o.right)->required();
  s->add_option("--f", o.f)->required();
  s->add_option("--g", o.g)->required();
  s = leaf(mot, "from-poly", "Motive with coefficient multiplicities of a polynomial", [&] {
    return fromMotive(motiveFromPolynomial(cls(o.cls, model()), json_io::polynomialFromJson(parse(o.poly))));
  });
  s->add_option("--model", o.model);
  s->add_option("--class", o.cls)->required();
  s->add_option("--poly", o.poly)->required();
  s = leaf(mot, "period-poly", "Polynomial attached to a period", [&] { return fromPoly(periodPolynomial(o.per)); });
  s->add_option("--per", o.per)->required();
  s = leaf(mot, "relation1", "Check the first motivic relation", [&] { return fromBool(verifyRelation1(cls(o.cls, model()))); });
  s->add_option("--model", o.model);
  s->add_option("--class", o.cls)->required();
  s = leaf(mot, "relation2", "Check the second motivic relation", [&] {
    auto [x, y] = classPair(o.a, o.b);
    return fromBool(verifyRelation2(x, y, cls(o.c, x.model())));
  });
  s->add_option("--model", o.model);
  s->add_option("--a", o.a)->required();
  s->add_option("--b", o.b)->required();
  s->add_option("--c", o.c)->required();
  s = leaf(mot, "sigma", "Group ring multipliers over a generated subgroup", [&] {
    auto mdl = model();
    auto cs = json_io::classesFromJson(parse(o.classes), mdl, caps);
    if (!mdl) {
      if (cs.empty()) throw MalformedInput("sigma: empty generator list needs a --model");
      mdl = cs.front().model();
    }
    const auto ring = sigmaRing(mdl, cs, caps);
    OJson sub = OJson::array();
    for (const auto& h : ring.subgroup) sub.push_back(json_io::classToJson(h));
    return fromJson(OJson{{"subgroup", sub}, {"multipliers", ring.multipliers}});
  });
  s->add_option("--model", o.model);
  s->add_option("--generators,--classes", o.classes)->required();

  // ---- k0
  auto* k0 = group("k0", "Grothendieck ring of the cyclic subcategory");
  s = leaf(k0, "class", "Reduced class of a sum of twists", [&] {
    return fromPoly(K0Ring(o.per).classOf(ints(o.exponents)));
  });
  s->add_option("--per", o.per)->required();
  s->add_option("--exponents", o.exponents)->required();
  s = leaf(k0, "rank", "Rank of the ring", [&] { return fromInt(K0Ring(o.per).rank()); });
  s->add_option("--per", o.per)->required();
  s = leaf(k0, "generator", "Generator of the relation ideal", [&] { return fromPoly(K0Ring(o.per).generator()); });
  s->add_option("--per", o.per)->required();
  s = leaf(k0, "reduce", "Reduce a polynomial modulo the relation ideal", [&] {
    return fromPoly(K0Ring(o.per).reduce(json_io::polynomialFromJson(parse(o.poly))));
  });
  s->add_option("--per", o.per)->required();
  s->add_option("--poly", o.poly)->required();
  s = leaf(k0, "kernel-check", "Compare the relation generator with an lcm of 1 - t^q", [&] {
    return fromBool(kernelIdentityCheck(o.per));
  });
  s->add_option("--per", o.per)->required();

  // ---- flag
  auto* flag = group("flag", "Twisted flag varieties");
  s = leaf(flag, "decompose", "Motive of a twisted flag variety", [&] {
    return fromMotive(flagMotive(cls(o.cls, model()), GaussianSpec{o.n, o.dims}));
  });
  s->add_option("--model", o.model);
  s->add_option("--class", o.cls)->required();
  s->add_option("--n", o.n)->required();
  s->add_option("--dims", o.dims)->required()->delimiter(',');
  s = leaf(flag, "grassmannian", "Motive of a twisted Grassmannian", [&] {
    return fromMotive(flagMotive(cls(o.cls, model()), grassmannianSpec(o.n, o.d)));
  });
  s->add_option("--model", o.model);
  s->add_option("--class", o.cls)->required();
  s->add_option("--n", o.n)->required();
  s->add_option("--d", o.d)->required();
  s = leaf(flag, "sb", "Motive of a Severi-Brauer variety", [&] { return fromMotive(sbMotive(cls(o.cls, model()), o.deg)); });
  s->add_option("--model", o.model);
  s->add_option("--class", o.cls)->required();
  s->add_option("--deg", o.deg)->required();
  s = leaf(flag, "equiv", "Compare flag varieties of two classes", [&] {
    auto [x, y] = classPair(o.a, o.b);
    const auto r = flagEquivalent(x, y, GaussianSpec{o.n, o.dims});
    return fromJson(OJson{{"motivesIsomorphic", r.motivesIsomorphic}, {"sameSubgroup", r.sameSubgroup}});
  });
  s->add_option("--model", o.model);
  s->add_option("--a", o.a)->required();
  s->add_option("--b", o.b)->required();
  s->add_option("--n", o.n)->required();
  s->add_option("--dims", o.dims)->required()->delimiter(',');

  // ---- sieve
  auto* sieve = group("sieve", "Gaussian polynomials and cyclic sieving");
  s = leaf(sieve, "binomial", "Gaussian binomial (n choose m)_t", [&] { return fromPoly(gaussianBinomial(o.n, o.m)); });
  s->add_option("--n", o.n)->required();
  s->add_option("--m", o.m)->required();
  s = leaf(sieve, "multinomial", "Gaussian multinomial", [&] {
    return fromPoly(gaussianMultinomial(GaussianSpec{o.n, o.dims}));
  });
  s->add_option("--n", o.n)->required();
  s->add_option("--dims", o.dims)->required()->delimiter(',');
  s = leaf(sieve, "check", "Cyclic sieving for m-subsets of an n-cycle", [&] {
    const auto r = cspCheck(o.n, o.m, caps);
    return Result{OJson{{"holds", r.holds}, {"fixedCounts", r.fixedCounts}, {"predicted", r.predicted}},
                  r.holds ? "true" : "false"};
  });
  s->add_option("--n", o.n)->required();
  s->add_option("--m", o.m)->required();
  s = leaf(sieve, "congruence", "Whether t^l - 1 divides p(t^i) - p(t)", [&] {
    const IntPolynomial poly = o.poly.empty() ? gaussianBinomial(o.n, o.m) : json_io::polynomialFromJson(parse(o.poly));
    return fromBool(congruenceCheck(poly, o.i, o.lmod));
  });
  s->add_option("--poly", o.poly, "Polynomial; defaults to (n choose m)_t");
  s->add_option("--n", o.n);
  s->add_option("--m", o.m);
  s->add_option("--i", o.i)->required();
  s->add_option("--l", o.lmod)->required();
  s = leaf(sieve, "cyclotomic", "Cyclotomic polynomial", [&] { return fromPoly(cyclotomic(o.d)); });
  s->add_option("--d", o.d)->required();
  s = leaf(sieve, "eval", "Value at a primitive d-th root of unity", [&] {
    return fromInt(evalAtRootOfUnity(json_io::polynomialFromJson(parse(o.poly)), o.d));
  });
  s->add_option("--poly", o.poly)->required();
  s->add_option("--d", o.d)->required();

  // ---- gset
  auto* gset = group("gset", "Finite groups, G-sets and Hecke categories");
  s = leaf(gset, "verify", "Check the group axioms", [&] { return fromBool(finiteGroup()->verifyAxioms(o.seed)); });
  s->add_option("--group", o.group)->required();
  s = leaf(gset, "subgroups", "All subgroups", [&] {
    OJson list = OJson::array();
    for (const auto& h : allSubgroups(finiteGroup())) list.push_back(json_io::subgroupToJson(h));
    return fromJson(list);
  });
  s->add_option("--group", o.group)->required();
  s = leaf(gset, "orbits", "Orbits of G/H, or of G/H x G/K", [&] {
    auto grp = finiteGroup();
    auto set = GSet::cosets(subgroup(grp, o.h));
    if (!o.k.empty()) set = GSet::product(*set, *GSet::cosets(subgroup(grp, o.k)));
    const auto orb = orbits(*set);
    return fromJson(OJson{{"count", orb.count()}, {"orbits", orb.members}});
  });
  s->add_option("--group", o.group)->required();
  s->add_option("--H", o.h)->required();
  s->add_option("--K", o.k);
  s = leaf(gset, "doublecosets", "Double cosets H\\G/K", [&] {
    auto grp = finiteGroup();
    const auto dc = doubleCosets(subgroup(grp, o.h), subgroup(grp, o.k));
    std::vector<Element> reps;
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < dc.count(); ++i) {
      reps.push_back(dc.representative(i));
      sizes.push_back(dc.cosets[i].size());
    }
    return fromJson(OJson{{"count", dc.count()}, {"representatives", cyclesOf(*grp, reps)}, {"sizes", sizes}});
  });
  s->add_option("--group", o.group)->required();
  s->add_option("--H", o.h)->required();
  s->add_option("--K", o.k)->required();
  s = leaf(gset, "convolve", "Hecke convolution, cross-checked in Cov and Perm", [&] {
    auto grp = finiteGroup();
    const Subgroup hs = subgroup(grp, o.h), ks = subgroup(grp, o.k), ls = subgroup(grp, o.l);
    const HeckMorphism al(hs, ks, ints(o.alpha)), be(ks, ls, ints(o.beta));
    const HeckMorphism prod = convolveHeck(al, be);
    const CovMorphism ca = heckToCov(al), cb = heckToCov(be);
    const bool covAgrees = covToHeck(convolveCov(ca, cb), hs, ls) == prod;
    const bool permAgrees = covToPerm(heckToCov(prod)) == matmul(covToPerm(cb), covToPerm(ca));
    return fromJson(OJson{{"values", prod.values()}, {"covAgrees", covAgrees}, {"permAgrees", permAgrees}});
  });
  s->add_option("--group", o.group)->required();
  s->add_option("--H", o.h)->required();
  s->add_option("--K", o.k)->required();
  s->add_option("--L", o.l)->required();
  s->add_option("--alpha", o.alpha)->required();
  s->add_option("--beta", o.beta)->required();
  s = leaf(gset, "hecke", "Structure constants of the Hecke algebra of H", [&] {
    auto grp = finiteGroup();
    const Subgroup hs = subgroup(grp, o.h);
    const auto dc = doubleCosets(hs, hs);
    std::vector<Element> reps;
    for (std::size_t i = 0; i < dc.count(); ++i) reps.push_back(dc.representative(i));
    OJson constants = OJson::array();
    for (Element x : reps) {
      OJson row = OJson::array();
      for (Element y : reps)
        row.push_back(convolveHeck(HeckMorphism::indicator(hs, hs, x), HeckMorphism::indicator(hs, hs, y)).values());
      constants.push_back(row);
    }
    return fromJson(OJson{{"representatives", cyclesOf(*grp, reps)}, {"constants", constants}});
  });
  s->add_option("--group", o.group)->required();
  s->add_option("--H", o.h)->required();
  s = leaf(gset, "hecke-prime", "Index table between decorated subgroups", [&] {
    auto grp = finiteGroup();
    const auto fn = functorNamed(o.functor);
    const Subgroup hs = subgroup(grp, o.h), ks = subgroup(grp, o.k);
    const HeckObject x{hs, decorationFromJson(o.adec, hs, *fn)}, y{ks, decorationFromJson(o.bdec, ks, *fn)};
    const auto table = heckPrimeIndexTable(x, y, *fn);
    const auto dc = doubleCosets(hs, ks);
    std::vector<Element> reps;
    for (std::size_t i = 0; i < dc.count(); ++i) reps.push_back(dc.representative(i));
    OJson j{{"representatives", cyclesOf(*grp, reps)}, {"table", table}};
    if (!o.alpha.empty()) j["admissible"] = validateConstrained(ints(o.alpha), table);
    return fromJson(j);
  });
  s->add_option("--group", o.group)->required();
  s->add_option("--H", o.h)->required();
  s->add_option("--K", o.k)->required();
  s->add_option("--a", o.adec, "Decoration of H as element values");
  s->add_option("--b", o.bdec, "Decoration of K as element values");
  s->add_option("--functor", o.functor)->check(CLI::IsMember({"character", "trivial"}));
  s->add_option("--alpha", o.alpha, "Morphism values to test against the table");
  s = leaf(gset, "retraction", "Include-then-forget checks on all coset spaces", [&] {
    auto grp = finiteGroup();
    const auto fn = functorNamed(o.functor);
    std::vector<GSet::Ptr> objects;
    for (const auto& h : allSubgroups(grp)) objects.push_back(GSet::cosets(h));
    const auto r = centerRetraction(objects, *fn, o.seed, o.samples);
    OJson j{{"ok", r.ok}, {"objects", r.objectsChecked}, {"morphisms", r.morphismsChecked}};
    if (!r.ok) j["failure"] = r.failure;
    return fromJson(j);
  });
  s->add_option("--group", o.group)->required();
  s->add_option("--functor", o.functor)->check(CLI::IsMember({"character", "trivial"}));
  s->add_option("--samples", o.samples);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    for (auto& [sub, fn] : leaves) {
      if (!sub->parsed()) continue;
      const Result r = fn();
      out << (o.format == "json" ? r.json.dump() : r.text) << "\n";
      return 0;
    }
    err << "error: no command given\n";
    return 2;
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 4;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return 3;
  } catch (const std::overflow_error& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace motivekit::cli
