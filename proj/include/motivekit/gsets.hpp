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

// Finite groups, finite G-sets and the convolution (Cov), Hecke (Heck) and
// permutation-module (Perm) descriptions of the same category, plus the
// decorated variants Cov'/Heck' whose morphisms obey index constraints
// coming from a Brauer-group functor on subgroups.
//
// Conventions:
//   * Permutations compose right to left: (a * b)(x) = a(b(x)).
//   * Group elements are indexed by the lexicographic order of their
//     permutations, so index 0 is the identity.
//   * Convolution composes left to right (alpha * beta applies alpha first);
//     covToPerm yields matrices acting on column vectors, hence
//     covToPerm(alpha * beta) = covToPerm(beta) . covToPerm(alpha).

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "motivekit/arith.hpp"
#include "motivekit/motives.hpp"
#include "motivekit/rational.hpp"

namespace motivekit {

using Element = std::uint32_t;
/// 0-based images of 0..degree-1.
using Permutation = std::vector<std::uint32_t>;

/// Parses "(1 2)(3 4)" style cycle notation (1-based points) into a
/// permutation of the given degree. "()" is the identity.
Permutation parseCycles(const std::string& text, std::size_t degree);
/// Inverse of parseCycles; the identity prints as "()".
std::string formatCycles(const Permutation& p);

class FiniteGroup {
 public:
  using Ptr = std::shared_ptr<const FiniteGroup>;

  /// Closure of the generators inside Sym(degree).
  static Ptr fromPermutations(const std::vector<Permutation>& generators, std::size_t degree);
  static Ptr fromCycles(const std::vector<std::string>& generators, std::size_t degree);

  static Ptr symmetric(std::size_t n);
  static Ptr alternating(std::size_t n);
  /// Dihedral group of order 2n acting on an n-gon.
  static Ptr dihedral(std::size_t n);
  static Ptr cyclic(std::size_t n);
  /// Quaternion group of order 8 in its regular representation.
  static Ptr quaternion();
  /// "S3", "S4", "A4", "D4", "Q8", "C5", ...
  static Ptr named(const std::string& name);

  std::size_t order() const { return perms_.size(); }
  std::size_t degree() const { return degree_; }
  static constexpr Element identity() { return 0; }

  Element mul(Element a, Element b) const { return table_[a * order() + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  /// g^-1 h g
  Element conjugate(Element h, Element g) const { return mul(inverse(g), mul(h, g)); }
  Element power(Element a, Int k) const;
  std::size_t elementOrder(Element a) const;

  const Permutation& permutation(Element a) const { return perms_[a]; }
  /// Throws PreconditionError if p is not in the group.
  Element elementOf(const Permutation& p) const;
  const std::vector<std::string>& generatorDescription() const { return generators_; }

  /// Associativity (exhaustive up to order 64, sampled above) and inverse
  /// table consistency.
  bool verifyAxioms(std::uint64_t seed = 0) const;

 private:
  FiniteGroup() = default;
  std::size_t degree_ = 0;
  std::vector<Permutation> perms_;
  std::map<Permutation, Element> index_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> generators_;
};

/// A subgroup as a sorted element list with a membership mask.
class Subgroup {
 public:
  /// Closure of the generators. An empty list gives the trivial subgroup.
  static Subgroup generatedBy(FiniteGroup::Ptr group, const std::vector<Element>& generators);
  /// Validates closure; throws PreconditionError for a non-subgroup.
  static Subgroup fromElements(FiniteGroup::Ptr group, std::vector<Element> elements);
  static Subgroup whole(FiniteGroup::Ptr group);
  static Subgroup trivial(FiniteGroup::Ptr group) { return generatedBy(std::move(group), {}); }

  const FiniteGroup::Ptr& group() const { return group_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Element g) const { return mask_[g]; }

  /// g^-1 S g
  Subgroup conjugate(Element g) const;
  Subgroup intersect(const Subgroup& other) const;
  bool isSubgroupOf(const Subgroup& other) const;
  bool isNormal() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }
  friend bool operator<(const Subgroup& a, const Subgroup& b) { return a.elements_ < b.elements_; }

 private:
  FiniteGroup::Ptr group_;
  std::vector<Element> elements_;
  std::vector<bool> mask_;
};

/// Every subgroup of a (small) group, ordered by size then elements.
std::vector<Subgroup> allSubgroups(const FiniteGroup::Ptr& group);

/// A finite left G-set given by its action table.
class GSet {
 public:
  using Ptr = std::shared_ptr<const GSet>;

  /// action[g][x] = g . x. Validates the action axioms.
  static Ptr fromTable(FiniteGroup::Ptr group, std::vector<std::vector<std::uint32_t>> action);
  /// n points, every element acting trivially.
  static Ptr trivial(FiniteGroup::Ptr group, std::size_t n);
  /// G acting on itself by left translation.
  static Ptr regular(FiniteGroup::Ptr group);
  /// Left cosets G/H, ordered by their smallest element; coset 0 is H.
  static Ptr cosets(const Subgroup& h);
  /// S1 x S2 with point (x, y) at index x * |S2| + y.
  static Ptr product(const GSet& a, const GSet& b);
  static Ptr disjointUnion(const GSet& a, const GSet& b);

  const FiniteGroup::Ptr& group() const { return group_; }
  std::size_t size() const { return size_; }
  std::uint32_t act(Element g, std::uint32_t x) const { return action_[g][x]; }

  /// For coset spaces: a representative of each point (empty otherwise).
  const std::vector<Element>& cosetRepresentatives() const { return coset_reps_; }

  friend bool operator==(const GSet& a, const GSet& b) {
    return a.group_ == b.group_ && a.size_ == b.size_ && a.action_ == b.action_;
  }

 private:
  FiniteGroup::Ptr group_;
  std::size_t size_ = 0;
  std::vector<std::vector<std::uint32_t>> action_;
  std::vector<Element> coset_reps_;
};

struct Orbits {
  std::vector<std::size_t> orbitOf;               // point -> orbit id
  std::vector<std::vector<std::uint32_t>> members;  // sorted; orbit ids by smallest member
  std::size_t count() const { return members.size(); }
  std::uint32_t representative(std::size_t orbit) const { return members[orbit].front(); }
};

Orbits orbits(const GSet& s);
Subgroup stabilizer(const GSet& s, std::uint32_t x);

struct DoubleCosets {
  std::vector<std::vector<Element>> cosets;  // sorted; ordered by smallest element
  std::vector<std::size_t> cosetOf;          // element -> double coset id
  std::size_t count() const { return cosets.size(); }
  Element representative(std::size_t i) const { return cosets[i].front(); }
};

/// H \ G / K. Throws PreconditionError when H and K live in different groups.
DoubleCosets doubleCosets(const Subgroup& h, const Subgroup& k);

// ---------------------------------------------------------------------------
// Cov(G)

/// A G-invariant function S1 x S2 -> Z, stored as one value per orbit.
class CovMorphism {
 public:
  /// values[o] is the value on orbit o of source x target.
  CovMorphism(GSet::Ptr source, GSet::Ptr target, std::vector<Int> values);
  /// From a full |S1| x |S2| table; throws PreconditionError unless invariant.
  static CovMorphism fromFunction(GSet::Ptr source, GSet::Ptr target, const IntMatrix& f);
  static CovMorphism identity(GSet::Ptr s);
  /// Characteristic function of the orbit of (s1, s2).
  static CovMorphism orbitIndicator(GSet::Ptr source, GSet::Ptr target, std::uint32_t s1, std::uint32_t s2);

  const GSet::Ptr& source() const { return source_; }
  const GSet::Ptr& target() const { return target_; }
  const std::vector<Int>& values() const { return values_; }
  const Orbits& orbits() const { return orbits_; }
  Int operator()(std::uint32_t s1, std::uint32_t s2) const;
  /// Full |S1| x |S2| table.
  IntMatrix table() const;

  friend bool operator==(const CovMorphism& a, const CovMorphism& b) {
    return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.values_ == b.values_;
  }

 private:
  GSet::Ptr source_, target_;
  Orbits orbits_;  // of source x target
  std::vector<Int> values_;
};

/// (alpha * beta)(s1, s3) = sum_{s2} alpha(s1, s2) beta(s2, s3).
CovMorphism convolveCov(const CovMorphism& alpha, const CovMorphism& beta);

/// Matrix of Z[S1] -> Z[S2], s1 -> sum_{s2} alpha(s1, s2) s2; |S2| x |S1|.
IntMatrix covToPerm(const CovMorphism& alpha);

// ---------------------------------------------------------------------------
// Heck(G)

/// A function H \ G / K -> Z.
class HeckMorphism {
 public:
  HeckMorphism(Subgroup h, Subgroup k, std::vector<Int> values);
  /// delta_{H1H}.
  static HeckMorphism identity(const Subgroup& h);
  /// Indicator of the double coset containing g.
  static HeckMorphism indicator(const Subgroup& h, const Subgroup& k, Element g);

  const Subgroup& left() const { return h_; }
  const Subgroup& right() const { return k_; }
  const DoubleCosets& cosets() const { return cosets_; }
  const std::vector<Int>& values() const { return values_; }
  /// Value on the double coset HgK.
  Int operator()(Element g) const { return values_[cosets_.cosetOf[g]]; }

  friend bool operator==(const HeckMorphism& a, const HeckMorphism& b) {
    return a.h_ == b.h_ && a.k_ == b.k_ && a.values_ == b.values_;
  }

 private:
  Subgroup h_, k_;
  DoubleCosets cosets_;
  std::vector<Int> values_;
};

/// (alpha . beta)(g) = sum over x in G/K of alpha(x) beta(x^-1 g).
HeckMorphism convolveHeck(const HeckMorphism& alpha, const HeckMorphism& beta);

/// alpha'(g1 H, g2 K) = alpha(g1^-1 g2) on G/H x G/K.
CovMorphism heckToCov(const HeckMorphism& alpha);
/// gamma -> gamma(1H, -). The source and target must be coset spaces G/H, G/K.
HeckMorphism covToHeck(const CovMorphism& gamma, const Subgroup& h, const Subgroup& k);

// ---------------------------------------------------------------------------
// Brauer functors and the decorated categories

/// An element of Br(U) for a subgroup U. For the character functor the
/// values are a homomorphism U -> Q/Z indexed by group element (zero outside
/// U); the trivial functor uses no values.
struct FunctorClass {
  Subgroup domain;
  std::vector<Rational> values;

  friend bool operator==(const FunctorClass& a, const FunctorClass& b) {
    return a.domain == b.domain && a.values == b.values;
  }
};

/// U -> Br(U) with restriction and conjugation; index of a class = its order.
class BrauerFunctor {
 public:
  virtual ~BrauerFunctor() = default;
  virtual std::string name() const = 0;
  virtual FunctorClass zero(const Subgroup& u) const = 0;
  /// Restriction to v, a subgroup of a.domain.
  virtual FunctorClass restrict(const FunctorClass& a, const Subgroup& v) const = 0;
  /// c_g : Br(U) -> Br(g^-1 U g).
  virtual FunctorClass conjugate(const FunctorClass& a, Element g) const = 0;
  virtual FunctorClass subtract(const FunctorClass& a, const FunctorClass& b) const = 0;
  virtual Int order(const FunctorClass& a) const = 0;
  /// Every class of Br(U), zero first.
  virtual std::vector<FunctorClass> classes(const Subgroup& u) const = 0;
};

/// Br(U) = 0 for every U.
class TrivialFunctor final : public BrauerFunctor {
 public:
  std::string name() const override { return "trivial"; }
  FunctorClass zero(const Subgroup& u) const override { return {u, {}}; }
  FunctorClass restrict(const FunctorClass& a, const Subgroup& v) const override;
  FunctorClass conjugate(const FunctorClass& a, Element g) const override;
  FunctorClass subtract(const FunctorClass& a, const FunctorClass& b) const override;
  Int order(const FunctorClass&) const override { return 1; }
  std::vector<FunctorClass> classes(const Subgroup& u) const override { return {zero(u)}; }
};

/// Br(U) = Hom(U, Q/Z), res = restriction, c_g(chi)(u) = chi(g u g^-1).
class CharacterFunctor final : public BrauerFunctor {
 public:
  std::string name() const override { return "character"; }
  FunctorClass zero(const Subgroup& u) const override;
  FunctorClass restrict(const FunctorClass& a, const Subgroup& v) const override;
  FunctorClass conjugate(const FunctorClass& a, Element g) const override;
  FunctorClass subtract(const FunctorClass& a, const FunctorClass& b) const override;
  Int order(const FunctorClass& a) const override;
  std::vector<FunctorClass> classes(const Subgroup& u) const override;

  /// Builds a character from its values; throws PreconditionError unless it
  /// is a homomorphism u -> Q/Z.
  static FunctorClass character(const Subgroup& u, const std::vector<Rational>& values);
};

/// Object (H, a) of Heck'(G).
struct HeckObject {
  Subgroup subgroup;
  FunctorClass decoration;  // in Br(subgroup)
};

/// Object (S, A) of Cov'(G): one class per orbit, living on the stabilizer
/// of that orbit's representative.
struct CovObject {
  GSet::Ptr set;
  std::vector<FunctorClass> decorations;
};

/// Per double coset HgK: order of res_U(b) - res_U(c_g(a)), U = g^-1 H g n K.
std::vector<Int> heckPrimeIndexTable(const HeckObject& x, const HeckObject& y, const BrauerFunctor& f);

/// Per orbit of S1 x S2 with representative (s1, s2): order of
/// res_U(B_s2) - res_U(A_s1), U = Stab(s1) n Stab(s2).
std::vector<Int> covPrimeIndexTable(const CovObject& x, const CovObject& y, const BrauerFunctor& f);

/// Every value divisible by its table entry.
bool validateConstrained(const std::vector<Int>& values, const std::vector<Int>& table);
inline bool validateConstrained(const HeckMorphism& alpha, const std::vector<Int>& table) {
  return validateConstrained(alpha.values(), table);
}

/// The Cov' object (G/H, a) attached to (H, a).
CovObject toCovObject(const HeckObject& x);

/// S -> (S, split decorations) and (S, A) -> S.
CovObject includeUndecorated(const GSet::Ptr& s, const BrauerFunctor& f);
GSet::Ptr forgetDecoration(const CovObject& x);

struct RetractionReport {
  bool ok = false;
  std::size_t objectsChecked = 0;
  std::size_t morphismsChecked = 0;
  std::string failure;
};

/// forget . include = id on objects and on (random) morphisms between the
/// test objects, and included objects carry all-1 index tables.
RetractionReport centerRetraction(const std::vector<GSet::Ptr>& objects, const BrauerFunctor& f,
                                  std::uint64_t seed = 0, std::size_t samplesPerPair = 4);

/// Random morphism with values in [-range, range] scaled by the table.
std::vector<Int> randomConstrainedValues(const std::vector<Int>& table, std::mt19937_64& rng, Int range = 3);

}  // namespace motivekit
