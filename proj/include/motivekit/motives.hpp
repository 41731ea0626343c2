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

// Direct sums of motives of central simple algebras, modelled as multisets
// of Brauer classes, together with their Hom-groups and the isomorphism
// decision procedure.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motivekit/brauer.hpp"
#include "motivekit/caps.hpp"
#include "motivekit/polynomial.hpp"

namespace motivekit {

using IntMatrix = std::vector<std::vector<Int>>;

/// U(A_1) + ... + U(A_n) as a canonically sorted multiset of classes.
/// Equality is structural; isomorphism is decided by isIsomorphic.
class CsaMotive {
 public:
  explicit CsaMotive(BrauerModel::Ptr model, std::vector<BrauerClass> classes = {});

  const BrauerModel::Ptr& model() const { return model_; }
  const std::vector<BrauerClass>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  bool empty() const { return classes_.empty(); }

  friend bool operator==(const CsaMotive& a, const CsaMotive& b) { return a.classes_ == b.classes_; }

  std::string str() const;

 private:
  BrauerModel::Ptr model_;
  std::vector<BrauerClass> classes_;
};

/// Multiset union.
CsaMotive directSum(const CsaMotive& m, const CsaMotive& n);

/// The integer d with Hom(U(a), U(b)) = d * Z, namely index(b - a).
Int homMultiplier(const BrauerClass& a, const BrauerClass& b);

/// Matrix presentation of End(U(A_1) + ... + U(A_n)): entry (i, j) ranges
/// over mu(i, j) * Z with mu(i, j) = homMultiplier(A_i, A_j).
struct LambdaOrder {
  std::vector<BrauerClass> classes;
  IntMatrix mu;

  /// mu is symmetric with unit diagonal and mu(i,k) | mu(i,j) * mu(j,k).
  bool satisfiesInvariants() const;
};

LambdaOrder lambdaOrder(const std::vector<BrauerClass>& classes);

/// A morphism domain -> codomain. entries is |codomain| x |domain|; entry
/// (i, j) lies in homMultiplier(domain_j, codomain_i) * Z.
class MorphismMatrix {
 public:
  /// Throws PreconditionError on a shape mismatch or divisibility violation.
  MorphismMatrix(CsaMotive domain, CsaMotive codomain, IntMatrix entries);

  static MorphismMatrix identity(const CsaMotive& m);

  const CsaMotive& domain() const { return domain_; }
  const CsaMotive& codomain() const { return codomain_; }
  const IntMatrix& entries() const { return entries_; }

 private:
  CsaMotive domain_;
  CsaMotive codomain_;
  IntMatrix entries_;
};

/// f . g (apply g first). Requires codomain(g) = domain(f).
MorphismMatrix compose(const MorphismMatrix& f, const MorphismMatrix& g);

/// Primes dividing the period of some class of m or n.
std::vector<Int> relevantPrimes(const CsaMotive& m, const CsaMotive& n);

struct IsoDecision {
  bool isomorphic = false;
  /// For each relevant prime p, sigma with pPrimaryPart(N_i, p) =
  /// pPrimaryPart(M_sigma(i), p); lexicographically smallest choice.
  std::map<Int, std::vector<std::size_t>> witness;
};

/// Per-prime multiset matching of p-primary parts.
IsoDecision isIsomorphic(const CsaMotive& m, const CsaMotive& n);

/// Same size and equal multisets of p-primary parts at the single prime p.
bool pLocalIso(const CsaMotive& m, const CsaMotive& n, Int p);

struct BruteForceResult {
  bool found = false;
  /// F : M -> N and its inverse G : N -> M when found.
  std::optional<IntMatrix> forward;
  std::optional<IntMatrix> backward;
  /// True when a residue obstruction rules out witnesses at every bound.
  bool provedAbsent = false;
  std::uint64_t nodes = 0;
};

/// Searches for mutually inverse constrained integer matrices with entries
/// bounded by `bound` in absolute value. A negative answer only means "no
/// witness within the bound" unless provedAbsent is set.
BruteForceResult bruteForceIso(const CsaMotive& m, const CsaMotive& n, Int bound, const Caps& caps = {});

/// Classes B such that U(B) is an indecomposable summand of m.
std::vector<BrauerClass> summandClasses(const CsaMotive& m, const Caps& caps = {});

/// {a + b} over all pairs, with multiplicity.
CsaMotive tensor(const CsaMotive& m, const CsaMotive& n);

/// coeff_k copies of k * a for every k. Throws PreconditionError on a
/// negative coefficient.
CsaMotive motiveFromPolynomial(const BrauerClass& a, const IntPolynomial& p);

/// prod_i (1 + t + ... + t^(p_i^r_i - 1)) over the factorization of per.
IntPolynomial periodPolynomial(Int per);

/// E(A; p_A(t)) is isomorphic to E(A; t p_A(t)).
bool verifyRelation1(const BrauerClass& a);

/// {c, a+b+c} is isomorphic to {a+c, b+c}. Requires coprime indices of a, b.
bool verifyRelation2(const BrauerClass& a, const BrauerClass& b, const BrauerClass& c);

/// The graded ring sum_h index(h) Z[h] over a generated subgroup.
struct SigmaRing {
  std::vector<BrauerClass> subgroup;
  std::vector<Int> multipliers;  // parallel to subgroup

  Int multiplier(const BrauerClass& h) const;
};

SigmaRing sigmaRing(const BrauerModel::Ptr& model, const std::vector<BrauerClass>& generators, const Caps& caps = {});

}  // namespace motivekit
