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

// Exact models of Brauer groups.
//
// Two presentations are supported:
//   * Hasse: finitely supported maps place -> Q/Z, optionally subject to the
//     reciprocity law (invariants sum to 0 mod 1). Index equals period.
//   * Formal: an explicit finite abelian group Z/m_1 + ... + Z/m_d with an
//     optional index table for classes whose index exceeds their period.
//
// Classes are immutable values carrying a shared pointer to their model.

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motivekit/arith.hpp"
#include "motivekit/caps.hpp"
#include "motivekit/rational.hpp"

namespace motivekit {

enum class ModelKind { Hasse, Formal };

class BrauerClass;

/// Exponent vector -> index overrides for a Formal model.
using IndexTable = std::map<std::vector<Int>, Int>;

class BrauerModel : public std::enable_shared_from_this<BrauerModel> {
 public:
  using Ptr = std::shared_ptr<const BrauerModel>;

  /// An empty place list admits any place name.
  static Ptr hasse(std::vector<std::string> places, bool reciprocity);
  /// Z/m_1 + ... + Z/m_d. A supplied index table is validated against the
  /// index axioms over the whole group; throws MalformedInput on violation.
  static Ptr formal(std::vector<Int> invariant_factors, std::optional<IndexTable> index_table = std::nullopt,
                    const Caps& caps = {});
  /// Shorthand for the cyclic Formal model Z/n with index = period.
  static Ptr cyclic(Int n) { return formal({n}); }

  ModelKind kind() const { return kind_; }
  const std::vector<std::string>& places() const { return places_; }
  bool reciprocity() const { return reciprocity_; }
  const std::vector<Int>& invariantFactors() const { return factors_; }
  const std::optional<IndexTable>& indexTable() const { return index_table_; }

  /// True for a Formal model with a single invariant factor.
  bool isCyclic() const { return kind_ == ModelKind::Formal && factors_.size() == 1; }
  /// Group order for Formal models (throws for Hasse).
  Int order() const;

  BrauerClass zero() const;
  /// Formal class from an exponent vector (reduced mod each factor).
  BrauerClass element(std::vector<Int> exponents) const;
  /// Formal cyclic shorthand.
  BrauerClass element(Int exponent) const;
  /// Hasse class; zero invariants are dropped, others reduced into [0,1).
  BrauerClass element(const std::map<std::string, Rational>& invariants) const;

  /// Every element of a Formal model, in canonical order.
  std::vector<BrauerClass> elements() const;

  friend bool operator==(const BrauerModel& a, const BrauerModel& b);

 private:
  BrauerModel() = default;
  void validateIndexTable(const Caps& caps) const;

  ModelKind kind_ = ModelKind::Formal;
  std::vector<std::string> places_;
  bool reciprocity_ = false;
  std::vector<Int> factors_;
  std::optional<IndexTable> index_table_;
};

/// Models are interchangeable when structurally equal.
bool sameModel(const BrauerModel::Ptr& a, const BrauerModel::Ptr& b);

class BrauerClass {
 public:
  using Invariants = std::vector<std::pair<std::string, Rational>>;

  const BrauerModel::Ptr& model() const { return model_; }
  /// Formal data (empty for Hasse).
  const std::vector<Int>& exponents() const { return exponents_; }
  /// Hasse data: nonzero invariants sorted by place (empty for Formal).
  const Invariants& invariants() const { return invariants_; }

  bool isZero() const;

  friend bool operator==(const BrauerClass& a, const BrauerClass& b) {
    return a.exponents_ == b.exponents_ && a.invariants_ == b.invariants_;
  }
  /// Canonical total order used for multisets and serialization.
  friend std::strong_ordering operator<=>(const BrauerClass& a, const BrauerClass& b);

  /// Canonical text form: "(e1,e2,...)" or "{v1:1/2,v2:1/2}".
  std::string str() const;

 private:
  friend class BrauerModel;
  friend BrauerClass add(const BrauerClass&, const BrauerClass&);
  friend BrauerClass multiply(const BrauerClass&, Int);

  BrauerModel::Ptr model_;
  std::vector<Int> exponents_;
  Invariants invariants_;
};

/// Throws ModelMismatch unless a and b share a model.
void requireSameModel(const BrauerClass& a, const BrauerClass& b);

BrauerClass add(const BrauerClass& a, const BrauerClass& b);
/// k * a for any integer k.
BrauerClass multiply(const BrauerClass& a, Int k);
inline BrauerClass negate(const BrauerClass& a) { return multiply(a, -1); }
inline BrauerClass operator+(const BrauerClass& a, const BrauerClass& b) { return add(a, b); }
inline BrauerClass operator-(const BrauerClass& a, const BrauerClass& b) { return add(a, negate(b)); }
inline BrauerClass operator*(Int k, const BrauerClass& a) { return multiply(a, k); }

/// Order of a in the group.
Int period(const BrauerClass& a);

/// Hasse: the period. Formal: index table entry if present, else the period.
Int index(const BrauerClass& a);

/// The p-power-order component of a. Throws PreconditionError if p is not prime.
BrauerClass pPrimaryPart(const BrauerClass& a, Int p);

/// Closure of the classes under the group law, in canonical order. The model
/// must be supplied so that the empty list still has a well-defined {0}.
std::vector<BrauerClass> subgroupGenerated(const BrauerModel::Ptr& model, const std::vector<BrauerClass>& classes,
                                           const Caps& caps = {});

struct CyclicEquality {
  bool equal = false;
  /// Smallest i >= 1 with gcd(i, period(a)) = 1 and b = i * a, when equal.
  std::optional<Int> multiplier;
};

/// Decides <a> = <b>.
CyclicEquality cyclicEqual(const BrauerClass& a, const BrauerClass& b);

}  // namespace motivekit
