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


#include "motivekit/brauer.hpp"

#include <algorithm>
#include <set>

#include "motivekit/errors.hpp"

namespace motivekit {

// ---------------------------------------------------------------------------
// BrauerModel

BrauerModel::Ptr BrauerModel::hasse(std::vector<std::string> places, bool reciprocity) {
  std::sort(places.begin(), places.end());
  if (std::adjacent_find(places.begin(), places.end()) != places.end())
    throw MalformedInput("duplicate place in Hasse model");
  auto m = std::shared_ptr<BrauerModel>(new BrauerModel);
  m->kind_ = ModelKind::Hasse;
  m->places_ = std::move(places);
  m->reciprocity_ = reciprocity;
  return m;
}

BrauerModel::Ptr BrauerModel::formal(std::vector<Int> invariant_factors, std::optional<IndexTable> index_table,
                                     const Caps& caps) {
  for (Int f : invariant_factors)
    if (f < 1) throw MalformedInput("invariant factors must be positive");
  auto m = std::shared_ptr<BrauerModel>(new BrauerModel);
  m->kind_ = ModelKind::Formal;
  m->factors_ = std::move(invariant_factors);
  if (index_table) {
    IndexTable canonical;
    for (const auto& [exps, ind] : *index_table) {
      if (exps.size() != m->factors_.size()) throw MalformedInput("index table key has wrong length");
      if (ind < 1) throw MalformedInput("index table values must be positive");
      std::vector<Int> key(exps.size());
      for (std::size_t i = 0; i < exps.size(); ++i) key[i] = mod(exps[i], m->factors_[i]);
      auto [it, inserted] = canonical.emplace(std::move(key), ind);
      if (!inserted && it->second != ind) throw MalformedInput("index table assigns two values to one class");
    }
    m->index_table_ = std::move(canonical);
    m->validateIndexTable(caps);
  }
  return m;
}

Int BrauerModel::order() const {
  if (kind_ != ModelKind::Formal) throw PreconditionError("Hasse models are infinite");
  Int n = 1;
  for (Int f : factors_) n = checkedMul(n, f);
  return n;
}

BrauerClass BrauerModel::zero() const {
  BrauerClass c;
  c.model_ = shared_from_this();
  if (kind_ == ModelKind::Formal) c.exponents_.assign(factors_.size(), 0);
  return c;
}

BrauerClass BrauerModel::element(std::vector<Int> exponents) const {
  if (kind_ != ModelKind::Formal) throw PreconditionError("exponent vector given for a Hasse model");
  if (exponents.size() != factors_.size()) throw MalformedInput("exponent vector has wrong length");
  BrauerClass c;
  c.model_ = shared_from_this();
  for (std::size_t i = 0; i < exponents.size(); ++i) exponents[i] = mod(exponents[i], factors_[i]);
  c.exponents_ = std::move(exponents);
  return c;
}

BrauerClass BrauerModel::element(Int exponent) const {
  if (!isCyclic()) throw PreconditionError("bare integer classes need a cyclic Formal model");
  return element(std::vector<Int>{exponent});
}

BrauerClass BrauerModel::element(const std::map<std::string, Rational>& invariants) const {
  if (kind_ != ModelKind::Hasse) throw PreconditionError("Hasse invariants given for a Formal model");
  BrauerClass c;
  c.model_ = shared_from_this();
  Rational total;
  for (const auto& [place, value] : invariants) {
    if (!places_.empty() && !std::binary_search(places_.begin(), places_.end(), place))
      throw MalformedInput("unknown place '" + place + "'");
    Rational r = value.modOne();
    total = (total + r).modOne();
    if (!r.isZero()) c.invariants_.emplace_back(place, r);
  }
  if (reciprocity_ && !total.isZero())
    throw MalformedInput("Hasse invariants violate reciprocity (sum is " + total.str() + " mod 1)");
  return c;
}

std::vector<BrauerClass> BrauerModel::elements() const {
  const Int n = order();
  std::vector<BrauerClass> out;
  out.reserve(static_cast<std::size_t>(n));
  std::vector<Int> exps(factors_.size(), 0);
  for (Int count = 0; count < n; ++count) {
    out.push_back(element(exps));
    // odometer, last coordinate fastest so the output is lexicographic
    for (std::size_t i = exps.size(); i-- > 0;) {
      if (++exps[i] < factors_[i]) break;
      exps[i] = 0;
    }
  }
  return out;
}

void BrauerModel::validateIndexTable(const Caps& caps) const {
  const Int n = order();
  if (static_cast<std::uint64_t>(n) > caps.table) throw CapExceeded("index table validation group order", caps.table);
  const auto all = elements();
  std::vector<Int> ind(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) ind[i] = index(all[i]);
  auto position = [&](const BrauerClass& c) {
    return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), c) - all.begin());
  };
  if (ind[0] != 1) throw MalformedInput("index table: the zero class must have index 1");
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (primeDivisors(ind[i]) != primeDivisors(period(all[i])))
      throw MalformedInput("index table: index and period of " + all[i].str() + " have different prime divisors");
    if (ind[position(negate(all[i]))] != ind[i])
      throw MalformedInput("index table: index of " + all[i].str() + " differs from index of its inverse");
    for (std::size_t j = i; j < all.size(); ++j) {
      const Int s = ind[position(all[i] + all[j])];
      if (checkedMul(ind[i], ind[j]) % s != 0)
        throw MalformedInput("index table: index of " + all[i].str() + " + " + all[j].str() +
                             " does not divide the product of indices");
    }
  }
}

bool operator==(const BrauerModel& a, const BrauerModel& b) {
  return a.kind_ == b.kind_ && a.places_ == b.places_ && a.reciprocity_ == b.reciprocity_ &&
         a.factors_ == b.factors_ && a.index_table_ == b.index_table_;
}

bool sameModel(const BrauerModel::Ptr& a, const BrauerModel::Ptr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------
// BrauerClass

bool BrauerClass::isZero() const {
  return invariants_.empty() && std::all_of(exponents_.begin(), exponents_.end(), [](Int e) { return e == 0; });
}

std::strong_ordering operator<=>(const BrauerClass& a, const BrauerClass& b) {
  if (auto c = a.exponents_ <=> b.exponents_; c != 0) return c;
  return a.invariants_ <=> b.invariants_;
}

std::string BrauerClass::str() const {
  std::string s;
  if (model_->kind() == ModelKind::Formal) {
    if (model_->isCyclic()) return std::to_string(exponents_[0]);
    s = "(";
    for (std::size_t i = 0; i < exponents_.size(); ++i) s += (i ? "," : "") + std::to_string(exponents_[i]);
    return s + ")";
  }
  s = "{";
  for (std::size_t i = 0; i < invariants_.size(); ++i)
    s += (i ? "," : "") + invariants_[i].first + ":" + invariants_[i].second.str();
  return s + "}";
}

void requireSameModel(const BrauerClass& a, const BrauerClass& b) {
  if (!sameModel(a.model(), b.model())) throw ModelMismatch();
}

BrauerClass add(const BrauerClass& a, const BrauerClass& b) {
  requireSameModel(a, b);
  BrauerClass c;
  c.model_ = a.model_;
  if (a.model_->kind() == ModelKind::Formal) {
    const auto& f = a.model_->invariantFactors();
    c.exponents_.resize(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) c.exponents_[i] = mod(a.exponents_[i] + b.exponents_[i], f[i]);
    return c;
  }
  // merge two place-sorted invariant lists
  auto i = a.invariants_.begin(), j = b.invariants_.begin();
  while (i != a.invariants_.end() || j != b.invariants_.end()) {
    if (j == b.invariants_.end() || (i != a.invariants_.end() && i->first < j->first)) {
      c.invariants_.push_back(*i++);
    } else if (i == a.invariants_.end() || j->first < i->first) {
      c.invariants_.push_back(*j++);
    } else {
      Rational r = (i->second + j->second).modOne();
      if (!r.isZero()) c.invariants_.emplace_back(i->first, r);
      ++i;
      ++j;
    }
  }
  return c;
}

BrauerClass multiply(const BrauerClass& a, Int k) {
  BrauerClass c;
  c.model_ = a.model_;
  if (a.model_->kind() == ModelKind::Formal) {
    const auto& f = a.model_->invariantFactors();
    c.exponents_.resize(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
      c.exponents_[i] = mod(checkedMul(a.exponents_[i], mod(k, f[i])), f[i]);
    return c;
  }
  for (const auto& [place, r] : a.invariants_) {
    Rational s = Rational(checkedMul(mod(k, r.den()), r.num()), r.den()).modOne();
    if (!s.isZero()) c.invariants_.emplace_back(place, s);
  }
  return c;
}

Int period(const BrauerClass& a) {
  Int per = 1;
  if (a.model()->kind() == ModelKind::Formal) {
    const auto& f = a.model()->invariantFactors();
    for (std::size_t i = 0; i < f.size(); ++i) per = lcm(per, f[i] / gcd(a.exponents()[i], f[i]));
  } else {
    for (const auto& [place, r] : a.invariants()) per = lcm(per, r.den());
  }
  return per;
}

Int index(const BrauerClass& a) {
  const auto& table = a.model()->indexTable();
  if (table) {
    if (auto it = table->find(a.exponents()); it != table->end()) return it->second;
  }
  return period(a);
}

BrauerClass pPrimaryPart(const BrauerClass& a, Int p) {
  if (!isPrime(p)) throw PreconditionError("pPrimaryPart: " + std::to_string(p) + " is not prime");
  Int n = period(a);
  Int pr = 1;
  while (n % p == 0) {
    n /= p;
    pr *= p;
  }
  if (pr == 1) return a.model()->zero();
  // c = 1 mod p^r, c = 0 mod m, with m the prime-to-p part of the period
  const Int m = n;
  const Int c = checkedMul(m, modInverse(m, pr));
  return multiply(a, c);
}

std::vector<BrauerClass> subgroupGenerated(const BrauerModel::Ptr& model, const std::vector<BrauerClass>& classes,
                                           const Caps& caps) {
  const BrauerClass zero = model->zero();
  std::set<BrauerClass> closure{zero};
  for (const auto& g : classes) {
    requireSameModel(zero, g);
    if (closure.count(g)) continue;
    // closure := closure + <g>
    std::vector<BrauerClass> base(closure.begin(), closure.end());
    BrauerClass step = g;
    while (!step.isZero()) {
      for (const auto& s : base) {
        closure.insert(s + step);
        if (closure.size() > caps.subgroup) throw CapExceeded("generated subgroup size", caps.subgroup);
      }
      step = step + g;
    }
  }
  return {closure.begin(), closure.end()};
}

CyclicEquality cyclicEqual(const BrauerClass& a, const BrauerClass& b) {
  requireSameModel(a, b);
  const Int n = period(a);
  if (n != period(b)) return {};
  BrauerClass multiple = a;
  for (Int i = 1; i <= n; ++i, multiple = multiple + a)
    if (gcd(i, n) == 1 && multiple == b) return {true, i};
  return {};
}

}  // namespace motivekit
