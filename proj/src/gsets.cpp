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


#include "motivekit/gsets.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "motivekit/errors.hpp"

namespace motivekit {

// ---------------------------------------------------------------------------
// Permutations

Permutation parseCycles(const std::string& text, std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<bool> seen(degree, false);
  std::size_t pos = 0;
  auto skipSpace = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skipSpace();
  while (pos < text.size()) {
    if (text[pos] != '(') throw MalformedInput("cycle notation: expected '(' in \"" + text + "\"");
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skipSpace();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (start == pos) throw MalformedInput("cycle notation: expected a point in \"" + text + "\"");
      const unsigned long point = std::stoul(text.substr(start, pos - start));
      if (point < 1 || point > degree)
        throw MalformedInput("cycle notation: point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
      if (seen[point - 1]) throw MalformedInput("cycle notation: cycles must be disjoint in \"" + text + "\"");
      seen[point - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(point - 1));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skipSpace();
  }
  return p;
}

std::string formatCycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    for (std::uint32_t j = i; !seen[j]; j = p[j]) {
      if (j != i) out += " ";
      out += std::to_string(j + 1);
      seen[j] = true;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace {

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::Ptr FiniteGroup::fromPermutations(const std::vector<Permutation>& generators, std::size_t degree) {
  constexpr std::size_t kMaxOrder = 20000;
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  for (const auto& g : generators) {
    if (g.size() != degree) throw MalformedInput("generator has the wrong degree");
    Permutation sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != id) throw MalformedInput("generator is not a permutation");
  }
  std::set<Permutation> seen{id};
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation y = compose(g, x);
      if (seen.insert(y).second) {
        if (seen.size() > kMaxOrder) throw CapExceeded("group order", kMaxOrder);
        queue.push_back(std::move(y));
      }
    }
  }
  auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup);
  grp->degree_ = degree;
  grp->perms_.assign(seen.begin(), seen.end());  // lexicographic; identity first
  for (Element i = 0; i < grp->perms_.size(); ++i) grp->index_.emplace(grp->perms_[i], i);
  const std::size_t n = grp->perms_.size();
  grp->table_.resize(n * n);
  grp->inverse_.resize(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element c = grp->index_.at(compose(grp->perms_[a], grp->perms_[b]));
      grp->table_[a * n + b] = c;
      if (c == 0) grp->inverse_[a] = b;
    }
  for (const auto& g : generators) grp->generators_.push_back(formatCycles(g));
  return grp;
}

FiniteGroup::Ptr FiniteGroup::fromCycles(const std::vector<std::string>& generators, std::size_t degree) {
  std::vector<Permutation> perms;
  for (const auto& g : generators) perms.push_back(parseCycles(g, degree));
  return fromPermutations(perms, degree);
}

FiniteGroup::Ptr FiniteGroup::symmetric(std::size_t n) {
  if (n < 2) return fromPermutations({}, n);
  Permutation swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0u);
  std::swap(swap[0], swap[1]);
  for (std::uint32_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
  return fromPermutations({swap, cycle}, n);
}

FiniteGroup::Ptr FiniteGroup::alternating(std::size_t n) {
  std::vector<Permutation> gens;
  for (std::uint32_t k = 2; k < n; ++k) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0u);
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(p);
  }
  return fromPermutations(gens, n);
}

FiniteGroup::Ptr FiniteGroup::dihedral(std::size_t n) {
  if (n < 3) throw PreconditionError("dihedral group needs n >= 3");
  Permutation r(n), s(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    r[i] = static_cast<std::uint32_t>((i + 1) % n);
    s[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return fromPermutations({r, s}, n);
}

FiniteGroup::Ptr FiniteGroup::cyclic(std::size_t n) {
  if (n < 1) throw PreconditionError("cyclic group needs n >= 1");
  Permutation r(n);
  for (std::uint32_t i = 0; i < n; ++i) r[i] = static_cast<std::uint32_t>((i + 1) % n);
  return fromPermutations({r}, n);
}

FiniteGroup::Ptr FiniteGroup::quaternion() {
  return fromCycles({"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"}, 8);
}

FiniteGroup::Ptr FiniteGroup::named(const std::string& name) {
  if (name == "Q8") return quaternion();
  if (name.size() >= 2) {
    std::size_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoul(name.substr(1), &used);
      if (used != name.size() - 1) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n > 0) {
      switch (name[0]) {
        case 'S': return symmetric(n);
        case 'A': return alternating(n);
        case 'D': return dihedral(n);
        case 'C': return cyclic(n);
        default: break;
      }
    }
  }
  throw MalformedInput("unknown group name '" + name + "'");
}

Element FiniteGroup::power(Element a, Int k) const {
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  Element r = identity();
  for (Int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::elementOrder(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

Element FiniteGroup::elementOf(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw PreconditionError("permutation " + formatCycles(p) + " is not in the group");
  return it->second;
}

bool FiniteGroup::verifyAxioms(std::uint64_t seed) const {
  const std::size_t n = order();
  for (Element a = 0; a < n; ++a) {
    if (mul(a, inverse(a)) != identity() || mul(inverse(a), a) != identity()) return false;
    if (mul(identity(), a) != a || mul(a, identity()) != a) return false;
  }
  auto assoc = [&](Element a, Element b, Element c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
  if (n <= 64) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (int t = 0; t < 100000; ++t)
    if (!assoc(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup Subgroup::generatedBy(FiniteGroup::Ptr group, const std::vector<Element>& generators) {
  Subgroup s;
  s.mask_.assign(group->order(), false);
  s.mask_[FiniteGroup::identity()] = true;
  std::deque<Element> queue{FiniteGroup::identity()};
  for (Element g : generators)
    if (g >= group->order()) throw PreconditionError("subgroup generator outside the group");
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element g : generators) {
      const Element y = group->mul(x, g);
      if (!s.mask_[y]) {
        s.mask_[y] = true;
        queue.push_back(y);
      }
    }
  }
  for (Element e = 0; e < group->order(); ++e)
    if (s.mask_[e]) s.elements_.push_back(e);
  s.group_ = std::move(group);
  return s;
}

Subgroup Subgroup::fromElements(FiniteGroup::Ptr group, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup s = generatedBy(group, elements);
  if (s.elements_ != elements) throw PreconditionError("element list is not a subgroup");
  return s;
}

Subgroup Subgroup::whole(FiniteGroup::Ptr group) {
  std::vector<Element> all(group->order());
  std::iota(all.begin(), all.end(), 0u);
  return fromElements(std::move(group), std::move(all));
}

Subgroup Subgroup::conjugate(Element g) const {
  Subgroup s;
  s.group_ = group_;
  s.mask_.assign(group_->order(), false);
  for (Element h : elements_) s.mask_[group_->conjugate(h, g)] = true;
  for (Element e = 0; e < group_->order(); ++e)
    if (s.mask_[e]) s.elements_.push_back(e);
  return s;
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
  if (group_ != other.group_) throw PreconditionError("subgroups of different groups");
  Subgroup s;
  s.group_ = group_;
  s.mask_.assign(group_->order(), false);
  for (Element h : elements_)
    if (other.contains(h)) {
      s.mask_[h] = true;
      s.elements_.push_back(h);
    }
  return s;
}

bool Subgroup::isSubgroupOf(const Subgroup& other) const {
  return group_ == other.group_ &&
         std::all_of(elements_.begin(), elements_.end(), [&](Element h) { return other.contains(h); });
}

bool Subgroup::isNormal() const {
  for (Element g = 0; g < group_->order(); ++g)
    if (!(conjugate(g) == *this)) return false;
  return true;
}

std::vector<Subgroup> allSubgroups(const FiniteGroup::Ptr& group) {
  std::vector<Subgroup> cyclic;
  std::set<std::vector<Element>> seen;
  for (Element g = 0; g < group->order(); ++g) {
    Subgroup c = Subgroup::generatedBy(group, {g});
    if (seen.insert(c.elements()).second) cyclic.push_back(c);
  }
  // every subgroup is a join of cyclic subgroups
  std::vector<Subgroup> all = cyclic;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& c : cyclic) {
      std::vector<Element> gens = all[i].elements();
      gens.insert(gens.end(), c.elements().begin(), c.elements().end());
      Subgroup j = Subgroup::generatedBy(group, gens);
      if (seen.insert(j.elements()).second) all.push_back(j);
    }
  }
  std::sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return all;
}

// ---------------------------------------------------------------------------
// GSet

GSet::Ptr GSet::fromTable(FiniteGroup::Ptr group, std::vector<std::vector<std::uint32_t>> action) {
  if (action.size() != group->order()) throw MalformedInput("action table needs one row per group element");
  const std::size_t n = action.empty() ? 0 : action[0].size();
  for (const auto& row : action) {
    if (row.size() != n) throw MalformedInput("action table rows differ in length");
    for (auto x : row)
      if (x >= n) throw MalformedInput("action table maps outside the set");
  }
  for (std::uint32_t x = 0; x < n; ++x)
    if (action[FiniteGroup::identity()][x] != x) throw MalformedInput("identity does not act trivially");
  for (Element g = 0; g < group->order(); ++g)
    for (Element h = 0; h < group->order(); ++h)
      for (std::uint32_t x = 0; x < n; ++x)
        if (action[g][action[h][x]] != action[group->mul(g, h)][x])
          throw MalformedInput("action table is not a group action");
  auto s = std::make_shared<GSet>();
  s->group_ = std::move(group);
  s->size_ = n;
  s->action_ = std::move(action);
  return s;
}

GSet::Ptr GSet::trivial(FiniteGroup::Ptr group, std::size_t n) {
  std::vector<std::uint32_t> row(n);
  std::iota(row.begin(), row.end(), 0u);
  auto s = std::make_shared<GSet>();
  s->size_ = n;
  s->action_.assign(group->order(), row);
  s->group_ = std::move(group);
  return s;
}

GSet::Ptr GSet::regular(FiniteGroup::Ptr group) { return cosets(Subgroup::trivial(std::move(group))); }

GSet::Ptr GSet::cosets(const Subgroup& h) {
  const auto& grp = h.group();
  const std::size_t n = grp->order();
  std::vector<std::size_t> cosetOf(n, SIZE_MAX);
  std::vector<Element> reps;
  for (Element g = 0; g < n; ++g) {
    if (cosetOf[g] != SIZE_MAX) continue;
    for (Element x : h.elements()) cosetOf[grp->mul(g, x)] = reps.size();
    reps.push_back(g);
  }
  auto s = std::make_shared<GSet>();
  s->group_ = grp;
  s->size_ = reps.size();
  s->coset_reps_ = reps;
  s->action_.assign(n, std::vector<std::uint32_t>(reps.size()));
  for (Element g = 0; g < n; ++g)
    for (std::size_t c = 0; c < reps.size(); ++c)
      s->action_[g][c] = static_cast<std::uint32_t>(cosetOf[grp->mul(g, reps[c])]);
  return s;
}

GSet::Ptr GSet::product(const GSet& a, const GSet& b) {
  if (a.group_ != b.group_) throw PreconditionError("G-sets over different groups");
  auto s = std::make_shared<GSet>();
  s->group_ = a.group_;
  s->size_ = a.size_ * b.size_;
  s->action_.assign(a.group_->order(), std::vector<std::uint32_t>(s->size_));
  for (Element g = 0; g < a.group_->order(); ++g)
    for (std::uint32_t x = 0; x < a.size_; ++x)
      for (std::uint32_t y = 0; y < b.size_; ++y)
        s->action_[g][x * b.size_ + y] = static_cast<std::uint32_t>(a.act(g, x) * b.size_ + b.act(g, y));
  return s;
}

GSet::Ptr GSet::disjointUnion(const GSet& a, const GSet& b) {
  if (a.group_ != b.group_) throw PreconditionError("G-sets over different groups");
  auto s = std::make_shared<GSet>();
  s->group_ = a.group_;
  s->size_ = a.size_ + b.size_;
  s->action_.assign(a.group_->order(), std::vector<std::uint32_t>(s->size_));
  for (Element g = 0; g < a.group_->order(); ++g) {
    for (std::uint32_t x = 0; x < a.size_; ++x) s->action_[g][x] = a.act(g, x);
    for (std::uint32_t y = 0; y < b.size_; ++y)
      s->action_[g][a.size_ + y] = static_cast<std::uint32_t>(a.size_ + b.act(g, y));
  }
  return s;
}

Orbits orbits(const GSet& s) {
  Orbits out;
  out.orbitOf.assign(s.size(), SIZE_MAX);
  for (std::uint32_t x = 0; x < s.size(); ++x) {
    if (out.orbitOf[x] != SIZE_MAX) continue;
    std::vector<std::uint32_t> members;
    for (Element g = 0; g < s.group()->order(); ++g) {
      const std::uint32_t y = s.act(g, x);
      if (out.orbitOf[y] == SIZE_MAX) {
        out.orbitOf[y] = out.members.size();
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    out.members.push_back(std::move(members));
  }
  return out;
}

Subgroup stabilizer(const GSet& s, std::uint32_t x) {
  std::vector<Element> els;
  for (Element g = 0; g < s.group()->order(); ++g)
    if (s.act(g, x) == x) els.push_back(g);
  return Subgroup::fromElements(s.group(), std::move(els));
}

DoubleCosets doubleCosets(const Subgroup& h, const Subgroup& k) {
  if (h.group() != k.group()) throw PreconditionError("double cosets of subgroups of different groups");
  const auto& grp = h.group();
  DoubleCosets out;
  out.cosetOf.assign(grp->order(), SIZE_MAX);
  for (Element g = 0; g < grp->order(); ++g) {
    if (out.cosetOf[g] != SIZE_MAX) continue;
    std::vector<Element> members;
    for (Element x : h.elements())
      for (Element y : k.elements()) {
        const Element e = grp->mul(grp->mul(x, g), y);
        if (out.cosetOf[e] == SIZE_MAX) {
          out.cosetOf[e] = out.cosets.size();
          members.push_back(e);
        }
      }
    std::sort(members.begin(), members.end());
    out.cosets.push_back(std::move(members));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cov(G)

CovMorphism::CovMorphism(GSet::Ptr source, GSet::Ptr target, std::vector<Int> values)
    : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
  if (source_->group() != target_->group()) throw PreconditionError("G-sets over different groups");
  orbits_ = motivekit::orbits(*GSet::product(*source_, *target_));
  if (values_.size() != orbits_.count())
    throw PreconditionError("Cov morphism needs " + std::to_string(orbits_.count()) + " orbit values");
}

CovMorphism CovMorphism::fromFunction(GSet::Ptr source, GSet::Ptr target, const IntMatrix& f) {
  CovMorphism m(source, target, std::vector<Int>(motivekit::orbits(*GSet::product(*source, *target)).count(), 0));
  if (f.size() != source->size()) throw PreconditionError("function table has wrong number of rows");
  std::vector<bool> set(m.values_.size(), false);
  for (std::uint32_t x = 0; x < source->size(); ++x) {
    if (f[x].size() != target->size()) throw PreconditionError("function table has wrong number of columns");
    for (std::uint32_t y = 0; y < target->size(); ++y) {
      const std::size_t o = m.orbits_.orbitOf[x * target->size() + y];
      if (!set[o]) {
        m.values_[o] = f[x][y];
        set[o] = true;
      } else if (m.values_[o] != f[x][y]) {
        throw PreconditionError("function is not G-invariant");
      }
    }
  }
  return m;
}

CovMorphism CovMorphism::identity(GSet::Ptr s) {
  IntMatrix f(s->size(), std::vector<Int>(s->size(), 0));
  for (std::size_t x = 0; x < s->size(); ++x) f[x][x] = 1;
  return fromFunction(s, s, f);
}

CovMorphism CovMorphism::orbitIndicator(GSet::Ptr source, GSet::Ptr target, std::uint32_t s1, std::uint32_t s2) {
  CovMorphism m(source, target, std::vector<Int>(motivekit::orbits(*GSet::product(*source, *target)).count(), 0));
  m.values_[m.orbits_.orbitOf[s1 * target->size() + s2]] = 1;
  return m;
}

Int CovMorphism::operator()(std::uint32_t s1, std::uint32_t s2) const {
  return values_[orbits_.orbitOf[s1 * target_->size() + s2]];
}

IntMatrix CovMorphism::table() const {
  IntMatrix f(source_->size(), std::vector<Int>(target_->size()));
  for (std::uint32_t x = 0; x < source_->size(); ++x)
    for (std::uint32_t y = 0; y < target_->size(); ++y) f[x][y] = (*this)(x, y);
  return f;
}

CovMorphism convolveCov(const CovMorphism& alpha, const CovMorphism& beta) {
  if (!(*alpha.target() == *beta.source())) throw PreconditionError("convolveCov: middle G-sets differ");
  const auto a = alpha.table(), b = beta.table();
  IntMatrix f(alpha.source()->size(), std::vector<Int>(beta.target()->size(), 0));
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (a[x][y] == 0) continue;
      for (std::size_t z = 0; z < f[x].size(); ++z) f[x][z] = checkedAdd(f[x][z], checkedMul(a[x][y], b[y][z]));
    }
  return CovMorphism::fromFunction(alpha.source(), beta.target(), f);
}

IntMatrix covToPerm(const CovMorphism& alpha) {
  IntMatrix m(alpha.target()->size(), std::vector<Int>(alpha.source()->size()));
  for (std::uint32_t s1 = 0; s1 < alpha.source()->size(); ++s1)
    for (std::uint32_t s2 = 0; s2 < alpha.target()->size(); ++s2) m[s2][s1] = alpha(s1, s2);
  return m;
}

// ---------------------------------------------------------------------------
// Heck(G)

HeckMorphism::HeckMorphism(Subgroup h, Subgroup k, std::vector<Int> values)
    : h_(std::move(h)), k_(std::move(k)), cosets_(doubleCosets(h_, k_)), values_(std::move(values)) {
  if (values_.size() != cosets_.count())
    throw PreconditionError("Hecke morphism needs " + std::to_string(cosets_.count()) + " double coset values");
}

HeckMorphism HeckMorphism::identity(const Subgroup& h) { return indicator(h, h, FiniteGroup::identity()); }

HeckMorphism HeckMorphism::indicator(const Subgroup& h, const Subgroup& k, Element g) {
  const DoubleCosets dc = doubleCosets(h, k);
  std::vector<Int> values(dc.count(), 0);
  values[dc.cosetOf[g]] = 1;
  return HeckMorphism(h, k, std::move(values));
}

HeckMorphism convolveHeck(const HeckMorphism& alpha, const HeckMorphism& beta) {
  if (!(alpha.right() == beta.left())) throw PreconditionError("convolveHeck: middle subgroups differ");
  const auto& grp = alpha.left().group();
  const DoubleCosets target = doubleCosets(alpha.left(), beta.right());
  const auto reps = GSet::cosets(alpha.right())->cosetRepresentatives();  // G/K
  std::vector<Int> values(target.count(), 0);
  for (std::size_t d = 0; d < target.count(); ++d) {
    const Element g = target.representative(d);
    Int sum = 0;
    for (Element x : reps) {
      const Int a = alpha(x);
      if (a != 0) sum = checkedAdd(sum, checkedMul(a, beta(grp->mul(grp->inverse(x), g))));
    }
    values[d] = sum;
  }
  return HeckMorphism(alpha.left(), beta.right(), std::move(values));
}

CovMorphism heckToCov(const HeckMorphism& alpha) {
  const auto& grp = alpha.left().group();
  auto s1 = GSet::cosets(alpha.left());
  auto s2 = GSet::cosets(alpha.right());
  IntMatrix f(s1->size(), std::vector<Int>(s2->size()));
  for (std::size_t i = 0; i < s1->size(); ++i)
    for (std::size_t j = 0; j < s2->size(); ++j)
      f[i][j] = alpha(grp->mul(grp->inverse(s1->cosetRepresentatives()[i]), s2->cosetRepresentatives()[j]));
  return CovMorphism::fromFunction(s1, s2, f);
}

HeckMorphism covToHeck(const CovMorphism& gamma, const Subgroup& h, const Subgroup& k) {
  auto s1 = GSet::cosets(h);
  auto s2 = GSet::cosets(k);
  if (!(*gamma.source() == *s1) || !(*gamma.target() == *s2))
    throw PreconditionError("covToHeck: morphism is not between G/H and G/K");
  const DoubleCosets dc = doubleCosets(h, k);
  std::vector<Int> values(dc.count());
  for (std::size_t d = 0; d < dc.count(); ++d) values[d] = gamma(0, s2->act(dc.representative(d), 0));
  return HeckMorphism(h, k, std::move(values));
}

// ---------------------------------------------------------------------------
// Brauer functors

FunctorClass TrivialFunctor::restrict(const FunctorClass& a, const Subgroup& v) const {
  if (!v.isSubgroupOf(a.domain)) throw PreconditionError("restriction to a non-subgroup");
  return {v, {}};
}

FunctorClass TrivialFunctor::conjugate(const FunctorClass& a, Element g) const { return {a.domain.conjugate(g), {}}; }

FunctorClass TrivialFunctor::subtract(const FunctorClass& a, const FunctorClass& b) const {
  if (!(a.domain == b.domain)) throw PreconditionError("classes on different subgroups");
  return {a.domain, {}};
}

FunctorClass CharacterFunctor::zero(const Subgroup& u) const {
  return {u, std::vector<Rational>(u.group()->order())};
}

FunctorClass CharacterFunctor::restrict(const FunctorClass& a, const Subgroup& v) const {
  if (!v.isSubgroupOf(a.domain)) throw PreconditionError("restriction to a non-subgroup");
  FunctorClass out = zero(v);
  for (Element x : v.elements()) out.values[x] = a.values[x];
  return out;
}

FunctorClass CharacterFunctor::conjugate(const FunctorClass& a, Element g) const {
  const auto& grp = a.domain.group();
  FunctorClass out = zero(a.domain.conjugate(g));
  // out lives on g^-1 U g; chi'(u) = chi(g u g^-1)
  for (Element u : out.domain.elements()) out.values[u] = a.values[grp->mul(g, grp->mul(u, grp->inverse(g)))];
  return out;
}

FunctorClass CharacterFunctor::subtract(const FunctorClass& a, const FunctorClass& b) const {
  if (!(a.domain == b.domain)) throw PreconditionError("classes on different subgroups");
  FunctorClass out = zero(a.domain);
  for (Element u : a.domain.elements()) out.values[u] = (a.values[u] - b.values[u]).modOne();
  return out;
}

Int CharacterFunctor::order(const FunctorClass& a) const {
  Int n = 1;
  for (Element u : a.domain.elements()) n = lcm(n, a.values[u].den());
  return n;
}

FunctorClass CharacterFunctor::character(const Subgroup& u, const std::vector<Rational>& values) {
  const auto& grp = u.group();
  if (values.size() != grp->order()) throw PreconditionError("character needs one value per group element");
  FunctorClass out{u, std::vector<Rational>(grp->order())};
  for (Element x = 0; x < grp->order(); ++x) {
    if (u.contains(x)) out.values[x] = values[x].modOne();
    else if (!values[x].isZero()) throw PreconditionError("character is nonzero outside its subgroup");
  }
  for (Element x : u.elements())
    for (Element y : u.elements())
      if (!(out.values[grp->mul(x, y)] == (out.values[x] + out.values[y]).modOne()))
        throw PreconditionError("values do not define a homomorphism to Q/Z");
  return out;
}

std::vector<FunctorClass> CharacterFunctor::classes(const Subgroup& u) const {
  const auto& grp = u.group();
  // greedy generating set
  std::vector<Element> gens;
  Subgroup span = Subgroup::trivial(grp);
  for (Element x : u.elements()) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = Subgroup::generatedBy(grp, gens);
  }
  std::vector<FunctorClass> out;
  std::vector<Int> pick(gens.size(), 0);
  while (true) {
    // extend generator values along the Cayley graph, checking consistency
    std::vector<Rational> value(grp->order());
    std::vector<bool> known(grp->order(), false);
    known[FiniteGroup::identity()] = true;
    std::deque<Element> queue{FiniteGroup::identity()};
    bool consistent = true;
    while (!queue.empty() && consistent) {
      const Element x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Element y = grp->mul(x, gens[i]);
        const Rational v =
            (value[x] + Rational(pick[i], static_cast<Int>(grp->elementOrder(gens[i])))).modOne();
        if (!known[y]) {
          known[y] = true;
          value[y] = v;
          queue.push_back(y);
        } else if (!(value[y] == v)) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent) out.push_back({u, std::move(value)});
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      if (++pick[i] < static_cast<Int>(grp->elementOrder(gens[i]))) break;
      pick[i] = 0;
    }
    if (i == gens.size()) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decorated categories

std::vector<Int> heckPrimeIndexTable(const HeckObject& x, const HeckObject& y, const BrauerFunctor& f) {
  if (!(x.decoration.domain == x.subgroup) || !(y.decoration.domain == y.subgroup))
    throw PreconditionError("decoration does not live on the object's subgroup");
  const DoubleCosets dc = doubleCosets(x.subgroup, y.subgroup);
  std::vector<Int> table(dc.count());
  for (std::size_t d = 0; d < dc.count(); ++d) {
    const Element g = dc.representative(d);
    const FunctorClass moved = f.conjugate(x.decoration, g);  // on g^-1 H g
    const Subgroup u = moved.domain.intersect(y.subgroup);
    table[d] = f.order(f.subtract(f.restrict(y.decoration, u), f.restrict(moved, u)));
  }
  return table;
}

namespace {

/// Decoration of an arbitrary point s, transported from its orbit representative.
FunctorClass decorationAt(const CovObject& x, const Orbits& orb, std::uint32_t s, const BrauerFunctor& f) {
  const std::size_t o = orb.orbitOf[s];
  const std::uint32_t rep = orb.representative(o);
  const auto& grp = x.set->group();
  for (Element g = 0; g < grp->order(); ++g)
    if (x.set->act(g, rep) == s) return f.conjugate(x.decorations[o], grp->inverse(g));  // Stab(s) = g Stab(rep) g^-1
  throw InternalInconsistency("point not in the orbit of its representative");
}

void checkDecorations(const CovObject& x, const Orbits& orb) {
  if (x.decorations.size() != orb.count()) throw PreconditionError("Cov' object needs one decoration per orbit");
  for (std::size_t o = 0; o < orb.count(); ++o)
    if (!(x.decorations[o].domain == stabilizer(*x.set, orb.representative(o))))
      throw PreconditionError("decoration does not live on the stabilizer of its orbit representative");
}

}  // namespace

std::vector<Int> covPrimeIndexTable(const CovObject& x, const CovObject& y, const BrauerFunctor& f) {
  const Orbits ox = orbits(*x.set), oy = orbits(*y.set);
  checkDecorations(x, ox);
  checkDecorations(y, oy);
  const Orbits prod = orbits(*GSet::product(*x.set, *y.set));
  std::vector<Int> table(prod.count());
  for (std::size_t o = 0; o < prod.count(); ++o) {
    const std::uint32_t point = prod.representative(o);
    const auto s1 = static_cast<std::uint32_t>(point / y.set->size());
    const auto s2 = static_cast<std::uint32_t>(point % y.set->size());
    const Subgroup u = stabilizer(*x.set, s1).intersect(stabilizer(*y.set, s2));
    const FunctorClass a = f.restrict(decorationAt(x, ox, s1, f), u);
    const FunctorClass b = f.restrict(decorationAt(y, oy, s2, f), u);
    table[o] = f.order(f.subtract(b, a));
  }
  return table;
}

bool validateConstrained(const std::vector<Int>& values, const std::vector<Int>& table) {
  if (values.size() != table.size()) throw PreconditionError("index table does not match the morphism");
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] % table[i] != 0) return false;
  return true;
}

CovObject toCovObject(const HeckObject& x) { return {GSet::cosets(x.subgroup), {x.decoration}}; }

CovObject includeUndecorated(const GSet::Ptr& s, const BrauerFunctor& f) {
  CovObject x{s, {}};
  const Orbits orb = orbits(*s);
  for (std::size_t o = 0; o < orb.count(); ++o) x.decorations.push_back(f.zero(stabilizer(*s, orb.representative(o))));
  return x;
}

GSet::Ptr forgetDecoration(const CovObject& x) { return x.set; }

std::vector<Int> randomConstrainedValues(const std::vector<Int>& table, std::mt19937_64& rng, Int range) {
  std::uniform_int_distribution<Int> pick(-range, range);
  std::vector<Int> out(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) out[i] = checkedMul(table[i], pick(rng));
  return out;
}

RetractionReport centerRetraction(const std::vector<GSet::Ptr>& objects, const BrauerFunctor& f, std::uint64_t seed,
                                  std::size_t samplesPerPair) {
  RetractionReport report;
  std::mt19937_64 rng(seed);
  auto fail = [&](std::string why) {
    report.ok = false;
    report.failure = std::move(why);
    return report;
  };
  for (const auto& s : objects) {
    const CovObject x = includeUndecorated(s, f);
    if (!(*forgetDecoration(x) == *s)) return fail("forget(include(S)) != S");
    ++report.objectsChecked;
  }
  for (const auto& s1 : objects)
    for (const auto& s2 : objects) {
      if (s1->group() != s2->group()) continue;
      const CovObject x = includeUndecorated(s1, f), y = includeUndecorated(s2, f);
      const auto table = covPrimeIndexTable(x, y, f);
      if (std::any_of(table.begin(), table.end(), [](Int v) { return v != 1; }))
        return fail("included objects carry a nontrivial index table");
      for (std::size_t t = 0; t < samplesPerPair; ++t) {
        const CovMorphism alpha(s1, s2, randomConstrainedValues(table, rng, 5));
        if (!validateConstrained(alpha.values(), table)) return fail("included morphism violates its constraints");
        // forget is the identity on the underlying invariant function
        const CovMorphism round(forgetDecoration(x), forgetDecoration(y), alpha.values());
        if (!(round == alpha)) return fail("include-then-forget changed a morphism");
        ++report.morphismsChecked;
      }
      if (s1 == s2) {
        const CovMorphism id = CovMorphism::identity(s1);
        if (!validateConstrained(id.values(), table)) return fail("identity is not admissible");
      }
    }
  report.ok = true;
  return report;
}

}  // namespace motivekit
