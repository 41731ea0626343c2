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


#include "motivekit/motives.hpp"

#include <algorithm>
#include <set>

#include "motivekit/errors.hpp"

namespace motivekit {

// ---------------------------------------------------------------------------
// CsaMotive

CsaMotive::CsaMotive(BrauerModel::Ptr model, std::vector<BrauerClass> classes)
    : model_(std::move(model)), classes_(std::move(classes)) {
  if (!model_) throw PreconditionError("motive without a Brauer model");
  for (const auto& c : classes_)
    if (!sameModel(model_, c.model())) throw ModelMismatch();
  std::sort(classes_.begin(), classes_.end());
}

std::string CsaMotive::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < classes_.size(); ++i) s += (i ? ", " : "") + classes_[i].str();
  return s + "]";
}

namespace {

void requireSameModel(const CsaMotive& m, const CsaMotive& n) {
  if (!sameModel(m.model(), n.model())) throw ModelMismatch();
}

}  // namespace

CsaMotive directSum(const CsaMotive& m, const CsaMotive& n) {
  requireSameModel(m, n);
  std::vector<BrauerClass> all = m.classes();
  all.insert(all.end(), n.classes().begin(), n.classes().end());
  return CsaMotive(m.model(), std::move(all));
}

// ---------------------------------------------------------------------------
// Hom-groups and the Lambda order

Int homMultiplier(const BrauerClass& a, const BrauerClass& b) {
  requireSameModel(a, b);
  return index(b - a);
}

bool LambdaOrder::satisfiesInvariants() const {
  const std::size_t n = mu.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (mu[i].size() != n || mu[i][i] != 1) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (mu[i][j] < 1 || mu[i][j] != mu[j][i]) return false;
      for (std::size_t k = 0; k < n; ++k)
        if (checkedMul(mu[i][j], mu[j][k]) % mu[i][k] != 0) return false;
    }
  }
  return true;
}

LambdaOrder lambdaOrder(const std::vector<BrauerClass>& classes) {
  if (classes.empty()) throw PreconditionError("lambdaOrder needs at least one class");
  LambdaOrder order{classes, IntMatrix(classes.size(), std::vector<Int>(classes.size()))};
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j) order.mu[i][j] = homMultiplier(classes[i], classes[j]);
  return order;
}

MorphismMatrix::MorphismMatrix(CsaMotive domain, CsaMotive codomain, IntMatrix entries)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), entries_(std::move(entries)) {
  requireSameModel(domain_, codomain_);
  if (entries_.size() != codomain_.size()) throw PreconditionError("morphism matrix has wrong number of rows");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].size() != domain_.size()) throw PreconditionError("morphism matrix has wrong number of columns");
    for (std::size_t j = 0; j < domain_.size(); ++j) {
      const Int mu = homMultiplier(domain_.classes()[j], codomain_.classes()[i]);
      if (entries_[i][j] % mu != 0)
        throw PreconditionError("morphism entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") is not divisible by " + std::to_string(mu));
    }
  }
}

MorphismMatrix MorphismMatrix::identity(const CsaMotive& m) {
  IntMatrix id(m.size(), std::vector<Int>(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i) id[i][i] = 1;
  return MorphismMatrix(m, m, std::move(id));
}

MorphismMatrix compose(const MorphismMatrix& f, const MorphismMatrix& g) {
  if (!(g.codomain() == f.domain())) throw PreconditionError("compose: codomain of g is not the domain of f");
  const std::size_t rows = f.codomain().size(), inner = f.domain().size(), cols = g.domain().size();
  IntMatrix out(rows, std::vector<Int>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j)
        out[i][j] = checkedAdd(out[i][j], checkedMul(f.entries()[i][k], g.entries()[k][j]));
  return MorphismMatrix(g.domain(), f.codomain(), std::move(out));
}

// ---------------------------------------------------------------------------
// Isomorphism decision

std::vector<Int> relevantPrimes(const CsaMotive& m, const CsaMotive& n) {
  std::set<Int> primes;
  for (const auto* motive : {&m, &n})
    for (const auto& c : motive->classes())
      for (Int p : primeDivisors(period(c))) primes.insert(p);
  return {primes.begin(), primes.end()};
}

namespace {

std::vector<BrauerClass> pParts(const CsaMotive& m, Int p) {
  std::vector<BrauerClass> out;
  out.reserve(m.size());
  for (const auto& c : m.classes()) out.push_back(pPrimaryPart(c, p));
  return out;
}

/// Lexicographically smallest sigma with target[i] == source[sigma(i)], if any.
std::optional<std::vector<std::size_t>> matchMultisets(const std::vector<BrauerClass>& source,
                                                       const std::vector<BrauerClass>& target) {
  if (source.size() != target.size()) return std::nullopt;
  std::vector<bool> used(source.size(), false);
  std::vector<std::size_t> sigma(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) {
    std::size_t j = 0;
    while (j < source.size() && (used[j] || !(source[j] == target[i]))) ++j;
    if (j == source.size()) return std::nullopt;
    used[j] = true;
    sigma[i] = j;
  }
  return sigma;
}

}  // namespace

IsoDecision isIsomorphic(const CsaMotive& m, const CsaMotive& n) {
  requireSameModel(m, n);
  IsoDecision decision;
  if (m.size() != n.size()) return decision;
  for (Int p : relevantPrimes(m, n)) {
    auto sigma = matchMultisets(pParts(m, p), pParts(n, p));
    if (!sigma) {
      decision.witness.clear();
      return decision;
    }
    decision.witness.emplace(p, std::move(*sigma));
  }
  decision.isomorphic = true;
  return decision;
}

bool pLocalIso(const CsaMotive& m, const CsaMotive& n, Int p) {
  requireSameModel(m, n);
  if (!isPrime(p)) throw PreconditionError("pLocalIso: " + std::to_string(p) + " is not prime");
  if (m.size() != n.size()) return false;
  auto a = pParts(m, p), b = pParts(n, p);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// ---------------------------------------------------------------------------
// Brute-force oracle

namespace {

Int determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Int det = 0;
  IntMatrix minor(n - 1, std::vector<Int>(n - 1));
  for (std::size_t col = 0; col < n; ++col) {
    if (a[0][col] == 0) continue;
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != col) minor[i - 1][k++] = a[i][j];
    const Int term = checkedMul(a[0][col], determinant(minor));
    det = (col % 2 == 0) ? checkedAdd(det, term) : checkedSub(det, term);
  }
  return det;
}

/// Cofactor (row, col) of a square matrix.
Int cofactor(const IntMatrix& a, std::size_t row, std::size_t col) {
  const std::size_t n = a.size();
  IntMatrix minor(n - 1, std::vector<Int>(n - 1));
  for (std::size_t i = 0, r = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, c = 0; j < n; ++j)
      if (j != col) minor[r][c++] = a[i][j];
    ++r;
  }
  const Int d = determinant(minor);
  return ((row + col) % 2 == 0) ? d : checkedSub(0, d);
}

/// Incremental row-echelon basis over F_p.
class ResidueBasis {
 public:
  ResidueBasis(Int p, std::size_t width) : p_(p), width_(width) {}

  /// Adds v if it is independent of the basis; returns false otherwise.
  bool tryAdd(std::vector<Int> v) {
    for (auto& x : v) x = mod(x, p_);
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      const Int f = v[pivot];
      for (std::size_t j = 0; j < width_; ++j) v[j] = mod(v[j] - f * row[j], p_);
    }
    for (std::size_t j = 0; j < width_; ++j) {
      if (v[j] == 0) continue;
      const Int inv = modInverse(v[j], p_);
      for (auto& x : v) x = mod(x * inv, p_);
      rows_.emplace_back(j, std::move(v));
      return true;
    }
    return false;
  }
  void pop() { rows_.pop_back(); }

 private:
  Int p_;
  std::size_t width_;
  std::vector<std::pair<std::size_t, std::vector<Int>>> rows_;
};

/// Whether some matrix over F_p, zero wherever p divides mu, is invertible.
/// Exhaustive over residue rows with independence pruning.
bool residueFeasible(const IntMatrix& mu, Int p) {
  const std::size_t n = mu.size();
  ResidueBasis basis(p, n);
  std::vector<Int> row(n);
  auto rec = [&](auto&& self, std::size_t r) -> bool {
    if (r == n) return true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n; ++j)
      if (mu[r][j] % p != 0) free.push_back(j);
    std::vector<Int> v(n, 0);
    // iterate all residue vectors on the free support
    std::vector<Int> digits(free.size(), 0);
    while (true) {
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
      if (k == digits.size()) break;  // wrapped back to all-zero
      for (std::size_t t = 0; t < free.size(); ++t) v[free[t]] = digits[t];
      if (basis.tryAdd(v)) {
        if (self(self, r + 1)) return true;
        basis.pop();
      }
    }
    return false;
  };
  return rec(rec, 0);
}

class WitnessSearch {
 public:
  WitnessSearch(IntMatrix mu_f, IntMatrix mu_g, std::vector<Int> primes, const Caps& caps)
      : mu_f_(std::move(mu_f)), mu_g_(std::move(mu_g)), primes_(std::move(primes)), caps_(caps),
        n_(mu_f_.size()), f_(n_, std::vector<Int>(n_, 0)) {}

  bool run(Int limit) {
    limit_ = limit;
    for (Int p : primes_) bases_.emplace_back(p, n_);
    const bool ok = fillRow(0);
    bases_.clear();
    return ok;
  }

  std::uint64_t nodes() const { return nodes_; }
  const IntMatrix& forward() const { return f_; }
  const IntMatrix& backward() const { return g_; }

 private:
  void tick() {
    if (++nodes_ > caps_.search) throw CapExceeded("bruteForceIso search nodes", caps_.search);
  }

  /// Values 0, mu, -mu, 2mu, -2mu, ... within the limit.
  std::vector<Int> candidates(Int mu) const {
    std::vector<Int> out{0};
    for (Int v = mu; v <= limit_; v += mu) {
      out.push_back(v);
      out.push_back(-v);
    }
    return out;
  }

  bool fillRow(std::size_t r) {
    if (r + 1 == n_) return fillLastRow();
    return fillEntry(r, 0);
  }

  bool fillEntry(std::size_t r, std::size_t c) {
    if (c == n_) {
      std::size_t added = 0;
      bool independent = true;
      for (auto& basis : bases_) {
        if (!basis.tryAdd(f_[r])) {
          independent = false;
          break;
        }
        ++added;
      }
      bool ok = independent && fillRow(r + 1);
      for (std::size_t k = 0; k < added; ++k) bases_[k].pop();
      return ok;
    }
    for (Int v : candidates(mu_f_[r][c])) {
      tick();
      f_[r][c] = v;
      if (fillEntry(r, c + 1)) return true;
    }
    f_[r][c] = 0;
    return false;
  }

  bool fillLastRow() {
    const std::size_t r = n_ - 1;
    std::vector<Int> cof(n_);
    Int reach = 0;  // gcd of mu_j * C_j must be 1 for det = +-1
    for (std::size_t j = 0; j < n_; ++j) {
      cof[j] = n_ == 1 ? 1 : cofactor(f_, r, j);
      reach = gcd(reach, checkedMul(mu_f_[r][j], cof[j]));
    }
    if (reach != 1) return false;
    return fillLastEntry(0, 0, cof);
  }

  bool fillLastEntry(std::size_t c, Int partial, const std::vector<Int>& cof) {
    const std::size_t r = n_ - 1;
    if (c + 1 == n_) {
      const Int mu = mu_f_[r][c];
      const Int weight = checkedMul(mu, cof[c]);
      if (weight == 0) {
        if (partial != 1 && partial != -1) return false;
        for (Int v : candidates(mu)) {
          tick();
          f_[r][c] = v;
          if (accept()) return true;
        }
        return false;
      }
      for (Int target : {Int{1}, Int{-1}}) {
        tick();
        const Int diff = checkedSub(target, partial);
        if (diff % weight != 0) continue;
        const Int v = checkedMul(diff / weight, mu);
        if (v > limit_ || v < -limit_) continue;
        f_[r][c] = v;
        if (accept()) return true;
      }
      return false;
    }
    for (Int v : candidates(mu_f_[r][c])) {
      tick();
      f_[r][c] = v;
      if (fillLastEntry(c + 1, checkedAdd(partial, checkedMul(v, cof[c])), cof)) return true;
    }
    f_[r][c] = 0;
    return false;
  }

  /// F has determinant +-1; check that its inverse respects the constraints.
  bool accept() {
    const Int det = determinant(f_);
    if (det != 1 && det != -1) return false;
    IntMatrix g(n_, std::vector<Int>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        // inverse = adj / det, adj(i, j) = cofactor(j, i); 1x1 adjugate is [1]
        const Int adj = n_ == 1 ? 1 : cofactor(f_, j, i);
        g[i][j] = checkedMul(adj, det);
        if (g[i][j] % mu_g_[i][j] != 0) return false;
      }
    g_ = std::move(g);
    return true;
  }

  IntMatrix mu_f_, mu_g_;
  std::vector<Int> primes_;
  const Caps& caps_;
  std::size_t n_;
  Int limit_ = 0;
  IntMatrix f_, g_;
  std::vector<ResidueBasis> bases_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

BruteForceResult bruteForceIso(const CsaMotive& m, const CsaMotive& n, Int bound, const Caps& caps) {
  requireSameModel(m, n);
  if (bound < 1) throw PreconditionError("bruteForceIso: bound must be positive");
  BruteForceResult result;
  const std::size_t size = m.size();
  if (size != n.size()) {
    result.provedAbsent = true;  // unimodular matrices are square
    return result;
  }
  if (size == 0) {
    result.found = true;
    result.forward = IntMatrix{};
    result.backward = IntMatrix{};
    return result;
  }
  // F : M -> N is |N| x |M|, G : N -> M is |M| x |N|
  IntMatrix mu_f(size, std::vector<Int>(size)), mu_g(size, std::vector<Int>(size));
  std::set<Int> primes;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      mu_f[i][j] = homMultiplier(m.classes()[j], n.classes()[i]);
      mu_g[j][i] = homMultiplier(n.classes()[i], m.classes()[j]);
      for (Int p : primeDivisors(mu_f[i][j])) primes.insert(p);
      for (Int p : primeDivisors(mu_g[j][i])) primes.insert(p);
    }
  for (Int p : primes) {
    if (!residueFeasible(mu_f, p) || !residueFeasible(mu_g, p)) {
      result.provedAbsent = true;
      return result;
    }
  }
  WitnessSearch search(mu_f, mu_g, {primes.begin(), primes.end()}, caps);
  for (Int limit = 1; limit <= bound; ++limit) {
    if (search.run(limit)) {
      result.found = true;
      result.forward = search.forward();
      result.backward = search.backward();
      break;
    }
  }
  result.nodes = search.nodes();
  return result;
}

// ---------------------------------------------------------------------------
// Summands, tensor products, relations

std::vector<BrauerClass> summandClasses(const CsaMotive& m, const Caps& caps) {
  if (m.empty()) throw PreconditionError("summandClasses needs a nonempty motive");
  const auto primes = relevantPrimes(m, m);
  std::vector<std::vector<BrauerClass>> choices;
  std::uint64_t combos = 1;
  for (Int p : primes) {
    auto parts = pParts(m, p);
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    combos *= parts.size();
    if (combos > caps.summands) throw CapExceeded("summand recombinations", caps.summands);
    choices.push_back(std::move(parts));
  }
  std::set<BrauerClass> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  for (std::uint64_t k = 0; k < combos; ++k) {
    BrauerClass b = m.model()->zero();
    for (std::size_t i = 0; i < choices.size(); ++i) b = b + choices[i][pick[i]];
    out.insert(b);
    for (std::size_t i = 0; i < pick.size(); ++i) {
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
    }
  }
  return {out.begin(), out.end()};
}

CsaMotive tensor(const CsaMotive& m, const CsaMotive& n) {
  requireSameModel(m, n);
  std::vector<BrauerClass> out;
  out.reserve(m.size() * n.size());
  for (const auto& a : m.classes())
    for (const auto& b : n.classes()) out.push_back(a + b);
  return CsaMotive(m.model(), std::move(out));
}

CsaMotive motiveFromPolynomial(const BrauerClass& a, const IntPolynomial& p) {
  std::vector<BrauerClass> out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Int c = p.coeffs()[k];
    if (c < 0) throw PreconditionError("motiveFromPolynomial: negative coefficient at t^" + std::to_string(k));
    const BrauerClass cls = multiply(a, static_cast<Int>(k));
    out.insert(out.end(), static_cast<std::size_t>(c), cls);
  }
  return CsaMotive(a.model(), std::move(out));
}

IntPolynomial periodPolynomial(Int per) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (auto [prime, e] : factorize(per)) p = p * geometricSum(static_cast<std::size_t>(ipow(prime, e)));
  return p;
}

bool verifyRelation1(const BrauerClass& a) {
  const IntPolynomial p = periodPolynomial(period(a));
  return isIsomorphic(motiveFromPolynomial(a, p), motiveFromPolynomial(a, p.shift(1))).isomorphic;
}

bool verifyRelation2(const BrauerClass& a, const BrauerClass& b, const BrauerClass& c) {
  motivekit::requireSameModel(a, b);
  motivekit::requireSameModel(a, c);
  if (gcd(index(a), index(b)) != 1) throw PreconditionError("verifyRelation2: indices of a and b are not coprime");
  const CsaMotive lhs(a.model(), {c, a + b + c});
  const CsaMotive rhs(a.model(), {a + c, b + c});
  return isIsomorphic(lhs, rhs).isomorphic;
}

// ---------------------------------------------------------------------------
// Sigma ring

Int SigmaRing::multiplier(const BrauerClass& h) const {
  auto it = std::lower_bound(subgroup.begin(), subgroup.end(), h);
  if (it == subgroup.end() || !(*it == h)) throw PreconditionError("class " + h.str() + " is outside the subgroup");
  return multipliers[static_cast<std::size_t>(it - subgroup.begin())];
}

SigmaRing sigmaRing(const BrauerModel::Ptr& model, const std::vector<BrauerClass>& generators, const Caps& caps) {
  SigmaRing ring;
  ring.subgroup = subgroupGenerated(model, generators, caps);
  for (const auto& h : ring.subgroup) ring.multipliers.push_back(index(h));
  if (ring.multiplier(model->zero()) != 1) throw PreconditionError("sigmaRing: zero class has index != 1");
  for (std::size_t i = 0; i < ring.subgroup.size(); ++i)
    for (std::size_t j = i; j < ring.subgroup.size(); ++j) {
      const Int s = ring.multiplier(ring.subgroup[i] + ring.subgroup[j]);
      if (checkedMul(ring.multipliers[i], ring.multipliers[j]) % s != 0)
        throw PreconditionError("sigmaRing: multipliers are not closed under multiplication");
    }
  return ring;
}

}  // namespace motivekit
