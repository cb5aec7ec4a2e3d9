#pragma once

// Graded-commutative cohomology rings with nilpotent even-degree generators,
// given by power relations that rewrite downwards, plus an integration table
// on top-degree monomials. Handles H*(base) for CP^n and abstract curves and
// H*(P(L+1)) via the rank-two relation h^2 = -h c1(L).
//
// Scalars are generic so the same machinery runs over Q and over Q(zeta_d).

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "coverdet/rational.hpp"

namespace coverdet {

using Monomial = std::vector<int>;  // exponent per generator

inline int monomial_degree(const Monomial& m, const std::vector<int>& gen_degrees) {
  int d = 0;
  for (size_t i = 0; i < m.size(); ++i) d += m[i] * gen_degrees[i];
  return d;
}

template <class K>
struct RingPresentation : public std::enable_shared_from_this<RingPresentation<K>> {
  struct Generator {
    std::string name;
    int degree;
  };
  struct Relation {
    int gen;
    int power;                     // gen^power rewrites to `repl`
    std::map<Monomial, K> repl;   // empty map = zero
  };

  std::string name;
  std::vector<Generator> gens;
  std::vector<Relation> relations;
  int top_degree = 0;
  std::map<Monomial, K> integration_table;        // reduced top-degree monomials
  std::vector<std::map<Monomial, K>> tangent_raw;  // c1 of tangent line factors

  std::shared_ptr<const RingPresentation> base;  // set for total spaces
  int fiber_gen = -1;                            // index of h for total spaces

  std::vector<int> gen_degrees() const {
    std::vector<int> d;
    for (const auto& g : gens) d.push_back(g.degree);
    return d;
  }
  int degree(const Monomial& m) const { return monomial_degree(m, gen_degrees()); }
};

template <class K>
using PresPtr = std::shared_ptr<const RingPresentation<K>>;

// normalize a raw monomial->coefficient map against the relations
template <class K>
std::map<Monomial, K> reduce_terms(const RingPresentation<K>& pres, std::map<Monomial, K> work) {
  std::map<Monomial, K> out;
  auto degs = pres.gen_degrees();
  long guard = 0;
  while (!work.empty()) {
    if (++guard > 2000000) throw std::runtime_error("rewriting did not terminate");
    auto it = work.begin();
    Monomial m = it->first;
    K coef = it->second;
    work.erase(it);
    if (coef == K(0)) continue;
    if (monomial_degree(m, degs) > pres.top_degree) continue;  // vanishes in cohomology
    const typename RingPresentation<K>::Relation* hit = nullptr;
    for (const auto& r : pres.relations)
      if (m[r.gen] >= r.power) {
        hit = &r;
        break;
      }
    if (!hit) {
      auto [pos, inserted] = out.try_emplace(m, coef);
      if (!inserted) {
        pos->second += coef;
        if (pos->second == K(0)) out.erase(pos);
      }
      continue;
    }
    Monomial rest = m;
    rest[hit->gen] -= hit->power;
    for (const auto& [rm, rk] : hit->repl) {
      Monomial prod = rest;
      for (size_t i = 0; i < prod.size(); ++i) prod[i] += rm[i];
      K v = coef * rk;
      auto [pos, inserted] = work.try_emplace(prod, v);
      if (!inserted) pos->second += v;
    }
  }
  return out;
}

template <class K>
class GradedClass {
 public:
  GradedClass() = default;
  explicit GradedClass(PresPtr<K> ring) : ring_(std::move(ring)) {}
  GradedClass(PresPtr<K> ring, std::map<Monomial, K> terms) : ring_(std::move(ring)) {
    c_ = reduce_terms(*ring_, std::move(terms));
  }

  static GradedClass scalar(PresPtr<K> ring, K v) {
    std::map<Monomial, K> t;
    if (!(v == K(0))) t[Monomial(ring->gens.size(), 0)] = std::move(v);
    return GradedClass(ring, std::move(t));
  }
  static GradedClass one(PresPtr<K> ring) { return scalar(ring, K(1)); }
  static GradedClass generator(PresPtr<K> ring, int idx, K coef = K(1)) {
    Monomial m(ring->gens.size(), 0);
    m[idx] = 1;
    std::map<Monomial, K> t;
    t[m] = std::move(coef);
    return GradedClass(ring, std::move(t));
  }

  const PresPtr<K>& ring() const { return ring_; }
  const std::map<Monomial, K>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  K coeff(const Monomial& m) const {
    auto it = c_.find(m);
    return it == c_.end() ? K(0) : it->second;
  }

  bool pure_degree(int p) const {
    for (const auto& [m, k] : c_)
      if (ring_->degree(m) != p) return false;
    return !c_.empty() || p == 0;
  }

  GradedClass operator+(const GradedClass& o) const {
    check(o);
    std::map<Monomial, K> t = c_;
    for (const auto& [m, k] : o.c_) {
      auto [pos, inserted] = t.try_emplace(m, k);
      if (!inserted) pos->second += k;
    }
    return GradedClass(ring_, std::move(t));
  }
  GradedClass operator-(const GradedClass& o) const { return *this + (-o); }
  GradedClass operator-() const {
    GradedClass r;
    r.ring_ = ring_;
    for (const auto& [m, k] : c_) r.c_[m] = -k;
    return r;
  }
  GradedClass operator*(const GradedClass& o) const {
    check(o);
    std::map<Monomial, K> t;
    for (const auto& [m1, k1] : c_)
      for (const auto& [m2, k2] : o.c_) {
        Monomial m = m1;
        for (size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
        K v = k1 * k2;
        auto [pos, inserted] = t.try_emplace(m, v);
        if (!inserted) pos->second += v;
      }
    return GradedClass(ring_, std::move(t));
  }
  GradedClass operator*(const K& k) const {
    std::map<Monomial, K> t;
    for (const auto& [m, c] : c_) t[m] = c * k;
    return GradedClass(ring_, std::move(t));
  }
  bool operator==(const GradedClass& o) const { return c_ == o.c_; }
  bool operator!=(const GradedClass& o) const { return !(*this == o); }

  GradedClass degree_part(int p) const {
    GradedClass r;
    r.ring_ = ring_;
    for (const auto& [m, k] : c_)
      if (ring_->degree(m) == p) r.c_[m] = k;
    return r;
  }

  GradedClass pow(int n) const {
    GradedClass r = one(ring_);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  K integrate() const {
    K acc(0);
    for (const auto& [m, k] : c_) {
      auto it = ring_->integration_table.find(m);
      if (it != ring_->integration_table.end()) acc += k * it->second;
    }
    return acc;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [m, k] : c_) {
      if (!s.empty()) s += " + ";
      s += "(" + to_string(k) + ")";
      for (size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) {
          s += "*" + ring_->gens[i].name;
          if (m[i] > 1) s += "^" + std::to_string(m[i]);
        }
    }
    return s;
  }

 private:
  void check(const GradedClass& o) const {
    if (ring_.get() != o.ring_.get()) throw std::invalid_argument("mixed ring presentations");
  }
  PresPtr<K> ring_;
  std::map<Monomial, K> c_;
};

// --- constructors -----------------------------------------------------------

template <class K>
PresPtr<K> make_projective_space(int n) {
  if (n < 0) throw std::invalid_argument("make_projective_space: n >= 0");
  auto p = std::make_shared<RingPresentation<K>>();
  p->name = "CP" + std::to_string(n);
  p->gens.push_back({"a", 1});
  p->relations.push_back({0, n + 1, {}});
  p->top_degree = n;
  p->integration_table[Monomial{n}] = K(1);
  // Euler sequence: T = O(1)^{n+1} - O
  std::map<Monomial, K> a;
  a[Monomial{1}] = K(1);
  for (int i = 0; i <= n; ++i) p->tangent_raw.push_back(a);
  return p;
}

template <class K>
PresPtr<K> make_curve(int genus) {
  auto p = std::make_shared<RingPresentation<K>>();
  p->name = "curve_g" + std::to_string(genus);
  p->gens.push_back({"p", 1});
  p->relations.push_back({0, 2, {}});
  p->top_degree = 1;
  p->integration_table[Monomial{1}] = K(1);
  std::map<Monomial, K> t;
  if (genus != 1) t[Monomial{1}] = K(2 - 2 * genus);
  p->tangent_raw.push_back(t);
  return p;
}

template <class K>
PresPtr<K> make_total_space(PresPtr<K> base, const GradedClass<K>& c1L) {
  if (c1L.ring().get() != base.get()) throw std::invalid_argument("c1L not a class on the base");
  if (!c1L.is_zero() && !c1L.pure_degree(1)) throw std::invalid_argument("c1L must have pure degree 1");
  auto p = std::make_shared<RingPresentation<K>>();
  p->name = base->name + "|P(L+1)";
  p->gens = base->gens;
  int h = static_cast<int>(p->gens.size());
  p->gens.push_back({"h", 1});
  auto pad = [&](const Monomial& m) {
    Monomial r = m;
    r.push_back(0);
    return r;
  };
  for (const auto& r : base->relations) {
    typename RingPresentation<K>::Relation nr;
    nr.gen = r.gen;
    nr.power = r.power;
    for (const auto& [m, k] : r.repl) nr.repl[pad(m)] = k;
    p->relations.push_back(std::move(nr));
  }
  // Grothendieck relation for P(L+1): h^2 = -h c1(L)
  typename RingPresentation<K>::Relation hr;
  hr.gen = h;
  hr.power = 2;
  for (const auto& [m, k] : c1L.terms()) {
    Monomial mm = pad(m);
    mm[h] += 1;
    hr.repl[mm] = -k;
  }
  p->relations.push_back(std::move(hr));
  p->top_degree = base->top_degree + 1;
  for (const auto& [m, v] : base->integration_table) {
    Monomial mm = pad(m);
    mm[h] = 1;
    p->integration_table[mm] = v;
  }
  for (const auto& t : base->tangent_raw) {
    std::map<Monomial, K> tt;
    for (const auto& [m, k] : t) tt[pad(m)] = k;
    p->tangent_raw.push_back(std::move(tt));
  }
  // relative tangent from 0 -> O -> (pi*L + O)(1) -> TY -> 0
  std::map<Monomial, K> l1, l2;
  for (const auto& [m, k] : c1L.terms()) l1[pad(m)] = k;
  Monomial hm(p->gens.size(), 0);
  hm[h] = 1;
  auto [it1, ins1] = l1.try_emplace(hm, K(1));
  if (!ins1) it1->second += K(1);
  l2[hm] = K(1);
  p->tangent_raw.push_back(std::move(l1));
  p->tangent_raw.push_back(std::move(l2));
  p->base = base;
  p->fiber_gen = h;
  return p;
}

template <class K>
std::vector<GradedClass<K>> tangent_lines(const PresPtr<K>& pres) {
  std::vector<GradedClass<K>> out;
  for (const auto& t : pres->tangent_raw) out.emplace_back(pres, std::map<Monomial, K>(t));
  return out;
}

// pullback of a base class along pi: V -> S
template <class K>
GradedClass<K> pullback_to_total(const PresPtr<K>& V, const GradedClass<K>& base_class) {
  std::map<Monomial, K> t;
  for (const auto& [m, c] : base_class.terms()) {
    Monomial mm = m;
    mm.push_back(0);
    t[mm] = c;
  }
  return GradedClass<K>(V, std::move(t));
}

// fiber integration: coefficient of h^1, as a class on the base
template <class K>
GradedClass<K> pushforward_fiber(const GradedClass<K>& x) {
  const auto& pres = x.ring();
  if (pres->fiber_gen < 0) throw std::invalid_argument("pushforward_fiber: not a total space");
  int h = pres->fiber_gen;
  std::map<Monomial, K> t;
  for (const auto& [m, k] : x.terms()) {
    if (m[h] != 1) continue;  // after reduction exponents are 0 or 1
    Monomial mm(m.begin(), m.end() - 1);
    t[mm] = k;
  }
  return GradedClass<K>(pres->base, std::move(t));
}

// restriction to the zero section S (h |-> 0)
template <class K>
GradedClass<K> restrict_to_zero_section(const GradedClass<K>& x) {
  const auto& pres = x.ring();
  if (pres->fiber_gen < 0) throw std::invalid_argument("not a total space");
  int h = pres->fiber_gen;
  std::map<Monomial, K> t;
  for (const auto& [m, k] : x.terms()) {
    if (m[h] != 0) continue;
    Monomial mm(m.begin(), m.end() - 1);
    t[mm] = k;
  }
  return GradedClass<K>(pres->base, std::move(t));
}

// restriction to the infinity section P(L) (h |-> -c1L)
template <class K>
GradedClass<K> restrict_to_infinity_section(const GradedClass<K>& x, const GradedClass<K>& c1L_base) {
  const auto& pres = x.ring();
  if (pres->fiber_gen < 0) throw std::invalid_argument("not a total space");
  int h = pres->fiber_gen;
  GradedClass<K> acc(pres->base);
  for (const auto& [m, k] : x.terms()) {
    Monomial mm(m.begin(), m.end() - 1);
    GradedClass<K> part(pres->base, std::map<Monomial, K>{{mm, k}});
    acc = acc + part * (-c1L_base).pow(m[h]);
  }
  return acc;
}

template <class K>
K restrict_integrate(const GradedClass<K>& x, const GradedClass<K>& divisor_class) {
  if (!divisor_class.is_zero() && !divisor_class.pure_degree(1))
    throw std::invalid_argument("divisor class must have degree 1");
  return (x * divisor_class).integrate();
}

}  // namespace coverdet
