#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "symtrop/rational.hpp"

namespace symtrop {

// Dense univariate polynomial over a field F (Rat or QSqrt<R>).
// Coefficients are stored low-to-high; the top coefficient is nonzero.
template <class F>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(F v) { return UniPoly(std::vector<F>{std::move(v)}); }
  static UniPoly x() { return UniPoly(std::vector<F>{F(0), F(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const F& coeff(int k) const {
    static const F zero = F(0);
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : zero;
  }
  const F& leading() const {
    if (is_zero()) throw std::domain_error("leading coeff of zero polynomial");
    return c_.back();
  }
  const std::vector<F>& coeffs() const { return c_; }

  friend UniPoly operator+(const UniPoly& p, const UniPoly& q) {
    std::vector<F> r(std::max(p.c_.size(), q.c_.size()), F(0));
    for (size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& p, const UniPoly& q) {
    std::vector<F> r(std::max(p.c_.size(), q.c_.size()), F(0));
    for (size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) r[i] -= q.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) return UniPoly();
    std::vector<F> r(p.c_.size() + q.c_.size() - 1, F(0));
    for (size_t i = 0; i < p.c_.size(); ++i)
      for (size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const F& s, const UniPoly& p) {
    std::vector<F> r = p.c_;
    for (auto& v : r) v = s * v;
    return UniPoly(std::move(r));
  }
  friend bool operator==(const UniPoly& p, const UniPoly& q) {
    return p.c_ == q.c_;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<F> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = F(long(i)) * c_[i];
    return UniPoly(std::move(r));
  }

  F eval(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // Euclidean division: returns (quotient, remainder).
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& d) {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    UniPoly r = p;
    std::vector<F> q(p.c_.size() > d.c_.size() ? p.c_.size() - d.c_.size() + 1 : 1, F(0));
    F inv_lead = F(1) / d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int k = r.degree() - d.degree();
      F coef = r.leading() * inv_lead;
      q[k] = coef;
      std::vector<F> rc = r.c_;
      for (int i = 0; i <= d.degree(); ++i) rc[k + i] -= coef * d.c_[i];
      rc.pop_back();
      r = UniPoly(std::move(rc));
    }
    return {UniPoly(std::move(q)), r};
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return (F(1) / leading()) * *this;
  }

 private:
  std::vector<F> c_;
  void trim() {
    while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
  }
};

template <class F>
UniPoly<F> poly_gcd(UniPoly<F> a, UniPoly<F> b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Yun squarefree decomposition; returns factors a_1, a_2, ... with
// p = lc * prod a_i^i, each a_i squarefree and monic.
template <class F>
std::vector<UniPoly<F>> squarefree_decomposition(const UniPoly<F>& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  std::vector<UniPoly<F>> out;
  if (p.degree() == 0) return out;
  UniPoly<F> pm = p.monic();
  UniPoly<F> g = poly_gcd(pm, pm.derivative());
  UniPoly<F> c = divmod(pm, g).first;
  UniPoly<F> d = divmod(pm.derivative(), g).first - c.derivative();
  while (c.degree() > 0) {
    UniPoly<F> a = poly_gcd(c, d);
    out.push_back(a);
    c = divmod(c, a).first;
    d = divmod(d, a).first - c.derivative();
  }
  return out;
}

template <class F>
UniPoly<F> squarefree_part(const UniPoly<F>& p) {
  UniPoly<F> pm = p.monic();
  if (pm.degree() <= 0) return pm;
  return divmod(pm, poly_gcd(pm, pm.derivative())).first;
}

namespace detail {
inline int count_variations(const std::vector<int>& s) {
  int v = 0, prev = 0;
  for (int x : s) {
    if (x == 0) continue;
    if (prev != 0 && x != prev) ++v;
    prev = x;
  }
  return v;
}
}  // namespace detail

// Number of distinct real roots, by Sturm chain sign variations at -inf/+inf.
template <class F>
int sturm_real_roots(const UniPoly<F>& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  UniPoly<F> f = squarefree_part(p);
  if (f.degree() <= 0) return 0;
  std::vector<UniPoly<F>> chain{f, f.derivative()};
  while (!chain.back().is_zero()) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back((F(-1)) * r);
  }
  chain.pop_back();
  std::vector<int> at_pos, at_neg;
  for (const auto& q : chain) {
    if (q.is_zero()) continue;
    int s = sign(q.leading());
    at_pos.push_back(s);
    at_neg.push_back(q.degree() % 2 == 0 ? s : -s);
  }
  return detail::count_variations(at_neg) - detail::count_variations(at_pos);
}

// True iff p(x) >= 0 for all real x: even degree, positive leading
// coefficient, and every real root of even multiplicity (the product of
// odd-multiplicity squarefree factors has no real root).
template <class F>
bool globally_nonnegative(const UniPoly<F>& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  if (p.degree() == 0) return sign(p.coeff(0)) >= 0;
  if (p.degree() % 2 != 0) return false;
  if (sign(p.leading()) < 0) return false;
  auto factors = squarefree_decomposition(p);
  UniPoly<F> odd = UniPoly<F>::constant(F(1));
  for (size_t i = 0; i < factors.size(); ++i)
    if (i % 2 == 0) odd = odd * factors[i];  // factors[i] has multiplicity i+1
  if (odd.degree() <= 0) return true;
  return sturm_real_roots(odd) == 0;
}

}  // namespace symtrop
