#include "symtrop/symfn.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace symtrop {

SymFn SymFn::p(const Partition& lambda) {
  SymFn f(lambda.size());
  f.coeffs_[lambda] = Rat(1);
  return f;
}

SymFn SymFn::constant(const Rat& c) {
  SymFn f(0);
  if (sign(c) != 0) f.coeffs_[Partition()] = c;
  return f;
}

Rat SymFn::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void SymFn::add_term(const Partition& lambda, const Rat& c) {
  if (lambda.size() != degree_)
    throw std::invalid_argument("term degree mismatch");
  Rat& slot = coeffs_[lambda];
  slot += c;
  if (sign(slot) == 0) coeffs_.erase(lambda);
}

SymFn operator+(const SymFn& f, const SymFn& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.degree_ != g.degree_) throw std::invalid_argument("degree mismatch");
  SymFn out = f;
  for (const auto& [k, c] : g.coeffs_) out.add_term(k, c);
  return out;
}

SymFn operator-(const SymFn& f, const SymFn& g) { return f + Rat(-1) * g; }

SymFn operator*(const Rat& s, const SymFn& f) {
  SymFn out(f.degree_);
  if (sign(s) == 0) return out;
  for (const auto& [k, c] : f.coeffs_) out.coeffs_[k] = s * c;
  return out;
}

SymFn operator*(const SymFn& f, const SymFn& g) {
  SymFn out(f.degree_ + g.degree_);
  for (const auto& [kf, cf] : f.coeffs_)
    for (const auto& [kg, cg] : g.coeffs_) out.add_term(fuse(kf, kg), cf * cg);
  return out;
}

SymFn p_multiply(const SymFn& f, const SymFn& g) { return f * g; }

Rat SymFn::evaluate(const RatVec& x) const {
  std::vector<Rat> power_sums(degree_ + 1, Rat(0));  // power_sums[k] = p_k(x)
  std::vector<Rat> cur(x.size(), Rat(1));
  for (int k = 1; k <= degree_; ++k) {
    Rat s(0);
    for (size_t i = 0; i < x.size(); ++i) {
      cur[i] *= x[i];
      s += cur[i];
    }
    power_sums[k] = s;
  }
  Rat total(0);
  for (const auto& [lambda, c] : coeffs_) {
    Rat term = c;
    for (int part : lambda.parts()) term *= power_sums[part];
    total += term;
  }
  return total;
}

std::string SymFn::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [lambda, c] : coeffs_) {
    Rat abs_c = abs(c);
    if (first) {
      if (sign(c) < 0) out << "-";
      first = false;
    } else {
      out << (sign(c) < 0 ? " - " : " + ");
    }
    if (abs_c != Rat(1)) out << rat_pretty(abs_c) << "*";
    out << "p" << lambda.str();
  }
  return out.str();
}

namespace {

// Transition data between the power-sum and monomial bases in degree d.
struct DegreeTables {
  std::vector<Partition> parts;  // revlex order
  std::map<Partition, int, RevlexGreater> index;
  std::vector<std::vector<Rat>> p_in_m;  // row mu: p_mu = sum R[mu][la] m_la
  std::vector<std::vector<Rat>> m_in_p;  // row la: m_la = sum E[la][mu] p_mu
};

constexpr int kMaxDegree = 12;

uint64_t pack_key(const std::vector<int>& e) {
  uint64_t k = 0;
  for (size_t i = 0; i < e.size(); ++i) k |= uint64_t(e[i]) << (4 * i);
  return k;
}

std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> a) {
  size_t n = a.size();
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && sign(a[piv][col]) == 0) ++piv;
    if (piv == n) throw std::logic_error("singular transition matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || sign(a[r][col]) == 0) continue;
      Rat f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

const DegreeTables& degree_tables(int d) {
  if (d < 1 || d > kMaxDegree)
    throw std::invalid_argument("basis conversion supports degrees 1.." +
                                std::to_string(kMaxDegree));
  static std::map<int, DegreeTables> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;

  DegreeTables t;
  t.parts = enum_partitions(d);
  for (size_t i = 0; i < t.parts.size(); ++i) t.index[t.parts[i]] = int(i);
  size_t n = t.parts.size();

  // Expand each p_mu as a polynomial in d variables and read off the
  // coefficient of the leading monomial of each m_la.
  t.p_in_m.assign(n, std::vector<Rat>(n, Rat(0)));
  for (size_t mi = 0; mi < n; ++mi) {
    std::unordered_map<uint64_t, Rat> poly{{0, Rat(1)}};
    for (int r : t.parts[mi].parts()) {
      std::unordered_map<uint64_t, Rat> next;
      next.reserve(poly.size() * d);
      for (const auto& [key, c] : poly)
        for (int i = 0; i < d; ++i) next[key + (uint64_t(r) << (4 * i))] += c;
      poly = std::move(next);
    }
    for (size_t li = 0; li < n; ++li) {
      std::vector<int> e(d, 0);
      const auto& lp = t.parts[li].parts();
      std::copy(lp.begin(), lp.end(), e.begin());
      auto itp = poly.find(pack_key(e));
      if (itp != poly.end()) t.p_in_m[mi][li] = itp->second;
    }
  }
  t.m_in_p = invert(t.p_in_m);
  return cache.emplace(d, std::move(t)).first->second;
}

}  // namespace

SymFn monomial_to_powersum(const Partition& lambda) {
  if (lambda.size() == 0) return SymFn::constant(Rat(1));
  const auto& t = degree_tables(lambda.size());
  int li = t.index.at(lambda);
  SymFn out(lambda.size());
  for (size_t mi = 0; mi < t.parts.size(); ++mi)
    if (sign(t.m_in_p[li][mi]) != 0) out.add_term(t.parts[mi], t.m_in_p[li][mi]);
  return out;
}

std::map<Partition, Rat, RevlexGreater> powersum_to_monomial(const Partition& lambda) {
  std::map<Partition, Rat, RevlexGreater> out;
  if (lambda.size() == 0) {
    out[Partition()] = 1;
    return out;
  }
  const auto& t = degree_tables(lambda.size());
  int mi = t.index.at(lambda);
  for (size_t li = 0; li < t.parts.size(); ++li)
    if (sign(t.p_in_m[mi][li]) != 0) out[t.parts[li]] = t.p_in_m[mi][li];
  return out;
}

std::vector<SymFn> newton_p_from_e(int d) {
  if (d < 1 || d > 4) throw std::invalid_argument("newton identities cover d in 1..4");
  std::vector<SymFn> p;  // p[k-1] = p_k in e-subscript monomials
  for (int k = 1; k <= d; ++k) {
    SymFn acc(k);
    Rat sk = (k % 2 == 1) ? Rat(k) : Rat(-k);
    acc.add_term(Partition({k}), sk);
    for (int i = 1; i <= k - 1; ++i) {
      SymFn ei(i);
      ei.add_term(Partition({i}), (i % 2 == 1) ? Rat(1) : Rat(-1));
      acc = acc + ei * p[k - i - 1];
    }
    p.push_back(acc);
  }
  return p;
}

std::vector<SymFn> newton_e_from_p(int d) {
  if (d < 1 || d > 4) throw std::invalid_argument("newton identities cover d in 1..4");
  std::vector<SymFn> e;  // e[k-1] = e_k in p-subscript monomials
  for (int k = 1; k <= d; ++k) {
    SymFn acc(k);
    for (int i = 1; i <= k; ++i) {
      SymFn pi(i);
      pi.add_term(Partition({i}), (i % 2 == 1) ? Rat(1) : Rat(-1));
      SymFn tail = (i == k) ? SymFn::constant(Rat(1)) : e[k - i - 1];
      acc = acc + pi * tail;
    }
    e.push_back(Rat(1, k) * acc);
  }
  return e;
}

bool binomial_inequality_holds(const Partition& lambda, const Partition& mu) {
  return superdominates(lambda, mu);
}

std::optional<RatVec> binomial_violation_witness(const Partition& lambda,
                                                const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("size mismatch");
  int d = lambda.size();
  std::vector<Rat> t_grid;
  for (int e = -8; e <= 8; ++e) {
    t_grid.push_back(e >= 0 ? Rat(1L << e) : Rat(1, 1L << (-e)));
  }
  std::vector<int> ones_counts;
  for (int k = 0; k <= 12; ++k) ones_counts.push_back(k);
  ones_counts.push_back(20);
  ones_counts.push_back(40);
  ones_counts.push_back(100);

  auto value = [&](const Partition& part, const std::vector<Rat>& psums) {
    Rat v(1);
    for (int p : part.parts()) v *= psums[p];
    return v;
  };
  for (int j = 0; j <= 6; ++j) {
    for (int k : ones_counts) {
      if (j + k == 0) continue;
      for (const Rat& t : t_grid) {
        std::vector<Rat> psums(d + 1, Rat(0));
        Rat tp(1);
        for (int r = 1; r <= d; ++r) {
          tp *= t;
          psums[r] = Rat(j) * tp + Rat(k);
        }
        if (value(lambda, psums) < value(mu, psums)) {
          RatVec x(j, t);
          x.insert(x.end(), k, Rat(1));
          return x;
        }
      }
    }
  }
  return std::nullopt;
}

FiniteSym finite_symmetrize(const std::vector<int>& alpha, const Partition& lambda,
                            int n, SymGroup group) {
  if (n < 1 || n > 12) throw std::invalid_argument("n out of range");
  if (int(alpha.size()) > n)
    throw std::invalid_argument("monomial support exceeds variable count");
  std::vector<int> padded(n, 0);
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 0) throw std::invalid_argument("negative exponent");
    padded[i] = alpha[i];
  }
  std::vector<int> positive;
  for (int e : padded)
    if (e > 0) positive.push_back(e);
  Partition mono(positive);

  if (group == SymGroup::B) {
    // Sign flips average x^beta to zero unless every exponent is even.
    for (int e : padded)
      if (e % 2 != 0) return {Rat(0), mono, lambda};
  }

  // Orbit average over coordinate permutations: enumerate the distinct
  // arrangements of the exponent vector; each receives equal weight.
  std::sort(padded.begin(), padded.end());
  long arrangements = 0;
  do {
    ++arrangements;
  } while (std::next_permutation(padded.begin(), padded.end()));
  return {Rat(1, arrangements), mono, lambda};
}

}  // namespace symtrop
