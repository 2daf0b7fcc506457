#include "symtrop/cone.hpp"

#include <algorithm>
#include <stdexcept>

namespace symtrop {

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec primitive(const RatVec& v) {
  mpz_class den_lcm(1);
  for (const Rat& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class num_gcd(0);
  std::vector<mpz_class> ints(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (den_lcm / v[i].get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), ints[i].get_mpz_t());
  }
  RatVec out(v.size(), Rat(0));
  if (num_gcd == 0) return out;
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] / num_gcd);
  return out;
}

bool lex_less(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

namespace {

bool is_zero_vec(const RatVec& v) {
  for (const Rat& x : v)
    if (sign(x) != 0) return false;
  return true;
}

// Primitive-normalize, drop zero rows, sort lexicographically, dedupe.
Matrix canonical_rows(const Matrix& rows) {
  Matrix out;
  for (const auto& r : rows) {
    RatVec p = primitive(r);
    if (!is_zero_vec(p)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Like canonical_rows but orientation-free (rows spanning a subspace or
// defining equations): flip so the first nonzero entry is positive.
Matrix canonical_lines(const Matrix& rows) {
  Matrix flipped;
  for (const auto& r : rows) {
    RatVec p = primitive(r);
    if (is_zero_vec(p)) continue;
    for (const Rat& x : p) {
      if (sign(x) != 0) {
        if (sign(x) < 0)
          for (Rat& y : p) y = -y;
        break;
      }
    }
    flipped.push_back(std::move(p));
  }
  std::sort(flipped.begin(), flipped.end(), lex_less);
  flipped.erase(std::unique(flipped.begin(), flipped.end()), flipped.end());
  return flipped;
}

// Reduced row echelon form; returns rows with pivot entries 1.
Matrix rref(Matrix rows) {
  Matrix out;
  size_t dim = rows.empty() ? 0 : rows[0].size();
  size_t r = 0;
  for (size_t col = 0; col < dim && r < rows.size(); ++col) {
    size_t piv = r;
    while (piv < rows.size() && sign(rows[piv][col]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    Rat d = rows[r][col];
    for (Rat& x : rows[r]) x /= d;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sign(rows[i][col]) == 0) continue;
      Rat f = rows[i][col];
      for (size_t j = 0; j < dim; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

struct VRep {
  Matrix rays;
  Matrix lineality;
};

// Double description: V-representation of {x : ineqs*x >= 0, eqs*x = 0}.
// Deterministic: constraints are canonicalized and inserted in lex order.
VRep dd_v_from_h(int dim, const Matrix& ineqs_in, const Matrix& eqs_in) {
  Matrix eqs = canonical_lines(eqs_in);
  Matrix ineqs = canonical_rows(ineqs_in);

  Matrix lineality(dim);
  for (int i = 0; i < dim; ++i) {
    lineality[i] = RatVec(dim, Rat(0));
    lineality[i][i] = 1;
  }
  Matrix rays;
  std::vector<std::vector<bool>> tight;  // per ray, over ineq indices
  size_t m = ineqs.size();

  auto process = [&](const RatVec& a, bool is_eq, size_t ineq_idx) {
    // If some lineality vector is off the hyperplane, use it as the pivot.
    size_t piv = lineality.size();
    for (size_t i = 0; i < lineality.size(); ++i) {
      if (sign(dot(a, lineality[i])) != 0) {
        piv = i;
        break;
      }
    }
    if (piv != lineality.size()) {
      RatVec l0 = lineality[piv];
      Rat v0 = dot(a, l0);
      lineality.erase(lineality.begin() + piv);
      for (auto& l : lineality) {
        Rat f = dot(a, l) / v0;
        for (int j = 0; j < dim; ++j) l[j] -= f * l0[j];
        l = primitive(l);
      }
      for (auto& r : rays) {
        Rat f = dot(a, r) / v0;
        for (int j = 0; j < dim; ++j) r[j] -= f * l0[j];
        r = primitive(r);
      }
      if (!is_eq) {
        for (auto& t : tight) t[ineq_idx] = true;
        RatVec r0 = l0;
        if (sign(v0) < 0)
          for (Rat& x : r0) x = -x;
        rays.push_back(primitive(r0));
        tight.emplace_back(m, false);
        for (size_t j = 0; j < ineq_idx; ++j) tight.back()[j] = true;
      }
      return;
    }

    std::vector<size_t> pos, zero, neg;
    std::vector<Rat> val(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i]);
      int s = sign(val[i]);
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(i);
    }
    auto adjacent = [&](size_t p, size_t n) {
      std::vector<bool> common(m, false);
      for (size_t j = 0; j < m; ++j) common[j] = tight[p][j] && tight[n][j];
      for (size_t r = 0; r < rays.size(); ++r) {
        if (r == p || r == n) continue;
        bool contains = true;
        for (size_t j = 0; j < m && contains; ++j)
          if (common[j] && !tight[r][j]) contains = false;
        if (contains) return false;
      }
      return true;
    };

    Matrix new_rays;
    std::vector<std::vector<bool>> new_tight;
    auto keep = [&](size_t i, bool tight_now) {
      new_rays.push_back(rays[i]);
      new_tight.push_back(tight[i]);
      if (!is_eq) new_tight.back()[ineq_idx] = tight_now;
    };
    if (!is_eq)
      for (size_t i : pos) keep(i, false);
    for (size_t i : zero) keep(i, true);
    for (size_t p : pos) {
      for (size_t n : neg) {
        if (!adjacent(p, n)) continue;
        RatVec w(dim);
        for (int j = 0; j < dim; ++j) w[j] = val[p] * rays[n][j] - val[n] * rays[p][j];
        new_rays.push_back(primitive(w));
        std::vector<bool> t(m, false);
        for (size_t j = 0; j < m; ++j) t[j] = tight[p][j] && tight[n][j];
        if (!is_eq) t[ineq_idx] = true;
        new_tight.push_back(std::move(t));
      }
    }
    rays = std::move(new_rays);
    tight = std::move(new_tight);
  };

  for (const auto& e : eqs) process(e, true, 0);
  for (size_t i = 0; i < ineqs.size(); ++i) process(ineqs[i], false, i);

  VRep out;
  Matrix lin_rref = rref(lineality);
  out.lineality = canonical_lines(lin_rref);
  // Pivot columns of the lineality rref, for reducing rays mod lineality.
  std::vector<size_t> pivots;
  for (const auto& row : lin_rref) {
    for (size_t j = 0; j < row.size(); ++j)
      if (sign(row[j]) != 0) {
        pivots.push_back(j);
        break;
      }
  }
  Matrix reduced;
  for (auto r : rays) {
    for (size_t k = 0; k < lin_rref.size(); ++k) {
      Rat f = r[pivots[k]];
      if (sign(f) == 0) continue;
      for (int j = 0; j < dim; ++j) r[j] -= f * lin_rref[k][j];
    }
    reduced.push_back(std::move(r));
  }
  out.rays = canonical_rows(reduced);
  return out;
}

// H-representation of cone(rays) + span(lineality), via duality.
std::pair<Matrix, Matrix> dd_h_from_v(int dim, const Matrix& rays, const Matrix& lineality) {
  VRep dual_v = dd_v_from_h(dim, rays, lineality);
  return {dual_v.rays, dual_v.lineality};
}

}  // namespace

Cone Cone::from_inequalities(int dim, Matrix ineqs, Matrix eqs) {
  for (const auto& r : ineqs)
    if (int(r.size()) != dim) throw std::invalid_argument("row dimension mismatch");
  for (const auto& r : eqs)
    if (int(r.size()) != dim) throw std::invalid_argument("row dimension mismatch");
  Cone c;
  c.dim_ = dim;
  c.h_input_ = {canonical_rows(ineqs), canonical_lines(eqs)};
  return c;
}

Cone Cone::from_rays(int dim, Matrix rays, Matrix lineality) {
  for (const auto& r : rays)
    if (int(r.size()) != dim) throw std::invalid_argument("ray dimension mismatch");
  for (const auto& r : lineality)
    if (int(r.size()) != dim) throw std::invalid_argument("ray dimension mismatch");
  Cone c;
  c.dim_ = dim;
  c.v_input_ = {canonical_rows(rays), canonical_lines(lineality)};
  return c;
}

void Cone::ensure_v() const {
  if (v_canon_) return;
  if (h_input_) {
    VRep v = dd_v_from_h(dim_, h_input_->first, h_input_->second);
    v_canon_ = {v.rays, v.lineality};
  } else {
    // Round-trip through the dual to canonicalize a V-input.
    ensure_h();
    VRep v = dd_v_from_h(dim_, h_canon_->first, h_canon_->second);
    v_canon_ = {v.rays, v.lineality};
  }
}

void Cone::ensure_h() const {
  if (h_canon_) return;
  if (v_input_) {
    h_canon_ = dd_h_from_v(dim_, v_input_->first, v_input_->second);
  } else {
    ensure_v();
    h_canon_ = dd_h_from_v(dim_, v_canon_->first, v_canon_->second);
  }
}

const Matrix& Cone::inequalities() const {
  ensure_v();
  if (!h_canon_) h_canon_ = dd_h_from_v(dim_, v_canon_->first, v_canon_->second);
  return h_canon_->first;
}

const Matrix& Cone::equations() const {
  inequalities();
  return h_canon_->second;
}

const Matrix& Cone::rays() const {
  ensure_v();
  return v_canon_->first;
}

const Matrix& Cone::lineality() const {
  ensure_v();
  return v_canon_->second;
}

const std::pair<Matrix, Matrix>& Cone::any_h() const {
  if (h_input_) return *h_input_;
  ensure_h();
  return *h_canon_;
}

bool Cone::contains_point(const RatVec& x) const {
  if (int(x.size()) != dim_) throw std::invalid_argument("point dimension mismatch");
  const auto& [ineqs, eqs] = any_h();
  for (const auto& e : eqs)
    if (sign(dot(e, x)) != 0) return false;
  for (const auto& a : ineqs)
    if (sign(dot(a, x)) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("dimension mismatch");
  const std::pair<Matrix, Matrix>* v = nullptr;
  if (other.v_input_) {
    v = &*other.v_input_;
  } else {
    other.ensure_v();
    v = &*other.v_canon_;
  }
  for (const auto& r : v->first)
    if (!contains_point(r)) return false;
  for (auto l : v->second) {
    if (!contains_point(l)) return false;
    for (Rat& x : l) x = -x;
    if (!contains_point(l)) return false;
  }
  return true;
}

Cone dual(const Cone& c) {
  return Cone::from_rays(c.dim(), c.inequalities(), c.equations());
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  Matrix ineqs = a.inequalities();
  Matrix eqs = a.equations();
  const Matrix& bi = b.inequalities();
  const Matrix& be = b.equations();
  ineqs.insert(ineqs.end(), bi.begin(), bi.end());
  eqs.insert(eqs.end(), be.begin(), be.end());
  return Cone::from_inequalities(a.dim(), std::move(ineqs), std::move(eqs));
}

Cone minkowski_sum(const Cone& a, const Cone& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  Matrix rays = a.rays();
  Matrix lin = a.lineality();
  const Matrix& br = b.rays();
  const Matrix& bl = b.lineality();
  rays.insert(rays.end(), br.begin(), br.end());
  lin.insert(lin.end(), bl.begin(), bl.end());
  return Cone::from_rays(a.dim(), std::move(rays), std::move(lin));
}

bool cone_equal(const Cone& a, const Cone& b) {
  return a.contains(b) && b.contains(a);
}

}  // namespace symtrop
