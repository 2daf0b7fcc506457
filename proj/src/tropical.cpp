#include "symtrop/tropical.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symtrop {

Cone orthant_q(int dim, int j) {
  if (j < 0 || j >= dim) throw std::invalid_argument("orthant index out of range");
  Matrix rays;
  for (int i = 0; i < dim; ++i) {
    RatVec r(dim, Rat(0));
    r[i] = (i == j) ? Rat(-1) : Rat(1);
    rays.push_back(std::move(r));
  }
  return Cone::from_rays(dim, std::move(rays));
}

namespace {

bool in_span(const Matrix& basis, RatVec v) {
  // Reduce v against a working echelon copy of the basis.
  Matrix rows = basis;
  size_t dim = v.size();
  std::vector<bool> used(rows.size(), false);
  for (size_t col = 0; col < dim; ++col) {
    size_t piv = rows.size();
    for (size_t i = 0; i < rows.size(); ++i)
      if (!used[i] && sign(rows[i][col]) != 0) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    used[piv] = true;
    if (sign(v[col]) != 0) {
      Rat f = v[col] / rows[piv][col];
      for (size_t j = 0; j < dim; ++j) v[j] -= f * rows[piv][j];
    }
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == piv || used[i] || sign(rows[i][col]) == 0) continue;
      Rat f = rows[i][col] / rows[piv][col];
      for (size_t j = 0; j < dim; ++j) rows[i][j] -= f * rows[piv][j];
    }
  }
  for (const Rat& x : v)
    if (sign(x) != 0) return false;
  return true;
}

bool strictly_positive(const RatVec& v) {
  for (const Rat& x : v)
    if (sign(x) <= 0) return false;
  return true;
}

}  // namespace

Cone max_closure(const Cone& m, const RatVec& v) {
  if (int(v.size()) != m.dim()) throw std::invalid_argument("dimension mismatch");
  if (!strictly_positive(v))
    throw std::invalid_argument("max_closure needs a strictly positive vector");
  if (!in_span(m.lineality(), v))
    throw std::invalid_argument("vector not in the lineality space");
  Cone out = minkowski_sum(m, orthant_q(m.dim(), 0));
  for (int j = 1; j < m.dim(); ++j)
    out = intersect(out, minkowski_sum(m, orthant_q(m.dim(), j)));
  return out;
}

Cone tcone(const Cone& m) {
  int dim = m.dim();
  Cone line = Cone::from_rays(dim, {}, {RatVec(dim, Rat(1))});
  Cone shifted = minkowski_sum(m, line);
  Cone out = minkowski_sum(shifted, orthant_q(dim, 0));
  for (int j = 1; j < dim; ++j)
    out = intersect(out, minkowski_sum(shifted, orthant_q(dim, j)));
  return out;
}

DoubleHullResult double_hull(const Cone& s, const RatVec& v) {
  Cone cur = s;  // a cone is already its own conic hull
  for (int it = 1; it <= 20; ++it) {
    Cone next = max_closure(cur, v);
    if (cone_equal(next, cur)) return {next, it};
    cur = next;
  }
  throw std::runtime_error("double hull did not stabilize within 20 rounds");
}

DoubleHullResult double_hull(const Cone& s) {
  const Matrix& lin = s.lineality();
  if (lin.empty())
    throw std::invalid_argument("no strictly positive lineality vector");
  // Search small integer combinations of the lineality basis.
  std::vector<int> coef(lin.size(), 0);
  RatVec found;
  auto rec = [&](auto&& self, size_t i) -> bool {
    if (i == lin.size()) {
      RatVec v(s.dim(), Rat(0));
      for (size_t k = 0; k < lin.size(); ++k)
        for (int j = 0; j < s.dim(); ++j) v[j] += Rat(coef[k]) * lin[k][j];
      if (strictly_positive(v)) {
        found = v;
        return true;
      }
      return false;
    }
    for (int c = -3; c <= 3; ++c) {
      coef[i] = c;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0))
    throw std::invalid_argument("no strictly positive lineality vector");
  return double_hull(s, found);
}

Cone trop_vandermonde(int d) {
  if (d < 2) throw std::invalid_argument("trop_vandermonde needs d >= 2");
  Matrix ineqs;
  for (int k = 0; k + 2 < d; ++k) {  // y_k + y_{k+2} >= 2 y_{k+1}, 0-based
    RatVec row(d, Rat(0));
    row[k] = 1;
    row[k + 1] = -2;
    row[k + 2] = 1;
    ineqs.push_back(std::move(row));
  }
  RatVec last(d, Rat(0));
  last[d - 2] = d;
  last[d - 1] = -(d - 1);
  ineqs.push_back(std::move(last));
  return Cone::from_inequalities(d, std::move(ineqs));
}

std::pair<Matrix, Matrix> trop_vandermonde_vrep(int d) {
  Matrix rays;
  for (int k = 1; k <= d - 2; ++k) {
    RatVec r(d, Rat(0));
    for (int i = 0; i < k; ++i) r[i] = k - i;
    rays.push_back(std::move(r));
  }
  rays.push_back(RatVec(d, Rat(1)));
  RatVec alpha(d);
  for (int i = 0; i < d; ++i) alpha[i] = i + 1;
  return {rays, {alpha}};
}

Matrix trop_map_matrix(int d) {
  Matrix m;
  for (const auto& lambda : enum_partitions(d)) {
    std::vector<int> mult = lambda.multiplicities(d);
    RatVec row(d);
    for (int i = 0; i < d; ++i) row[i] = mult[i];
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<Partition> even_coords(int d) {
  std::vector<Partition> out;
  for (const auto& lambda : enum_partitions(d)) out.push_back(scale(lambda, 2));
  return out;
}

Cone apply_linear(const Matrix& m, const Cone& c) {
  int out_dim = int(m.size());
  auto apply = [&](const RatVec& x) {
    RatVec y(out_dim);
    for (int i = 0; i < out_dim; ++i) y[i] = dot(m[i], x);
    return y;
  };
  Matrix rays, lin;
  for (const auto& r : c.rays()) rays.push_back(apply(r));
  for (const auto& l : c.lineality()) lin.push_back(apply(l));
  return Cone::from_rays(out_dim, std::move(rays), std::move(lin));
}

Cone trop_bp_dual(int d) {
  return tcone(apply_linear(trop_map_matrix(d), trop_vandermonde(d)));
}

Matrix t_k_rows(int d, int k) {
  if (d < 2 || k < 1) throw std::invalid_argument("t_k_rows needs d >= 2, k >= 1");
  std::vector<Partition> coords = even_coords(d);
  int n = int(coords.size());
  Matrix rows;
  std::vector<int> pick;
  auto emit = [&](int mu) {
    Partition fused = fuse([&] {
      std::vector<Partition> ps;
      for (int i : pick) ps.push_back(coords[i]);
      return ps;
    }());
    if (!superdominates(fused, repeat(coords[mu], k))) return;
    RatVec row(n, Rat(0));
    for (int i : pick) row[i] += 1;
    row[mu] -= k;
    if (std::any_of(row.begin(), row.end(), [](const Rat& x) { return sign(x) != 0; }))
      rows.push_back(primitive(row));
  };
  auto rec = [&](auto&& self, int start) -> void {
    if (int(pick.size()) == k) {
      for (int mu = 0; mu < n; ++mu) emit(mu);
      return;
    }
    for (int i = start; i < n; ++i) {
      pick.push_back(i);
      self(self, i);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(rows.begin(), rows.end(), lex_less);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

Cone t_k_cone(int d, int k) {
  std::vector<Partition> coords = even_coords(d);
  return Cone::from_inequalities(int(coords.size()), t_k_rows(d, k));
}

TauResult stabilization_tau(int d, int k_max) {
  Cone target = trop_bp_dual(d);
  for (int k = 1; k <= k_max; ++k) {
    if (cone_equal(t_k_cone(d, k), target)) return {k, true};
  }
  return {-1, false};
}

std::string inequality_str(const RatVec& row, const std::vector<Partition>& coords) {
  if (row.size() != coords.size()) throw std::invalid_argument("dimension mismatch");
  auto side = [&](int s) {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < row.size(); ++i) {
      if (sign(row[i]) != s) continue;
      if (!first) out << " + ";
      first = false;
      Rat c = abs(row[i]);
      if (c != Rat(1)) out << rat_pretty(c) << "*";
      out << "y[";
      const auto& parts = coords[i].parts();
      for (size_t j = 0; j < parts.size(); ++j)
        out << (j ? "," : "") << parts[j];
      out << "]";
    }
    if (first) out << "0";
    return out.str();
  };
  return side(1) + " >= " + side(-1);
}

}  // namespace symtrop
