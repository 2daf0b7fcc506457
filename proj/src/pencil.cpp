#include "symtrop/pencil.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "symtrop/tropical.hpp"

namespace symtrop {

namespace {

int term_degree(const Term& t) {
  int d = t.lambda.size();
  for (int e : t.alpha) d += e;
  return d;
}

std::vector<int> support(const std::vector<int>& alpha) {
  std::vector<int> s;
  for (size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] > 0) s.push_back(int(i));
  return s;
}

std::vector<int> alpha_sum(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> s(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) s[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) s[i] += b[i];
  return s;
}

Partition positive_type(const std::vector<int>& alpha) {
  std::vector<int> parts;
  for (int e : alpha)
    if (e > 0) parts.push_back(e);
  return Partition(parts);
}

Rat multiplicity_factorial(const Partition& p) {
  Rat f(1);
  const auto& parts = p.parts();
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    for (size_t k = 2; k <= j - i; ++k) f *= Rat(long(k));
    i = j;
  }
  return f;
}

}  // namespace

SymFn limit_gram_entry(const Term& t1, const Term& t2, SymGroup group) {
  if (term_degree(t1) != term_degree(t2))
    throw std::invalid_argument("term degrees differ");
  int degree = term_degree(t1) * 2;
  if (support(t1.alpha) != support(t2.alpha)) return SymFn(degree);
  std::vector<int> beta = alpha_sum(t1.alpha, t2.alpha);
  if (group == SymGroup::B)
    for (int e : beta)
      if (e % 2 != 0) return SymFn(degree);
  Partition beta_type = positive_type(beta);
  Partition ptail = fuse(t1.lambda, t2.lambda);
  SymFn mono = beta_type.length() == 0 ? SymFn::constant(Rat(1))
                                       : monomial_to_powersum(beta_type);
  return multiplicity_factorial(beta_type) * (mono * SymFn::p(ptail));
}

Rat finite_gram_coeff(const Term& t1, const Term& t2, int n, SymGroup group) {
  int l1 = int(support(t1.alpha).size()), l2 = int(support(t2.alpha).size());
  if ((l1 + l2) % 2 != 0)
    throw std::invalid_argument("odd combined support size has no integer n-power");
  std::vector<int> beta = alpha_sum(t1.alpha, t2.alpha);
  FiniteSym fs = finite_symmetrize(beta, fuse(t1.lambda, t2.lambda), n, group);
  Rat scale(1);
  for (int i = 0; i < (l1 + l2) / 2; ++i) scale *= Rat(n);
  return scale * fs.coeff;
}

namespace {

std::vector<std::vector<Term>> pencil_vectors(const std::string& kind,
                                              std::vector<std::string>& labels,
                                              int& d, SymGroup& group) {
  auto P = [](std::vector<int> parts) { return Partition(std::move(parts)); };
  group = SymGroup::B;
  if (kind == "B4") {
    d = 2;
    labels = {"v(0,0)", "v(0,1)", "v(2,0)"};
    return {{{{}, P({2})}}, {{{2}, P({})}}, {{{1, 1}, P({})}}};
  }
  if (kind == "B6") {
    d = 3;
    labels = {"v(1,0)", "v(1,1)", "v(3,0)"};
    return {{{{1}, P({2})}, {{3}, P({})}},
            {{{1, 2}, P({})}},
            {{{1, 1, 1}, P({})}}};
  }
  if (kind == "B8") {
    d = 4;
    labels = {"v(0,0)", "v(0,1)", "v(2,0)", "v(0,2)", "v(2,1)", "v(4,0)"};
    return {{{{}, P({2, 2})}, {{}, P({4})}},
            {{{2}, P({2})}, {{4}, P({})}},
            {{{1, 1}, P({2})}, {{3, 1}, P({})}, {{1, 3}, P({})}},
            {{{2, 2}, P({})}},
            {{{1, 1, 2}, P({})}},
            {{{1, 1, 1, 1}, P({})}}};
  }
  if (kind == "B10") {
    d = 5;
    labels = {"v(1,0)", "v(1,1)", "v(3,0)", "v(1,2)", "v(3,1)", "v(5,0)"};
    return {{{{1}, P({2, 2})}, {{3}, P({2})}, {{1}, P({4})}, {{5}, P({})}},
            {{{1, 2}, P({2})}, {{1, 4}, P({})}, {{3, 2}, P({})}},
            {{{1, 1, 1}, P({2})}, {{3, 1, 1}, P({})}, {{1, 3, 1}, P({})}, {{1, 1, 3}, P({})}},
            {{{1, 2, 2}, P({})}},
            {{{1, 1, 1, 2}, P({})}},
            {{{1, 1, 1, 1, 1}, P({})}}};
  }
  if (kind == "S4") {
    d = 2;
    group = SymGroup::S;
    labels = {"v0", "v1", "v2"};
    return {{{{}, P({1, 1})}, {{}, P({2})}},
            {{{1}, P({1})}, {{2}, P({})}},
            {{{1, 1}, P({})}}};
  }
  throw std::invalid_argument("unknown pencil kind: " + kind);
}

std::vector<RatVec> congruence_matrix(const std::string& kind) {
  if (kind == "B8")
    return {{Rat(1), Rat(0), Rat(0)},
            {Rat(0), Rat(1, 2), Rat(1, 2)},
            {Rat(0), Rat(1), Rat(-1)}};
  // B10
  return {{Rat(1), Rat(0), Rat(0), Rat(0)},
          {Rat(0), Rat(1, 3), Rat(1, 3), Rat(1, 3)},
          {Rat(0), Rat(-1), Rat(1, 2), Rat(1, 2)},
          {Rat(0), Rat(0), Rat(-1), Rat(1)}};
}

}  // namespace

GramPencil build_pencil(const std::string& kind) {
  GramPencil p;
  p.vectors = pencil_vectors(kind, p.labels, p.d, p.group);
  for (const auto& vec : p.vectors) {
    size_t n = vec.size();
    Block block(n, std::vector<SymFn>(n, SymFn(2 * p.d)));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i; j < n; ++j) {
        SymFn e = limit_gram_entry(vec[i], vec[j], p.group);
        block[i][j] = e;
        block[j][i] = e;
      }
    p.blocks.push_back(std::move(block));
  }
  // The 2d = 8 and 2d = 10 displays diagonalize the all-odd-support block.
  if (kind == "B8" || kind == "B10")
    p.blocks[2] = apply_congruence(p.blocks[2], congruence_matrix(kind));
  return p;
}

Block apply_congruence(const Block& block, const std::vector<RatVec>& a) {
  size_t n = block.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("congruence dimension mismatch");
  if (a.size() != n) throw std::invalid_argument("congruence dimension mismatch");
  int degree = block[0][0].degree();
  Block out(n, std::vector<SymFn>(n, SymFn(degree)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      SymFn acc(degree);
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l)
          if (sign(a[i][k]) != 0 && sign(a[j][l]) != 0)
            acc = acc + (a[i][k] * a[j][l]) * block[k][l];
      out[i][j] = acc;
    }
  return out;
}

namespace {

// The unique superdominance-greatest element, if it exists.
Partition unique_sd_max(const std::vector<Partition>& set, const char* what) {
  if (set.empty()) throw std::logic_error(std::string("empty support for ") + what);
  const Partition* best = &set[0];
  for (const auto& p : set)
    if (superdominates(p, *best)) best = &p;
  for (const auto& p : set)
    if (!superdominates(*best, p))
      throw std::runtime_error(std::string("no unique superdominance maximum in ") + what);
  return *best;
}

std::vector<Partition> keys_with_sign(const SymFn& f, int s) {
  std::vector<Partition> out;
  for (const auto& [k, c] : f.terms())
    if (sign(c) == s) out.push_back(k);
  return out;
}

}  // namespace

Cone trop_of_sos(const GramPencil& pencil) {
  std::vector<Partition> coords = even_coords(pencil.d);
  std::map<Partition, int, RevlexGreater> index;
  for (size_t i = 0; i < coords.size(); ++i) index[coords[i]] = int(i);
  auto idx = [&](const Partition& p) {
    auto it = index.find(p);
    if (it == index.end())
      throw std::invalid_argument("pencil entry outside the even-partition coordinates");
    return it->second;
  };
  int n = int(coords.size());
  Matrix rows;
  for (const auto& block : pencil.blocks) {
    size_t m = block.size();
    std::vector<Partition> diag_max(m, Partition());
    for (size_t i = 0; i < m; ++i) {
      diag_max[i] = unique_sd_max(keys_with_sign(block[i][i], 1), "diagonal entry");
      auto neg = keys_with_sign(block[i][i], -1);
      if (!neg.empty()) {
        Partition lower = unique_sd_max(neg, "diagonal entry");
        RatVec row(n, Rat(0));
        row[idx(diag_max[i])] += 1;
        row[idx(lower)] -= 1;
        rows.push_back(std::move(row));
      }
    }
    for (size_t i = 0; i < m; ++i)
      for (size_t j = i + 1; j < m; ++j) {
        if (block[i][j].is_zero()) continue;
        std::vector<Partition> all;
        for (const auto& [k, c] : block[i][j].terms()) all.push_back(k);
        Partition top = unique_sd_max(all, "off-diagonal entry");
        RatVec row(n, Rat(0));
        row[idx(diag_max[i])] += 1;
        row[idx(diag_max[j])] += 1;
        row[idx(top)] -= 2;
        if (std::any_of(row.begin(), row.end(),
                        [](const Rat& x) { return sign(x) != 0; }))
          rows.push_back(std::move(row));
      }
  }
  return Cone::from_inequalities(n, std::move(rows));
}

std::string pencil_pretty(const GramPencil& pencil) {
  std::ostringstream out;
  for (size_t b = 0; b < pencil.blocks.size(); ++b) {
    out << "M_" << pencil.labels[b] << ":\n";
    for (const auto& row : pencil.blocks[b]) {
      out << "  [ ";
      for (size_t j = 0; j < row.size(); ++j)
        out << (j ? " | " : "") << row[j].str();
      out << " ]\n";
    }
  }
  return out.str();
}

}  // namespace symtrop
