#include "symtrop/certify.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "symtrop/quadratic.hpp"
#include "symtrop/tropical.hpp"
#include "symtrop/unipoly.hpp"

namespace symtrop {

RationalSymMatrix RationalSymMatrix::from(std::vector<RatVec> rows) {
  RationalSymMatrix m;
  m.n = int(rows.size());
  for (const auto& r : rows)
    if (int(r.size()) != m.n) throw std::invalid_argument("matrix not square");
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j)
      if (rows[i][j] != rows[j][i]) throw std::invalid_argument("matrix not symmetric");
  m.entries = std::move(rows);
  return m;
}

RatVec charpoly_elementary(const RationalSymMatrix& m) {
  int n = m.n;
  // Faddeev-LeVerrier: det(tI - A) = t^n + c_1 t^{n-1} + ... + c_n.
  std::vector<RatVec> mk = m.entries;
  RatVec c(n + 1, Rat(0));
  RatVec elem(n);
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      // mk = A * (mk + c_{k-1} I)
      std::vector<RatVec> shifted = mk;
      for (int i = 0; i < n; ++i) shifted[i][i] += c[k - 1];
      std::vector<RatVec> next(n, RatVec(n, Rat(0)));
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
          if (sign(m.entries[i][l]) == 0) continue;
          for (int j = 0; j < n; ++j) next[i][j] += m.entries[i][l] * shifted[l][j];
        }
      mk = std::move(next);
    }
    Rat tr(0);
    for (int i = 0; i < n; ++i) tr += mk[i][i];
    c[k] = -tr / Rat(k);
    elem[k - 1] = (k % 2 == 0) ? c[k] : -c[k];
  }
  return elem;
}

bool is_psd(const RationalSymMatrix& m) {
  for (const Rat& e : charpoly_elementary(m))
    if (sign(e) < 0) return false;
  return true;
}

RationalSymMatrix evaluate_block(const Block& block, const RatVec& point, int d) {
  std::vector<Partition> coords = even_coords(d);
  if (point.size() != coords.size())
    throw std::invalid_argument("dual point dimension mismatch");
  std::map<Partition, int, RevlexGreater> index;
  for (size_t i = 0; i < coords.size(); ++i) index[coords[i]] = int(i);
  std::vector<RatVec> rows(block.size(), RatVec(block.size(), Rat(0)));
  for (size_t i = 0; i < block.size(); ++i)
    for (size_t j = 0; j < block.size(); ++j) {
      Rat v(0);
      for (const auto& [lambda, coeff] : block[i][j].terms()) {
        auto it = index.find(lambda);
        if (it == index.end())
          throw std::invalid_argument("entry outside even-partition coordinates");
        v += coeff * point[it->second];
      }
      rows[i][j] = v;
    }
  return RationalSymMatrix::from(std::move(rows));
}

bool dual_membership(const RatVec& point, const GramPencil& pencil) {
  for (const auto& block : pencil.blocks)
    if (!is_psd(evaluate_block(block, point, pencil.d))) return false;
  return true;
}

bool report_ok(const Report& r) {
  for (const auto& c : r)
    if (!c.pass) return false;
  return true;
}

std::string report_str(const Report& r) {
  std::ostringstream out;
  for (const auto& c : r)
    out << (c.pass ? "PASS" : "FAIL") << " " << c.name
        << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  return out.str();
}

RatVec decic_witness() {
  return {Rat(450228), Rat(75326), Rat(24986), Rat(12656),
          Rat(8325),   Rat(4159),  Rat(2803)};
}

RatVec decic_coeffs() {
  return {Rat(1, 18), Rat(0), Rat(-3), Rat(0), Rat(3), Rat(6), Rat(0)};
}

SymFn decic_form() {
  SymFn f(10);
  f.add_term(Partition({2, 2, 2, 2, 2}), Rat(1, 18));
  f.add_term(Partition({8, 2}), Rat(3));
  f.add_term(Partition({6, 4}), Rat(6));
  f.add_term(Partition({6, 2, 2}), Rat(-3));
  return f;
}

namespace {

Rat random_nonneg_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(0, 20), den(1, 10);
  return Rat(num(rng)) / Rat(den(rng));
}

Rat power_sum(const RatVec& x, int k) {
  Rat s(0);
  for (const Rat& xi : x) {
    Rat p(1);
    for (int i = 0; i < k; ++i) p *= xi;
    s += p;
  }
  return s;
}

}  // namespace

Report verify_decic() {
  Report report;
  RatVec a = decic_witness(), c = decic_coeffs();
  Rat pairing(0);
  for (size_t i = 0; i < a.size(); ++i) pairing += a[i] * c[i];
  report.push_back({"decic-pairing", pairing == Rat(-49, 3),
                    "<a,c> = " + rat_pretty(pairing)});

  GramPencil pencil = build_pencil("B10");
  bool member = dual_membership(a, pencil);
  report.push_back({"decic-dual-membership", member,
                    "witness vector lies in the dual spectrahedron"});

  std::mt19937 rng(20260823);
  int bad_value = 0, bad_chain = 0;
  SymFn f = decic_form();
  for (int trial = 0; trial < 1000; ++trial) {
    std::uniform_int_distribution<int> nvars(1, 6);
    int n = nvars(rng);
    RatVec x(n);
    for (auto& xi : x) xi = random_nonneg_rat(rng);
    if (sign(f.evaluate(x)) < 0) ++bad_value;
    // p_(2^5) p_(8,2) p_(6,4) >= p_(6,2^2)^3, the product form of the
    // AM-GM step behind nonnegativity.
    Rat p2 = power_sum(x, 2), p4 = power_sum(x, 4), p6 = power_sum(x, 6),
        p8 = power_sum(x, 8);
    Rat lhs = (p2 * p2 * p2 * p2 * p2) * (p8 * p2) * (p6 * p4);
    Rat rhs = (p6 * p2 * p2) * (p6 * p2 * p2) * (p6 * p2 * p2);
    if (lhs < rhs) ++bad_chain;
  }
  report.push_back({"decic-sampling", bad_value == 0,
                    "violations: " + std::to_string(bad_value) + "/1000"});
  report.push_back({"decic-amgm-chain", bad_chain == 0,
                    "violations: " + std::to_string(bad_chain) + "/1000"});
  return report;
}

namespace {

// Dense bivariate polynomial over Q(sqrt(3)), coeff[i][j] on x^i u^j.
using Bivar = std::vector<std::vector<QSqrt3>>;

Bivar bivar(int dx, int du) {
  return Bivar(dx + 1, std::vector<QSqrt3>(du + 1, QSqrt3(0)));
}

Bivar mul(const Bivar& p, const Bivar& q) {
  Bivar r = bivar(int(p.size() + q.size()) - 2, int(p[0].size() + q[0].size()) - 2);
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p[0].size(); ++j)
      for (size_t k = 0; k < q.size(); ++k)
        for (size_t l = 0; l < q[0].size(); ++l) r[i + k][j + l] += p[i][j] * q[k][l];
  return r;
}

bool bivar_equal(const Bivar& p, const Bivar& q) {
  size_t dx = std::max(p.size(), q.size()), du = std::max(p[0].size(), q[0].size());
  for (size_t i = 0; i < dx; ++i)
    for (size_t j = 0; j < du; ++j) {
      QSqrt3 a = (i < p.size() && j < p[0].size()) ? p[i][j] : QSqrt3(0);
      QSqrt3 b = (i < q.size() && j < q[0].size()) ? q[i][j] : QSqrt3(0);
      if (!(a == b)) return false;
    }
  return true;
}

QSqrt3 bivar_eval(const Bivar& p, const QSqrt3& x, const QSqrt3& u) {
  QSqrt3 acc(0);
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p[0].size(); ++j) {
      QSqrt3 t = p[i][j];
      for (size_t k = 0; k < i; ++k) t *= x;
      for (size_t k = 0; k < j; ++k) t *= u;
      acc += t;
    }
  return acc;
}

}  // namespace

Report verify_quartic() {
  Report report;

  // g_1(u) = 4u^2 - (139/20)u + 3; value at 9/10.
  UniPoly<Rat> g1(std::vector<Rat>{Rat(3), Rat(-139, 20), Rat(4)});
  Rat v = g1.eval(Rat(9, 10));
  report.push_back({"quartic-sos-failure-witness", v == Rat(-3, 200),
                    "g_1(9/10) = " + rat_str(v)});

  // 64x^4 - 80x^2 - (278*sqrt(2)/5)x + 96 over Q(sqrt(2)).
  UniPoly<QSqrt2> q1(std::vector<QSqrt2>{QSqrt2(Rat(96)), QSqrt2(Rat(0), Rat(-278, 5)),
                                         QSqrt2(Rat(-80)), QSqrt2(Rat(0)),
                                         QSqrt2(Rat(64))});
  report.push_back({"quartic-reduction-sqrt2", globally_nonnegative(q1),
                    "64x^4 - 80x^2 - (278*sqrt2/5)x + 96 >= 0 on R"});

  // 64x^4 - 80x^2 - (556/5)x + 128 over Q.
  UniPoly<Rat> q2(std::vector<Rat>{Rat(128), Rat(-556, 5), Rat(-80), Rat(0), Rat(64)});
  report.push_back({"quartic-reduction-rational",
                    globally_nonnegative(q2) && sturm_real_roots(q2) == 0,
                    "64x^4 - 80x^2 - (556/5)x + 128 > 0 on R (0 real roots)"});

  // 4u^2 - 4*sqrt(3)xu + 4x^4 - 5x^2 + 4 = (2u - sqrt(3)x)^2 + 4(x^2-1)^2.
  QSqrt3 s3 = QSqrt3::sqrt_radicand();
  Bivar lhs = bivar(4, 2);
  lhs[0][2] = QSqrt3(Rat(4));
  lhs[1][1] = QSqrt3(Rat(-4)) * s3;
  lhs[4][0] = QSqrt3(Rat(4));
  lhs[2][0] = QSqrt3(Rat(-5));
  lhs[0][0] = QSqrt3(Rat(4));
  Bivar sq1 = bivar(1, 1);
  sq1[0][1] = QSqrt3(Rat(2));
  sq1[1][0] = QSqrt3(Rat(0)) - s3;
  Bivar sq2 = bivar(2, 0);
  sq2[2][0] = QSqrt3(Rat(1));
  sq2[0][0] = QSqrt3(Rat(-1));
  Bivar rhs = mul(sq1, sq1);
  Bivar sq2sq = mul(sq2, sq2);
  Bivar four = bivar(0, 0);
  four[0][0] = QSqrt3(Rat(4));
  Bivar rhs2 = mul(four, sq2sq);
  Bivar rhs_sum = bivar(4, 2);
  for (size_t i = 0; i < rhs.size(); ++i)
    for (size_t j = 0; j < rhs[0].size(); ++j) rhs_sum[i][j] += rhs[i][j];
  for (size_t i = 0; i < rhs2.size(); ++i)
    for (size_t j = 0; j < rhs2[0].size(); ++j) rhs_sum[i][j] += rhs2[i][j];
  bool identity = bivar_equal(lhs, rhs_sum);

  // The two squares vanish together exactly at (x,u) = (1, sqrt3/2) and
  // (-1, -sqrt3/2).
  QSqrt3 half_s3 = QSqrt3(Rat(0), Rat(1, 2));
  bool vanish = bivar_eval(lhs, QSqrt3(1), half_s3) == QSqrt3(0) &&
                bivar_eval(lhs, QSqrt3(-1), QSqrt3(0) - half_s3) == QSqrt3(0);
  bool positive_nearby = sign(bivar_eval(lhs, QSqrt3(1), QSqrt3(1))) > 0 &&
                         sign(bivar_eval(lhs, QSqrt3(0), QSqrt3(0))) > 0;
  report.push_back({"quartic-boundary-identity", identity && vanish && positive_nearby,
                    "sum-of-squares identity over Q(sqrt3) with zeros at (+-1, +-sqrt3/2)"});

  // g_x(1/sqrt(n)) >= 0 on the grid x in [-3,3] step 1/20, n = 1..50.
  bool grid_ok = true;
  for (int k = -60; k <= 60 && grid_ok; ++k) {
    Rat x = Rat(k) / Rat(20);
    Rat q = Rat(4) * x * x * x * x - Rat(5) * x * x + Rat(4);
    Rat b = Rat(-139, 20) * x;
    for (int n = 1; n <= 50; ++n) {
      Rat aa = Rat(4) / Rat(n) + q;
      if (sign_plus_sqrt(aa, b, Rat(1, n)) < 0) {
        grid_ok = false;
        break;
      }
    }
  }
  report.push_back({"quartic-grid", grid_ok, "g_x(n^{-1/2}) >= 0 on the grid"});
  return report;
}

Report verify_sos4_extreme_rays(const std::vector<std::pair<Rat, Rat>>& samples) {
  Report report;
  bool all_ok = true;
  std::string first_bad;
  auto check_point = [&](const RatVec& p) {
    RationalSymMatrix A = RationalSymMatrix::from({{p[0], p[1]}, {p[1], p[3]}});
    RationalSymMatrix B = RationalSymMatrix::from({{p[1], p[2]}, {p[2], p[4]}});
    return is_psd(A) && is_psd(B) && sign(p[3] - p[4]) >= 0;
  };
  for (const auto& [t, s] : samples) {
    if (sign(t) < 0 || abs(s) > t)
      throw std::invalid_argument("sample needs t >= 0 and |s| <= t");
    RatVec p{Rat(1), t * t, s * t * t, t * t * t * t, s * s * t * t};
    if (!check_point(p)) {
      all_ok = false;
      if (first_bad.empty())
        first_bad = "t=" + rat_pretty(t) + " s=" + rat_pretty(s);
    }
  }
  report.push_back({"sos4-ray-family", all_ok,
                    all_ok ? std::to_string(samples.size()) + " samples PSD"
                           : "failed at " + first_bad});
  bool iso = check_point({Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)}) &&
             check_point({Rat(0), Rat(0), Rat(0), Rat(1), Rat(1)});
  report.push_back({"sos4-isolated-rays", iso, "(0,0,0,1,0) and (0,0,0,1,1)"});
  return report;
}

Report verify_sos4_extreme_rays() {
  std::vector<std::pair<Rat, Rat>> samples;
  std::vector<Rat> ts{Rat(0), Rat(1, 2), Rat(1), Rat(2), Rat(3), Rat(7, 3)};
  for (const Rat& t : ts)
    for (int num = -4; num <= 4; ++num) {
      Rat s = t * Rat(num) / Rat(4);
      samples.emplace_back(t, s);
    }
  return verify_sos4_extreme_rays(samples);
}

}  // namespace symtrop
