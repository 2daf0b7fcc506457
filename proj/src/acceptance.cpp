#include "symtrop/acceptance.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "symtrop/cone.hpp"
#include "symtrop/partition.hpp"
#include "symtrop/pencil.hpp"
#include "symtrop/symfn.hpp"
#include "symtrop/tropical.hpp"

namespace symtrop::acceptance {

namespace {

struct Crit {
  std::string name;
  std::vector<std::string> fails;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) fails.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }

  CheckResult done() const {
    CheckResult r;
    r.name = name;
    r.pass = fails.empty();
    std::ostringstream d;
    for (size_t i = 0; i < fails.size(); ++i) d << (i ? "; " : "") << fails[i];
    for (const auto& n : notes) d << (d.str().empty() ? "" : "; ") << n;
    r.detail = d.str();
    return r;
  }
};

Partition P(const std::string& s) { return Partition::parse(s); }

Matrix canon_rows(Matrix rows) {
  for (auto& r : rows) r = primitive(r);
  std::sort(rows.begin(), rows.end(), lex_less);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

RatVec row_of(const std::vector<Partition>& coords,
              const std::vector<std::pair<std::string, long>>& entries) {
  RatVec r(coords.size(), Rat(0));
  for (const auto& [name, c] : entries) {
    Partition p = P(name);
    auto it = std::find(coords.begin(), coords.end(), p);
    if (it == coords.end()) throw std::logic_error("fixture coordinate missing: " + name);
    r[size_t(it - coords.begin())] += Rat(c);
  }
  return r;
}

SymFn combo(int degree, const std::vector<std::pair<Rat, std::string>>& terms) {
  SymFn f(degree);
  for (const auto& [c, name] : terms) f.add_term(P(name), c);
  return f;
}

// The nine half-space lists cutting out the linearized SOS tropicalizations
// in degrees 4, 6, 8, 10, in the even-partition coordinates of that degree.
Matrix l_fixture(int d) {
  std::vector<Partition> coords = even_coords(d);
  Matrix rows;
  auto add = [&](std::vector<std::pair<std::string, long>> e) {
    rows.push_back(row_of(coords, e));
  };
  switch (d) {
    case 2:
      add({{"2,2", 1}, {"4", -1}});
      break;
    case 3:
      add({{"2,2,2", 1}, {"6", 1}, {"4,2", -2}});
      add({{"4,2", 1}, {"6", -1}});
      break;
    case 4:
      add({{"2^4", 1}, {"4^2", 1}, {"4,2^2", -2}});
      add({{"4,2^2", 1}, {"8", 1}, {"6,2", -2}});
      add({{"6,2", 1}, {"4^2", -1}});
      add({{"4^2", 1}, {"8", -1}});
      break;
    case 5:
      add({{"6,2^2", 1}, {"4^2,2", -1}});
      add({{"8,2", 1}, {"6,4", -1}});
      add({{"6,4", 1}, {"10", -1}});
      add({{"6,2^2", 1}, {"10", 1}, {"8,2", -2}});
      add({{"4^2,2", 1}, {"10", 1}, {"6,4", -2}});
      add({{"4^2,2", 1}, {"8,2", -1}});
      add({{"4,2^3", 1}, {"6,4", 1}, {"4^2,2", -2}});
      add({{"4,2^3", 1}, {"8,2", 1}, {"6,2^2", -2}});
      add({{"2^5", 1}, {"4^2,2", 1}, {"4,2^3", -2}});
      break;
    default:
      throw std::logic_error("no fixture for this degree");
  }
  return canon_rows(std::move(rows));
}

RatVec extra_bp10_facet() {
  return row_of(even_coords(5), {{"2^5", 1}, {"6,4", 1}, {"8,2", 1}, {"6,2^2", -3}});
}

std::string row_str(const RatVec& r, int d) {
  return inequality_str(r, even_coords(d));
}

// ---------------------------------------------------------------- criterion 1

std::set<std::pair<std::vector<int>, std::vector<int>>> hasse8_fixture() {
  std::map<char, Partition> node = {
      {'a', P("1^8")},     {'b', P("2,1^6")},   {'c', P("3,1^5")},
      {'d', P("2^2,1^4")}, {'e', P("4,1^4")},   {'f', P("3,2,1^3")},
      {'g', P("2^3,1^2")}, {'h', P("5,1^3")},   {'i', P("4,2,1^2")},
      {'j', P("3^2,1^2")}, {'k', P("3,2^2,1")}, {'u', P("2^4")},
      {'l', P("6,1^2")},   {'m', P("5,2,1")},   {'n', P("4,3,1")},
      {'o', P("4,2^2")},   {'v', P("3^2,2")},   {'p', P("7,1")},
      {'q', P("6,2")},     {'r', P("5,3")},     {'s', P("4^2")},
      {'t', P("8")}};
  const char* edges[] = {"ab", "bc", "cd", "de", "ef", "fg", "fh", "hi", "gi",
                         "ij", "jk", "ku", "uo", "ov", "vq", "jl", "lm", "mn",
                         "no", "km", "np", "pq", "qr", "rs", "st"};
  std::set<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const char* e : edges)
    out.insert({node.at(e[0]).parts(), node.at(e[1]).parts()});
  return out;
}

CheckResult criterion_order_structure() {
  Crit c{"order-structure"};

  const auto& l5 = enum_partitions(5);
  std::vector<Partition> chain = {P("1^5"), P("2,1^3"), P("3,1^2"), P("2^2,1"),
                                  P("4,1"), P("3,2"),   P("5")};
  c.check(l5 == chain, "partitions of 5 not in the expected revlex chain order");
  for (size_t i = 0; i < l5.size(); ++i)
    for (size_t j = 0; j < l5.size(); ++j)
      if (!superdominates(l5[i], l5[j]) && !superdominates(l5[j], l5[i]))
        c.check(false, "incomparable pair in degree 5: " + l5[i].str() + ", " + l5[j].str());
  auto h5 = hasse(5);
  c.check(h5.size() == 6, "degree-5 diagram should have 6 cover edges");
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    c.check(std::count(h5.begin(), h5.end(),
                       std::make_pair(chain[i], chain[i + 1])) == 1,
            "missing chain edge " + chain[i].str() + " > " + chain[i + 1].str());

  bool incomparable6 = false;
  for (const auto& a : enum_partitions(6))
    for (const auto& b : enum_partitions(6))
      if (!superdominates(a, b) && !superdominates(b, a)) incomparable6 = true;
  c.check(incomparable6, "degree 6 should contain an incomparable pair");
  c.check(!superdominates(P("5,1"), P("2^3")) && !superdominates(P("2^3"), P("5,1")),
          "(5,1) and (2^3) should be incomparable");

  c.check(enum_partitions(8).size() == 22, "wrong number of partitions of 8");
  auto fixture = hasse8_fixture();
  std::set<std::pair<std::vector<int>, std::vector<int>>> computed;
  for (const auto& [up, lo] : hasse(8)) computed.insert({up.parts(), lo.parts()});
  for (const auto& e : fixture)
    c.check(computed.count(e) == 1,
            "missing cover edge " + Partition(e.first).str() + " > " + Partition(e.second).str());
  for (const auto& e : computed)
    c.check(fixture.count(e) == 1,
            "spurious cover edge " + Partition(e.first).str() + " > " + Partition(e.second).str());
  return c.done();
}

// ---------------------------------------------------------------- criterion 2

CheckResult criterion_power_sum_order() {
  Crit c{"power-sums-order"};
  std::mt19937_64 gen(0x5eed2026u);
  std::uniform_int_distribution<int> nvars(1, 6), num(0, 8), den(1, 4);

  for (int d = 2; d <= 8; ++d) {
    std::vector<std::vector<Rat>> ps;  // per point: power sums p_1..p_d
    for (int s = 0; s < 500; ++s) {
      int n = nvars(gen);
      RatVec x(n);
      for (auto& xi : x) xi = Rat(num(gen)) / Rat(den(gen));
      std::vector<Rat> p(d + 1, Rat(0));
      for (int k = 1; k <= d; ++k)
        for (const Rat& xi : x) {
          Rat t = xi;
          for (int e = 1; e < k; ++e) t *= xi;
          p[k] += t;
        }
      ps.push_back(std::move(p));
    }
    auto eval = [](const Partition& lam, const std::vector<Rat>& p) {
      Rat v(1);
      for (int part : lam.parts()) v *= p[part];
      return v;
    };
    const auto& parts = enum_partitions(d);
    for (const auto& lam : parts)
      for (const auto& mu : parts) {
        if (lam == mu) continue;
        if (superdominates(lam, mu)) {
          for (const auto& p : ps)
            if (sign(Rat(eval(lam, p) - eval(mu, p))) < 0) {
              c.check(false, "soundness failure " + lam.str() + " >= " + mu.str());
              break;
            }
        } else {
          auto w = binomial_violation_witness(lam, mu);
          if (!w) {
            c.check(false, "no violation witness for " + lam.str() + " vs " + mu.str());
            continue;
          }
          Rat pl = SymFn::p(lam).evaluate(*w), pm = SymFn::p(mu).evaluate(*w);
          c.check(sign(Rat(pl - pm)) < 0,
                  "witness does not separate " + lam.str() + " vs " + mu.str());
          for (const Rat& xi : *w)
            c.check(sign(xi) >= 0, "witness not nonnegative for " + lam.str());
        }
      }
  }
  return c.done();
}

// ---------------------------------------------------------------- criterion 3

CheckResult criterion_trop_vandermonde() {
  Crit c{"trop-vandermonde-cells"};
  for (int d = 3; d <= 5; ++d) {
    std::string tag = " (d=" + std::to_string(d) + ")";
    Matrix expect;
    for (int k = 0; k + 2 < d; ++k) {
      RatVec r(d, Rat(0));
      r[k] = 1;
      r[k + 1] = -2;
      r[k + 2] = 1;
      expect.push_back(std::move(r));
    }
    RatVec last(d, Rat(0));
    last[d - 2] = d;
    last[d - 1] = -(d - 1);
    expect.push_back(std::move(last));
    expect = canon_rows(std::move(expect));

    Cone cell = trop_vandermonde(d);
    c.check(cell.inequalities() == expect, "facet list mismatch" + tag);
    c.check(cell.equations().empty(), "unexpected implicit equations" + tag);

    auto [rays, lin] = trop_vandermonde_vrep(d);
    c.check(int(rays.size()) == d - 1, "expected d-1 extreme rays" + tag);
    Cone vside = Cone::from_rays(d, rays, lin);
    c.check(cone_equal(cell, vside), "H and V descriptions disagree" + tag);
    c.check(int(cell.rays().size()) == d - 1, "computed ray count" + tag);
    c.check(cell.lineality().size() == 1, "lineality should be a line" + tag);
    RatVec alpha(d);
    for (int i = 0; i < d; ++i) alpha[i] = i + 1;
    c.check(cell.lineality()[0] == primitive(alpha), "lineality should be (1,...,d)" + tag);

    RatVec ones(d, Rat(1)), neg = alpha;
    for (auto& x : neg) x = -x;
    auto dh = double_hull(Cone::from_rays(d, {ones, alpha, neg}), alpha);
    c.check(cone_equal(dh.cone, cell), "double hull of {1, alpha, -alpha}" + tag);
    c.note("double_hull iterations d=" + std::to_string(d) + ": " +
           std::to_string(dh.iterations));
  }
  return c.done();
}

// ---------------------------------------------------------------- criterion 4

CheckResult criterion_trop_of_sos() {
  Crit c{"trop-sos-dual"};
  const std::pair<const char*, int> kinds[] = {
      {"B4", 2}, {"B6", 3}, {"B8", 4}, {"B10", 5}};
  const size_t counts[] = {1, 2, 4, 9};
  for (size_t i = 0; i < 4; ++i) {
    auto [kind, d] = kinds[i];
    Cone t = trop_of_sos(build_pencil(kind));
    Matrix expect = l_fixture(d);
    c.check(expect.size() == counts[i], std::string("fixture size for ") + kind);
    c.check(t.equations().empty(), std::string("unexpected equations for ") + kind);
    if (t.inequalities() != expect) {
      c.check(false, std::string("facet set mismatch for ") + kind);
      for (const auto& r : t.inequalities()) c.note("got: " + row_str(r, d));
    }
  }
  return c.done();
}

// ---------------------------------------------------------------- criterion 5

CheckResult criterion_trop_bp_dual() {
  Crit c{"trop-nonneg-dual"};
  for (int d = 3; d <= 4; ++d) {
    Cone bp = trop_bp_dual(d);
    c.check(bp.inequalities() == l_fixture(d),
            "degree " + std::to_string(2 * d) + " should coincide with the SOS side");
  }
  Cone bp5 = trop_bp_dual(5);
  Matrix expect = l_fixture(5);
  expect.push_back(extra_bp10_facet());
  expect = canon_rows(std::move(expect));
  if (bp5.inequalities() != expect) {
    c.check(false, "degree 10 facets should be the SOS list plus exactly one more");
    for (const auto& r : bp5.inequalities()) c.note("got: " + row_str(r, 5));
  }
  return c.done();
}

// ---------------------------------------------------------------- criterion 6

CheckResult criterion_t_hierarchy() {
  Crit c{"t-hierarchy"};
  {
    Matrix expect = canon_rows({{Rat(1), Rat(-1), Rat(0)}, {Rat(0), Rat(1), Rat(-1)}});
    c.check(t_k_cone(3, 1).inequalities() == expect,
            "first level in degree 6 should be the two-inequality chain cone");
    c.check(t_k_cone(3, 2).inequalities() == l_fixture(3),
            "second level in degree 6 should match the SOS tropicalization");
  }

  RatVec gamma = {Rat(0), Rat(-3), Rat(-5), Rat(-6), Rat(-7), Rat(-9), Rat(-9)};
  c.check(t_k_cone(5, 2).contains_point(gamma), "gamma must lie in level 2, degree 10");
  c.check(!t_k_cone(5, 3).contains_point(gamma), "gamma must leave level 3, degree 10");

  for (int d = 2; d <= 5; ++d) {
    Matrix prev = t_k_rows(d, 1);
    for (int k = 2; k <= 4; ++k) {
      Matrix cur = t_k_rows(d, k);
      for (const auto& r : prev)
        c.check(std::binary_search(cur.begin(), cur.end(), r, lex_less),
                "level " + std::to_string(k - 1) + " row missing at level " +
                    std::to_string(k) + ", d=" + std::to_string(d));
      prev = std::move(cur);
    }
    Cone bp = trop_bp_dual(d);
    Matrix gens = bp.rays();
    for (const auto& l : bp.lineality()) {
      gens.push_back(l);
      RatVec neg = l;
      for (auto& x : neg) x = -x;
      gens.push_back(std::move(neg));
    }
    for (int k = 1; k <= 4; ++k)
      for (const auto& r : t_k_rows(d, k))
        for (const auto& g : gens)
          c.check(sign(dot(r, g)) >= 0,
                  "tropical dual generator escapes level " + std::to_string(k) +
                      ", d=" + std::to_string(d));
  }

  auto t3 = stabilization_tau(3, 4), t4 = stabilization_tau(4, 4);
  c.check(t3.certified && t3.tau == 2, "stabilization in degree 6 should occur at level 2");
  c.check(t4.certified && t4.tau == 2, "stabilization in degree 8 should occur at level 2");
  auto t5 = stabilization_tau(5, 4);
  c.check(t5.certified, "degree 10 hierarchy should stabilize by level 4");
  c.note("degree 10 stabilization level: " +
         (t5.certified ? std::to_string(t5.tau) : std::string("not reached")));
  return c.done();
}

// ---------------------------------------------------------------- criterion 7

void check_blocks(Crit& c, const std::string& kind,
                  const std::vector<Block>& expect) {
  GramPencil p = build_pencil(kind);
  if (p.blocks.size() != expect.size()) {
    c.check(false, kind + ": block count mismatch");
    return;
  }
  for (size_t b = 0; b < expect.size(); ++b) {
    if (p.blocks[b].size() != expect[b].size()) {
      c.check(false, kind + ": size of block " + p.labels[b]);
      continue;
    }
    for (size_t i = 0; i < expect[b].size(); ++i)
      for (size_t j = 0; j < expect[b].size(); ++j)
        if (!(p.blocks[b][i][j] == expect[b][i][j]))
          c.check(false, kind + ": entry (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ") of block " + p.labels[b] +
                             "; got " + p.blocks[b][i][j].str() + ", want " +
                             expect[b][i][j].str());
  }
}

CheckResult criterion_pencils() {
  Crit c{"gram-pencils"};
  {
    SymFn a = SymFn::p(P("2,2,2")), b = SymFn::p(P("4,2")), g = SymFn::p(P("6"));
    check_blocks(c, "B6",
                 {{{a, b}, {b, g}},
                  {{combo(6, {{1, "4,2"}, {-1, "6"}})}},
                  {{combo(6, {{1, "2,2,2"}, {-3, "4,2"}, {2, "6"}})}}});
  }
  {
    SymFn A = SymFn::p(P("2^4")), B = SymFn::p(P("4,2^2")), C = SymFn::p(P("6,2")),
          D = SymFn::p(P("4^2")), E = SymFn::p(P("8")), z(8);
    check_blocks(
        c, "B8",
        {{{A, B}, {B, D}},
         {{B, C}, {C, E}},
         {{A - B, B - C, z},
          {B - C, Rat(1, 2) * C + Rat(1, 2) * D - E, z},
          {z, z, Rat(2) * (C - D)}},
         {{D - E}},
         {{combo(8, {{1, "4,2^2"}, {-2, "6,2"}, {-1, "4^2"}, {2, "8"}})}},
         {{combo(8, {{1, "2^4"}, {-6, "4,2^2"}, {8, "6,2"}, {3, "4^2"}, {-6, "8"}})}}});
  }
  {
    SymFn a = SymFn::p(P("2^5")), b = SymFn::p(P("4,2^3")), cc = SymFn::p(P("6,2^2")),
          d = SymFn::p(P("4^2,2")), e = SymFn::p(P("8,2")), f = SymFn::p(P("6,4")),
          g = SymFn::p(P("10")), z(10);
    SymFn off = b - Rat(2) * cc - d + Rat(2) * e;
    SymFn mid = Rat(1, 3) * (cc + Rat(2) * d - Rat(4) * e - Rat(5) * f + Rat(6) * g);
    SymFn tail = cc - d - e + f;
    check_blocks(
        c, "B10",
        {{{a, b, b, cc}, {b, cc, d, e}, {b, d, d, f}, {cc, e, f, g}},
         {{b - cc, cc - e, d - e}, {cc - e, e - g, f - g}, {d - e, f - g, f - g}},
         {{a - Rat(3) * b + Rat(2) * cc, off, z, z},
          {off, mid, z, z},
          {z, z, Rat(3, 2) * tail, z},
          {z, z, z, Rat(2) * tail}},
         {{combo(10, {{1, "4^2,2"}, {-1, "8,2"}, {-2, "6,4"}, {2, "10"}})}},
         {{combo(10, {{1, "4,2^3"}, {-3, "6,2^2"}, {-3, "4^2,2"}, {6, "8,2"},
                      {5, "6,4"}, {-6, "10"}})}},
         {{combo(10, {{1, "2^5"}, {-10, "4,2^3"}, {20, "6,2^2"}, {15, "4^2,2"},
                      {-30, "8,2"}, {-20, "6,4"}, {24, "10"}})}}});
  }

  // Finite-variable oracle: the degree-6 row scalings at n = 6, 8, 10.
  Term t_row1a{{1}, P("2")}, t_row1b{{3}, P("")};
  Term t_row2{{1, 2}, P("")}, t_row3{{1, 1, 1}, P("")};
  for (int n : {6, 8, 10}) {
    std::string tag = " at n=" + std::to_string(n);
    for (const Term* t1 : {&t_row1a, &t_row1b})
      for (const Term* t2 : {&t_row1a, &t_row1b})
        c.check(finite_gram_coeff(*t1, *t2, n, SymGroup::B) == Rat(1),
                "odd-support 2x2 block should be unscaled" + tag);
    c.check(finite_gram_coeff(t_row2, t_row2, n, SymGroup::B) == Rat(n) / Rat(n - 1),
            "x1*x2^2 prefactor should be n^2/(2*binom(n,2))" + tag);
    c.check(finite_gram_coeff(t_row3, t_row3, n, SymGroup::B) ==
                Rat(6 * n * n) / Rat((n - 1) * (n - 2)),
            "x1*x2*x3 prefactor should be n^3/binom(n,3)" + tag);
  }
  return c.done();
}

// --------------------------------------------------------- criteria 8 and 9

CheckResult wrap_report(const std::string& name, const Report& rep) {
  Crit c{name};
  for (const auto& r : rep)
    c.check(r.pass, r.name + (r.detail.empty() ? "" : " (" + r.detail + ")"));
  return c.done();
}

// --------------------------------------------------------------- criterion 10

Partition random_partition(std::mt19937_64& gen, int d) {
  std::vector<int> parts;
  int left = d;
  while (left > 0) {
    int p = std::uniform_int_distribution<int>(1, left)(gen);
    parts.push_back(p);
    left -= p;
  }
  return Partition(parts);
}

CheckResult criterion_property_suites() {
  Crit c{"property-suites"};
  std::mt19937_64 gen(0xace5u);

  for (int i = 0; i < 250; ++i) {
    int d = std::uniform_int_distribution<int>(2, 9)(gen);
    Partition a = random_partition(gen, d), b = random_partition(gen, d),
              e = random_partition(gen, d);
    c.check(superdominates(a, a), "reflexivity fails for " + a.str());
    if (superdominates(a, b) && superdominates(b, a))
      c.check(a == b, "antisymmetry fails for " + a.str() + ", " + b.str());
    if (superdominates(a, b) && superdominates(b, e))
      c.check(superdominates(a, e),
              "transitivity fails for " + a.str() + ", " + b.str() + ", " + e.str());
    if (superdominates(a, b)) {
      c.check(superdominates(fuse(a, e), fuse(b, e)),
              "fusion monotonicity fails for " + a.str() + ", " + b.str());
      if (a.length() == b.length())
        c.check(dominates(a, b), "length-preserving comparability should dominate");
    }
    if (superdominates(fuse(a, e), fuse(b, e)))
      c.check(superdominates(a, b),
              "fusion cancellation fails for " + a.str() + ", " + b.str() +
                  " with " + e.str());
  }

  int roundtrips = 0;
  for (int d = 1; d <= 10; ++d)
    for (const auto& lam : enum_partitions(d)) {
      auto in_mono = powersum_to_monomial(lam);
      SymFn back(d);
      for (const auto& [mu, coef] : in_mono)
        back = back + coef * monomial_to_powersum(mu);
      c.check(back == SymFn::p(lam), "basis round trip fails for " + lam.str());
      ++roundtrips;
      SymFn m_in_p = monomial_to_powersum(lam);
      Rat lead = m_in_p.coeff(lam);
      c.check(sign(lead) > 0, "leading transition coefficient sign for " + lam.str());
      ++roundtrips;
    }
  c.check(roundtrips >= 200, "not enough basis round-trip cases");

  std::uniform_int_distribution<int> entry(-3, 3);
  for (int i = 0; i < 200; ++i) {
    int dim = std::uniform_int_distribution<int>(2, 4)(gen);
    int nrays = std::uniform_int_distribution<int>(2, dim + 2)(gen);
    Matrix rays;
    for (int r = 0; r < nrays; ++r) {
      RatVec v(dim);
      bool all_zero = true;
      for (auto& x : v) {
        x = entry(gen);
        if (sign(x) != 0) all_zero = false;
      }
      if (all_zero) v[0] = 1;
      rays.push_back(std::move(v));
    }
    Cone k = Cone::from_rays(dim, rays);
    Cone dd = dual(dual(k));
    c.check(cone_equal(k, dd), "double dual differs from the cone");
    for (const auto& r : rays)
      c.check(k.contains_point(r), "generator outside its own cone");
    for (const auto& f : k.inequalities())
      for (const auto& r : rays)
        c.check(sign(dot(f, r)) >= 0, "computed facet cuts off a generator");
  }

  std::uniform_int_distribution<int> coef(0, 4);
  int closures = 0;
  for (int d = 3; d <= 5; ++d) {
    Cone cell = trop_vandermonde(d);
    Matrix gens = cell.rays();
    Matrix lin = cell.lineality();
    for (int i = 0; i < 70; ++i) {
      auto sample = [&]() {
        RatVec x(d, Rat(0));
        for (const auto& g : gens) {
          Rat s(coef(gen));
          for (int t = 0; t < d; ++t) x[t] += s * g[t];
        }
        for (const auto& l : lin) {
          Rat s(entry(gen));
          for (int t = 0; t < d; ++t) x[t] += s * l[t];
        }
        return x;
      };
      RatVec a = sample(), b = sample(), mx(d);
      for (int t = 0; t < d; ++t) mx[t] = std::max(a[t], b[t]);
      c.check(cell.contains_point(a) && cell.contains_point(b),
              "sampled point misses the tropical cell");
      c.check(cell.contains_point(mx), "coordinatewise max leaves the cell");
      ++closures;
    }
  }
  c.check(closures >= 200, "not enough max-closure cases");
  return c.done();
}

}  // namespace

Report run_all() {
  Report rep;
  rep.push_back(criterion_order_structure());
  rep.push_back(criterion_power_sum_order());
  rep.push_back(criterion_trop_vandermonde());
  rep.push_back(criterion_trop_of_sos());
  rep.push_back(criterion_trop_bp_dual());
  rep.push_back(criterion_t_hierarchy());
  rep.push_back(criterion_pencils());
  rep.push_back(wrap_report("decic-certificate", verify_decic()));
  rep.push_back(wrap_report("quartic-certificate", verify_quartic()));
  rep.push_back(criterion_property_suites());
  return rep;
}

}  // namespace symtrop::acceptance
