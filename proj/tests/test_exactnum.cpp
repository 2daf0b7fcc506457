#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symtrop/quadratic.hpp"
#include "symtrop/rational.hpp"
#include "symtrop/unipoly.hpp"

using namespace symtrop;

namespace {

std::mt19937_64 gen(123457);

Rat rnd_rat(int lo = -12, int hi = 12, int dmax = 7) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, dmax);
  return Rat(num(gen)) / Rat(den(gen));
}

UniPoly<Rat> rnd_poly(int max_deg) {
  int d = std::uniform_int_distribution<int>(0, max_deg)(gen);
  std::vector<Rat> c(d + 1);
  for (auto& x : c) x = rnd_rat(-6, 6, 4);
  return UniPoly<Rat>(std::move(c));
}

}  // namespace

TEST_CASE("rational parse and print") {
  CHECK(rat_parse("3/4") == Rat(3, 4));
  CHECK(rat_parse("-14/21") == Rat(-2, 3));
  CHECK(rat_parse("7") == Rat(7));
  CHECK(rat_str(Rat(-2, 3)) == "-2/3");
  CHECK(rat_pretty(Rat(5)) == "5");
  CHECK(rat_pretty(Rat(1, 2)) == "1/2");
  CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
}

TEST_CASE("sign of a + b*sqrt(r) against interval brackets") {
  // Rational brackets tight enough for the sampled magnitudes.
  struct Bracket {
    int r;
    Rat lo, hi;
  };
  const Bracket brackets[] = {
      {2, Rat(141421356, 100000000), Rat(141421357, 100000000)},
      {3, Rat(173205080, 100000000), Rat(173205081, 100000000)},
      {5, Rat(223606797, 100000000), Rat(223606798, 100000000)},
  };
  int decided = 0;
  for (int i = 0; i < 400; ++i) {
    const auto& br = brackets[std::uniform_int_distribution<int>(0, 2)(gen)];
    Rat a = rnd_rat(), b = rnd_rat();
    int lo = sign(Rat(a + b * br.lo)), hi = sign(Rat(a + b * br.hi));
    int s = sign_plus_sqrt(a, b, Rat(br.r));
    if (lo == hi && lo != 0) {
      CHECK(s == lo);
      ++decided;
    }
    // Exact zero iff a and b*sqrt(r) cancel, impossible for rational b != 0
    // unless both vanish.
    if (sign(a) == 0 && sign(b) == 0) CHECK(s == 0);
    if (sign(b) != 0) CHECK(s != 0);
  }
  CHECK(decided >= 200);
}

TEST_CASE("quadratic field axioms") {
  for (int i = 0; i < 250; ++i) {
    QSqrt2 x(rnd_rat(), rnd_rat()), y(rnd_rat(), rnd_rat()), z(rnd_rat(), rnd_rat());
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    if (!(x == QSqrt2(0))) {
      CHECK(x * x.inverse() == QSqrt2(1));
      CHECK((y / x) * x == y);
    }
  }
  CHECK(sign(QSqrt2(Rat(-1), Rat(1))) > 0);   // sqrt2 - 1 > 0
  CHECK(sign(QSqrt2(Rat(3, 2), Rat(-1))) > 0);  // 3/2 > sqrt2
  CHECK(sign(QSqrt3(Rat(-7, 4), Rat(1))) < 0);  // sqrt3 < 7/4
}

TEST_CASE("polynomial division invariant") {
  for (int i = 0; i < 250; ++i) {
    UniPoly<Rat> p = rnd_poly(7), d = rnd_poly(4);
    if (d.is_zero()) continue;
    auto [q, r] = divmod(p, d);
    CHECK(p == q * d + r);
    if (!r.is_zero()) CHECK(r.degree() < d.degree());
  }
}

TEST_CASE("gcd divides both arguments") {
  for (int i = 0; i < 200; ++i) {
    UniPoly<Rat> a = rnd_poly(5), b = rnd_poly(5);
    if (a.is_zero() || b.is_zero()) continue;
    UniPoly<Rat> g = poly_gcd(a, b);
    CHECK(divmod(a, g).second.is_zero());
    CHECK(divmod(b, g).second.is_zero());
  }
}

TEST_CASE("squarefree decomposition reassembles the polynomial") {
  for (int i = 0; i < 200; ++i) {
    UniPoly<Rat> p = rnd_poly(3);
    if (p.is_zero() || p.degree() == 0) continue;
    // Force repeated factors.
    UniPoly<Rat> q = p * p * rnd_poly(2);
    if (q.is_zero() || q.degree() == 0) continue;
    auto fs = squarefree_decomposition(q);
    UniPoly<Rat> prod = UniPoly<Rat>::constant(Rat(1));
    for (size_t k = 0; k < fs.size(); ++k)
      for (size_t rep = 0; rep <= k; ++rep) prod = prod * fs[k];
    CHECK(prod == q.monic());
    for (const auto& f : fs)
      if (f.degree() > 0) CHECK(poly_gcd(f, f.derivative()).degree() == 0);
  }
}

TEST_CASE("Sturm root counting on products of known factors") {
  auto lin = [](long r) { return UniPoly<Rat>({Rat(-r), Rat(1)}); };
  UniPoly<Rat> no_root({Rat(1), Rat(0), Rat(1)});  // x^2 + 1
  CHECK(sturm_real_roots(no_root) == 0);
  CHECK(sturm_real_roots(UniPoly<Rat>({Rat(-2), Rat(0), Rat(1)})) == 2);
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<int> cnt(0, 4), root(-5, 5);
    std::set<long> roots;
    UniPoly<Rat> p = UniPoly<Rat>::constant(Rat(1));
    int k = cnt(gen);
    for (int j = 0; j < k; ++j) {
      long r = root(gen);
      roots.insert(r);
      p = p * lin(r);
      if (j % 2 == 0) p = p * lin(r);  // some repeated roots
    }
    if (std::uniform_int_distribution<int>(0, 1)(gen)) p = p * no_root;
    CHECK(sturm_real_roots(p) == int(roots.size()));
  }
}

TEST_CASE("global nonnegativity decision") {
  UniPoly<Rat> x({Rat(0), Rat(1)});
  auto lin = [](long r) { return UniPoly<Rat>({Rat(-r), Rat(1)}); };
  CHECK(globally_nonnegative(UniPoly<Rat>({Rat(1), Rat(0), Rat(1)})));
  CHECK(!globally_nonnegative(UniPoly<Rat>({Rat(-1), Rat(0), Rat(1)})));
  CHECK(!globally_nonnegative(x));

  // Distinct triple roots: odd multiplicities at two places, sign changes
  // even though the real-root counts of p and its squarefree part agree.
  UniPoly<Rat> tricky = lin(1) * lin(1) * lin(1) * lin(2) * lin(2) * lin(2);
  CHECK(!globally_nonnegative(tricky));
  CHECK(globally_nonnegative(lin(1) * lin(1) * lin(2) * lin(2) * lin(2) * lin(2)));

  for (int i = 0; i < 220; ++i) {
    UniPoly<Rat> p = rnd_poly(4);
    if (p.is_zero()) continue;
    CHECK(globally_nonnegative(p * p));
    UniPoly<Rat> neg = Rat(-1) * (p * p);
    if (neg.degree() >= 1) CHECK(!globally_nonnegative(neg * UniPoly<Rat>({Rat(1)})));
  }
}

TEST_CASE("polynomials over a quadratic field") {
  // (x - sqrt2)(x + sqrt2) = x^2 - 2 has two real roots.
  UniPoly<QSqrt2> f({QSqrt2(Rat(-2)), QSqrt2(0), QSqrt2(1)});
  CHECK(sturm_real_roots(f) == 2);
  UniPoly<QSqrt2> g({QSqrt2(Rat(0), Rat(-1)), QSqrt2(1)});  // x - sqrt2
  CHECK(divmod(f, g).second.is_zero());
  CHECK(f.eval(QSqrt2::sqrt_radicand()) == QSqrt2(0));
}
