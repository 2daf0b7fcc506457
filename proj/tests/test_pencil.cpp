#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symtrop/pencil.hpp"
#include "symtrop/tropical.hpp"

using namespace symtrop;

namespace {

Partition P(const std::string& s) { return Partition::parse(s); }

SymFn combo(int degree, std::vector<std::pair<Rat, std::string>> terms) {
  SymFn f(degree);
  for (const auto& [c, name] : terms) f.add_term(P(name), c);
  return f;
}

}  // namespace

TEST_CASE("limit entries vanish across different supports") {
  Term a{{1, 2}, P("")}, b{{3}, P("")};
  CHECK(limit_gram_entry(a, b).is_zero());
  Term c{{1}, P("2")}, d{{1, 1, 1}, P("")};
  CHECK(limit_gram_entry(c, d).is_zero());
}

TEST_CASE("limit entries vanish on odd exponent sums in the signed case") {
  Term a{{1}, P("2")}, b{{2}, P("1")};
  CHECK(limit_gram_entry(a, b, SymGroup::B).is_zero());
  SymFn s = limit_gram_entry(a, b, SymGroup::S);
  CHECK(s == monomial_to_powersum(P("3")) * SymFn::p(P("2,1")));
}

TEST_CASE("limit entries for the degree-6 rows") {
  Term v1a{{1}, P("2")}, v1b{{3}, P("")};
  CHECK(limit_gram_entry(v1a, v1a) == SymFn::p(P("2,2,2")));
  CHECK(limit_gram_entry(v1a, v1b) == SymFn::p(P("4,2")));
  CHECK(limit_gram_entry(v1b, v1b) == SymFn::p(P("6")));
  Term v2{{1, 2}, P("")};
  CHECK(limit_gram_entry(v2, v2) == combo(6, {{Rat(1), "4,2"}, {Rat(-1), "6"}}));
  Term v3{{1, 1, 1}, P("")};
  CHECK(limit_gram_entry(v3, v3) ==
        combo(6, {{Rat(1), "2,2,2"}, {Rat(-3), "4,2"}, {Rat(2), "6"}}));
}

TEST_CASE("repeated-part factorials in limit entries") {
  // x1 x2^2 x3^2 against itself: exponent sum (2,4,4), so the 4^2 multiplicity
  // contributes 2!.
  Term t{{1, 2, 2}, P("")};
  SymFn e = limit_gram_entry(t, t);
  SymFn expect = Rat(2) * monomial_to_powersum(P("4,4,2"));
  CHECK(e == expect);
}

TEST_CASE("finite coefficients converge with the expected rate") {
  // For terms with equal support, n^l / #arrangements equals
  // prod(multiplicities!) * n^l / (n falling factorial length).
  struct Case {
    Term t;
    Rat mult_fact;
  } cases[] = {
      {Term{{1, 2}, P("")}, Rat(1)},
      {Term{{1, 1, 1}, P("")}, Rat(6)},
      {Term{{1, 2, 2}, P("")}, Rat(2)},
      {Term{{1, 1, 1, 1}, P("")}, Rat(24)},
  };
  for (const auto& [t, mult_fact] : cases) {
    int l = int(t.alpha.size());
    for (int n : {5, 7, 9, 12}) {
      Rat c = finite_gram_coeff(t, t, n, SymGroup::B);
      Rat falling(1), power(1);
      for (int i = 0; i < l; ++i) {
        falling *= Rat(n - i);
        power *= Rat(n);
      }
      CHECK(c * falling == mult_fact * power);
    }
  }
}

TEST_CASE("finite coefficients for the unscaled degree-6 block") {
  Term a{{1}, P("2")}, b{{3}, P("")};
  for (int n : {4, 6, 11}) {
    CHECK(finite_gram_coeff(a, a, n, SymGroup::B) == Rat(1));
    CHECK(finite_gram_coeff(a, b, n, SymGroup::B) == Rat(1));
    CHECK(finite_gram_coeff(b, b, n, SymGroup::B) == Rat(1));
  }
}

TEST_CASE("degree-4 pencils") {
  GramPencil b4 = build_pencil("B4");
  REQUIRE(b4.blocks.size() == 3);
  CHECK(b4.blocks[0][0][0] == SymFn::p(P("2,2")));
  CHECK(b4.blocks[1][0][0] == SymFn::p(P("4")));
  CHECK(b4.blocks[2][0][0] == combo(4, {{Rat(1), "2,2"}, {Rat(-1), "4"}}));

  GramPencil s4 = build_pencil("S4");
  REQUIRE(s4.blocks.size() == 3);
  CHECK(s4.group == SymGroup::S);
  CHECK(s4.blocks[0][0][0] == SymFn::p(P("1,1,1,1")));
  CHECK(s4.blocks[0][0][1] == SymFn::p(P("2,1,1")));
  CHECK(s4.blocks[0][1][1] == SymFn::p(P("2,2")));
  CHECK(s4.blocks[1][0][0] == SymFn::p(P("2,1,1")));
  CHECK(s4.blocks[1][0][1] == SymFn::p(P("3,1")));
  CHECK(s4.blocks[1][1][1] == SymFn::p(P("4")));
  CHECK(s4.blocks[2][0][0] == combo(4, {{Rat(1), "2,2"}, {Rat(-1), "4"}}));
}

TEST_CASE("blocks are symmetric with matching degrees") {
  for (const char* kind : {"B4", "B6", "B8", "B10", "S4"}) {
    GramPencil p = build_pencil(kind);
    CHECK(p.blocks.size() == p.labels.size());
    for (const auto& block : p.blocks)
      for (size_t i = 0; i < block.size(); ++i)
        for (size_t j = 0; j < block.size(); ++j) {
          CHECK(block[i][j] == block[j][i]);
          if (!block[i][j].is_zero()) CHECK(block[i][j].degree() == 2 * p.d);
        }
  }
}

TEST_CASE("congruence transform") {
  GramPencil b8 = build_pencil("B8");
  // The transformed all-odd-support block is block diagonal.
  CHECK(b8.blocks[2][0][2].is_zero());
  CHECK(b8.blocks[2][1][2].is_zero());
  CHECK(b8.blocks[2][2][2] ==
        combo(8, {{Rat(2), "6,2"}, {Rat(-2), "4,4"}}));
  // Identity congruence is a no-op.
  Block id_block = b8.blocks[0];
  std::vector<RatVec> eye = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  Block same = apply_congruence(id_block, eye);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) CHECK(same[i][j] == id_block[i][j]);
  CHECK_THROWS_AS(apply_congruence(id_block, {{Rat(1)}}), std::invalid_argument);
}

TEST_CASE("tropicalized SOS dual in degree 6") {
  Cone t = trop_of_sos(build_pencil("B6"));
  Cone expect = Cone::from_inequalities(
      3, {{Rat(1), Rat(-2), Rat(1)}, {Rat(0), Rat(1), Rat(-1)}});
  CHECK(cone_equal(t, expect));
}

TEST_CASE("tropicalized SOS dual in degree 4") {
  Cone t = trop_of_sos(build_pencil("B4"));
  CHECK(t.inequalities() == Matrix{{Rat(1), Rat(-1)}});
}

TEST_CASE("non-unique support maximum is reported") {
  // (10,2) and (4^3) are incomparable, so a diagonal entry supported on both
  // with positive signs admits no linearization.
  GramPencil bad;
  bad.d = 6;
  bad.group = SymGroup::B;
  bad.labels = {"broken"};
  SymFn e(12);
  e.add_term(P("10,2"), Rat(1));
  e.add_term(P("4^3"), Rat(1));
  e.add_term(P("12"), Rat(-1));
  bad.blocks = {{{e}}};
  bad.vectors = {{Term{{}, P("")}}};
  CHECK_THROWS_AS(trop_of_sos(bad), std::runtime_error);

  // A comparable pair on the diagonal linearizes fine.
  GramPencil ok;
  ok.d = 5;
  ok.group = SymGroup::B;
  ok.labels = {"fine"};
  SymFn g(10);
  g.add_term(P("8,2"), Rat(1));
  g.add_term(P("6,4"), Rat(-1));
  ok.blocks = {{{g}}};
  ok.vectors = {{Term{{}, P("")}}};
  CHECK_NOTHROW(trop_of_sos(ok));
}

TEST_CASE("pretty printing") {
  std::string s = pencil_pretty(build_pencil("B6"));
  CHECK(s.find("M_v(1,0)") != std::string::npos);
  CHECK(s.find("p(2^3)") != std::string::npos);
}
