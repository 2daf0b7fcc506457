#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symtrop/tropical.hpp"

using namespace symtrop;

namespace {

std::mt19937_64 gen(271828);

RatVec vec(std::vector<long> v) {
  RatVec r;
  for (long x : v) r.emplace_back(x);
  return r;
}

RatVec max_of(const RatVec& a, const RatVec& b) {
  RatVec m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

RatVec sample_point(const Cone& c) {
  std::uniform_int_distribution<int> pos(0, 4), any(-3, 3);
  RatVec x(c.rays().empty() ? c.lineality()[0].size() : c.rays()[0].size(), Rat(0));
  for (const auto& g : c.rays()) {
    Rat s(pos(gen));
    for (size_t i = 0; i < x.size(); ++i) x[i] += s * g[i];
  }
  for (const auto& l : c.lineality()) {
    Rat s(any(gen));
    for (size_t i = 0; i < x.size(); ++i) x[i] += s * l[i];
  }
  return x;
}

}  // namespace

TEST_CASE("coordinate labels for dual cones") {
  auto c5 = even_coords(5);
  std::vector<Partition> expect = {
      Partition::parse("2^5"),  Partition::parse("4,2^3"), Partition::parse("6,2^2"),
      Partition::parse("4^2,2"), Partition::parse("8,2"),  Partition::parse("6,4"),
      Partition::parse("10")};
  CHECK(c5 == expect);
  CHECK(even_coords(3).size() == 3);
}

TEST_CASE("readable inequality rendering") {
  RatVec row = vec({1, -2, 1});
  CHECK(inequality_str(row, even_coords(3)) == "y[2,2,2] + y[6] >= 2*y[4,2]");
}

TEST_CASE("Vandermonde cell facets for small d") {
  Cone c3 = trop_vandermonde(3);
  Cone h3 = Cone::from_inequalities(3, {vec({1, -2, 1}), vec({0, 3, -2})});
  CHECK(cone_equal(c3, h3));
  Cone c4 = trop_vandermonde(4);
  Cone h4 = Cone::from_inequalities(
      4, {vec({1, -2, 1, 0}), vec({0, 1, -2, 1}), vec({0, 0, 4, -3})});
  CHECK(cone_equal(c4, h4));
  Cone c5 = trop_vandermonde(5);
  CHECK(c5.inequalities().size() == 4);
}

TEST_CASE("Vandermonde cell V-side data") {
  for (int d = 3; d <= 6; ++d) {
    auto [rays, lin] = trop_vandermonde_vrep(d);
    CHECK(int(rays.size()) == d - 1);
    CHECK(lin.size() == 1);
    Cone cell = trop_vandermonde(d);
    CHECK(cone_equal(cell, Cone::from_rays(d, rays, lin)));
  }
}

TEST_CASE("max closure and tropical hull of the cell") {
  for (int d = 3; d <= 5; ++d) {
    Cone cell = trop_vandermonde(d);
    RatVec alpha(d);
    for (int i = 0; i < d; ++i) alpha[i] = i + 1;
    // Already max-closed: closure is a no-op.
    CHECK(cone_equal(max_closure(cell, alpha), cell));
  }
  // Dual-side cones carry the all-ones direction, so the tropical conical
  // hull fixes them.
  for (int d = 2; d <= 3; ++d) {
    Cone bp = trop_bp_dual(d);
    CHECK(cone_equal(tcone(bp), bp));
    Cone t2 = t_k_cone(d, 2);
    CHECK(cone_equal(tcone(t2), t2));
  }
}

TEST_CASE("max closure grows a non-closed cone") {
  // span{(1,1,1)} + cone{(0,1,2)} misses max((0,1,2),(1,1,1)) = (1,1,2).
  Cone m = Cone::from_rays(3, {vec({0, 1, 2})}, {vec({1, 1, 1})});
  CHECK(!m.contains_point(vec({1, 1, 2})));
  Cone closed = max_closure(m, vec({1, 1, 1}));
  CHECK(closed.contains(m));
  CHECK(closed.contains_point(vec({1, 1, 2})));
  CHECK(!cone_equal(closed, m));
}

TEST_CASE("closure under coordinatewise max, sampled") {
  int cases = 0;
  for (int d = 3; d <= 5; ++d) {
    Cone cell = trop_vandermonde(d);
    for (int i = 0; i < 80; ++i) {
      RatVec a = sample_point(cell), b = sample_point(cell);
      CHECK(cell.contains_point(a));
      CHECK(cell.contains_point(b));
      CHECK(cell.contains_point(max_of(a, b)));
      ++cases;
    }
    Cone bp = trop_bp_dual(d);
    for (int i = 0; i < 20; ++i) {
      RatVec a = sample_point(bp), b = sample_point(bp);
      CHECK(bp.contains_point(max_of(a, b)));
      ++cases;
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("double hull reproduces the cell") {
  for (int d = 3; d <= 5; ++d) {
    RatVec alpha(d), ones(d, Rat(1));
    for (int i = 0; i < d; ++i) alpha[i] = i + 1;
    RatVec neg = alpha;
    for (auto& x : neg) x = -x;
    auto dh = double_hull(Cone::from_rays(d, {ones, alpha, neg}), alpha);
    CHECK(cone_equal(dh.cone, trop_vandermonde(d)));
    CHECK(dh.iterations <= 4);
    auto dh2 = double_hull(Cone::from_rays(d, {ones, alpha, neg}));
    CHECK(cone_equal(dh2.cone, dh.cone));
  }
}

TEST_CASE("hierarchy rows are primitive, sorted and order-driven") {
  for (int d = 2; d <= 4; ++d)
    for (int k = 1; k <= 3; ++k) {
      Matrix rows = t_k_rows(d, k);
      CHECK(std::is_sorted(rows.begin(), rows.end(), lex_less));
      for (const auto& r : rows) {
        CHECK(r == primitive(r));
        Rat sum(0);
        for (const Rat& x : r) sum += x;
        CHECK(sign(sum) == 0);  // coefficients sum to zero in every row
      }
    }
}

TEST_CASE("degree-4 hierarchy stabilizes immediately") {
  Cone t1 = t_k_cone(2, 1);
  CHECK(t1.inequalities() == Matrix{vec({1, -1})});
  CHECK(cone_equal(t1, trop_bp_dual(2)));
  auto tau = stabilization_tau(2, 3);
  CHECK(tau.certified);
  CHECK(tau.tau == 1);
}

TEST_CASE("degree-6 hierarchy") {
  Cone t1 = t_k_cone(3, 1);
  CHECK(t1.inequalities() == Matrix{vec({0, 1, -1}), vec({1, -1, 0})});
  Cone t2 = t_k_cone(3, 2);
  Cone expect = Cone::from_inequalities(3, {vec({1, -2, 1}), vec({0, 1, -1})});
  CHECK(cone_equal(t2, expect));
  CHECK(t1.contains(t2));
  CHECK(!t2.contains(t1));
  CHECK(cone_equal(t2, trop_bp_dual(3)));
}

TEST_CASE("linear images of cones") {
  Cone q = Cone::from_rays(2, {vec({1, 0}), vec({1, 1})});
  Matrix m = {vec({1, 0}), vec({0, 1}), vec({1, 1})};
  Cone img = apply_linear(m, q);
  CHECK(img.contains_point(vec({1, 0, 1})));
  CHECK(img.contains_point(vec({1, 1, 2})));
  CHECK(img.rays().size() == 2);
}

TEST_CASE("multiplicity-vector map") {
  Matrix m = trop_map_matrix(3);
  // Rows follow revlex order (1^3), (2,1), (3).
  CHECK(m == Matrix{vec({3, 0, 0}), vec({1, 1, 0}), vec({0, 0, 1})});
}
