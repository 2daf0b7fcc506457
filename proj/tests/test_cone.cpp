#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symtrop/cone.hpp"

using namespace symtrop;

namespace {

std::mt19937_64 gen(424242);

RatVec vec(std::vector<long> v) {
  RatVec r;
  for (long x : v) r.emplace_back(x);
  return r;
}

Matrix rnd_rays(int dim, int count) {
  std::uniform_int_distribution<int> entry(-3, 3);
  Matrix rows;
  for (int i = 0; i < count; ++i) {
    RatVec v(dim, Rat(0));
    bool nz = false;
    for (auto& x : v) {
      x = entry(gen);
      if (sign(x) != 0) nz = true;
    }
    if (!nz) v[std::uniform_int_distribution<int>(0, dim - 1)(gen)] = 1;
    rows.push_back(std::move(v));
  }
  return rows;
}

}  // namespace

TEST_CASE("primitive scaling") {
  CHECK(primitive(RatVec{Rat(2, 3), Rat(-4, 3)}) == vec({1, -2}));
  CHECK(primitive(RatVec{Rat(6), Rat(9), Rat(15)}) == vec({2, 3, 5}));
  CHECK(primitive(RatVec{Rat(0), Rat(0)}) == vec({0, 0}));
}

TEST_CASE("orthant from either side") {
  Cone h = Cone::from_inequalities(2, {vec({1, 0}), vec({0, 1})});
  CHECK(h.rays() == Matrix{vec({0, 1}), vec({1, 0})});
  CHECK(h.lineality().empty());
  Cone v = Cone::from_rays(2, {vec({1, 0}), vec({0, 1})});
  CHECK(cone_equal(h, v));
  CHECK(v.inequalities().size() == 2);
  CHECK(h.contains_point(vec({3, 5})));
  CHECK(!h.contains_point(vec({-1, 5})));
}

TEST_CASE("redundant inequalities are dropped") {
  Cone c = Cone::from_inequalities(
      2, {vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({2, 3})});
  CHECK(c.inequalities().size() == 2);
}

TEST_CASE("implicit equations are detected") {
  Cone c = Cone::from_inequalities(3, {vec({1, 0, 0}), vec({-1, 0, 0}), vec({0, 1, 0})});
  CHECK(c.equations() == Matrix{vec({1, 0, 0})});
  CHECK(c.rays() == Matrix{vec({0, 1, 0})});
  CHECK(c.lineality() == Matrix{vec({0, 0, 1})});
}

TEST_CASE("lineality from opposite rays") {
  Cone c = Cone::from_rays(3, {vec({1, 1, 0}), vec({-1, -1, 0}), vec({0, 0, 1})});
  CHECK(c.lineality().size() == 1);
  CHECK(c.rays().size() == 1);
  CHECK(c.contains_point(vec({-5, -5, 2})));
  CHECK(!c.contains_point(vec({1, 0, 0})));
}

TEST_CASE("full space and trivial cone") {
  Cone full = Cone::from_inequalities(3, {});
  CHECK(full.lineality().size() == 3);
  CHECK(full.inequalities().empty());
  Cone zero = Cone::from_rays(3, {});
  CHECK(zero.rays().empty());
  CHECK(zero.contains_point(vec({0, 0, 0})));
  CHECK(!zero.contains_point(vec({1, 0, 0})));
}

TEST_CASE("three-dimensional cell with adjacency pruning") {
  // Square-based cone: four facets, four extreme rays.
  Matrix ineq = {vec({1, 0, 1}), vec({-1, 0, 1}), vec({0, 1, 1}), vec({0, -1, 1})};
  Cone c = Cone::from_inequalities(3, ineq);
  CHECK(c.rays().size() == 4);
  for (const auto& r : c.rays()) {
    CHECK(r[2] == Rat(1));
  }
  Cone back = Cone::from_rays(3, c.rays());
  CHECK(cone_equal(c, back));
  CHECK(back.inequalities().size() == 4);
}

TEST_CASE("double dual is the identity, randomized") {
  for (int i = 0; i < 220; ++i) {
    int dim = std::uniform_int_distribution<int>(2, 4)(gen);
    Cone c = Cone::from_rays(dim, rnd_rays(dim, std::uniform_int_distribution<int>(1, dim + 3)(gen)));
    CHECK(cone_equal(c, dual(dual(c))));
  }
}

TEST_CASE("facets are valid and tight, randomized") {
  for (int i = 0; i < 220; ++i) {
    int dim = std::uniform_int_distribution<int>(2, 4)(gen);
    Matrix rays = rnd_rays(dim, std::uniform_int_distribution<int>(2, dim + 3)(gen));
    Cone c = Cone::from_rays(dim, rays);
    for (const auto& f : c.inequalities()) {
      int tight = 0;
      for (const auto& r : rays) {
        Rat v = dot(f, r);
        CHECK(sign(v) >= 0);
        if (sign(v) == 0) ++tight;
      }
      CHECK(tight >= 1);
    }
    for (const auto& r : rays) CHECK(c.contains_point(r));
  }
}

TEST_CASE("canonical form is construction independent") {
  for (int i = 0; i < 200; ++i) {
    int dim = 3;
    Matrix rays = rnd_rays(dim, 4);
    Matrix shuffled = rays;
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    // Doubling a generator must not change anything.
    shuffled.push_back(rays[0]);
    Cone a = Cone::from_rays(dim, rays), b = Cone::from_rays(dim, shuffled);
    CHECK(a.rays() == b.rays());
    CHECK(a.lineality() == b.lineality());
    CHECK(a.inequalities() == b.inequalities());
    CHECK(a.equations() == b.equations());
  }
}

TEST_CASE("intersection and Minkowski sum") {
  Cone a = Cone::from_inequalities(2, {vec({1, 0})});   // right half plane
  Cone b = Cone::from_inequalities(2, {vec({0, 1})});   // upper half plane
  Cone both = intersect(a, b);
  CHECK(cone_equal(both, Cone::from_rays(2, {vec({1, 0}), vec({0, 1})})));
  Cone sum = minkowski_sum(Cone::from_rays(2, {vec({1, 0})}),
                           Cone::from_rays(2, {vec({0, 1})}));
  CHECK(cone_equal(sum, both));
  for (int i = 0; i < 200; ++i) {
    Cone c = Cone::from_rays(3, rnd_rays(3, 3)), d = Cone::from_rays(3, rnd_rays(3, 3));
    Cone meet = intersect(c, d), join = minkowski_sum(c, d);
    CHECK(c.contains(meet));
    CHECK(d.contains(meet));
    CHECK(join.contains(c));
    CHECK(join.contains(d));
  }
}

TEST_CASE("duality pairs facets with generators") {
  Matrix rays = {vec({1, 0, 0}), vec({1, 2, 0}), vec({1, 0, 3})};
  Cone c = Cone::from_rays(3, rays);
  Cone cd = dual(c);
  for (const auto& y : cd.rays())
    for (const auto& r : rays) CHECK(sign(dot(y, r)) >= 0);
  CHECK(cone_equal(dual(cd), c));
}
