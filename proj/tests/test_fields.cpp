#include <doctest.h>

#include <random>

#include "sb/errors.hpp"
#include "sb/tower.hpp"
#include "test_helpers.hpp"

using namespace sb;
using sbt::random_base;
using sbt::random_element;
using sbt::tower_uv;
using sbt::tower_uw;

TEST_CASE("cyclotomic arithmetic") {
  Cyclotomic w = Cyclotomic::omega();
  CHECK(w * w * w == Cyclotomic::one());
  CHECK(w * w == -Cyclotomic::one() - w);
  Cyclotomic x(mpq_class(3, 2), mpq_class(-5, 7));
  CHECK(x * x.inverse() == Cyclotomic::one());
  CHECK(Cyclotomic::omega_pow(5) == w * w);
}

TEST_CASE("poly gcd and division") {
  Poly u = Poly::variable(0), v = Poly::variable(1);
  Poly a = (u + v).pow(2) * (u - v);
  Poly b = (u + v) * (u * u + Poly(1L));
  Poly g = Poly::gcd(a, b);
  CHECK(g == (u + v));
  CHECK(a.divexact(u + v) == (u + v) * (u - v));
  CHECK(!(u * v + Poly(1L)).divide(u).has_value());
}

TEST_CASE("poly cube root") {
  Poly u = Poly::variable(0), v = Poly::variable(1);
  Poly p = (u * v * v + u * Cyclotomic(2) + Poly(3L)).pow(3);
  auto r = p.cbrt();
  REQUIRE(r.has_value());
  CHECK(*r * *r * *r == p);
  CHECK(!(p * u).cbrt().has_value());
}

TEST_CASE("tower_make validates layers") {
  CHECK_NOTHROW(tower_uv());
  auto tw = tower_uw();
  CHECK(tw->num_layers() == 2);
  CHECK_THROWS_AS(FieldTower::make({"u"}, {{"t", RatFun()}}), ZeroRadicand);
  CHECK_THROWS_AS(FieldTower::make({"u"}, {{"u", RatFun::variable(0)}}), DuplicateGeneratorName);
  CHECK_THROWS_AS(FieldTower::make({"u"}, {{"a", RatFun::variable(0)},
                                           {"b", RatFun::variable(0)},
                                           {"c", RatFun::variable(0)}}),
                  TooManyLayers);
  // a cube radicand is rejected
  CHECK_THROWS_AS(FieldTower::make({"u"}, {{"t", RatFun::variable(0).pow(3)}}), error);
}

TEST_CASE("galois action basics") {
  auto tw = tower_uv();
  TowerElement t = tw->generator(0);
  GaloisElement g{1, 0};
  CHECK(tw->apply(g, t) == t * tw->from_base(RatFun(Cyclotomic::omega())));
  TowerElement c = tw->from_base(RatFun::variable(1));
  CHECK(tw->apply(g, c) == c);

  auto tw2 = tower_uw();
  TowerElement x = tw2->from_base(RatFun::variable(1)) * tw2->generator(0).pow(2) * tw2->generator(1);
  GaloisElement gp{0, 1};
  CHECK(tw2->apply(gp, x) == x * tw2->from_base(RatFun(Cyclotomic::omega())));
}

TEST_CASE("norm examples") {
  auto tw = tower_uv();
  GaloisElement g{1, 0};
  CHECK(tw->norm(tw->generator(0), g) == tw->from_base(RatFun::variable(0)));
  std::mt19937_64 rng(7);
  TowerElement c = tw->from_base(random_base(rng, 2));
  CHECK(tw->norm(c, g) == c * c * c);

  auto tw2 = tower_uw();
  RatFun u = RatFun::variable(0), w = RatFun::variable(1);
  TowerElement b = tw2->from_base(w) * tw2->generator(0).pow(2) * tw2->generator(1);
  CHECK(tw2->norm(b, GaloisElement{1, 0}) == tw2->from_base(u * u * w.pow(4)));
}

TEST_CASE("galois/norm properties") {
  auto tw2 = tower_uw();
  std::mt19937_64 rng(42);
  GaloisElement g{1, 0}, gp{0, 1};
  for (int k = 0; k < 25; ++k) {
    TowerElement x = random_element(tw2, rng), y = random_element(tw2, rng);
    CHECK(tw2->apply(g, x + y) == tw2->apply(g, x) + tw2->apply(g, y));
    CHECK(tw2->apply(g, x * y) == tw2->apply(g, x) * tw2->apply(g, y));
    CHECK(tw2->apply(g, tw2->apply(g, tw2->apply(g, x))) == x);
    CHECK(tw2->apply(g, tw2->apply(gp, x)) == tw2->apply(gp, tw2->apply(g, x)));
    TowerElement n = tw2->norm(x, g);
    CHECK(tw2->apply(g, n) == n);
    CHECK(tw2->norm(x * y, g) == tw2->norm(x, g) * tw2->norm(y, g));
  }
}

TEST_CASE("inversion is exact") {
  auto tw2 = tower_uw();
  std::mt19937_64 rng(9);
  for (int k = 0; k < 15; ++k) {
    TowerElement x = random_element(tw2, rng);
    CHECK((x * x.inverse()).is_one());
  }
  auto tw = tower_uv();
  for (int k = 0; k < 10; ++k) {
    TowerElement x = random_element(tw, rng);
    CHECK((x * x.inverse()).is_one());
  }
}

TEST_CASE("hilbert90 solves the cocycle") {
  auto tw = tower_uv();
  GaloisElement g{1, 0};
  auto sol = tw->hilbert90(tw->one(), g);
  CHECK(sol.lambda == tw->constant(3));

  // mu = t/g(t) = omega^-1
  TowerElement t = tw->generator(0);
  TowerElement mu = t / tw->apply(g, t);
  auto sol2 = tw->hilbert90(mu, g);
  CHECK(sol2.lambda == mu * tw->apply(g, sol2.lambda));

  CHECK_THROWS_AS(tw->hilbert90(tw->constant(2), g), NormNotOne);

  auto tw2 = tower_uw();
  std::mt19937_64 rng(1234);
  for (int k = 0; k < 20; ++k) {
    TowerElement x = random_element(tw2, rng);
    GaloisElement s = (k % 2) ? GaloisElement{1, 0} : GaloisElement{0, 1};
    TowerElement m = x / tw2->apply(s, x);
    auto r = tw2->hilbert90(m, s);
    CHECK(r.lambda == m * tw2->apply(s, r.lambda));
  }
}

TEST_CASE("cube test") {
  auto tw = tower_uv();
  RatFun u = RatFun::variable(0), v = RatFun::variable(1);
  auto c1 = tw->is_cube(u.pow(3) * v.pow(6));
  CHECK(c1.status == CubeStatus::Cube);
  CHECK(*c1.witness == u * v * v);

  auto c2 = tw->is_cube(v.inverse());
  CHECK(c2.status == CubeStatus::NotCube);

  auto c3 = tw->is_cube(RatFun(1L));
  CHECK(c3.status == CubeStatus::Cube);
  CHECK(c3.witness->is_one());

  CHECK_THROWS_AS(tw->is_cube(RatFun()), ZeroInput);

  std::mt19937_64 rng(77);
  for (int k = 0; k < 15; ++k) {
    RatFun y = random_base(rng, 2) / random_base(rng, 2);
    auto c = tw->is_cube(y.pow(3));
    CHECK(c.status == CubeStatus::Cube);
    CHECK(c.witness->pow(3) == y.pow(3));
  }
}
