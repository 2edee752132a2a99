#include <doctest.h>

#include <random>

#include "sb/errors.hpp"
#include "sb/mat3.hpp"
#include "test_helpers.hpp"

using namespace sb;
using sbt::random_element;
using sbt::tower_uv;

namespace {

Mat3 random_matrix(const TowerPtr& tw, std::mt19937_64& rng) {
  for (;;) {
    Mat3 a(tw);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a.at(i, j) = random_element(tw, rng, true);
    if (!a.det().is_zero()) return a;
  }
}

}  // namespace

TEST_CASE("invert basics") {
  auto tw = tower_uv();
  Mat3 id = Mat3::identity(tw);
  auto [inv, d] = id.invert();
  CHECK(inv == id);
  CHECK(d.is_one());

  TowerElement a = tw->from_base(RatFun::variable(1));
  TowerElement b = tw->generator(0);
  TowerElement c = tw->constant(5);
  Mat3 dg = Mat3::diagonal(a, b, c);
  auto [dinv, dd] = dg.invert();
  CHECK(dd == a * b * c);
  CHECK(dinv == Mat3::diagonal(a.inverse(), b.inverse(), c.inverse()));

  // A_g = [[0,0,xi],[1,0,0],[0,1,0]]: det = xi, A_g^3 = xi I
  RatFun xi = RatFun::variable(1);
  Mat3 Ag(tw);
  Ag.at(0, 2) = tw->from_base(xi);
  Ag.at(1, 0) = tw->one();
  Ag.at(2, 1) = tw->one();
  CHECK(Ag.det() == tw->from_base(xi));
  CHECK(Ag.pow(3) == Mat3::scalar(tw->from_base(xi)));

  Mat3 sing(tw);
  sing.at(0, 0) = tw->one();
  CHECK(!sing.try_invert().has_value());
  CHECK_THROWS_AS(sing.invert(), Singular);
}

TEST_CASE("entry product") {
  auto tw = tower_uv();
  CHECK(Mat3::identity(tw).entry_product().is_zero());
  Mat3 ones(tw);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ones.at(i, j) = tw->one();
  CHECK(ones.entry_product().is_one());

  std::mt19937_64 rng(5);
  Mat3 a = random_matrix(tw, rng);
  TowerElement c = random_element(tw, rng);
  CHECK((a * c).entry_product() == a.entry_product() * c.pow(9));
}

TEST_CASE("sigma_columns") {
  auto tw = tower_uv();
  Mat3 m(tw);
  long cols[3][3] = {{1, 1, 1}, {1, 2, 4}, {1, 3, 9}};  // columns (1,1,1),(1,2,3),(1,4,9)
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = tw->constant(cols[i][j]);
  Mat3 s = m.sigma_columns();
  long expect[3][3] = {{1, 6, 36}, {1, 3, 9}, {1, 2, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(s.at(i, j) == tw->constant(expect[i][j]));

  CHECK_THROWS_AS(Mat3::identity(tw).sigma_columns(), DegenerateColumn);
}

TEST_CASE("galois action on matrices") {
  auto tw = tower_uv();
  GaloisElement g{1, 0};
  std::mt19937_64 rng(11);
  Mat3 over_k(tw);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      over_k.at(i, j) = tw->from_base(sbt::random_base(rng, 2, true));
  CHECK(over_k.galois(g) == over_k);

  TowerElement t = tw->generator(0);
  TowerElement w = tw->from_base(RatFun(Cyclotomic::omega()));
  Mat3 d = Mat3::diagonal(t, w * t, w * w * t);
  CHECK(d.galois(g) == Mat3::diagonal(w * t, w * w * t, t));

  for (int k = 0; k < 10; ++k) {
    Mat3 a = random_matrix(tw, rng), b = random_matrix(tw, rng);
    CHECK((a * b).galois(g) == a.galois(g) * b.galois(g));
    CHECK(a.galois(g).det() == tw->apply(g, a.det()));
    CHECK(a.galois(g).entry_product() == tw->apply(g, a.entry_product()));
  }
}

TEST_CASE("det relation of the m-chain seed") {
  // det(M3(A)) = -(P(A) det(A) det(M2(A))^4)^{-1}, checked on random A over k
  auto tw = tower_uv();
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 5) {
    Mat3 a(tw);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        a.at(i, j) = tw->constant(static_cast<long>(rng() % 7 + 1));
    if (a.det().is_zero()) continue;
    Mat3 m2, m3;
    try {
      m2 = a.sigma_columns().invert().first;
      m3 = m2.sigma_columns().invert().first;
    } catch (const error&) {
      continue;
    }
    TowerElement lhs = m3.det();
    TowerElement rhs = -(a.entry_product() * a.det() * m2.det().pow(4)).inverse();
    CHECK(lhs == rhs);
    ++done;
  }
}
