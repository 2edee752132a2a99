#ifndef SBCALC_TEST_HELPERS_HPP_
#define SBCALC_TEST_HELPERS_HPP_

#include <random>

#include "sb/tower.hpp"

namespace sbt {

// tower t^3 = u over Q(omega)(u,v)
inline sb::TowerPtr tower_uv() {
  return sb::FieldTower::make({"u", "v"}, {{"t", sb::RatFun::variable(0)}});
}

// tower t^3 = u, s^3 = w over Q(omega)(u,w)
inline sb::TowerPtr tower_uw() {
  return sb::FieldTower::make({"u", "w"},
                              {{"t", sb::RatFun::variable(0)}, {"s", sb::RatFun::variable(1)}});
}

// random small base-field element: polynomial of degree <= 1 in each variable
inline sb::RatFun random_base(std::mt19937_64& rng, int nvars, bool allow_zero = false) {
  std::uniform_int_distribution<int> c(-3, 3);
  for (;;) {
    sb::Poly p(static_cast<long>(c(rng)));
    for (int v = 0; v < nvars; ++v)
      p = p + sb::Poly::variable(v) * sb::Cyclotomic(c(rng));
    if (allow_zero || !p.is_zero()) return sb::RatFun(p);
  }
}

// random tower element with small support
inline sb::TowerElement random_element(const sb::TowerPtr& tw, std::mt19937_64& rng,
                                       bool allow_zero = false) {
  int nv = static_cast<int>(tw->variables().size());
  std::uniform_int_distribution<int> pick(0, 2);
  for (;;) {
    sb::TowerElement x = tw->zero();
    x.set_coeff(pick(rng), tw->num_layers() == 2 ? pick(rng) : 0,
                random_base(rng, nv, true));
    x = x + tw->from_base(random_base(rng, nv, true));
    if (allow_zero || !x.is_zero()) return x;
  }
}

}  // namespace sbt

#endif
