#include "sb/tower.hpp"

#include <random>
#include <sstream>

#include "sb/errors.hpp"

namespace sb {

bool TowerElement::is_zero() const {
  for (const auto& v : c_)
    if (!v.is_zero()) return false;
  return true;
}

bool TowerElement::is_one() const {
  if (!c_[0].is_one()) return false;
  for (int k = 1; k < 9; ++k)
    if (!c_[k].is_zero()) return false;
  return true;
}

bool TowerElement::in_base() const {
  for (int k = 1; k < 9; ++k)
    if (!c_[k].is_zero()) return false;
  return true;
}

const RatFun& TowerElement::base_value() const {
  if (!in_base()) throw error("element does not lie in the base field");
  return c_[0];
}

bool TowerElement::operator==(const TowerElement& o) const {
  if (tower_ != o.tower_) throw TowerMismatch();
  return c_ == o.c_;
}

TowerElement TowerElement::operator+(const TowerElement& o) const {
  if (tower_ != o.tower_) throw TowerMismatch();
  TowerElement r(tower_);
  for (int k = 0; k < 9; ++k) r.c_[k] = c_[k] + o.c_[k];
  return r;
}

TowerElement TowerElement::operator-(const TowerElement& o) const {
  if (tower_ != o.tower_) throw TowerMismatch();
  TowerElement r(tower_);
  for (int k = 0; k < 9; ++k) r.c_[k] = c_[k] - o.c_[k];
  return r;
}

TowerElement TowerElement::operator-() const {
  TowerElement r(tower_);
  for (int k = 0; k < 9; ++k) r.c_[k] = -c_[k];
  return r;
}

TowerElement TowerElement::operator*(const TowerElement& o) const {
  if (tower_ != o.tower_) throw TowerMismatch();
  TowerElement r(tower_);
  const int nl = tower_->num_layers();
  const RatFun* d1 = nl >= 1 ? &tower_->layers()[0].radicand : nullptr;
  const RatFun* d2 = nl >= 2 ? &tower_->layers()[1].radicand : nullptr;
  for (int i1 = 0; i1 < 3; ++i1)
    for (int j1 = 0; j1 < 3; ++j1) {
      const RatFun& a = c_[i1 + 3 * j1];
      if (a.is_zero()) continue;
      for (int i2 = 0; i2 < 3; ++i2)
        for (int j2 = 0; j2 < 3; ++j2) {
          const RatFun& b = o.c_[i2 + 3 * j2];
          if (b.is_zero()) continue;
          RatFun v = a * b;
          int i = i1 + i2, j = j1 + j2;
          if (i >= 3) {
            i -= 3;
            v = v * *d1;
          }
          if (j >= 3) {
            j -= 3;
            v = v * *d2;
          }
          r.c_[i + 3 * j] = r.c_[i + 3 * j] + v;
        }
    }
  return r;
}

TowerElement TowerElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero tower element");
  const int nl = tower_->num_layers();
  if (nl == 0) {
    TowerElement r(tower_);
    r.c_[0] = c_[0].inverse();
    return r;
  }
  // Fold down layer by layer with nested norms. n1 = x g'(x) g'^2(x) is
  // g'-fixed, hence lies in the first layer; its norm down to k is invertible
  // there, and x^-1 assembles from the conjugates.
  TowerElement acc = tower_->one();
  TowerElement cur = *this;
  if (nl == 2) {
    TowerElement a = tower_->apply({0, 1}, cur);
    TowerElement b = tower_->apply({0, 2}, cur);
    acc = a * b;
    cur = cur * acc;  // n1, in L
  }
  TowerElement a = tower_->apply({1, 0}, cur);
  TowerElement b = tower_->apply({2, 0}, cur);
  acc = acc * a * b;
  cur = cur * a * b;  // n2, in k
  if (!cur.in_base() || cur.c_[0].is_zero())
    throw error("tower inversion failed; a radicand is likely a cube");
  TowerElement r(tower_);
  RatFun inv = cur.c_[0].inverse();
  for (int k = 0; k < 9; ++k) r.c_[k] = acc.c_[k] * inv;
  return r;
}

TowerElement TowerElement::operator/(const TowerElement& o) const { return *this * o.inverse(); }

TowerElement TowerElement::pow(int n) const {
  if (n == 0) return tower_->one();
  TowerElement b = n > 0 ? *this : inverse();
  unsigned k = n > 0 ? n : -n;
  TowerElement r = tower_->one();
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

std::string TowerElement::str() const {
  const auto& vars = tower_->variables();
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) {
      const RatFun& v = c_[i + 3 * j];
      if (v.is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << v.str(vars) << ")";
      if (i > 0) {
        os << "*" << tower_->layers()[0].generator;
        if (i > 1) os << "^" << i;
      }
      if (j > 0) {
        os << "*" << tower_->layers()[1].generator;
        if (j > 1) os << "^" << j;
      }
    }
  if (first) return "0";
  return os.str();
}

TowerPtr FieldTower::make(std::vector<std::string> variables,
                          std::vector<std::pair<std::string, RatFun>> layers) {
  if (variables.size() > static_cast<size_t>(kMaxVars))
    throw error("too many variables (max " + std::to_string(kMaxVars) + ")");
  if (layers.size() > 2) throw TooManyLayers();
  for (size_t i = 0; i < variables.size(); ++i)
    for (size_t j = i + 1; j < variables.size(); ++j)
      if (variables[i] == variables[j]) throw DuplicateGeneratorName("duplicate variable name");

  auto tower = std::shared_ptr<FieldTower>(new FieldTower());
  tower->vars_ = std::move(variables);
  for (auto& [name, rad] : layers) {
    if (rad.is_zero()) throw ZeroRadicand();
    for (const auto& v : tower->vars_)
      if (v == name) throw DuplicateGeneratorName("generator clashes with a variable");
    for (const auto& l : tower->layers_)
      if (l.generator == name) throw DuplicateGeneratorName("duplicate generator name");
    TowerLayer layer;
    layer.generator = name;
    layer.radicand = rad;
    layer.non_cube = tower->is_cube(rad);
    if (layer.non_cube.status == CubeStatus::Cube)
      throw error("radicand " + rad.str(tower->vars_) + " is a cube; layer is not a field");
    tower->layers_.push_back(std::move(layer));
  }
  return tower;
}

int FieldTower::variable_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

TowerElement FieldTower::zero() const { return TowerElement(shared_from_this()); }

TowerElement FieldTower::one() const { return constant(1); }

TowerElement FieldTower::constant(long n) const {
  TowerElement r(shared_from_this());
  r.c_[0] = RatFun(n);
  return r;
}

TowerElement FieldTower::from_base(const RatFun& v) const {
  TowerElement r(shared_from_this());
  r.c_[0] = v;
  return r;
}

TowerElement FieldTower::generator(int layer) const {
  if (layer < 0 || layer >= num_layers()) throw error("no such tower layer");
  TowerElement r(shared_from_this());
  r.set_coeff(layer == 0 ? 1 : 0, layer == 0 ? 0 : 1, RatFun(1L));
  return r;
}

TowerElement FieldTower::from_coeffs(const std::array<RatFun, 9>& c) const {
  TowerElement r(shared_from_this());
  for (int k = 0; k < 9; ++k) r.c_[k] = c[k];
  return r;
}

void FieldTower::check_same(const TowerElement& x) const {
  if (x.tower().get() != this) throw TowerMismatch();
}

TowerElement FieldTower::apply(const GaloisElement& sigma, const TowerElement& x) const {
  check_same(x);
  if (num_layers() < 1 && sigma.i != 0) throw TowerMismatch("no first layer");
  if (num_layers() < 2 && sigma.j != 0) throw TowerMismatch("no second layer");
  TowerElement r(x.tower());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const RatFun& v = x.coeff(i, j);
      if (v.is_zero()) continue;
      int w = (sigma.i * i + sigma.j * j) % 3;
      Cyclotomic om = Cyclotomic::omega_pow(w);
      r.set_coeff(i, j, v * RatFun(om));
    }
  return r;
}

TowerElement FieldTower::norm(const TowerElement& x, const GaloisElement& sigma) const {
  check_same(x);
  if (sigma.order() != 3) throw error("norm requires a Galois element of order 3");
  TowerElement a = apply(sigma, x);
  TowerElement b = apply(sigma, a);
  return x * a * b;
}

FieldTower::H90Solution FieldTower::hilbert90(const TowerElement& mu,
                                              const GaloisElement& sigma,
                                              uint64_t seed) const {
  check_same(mu);
  if (mu.is_zero()) throw NormNotOne("mu is zero");
  if (sigma.order() != 3) throw error("hilbert90 requires a Galois element of order 3");
  if (!norm(mu, sigma).is_one()) throw NormNotOne("norm of mu is not 1");

  std::vector<std::pair<std::string, TowerElement>> cands;
  cands.emplace_back("1", one());
  for (int l = 0; l < num_layers(); ++l) {
    cands.emplace_back(layers_[l].generator, generator(l));
    cands.emplace_back(layers_[l].generator + "^2", generator(l) * generator(l));
  }
  if (num_layers() == 2) {
    const std::string& tn = layers_[0].generator;
    const std::string& sn = layers_[1].generator;
    cands.emplace_back(tn + "*" + sn, generator(0) * generator(1));
    cands.emplace_back(tn + "^2*" + sn, generator(0) * generator(0) * generator(1));
    cands.emplace_back(tn + "*" + sn + "^2", generator(0) * generator(1) * generator(1));
    cands.emplace_back(tn + "^2*" + sn + "^2", generator(0).pow(2) * generator(1).pow(2));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 32; ++trial) {
    TowerElement c = zero();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < (num_layers() == 2 ? 3 : 1); ++j) {
        if (i >= (num_layers() >= 1 ? 3 : 1)) continue;
        c.set_coeff(i, j, RatFun(coef(rng)));
      }
    if (!c.is_zero()) cands.emplace_back("random#" + std::to_string(trial), c);
  }

  TowerElement mu_smu = mu * apply(sigma, mu);
  for (const auto& [name, c] : cands) {
    TowerElement lam = c + mu * apply(sigma, c) + mu_smu * apply(sigma.compose(sigma), c);
    if (lam.is_zero()) continue;
    // postcondition: lambda / sigma(lambda) = mu, exactly
    if (lam != mu * apply(sigma, lam))
      throw error("hilbert90 internal check failed");
    return {lam, name, seed};
  }
  throw ExhaustedCandidates("hilbert90 exhausted candidates (seed " + std::to_string(seed) + ")");
}

CubeCheck FieldTower::is_cube(const RatFun& x) const {
  if (x.is_zero()) throw ZeroInput("cube test on zero");
  CubeCheck out;
  if (auto w = x.cbrt()) {
    out.status = CubeStatus::Cube;
    out.witness = *w;
    out.certificate = "explicit cube root";
    return out;
  }
  for (size_t v = 0; v < vars_.size(); ++v) {
    int v0 = x.valuation_at_zero(static_cast<int>(v));
    if (v0 % 3 != 0) {
      out.status = CubeStatus::NotCube;
      out.certificate = "valuation " + std::to_string(v0) + " at " + vars_[v] + "=0";
      return out;
    }
    int vi = x.valuation_at_infinity(static_cast<int>(v));
    if (vi % 3 != 0) {
      out.status = CubeStatus::NotCube;
      out.certificate = "valuation " + std::to_string(vi) + " at " + vars_[v] + "=infinity";
      return out;
    }
  }
  out.status = CubeStatus::Undecided;
  out.certificate = "no exact root found; all computable valuations divisible by 3";
  return out;
}

std::string FieldTower::describe() const {
  std::ostringstream os;
  os << "Q(omega)(";
  for (size_t i = 0; i < vars_.size(); ++i) os << (i ? "," : "") << vars_[i];
  os << ")";
  for (const auto& l : layers_)
    os << "[" << l.generator << "^3=" << l.radicand.str(vars_) << "]";
  return os.str();
}

}  // namespace sb
