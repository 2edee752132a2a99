#include "sb/ratfun.hpp"

#include "sb/errors.hpp"

namespace sb {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  reduce();
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(1L);
    return;
  }
  if (!den_.is_constant() && !num_.is_constant()) {
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  Cyclotomic lc = den_.leading().second;
  if (!lc.is_one()) {
    Cyclotomic inv = lc.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFun RatFun::operator+(const RatFun& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
  if (den_.is_constant() || o.den_.is_constant())
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  // common-denominator trick: only gcd(d1, d2) can reappear in the result
  Poly d = Poly::gcd(den_, o.den_);
  if (d.is_constant())
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  Poly l = den_.divexact(d);      // den1 = d*l
  Poly m = o.den_.divexact(d);    // den2 = d*m
  Poly num = num_ * m + o.num_ * l;
  Poly g = Poly::gcd(num, d);
  if (!g.is_constant()) {
    num = num.divexact(g);
    d = d.divexact(g);
  }
  RatFun r;
  r.num_ = std::move(num);
  r.den_ = d * l * m;
  if (r.num_.is_zero()) {
    r.den_ = Poly(1L);
    return r;
  }
  Cyclotomic lc = r.den_.leading().second;
  if (!lc.is_one()) {
    Cyclotomic inv = lc.inverse();
    r.num_ = r.num_ * inv;
    r.den_ = r.den_ * inv;
  }
  return r;
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::operator*(const RatFun& o) const {
  if (is_zero() || o.is_zero()) return RatFun();
  // cross-reduce before multiplying; inputs are reduced, so the result is too
  Poly n1 = num_, d2 = o.den_;
  if (!n1.is_constant() && !d2.is_constant()) {
    Poly g = Poly::gcd(n1, d2);
    if (!g.is_constant()) {
      n1 = n1.divexact(g);
      d2 = d2.divexact(g);
    }
  }
  Poly n2 = o.num_, d1 = den_;
  if (!n2.is_constant() && !d1.is_constant()) {
    Poly g = Poly::gcd(n2, d1);
    if (!g.is_constant()) {
      n2 = n2.divexact(g);
      d1 = d1.divexact(g);
    }
  }
  RatFun r;
  r.num_ = n1 * n2;
  r.den_ = d1 * d2;
  Cyclotomic lc = r.den_.leading().second;
  if (!lc.is_one()) {
    Cyclotomic inv = lc.inverse();
    r.num_ = r.num_ * inv;
    r.den_ = r.den_ * inv;
  }
  return r;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  RatFun r;
  r.num_ = den_;
  r.den_ = num_;
  Cyclotomic lc = r.den_.leading().second;
  if (!lc.is_one()) {
    Cyclotomic inv = lc.inverse();
    r.num_ = r.num_ * inv;
    r.den_ = r.den_ * inv;
  }
  return r;
}

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw DivisionByZero("division by zero rational function");
  if (is_zero()) return RatFun();
  return *this * o.inverse();
}

RatFun RatFun::pow(int n) const {
  if (n == 0) return RatFun(1L);
  RatFun b = n > 0 ? *this : inverse();
  unsigned k = n > 0 ? n : -n;
  RatFun r(1L);
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

std::optional<RatFun> RatFun::cbrt() const {
  if (is_zero()) return RatFun();
  auto dn = den_.cbrt();
  if (!dn) return std::nullopt;
  auto nm = num_.cbrt();
  if (!nm) return std::nullopt;
  return RatFun(*nm, *dn);
}

std::string RatFun::str(const std::vector<std::string>& var_names) const {
  if (is_polynomial()) return num_.str(var_names);
  return "(" + num_.str(var_names) + ")/(" + den_.str(var_names) + ")";
}

}  // namespace sb
