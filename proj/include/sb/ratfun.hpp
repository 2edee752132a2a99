#ifndef SB_RATFUN_HPP_
#define SB_RATFUN_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sb/poly.hpp"

namespace sb {

/// Element of the rational function field k = Q(omega)(x0,...).
/// Canonical form: gcd(num, den) = 1 and den monic under graded lex,
/// so equality is coefficient comparison.
class RatFun {
 public:
  RatFun() : num_(), den_(1L) {}
  explicit RatFun(long n) : num_(n), den_(1L) {}
  explicit RatFun(const Cyclotomic& c) : num_(c), den_(1L) {}
  explicit RatFun(Poly p) : num_(std::move(p)), den_(1L) {}
  RatFun(Poly num, Poly den);

  static RatFun variable(int idx) { return RatFun(Poly::variable(idx)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_ == Poly(1L) && num_ == Poly(1L); }
  bool is_polynomial() const { return den_ == Poly(1L); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Cyclotomic constant_value() const { return num_.constant_value() / den_.constant_value(); }

  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator-() const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun inverse() const;
  RatFun pow(int n) const;

  /// Valuation data for the cube test: order of vanishing at var = 0 and
  /// degree drop at the infinite place of var.
  int valuation_at_zero(int var) const {
    return num_.low_degree_in(var) - den_.low_degree_in(var);
  }
  int valuation_at_infinity(int var) const {
    return den_.degree_in(var) - num_.degree_in(var);
  }
  bool depends_on(int var) const { return num_.depends_on(var) || den_.depends_on(var); }

  /// Exact cube root in k when found.
  std::optional<RatFun> cbrt() const;

  std::string str(const std::vector<std::string>& var_names) const;

 private:
  void reduce();
  Poly num_, den_;
};

}  // namespace sb

#endif  // SB_RATFUN_HPP_
