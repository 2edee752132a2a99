#ifndef SB_CYCLO_HPP_
#define SB_CYCLO_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "sb/errors.hpp"

namespace sb {

/// Element of Q(omega), omega a primitive cube root of unity: a + b*omega,
/// reduced via omega^2 = -1 - omega.
class Cyclotomic {
 public:
  Cyclotomic() : a_(0), b_(0) {}
  Cyclotomic(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }
  explicit Cyclotomic(long n) : a_(n), b_(0) {}
  explicit Cyclotomic(const mpq_class& q) : a_(q), b_(0) {}

  static Cyclotomic zero() { return Cyclotomic(); }
  static Cyclotomic one() { return Cyclotomic(1); }
  static Cyclotomic omega() { return Cyclotomic(mpq_class(0), mpq_class(1)); }
  static Cyclotomic omega_pow(int k);

  const mpq_class& re() const { return a_; }   // coefficient of 1
  const mpq_class& wc() const { return b_; }   // coefficient of omega

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  bool operator==(const Cyclotomic& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  Cyclotomic operator+(const Cyclotomic& o) const { return {a_ + o.a_, b_ + o.b_}; }
  Cyclotomic operator-(const Cyclotomic& o) const { return {a_ - o.a_, b_ - o.b_}; }
  Cyclotomic operator-() const { return {-a_, -b_}; }

  // (a+bw)(c+dw) = ac - bd + (ad + bc - bd) w
  Cyclotomic operator*(const Cyclotomic& o) const {
    mpq_class bd = b_ * o.b_;
    return {a_ * o.a_ - bd, a_ * o.b_ + b_ * o.a_ - bd};
  }

  /// Norm to Q: (a+bw)(a+bw^2) = a^2 - ab + b^2; zero iff the element is zero.
  mpq_class norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

  Cyclotomic inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(omega)");
    mpq_class n = norm();
    return {(a_ - b_) / n, -b_ / n};
  }

  Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

  Cyclotomic conj() const { return {a_ - b_, -b_}; }  // omega -> omega^2

  /// Exact cube root in Q(omega) when recognizable (rational case and
  /// omega-multiples of rationals); nullopt otherwise.
  std::optional<Cyclotomic> cbrt() const;

  std::string str() const;

 private:
  mpq_class a_, b_;
};

/// Exact cube root of a rational, if it exists.
std::optional<mpq_class> rational_cbrt(const mpq_class& q);

}  // namespace sb

#endif  // SB_CYCLO_HPP_
