#include "sb/cyclo.hpp"

#include <sstream>

namespace sb {

Cyclotomic Cyclotomic::omega_pow(int k) {
  k = ((k % 3) + 3) % 3;
  switch (k) {
    case 0: return one();
    case 1: return omega();
    default: return Cyclotomic(mpq_class(-1), mpq_class(-1));  // omega^2
  }
}

std::optional<mpq_class> rational_cbrt(const mpq_class& q) {
  if (q == 0) return mpq_class(0);
  mpz_class num = q.get_num(), den = q.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 3) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 3) == 0) return std::nullopt;
  mpq_class r(rn, rd);
  r.canonicalize();
  return neg ? mpq_class(-r) : r;
}

std::optional<Cyclotomic> Cyclotomic::cbrt() const {
  // (c + d*omega)^3 = c^3 - 3cd^2 + d^3 + 3cd(c-d) omega.
  // Handled cases: rational values (d = 0, d = c, c = 0 give rational cubes).
  if (b_ == 0) {
    if (auto r = rational_cbrt(a_)) return Cyclotomic(*r);
    // a = -c^3 with witness c(1 + omega) = -c*omega^2: same rational root test.
    return std::nullopt;
  }
  // omega * rational and omega^2 * rational are not cubes of this form unless
  // the rational part is a cube times a compensating unit; cube roots of such
  // elements fall outside Q(omega) generically. Report unknown.
  return std::nullopt;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  if (b_ == 0) {
    os << a_.get_str();
  } else if (a_ == 0) {
    if (b_ == 1) os << "omega";
    else os << "(" << b_.get_str() << ")*omega";
  } else {
    os << "(" << a_.get_str() << "+(" << b_.get_str() << ")*omega)";
  }
  return os.str();
}

}  // namespace sb
