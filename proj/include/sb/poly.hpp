#ifndef SB_POLY_HPP_
#define SB_POLY_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sb/cyclo.hpp"

namespace sb {

constexpr int kMaxVars = 4;

/// Exponent vector for up to kMaxVars variables, graded-lex ordered.
struct Monomial {
  std::array<uint16_t, kMaxVars> e{0, 0, 0, 0};

  int total() const {
    int t = 0;
    for (auto x : e) t += x;
    return t;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator<(const Monomial& o) const {
    int a = total(), b = o.total();
    if (a != b) return a < b;
    return e < o.e;  // lex within a degree block
  }
  Monomial operator+(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = e[i] + o.e[i];
    return m;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial quotient(const Monomial& o) const {  // *this / o
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = e[i] - o.e[i];
    return m;
  }
};

/// Sparse multivariate polynomial over Q(omega). The variable names live in
/// the field configuration; here variables are just indices 0..kMaxVars-1.
class Poly {
 public:
  using Terms = std::map<Monomial, Cyclotomic>;

  Poly() = default;
  explicit Poly(const Cyclotomic& c) {
    if (!c.is_zero()) terms_[Monomial{}] = c;
  }
  explicit Poly(long n) : Poly(Cyclotomic(n)) {}

  static Poly variable(int idx, int power = 1) {
    Poly p;
    Monomial m;
    m.e[idx] = static_cast<uint16_t>(power);
    p.terms_[m] = Cyclotomic::one();
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
  }
  Cyclotomic constant_value() const {
    if (terms_.empty()) return Cyclotomic::zero();
    return terms_.begin()->second;
  }

  /// Leading term under graded lex.
  const std::pair<const Monomial, Cyclotomic>& leading() const { return *terms_.rbegin(); }

  int total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.total(); }
  int degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max<int>(d, m.e[var]);
    return d;
  }
  int low_degree_in(int var) const {  // valuation at var = 0
    if (terms_.empty()) return -1;
    int d = 1 << 20;
    for (const auto& [m, c] : terms_) d = std::min<int>(d, m.e[var]);
    return d;
  }
  bool depends_on(int var) const { return degree_in(var) > 0; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Cyclotomic& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(unsigned n) const;

  /// Exact division; throws FormulaMismatch if the division is not exact.
  Poly divexact(const Poly& d) const;
  /// Division attempt: returns nullopt when not exactly divisible.
  std::optional<Poly> divide(const Poly& d) const;

  /// Coefficient of var^k, a polynomial in the remaining variables.
  Poly coeff_of(int var, int k) const;

  void add_term(const Monomial& m, const Cyclotomic& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_[m] = c;
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly monic() const;  // divide by leading coefficient

  /// gcd over Q(omega)[x0..], normalized monic under graded lex. gcd(0,0) = 0.
  static Poly gcd(const Poly& a, const Poly& b);

  /// Exact cube root if it exists and is found (sound, incomplete for
  /// irrational constant factors).
  std::optional<Poly> cbrt() const;

  std::string str(const std::vector<std::string>& var_names) const;

 private:
  Terms terms_;
};

}  // namespace sb

#endif  // SB_POLY_HPP_
