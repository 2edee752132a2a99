#include "sb/poly.hpp"

#include <algorithm>
#include <sstream>

#include "sb/errors.hpp"

namespace sb {

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 + m2, c1 * c2);
  return r;
}

Poly Poly::operator*(const Cyclotomic& c) const {
  if (c.is_zero()) return Poly();
  Poly r;
  for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly r(1L);
  Poly b = *this;
  while (n) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

std::optional<Poly> Poly::divide(const Poly& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  Poly q, r = *this;
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    const auto& [dm, dc] = d.leading();
    if (!dm.divides(rm)) return std::nullopt;
    Monomial qm = rm.quotient(dm);
    Cyclotomic qc = rc / dc;
    Poly t;
    t.terms_[qm] = qc;
    q = q + t;
    r = r - t * d;
  }
  return q;
}

Poly Poly::divexact(const Poly& d) const {
  auto q = divide(d);
  if (!q) throw FormulaMismatch("inexact polynomial division");
  return *q;
}

Poly Poly::coeff_of(int var, int k) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (m.e[var] == k) {
      Monomial m2 = m;
      m2.e[var] = 0;
      r.terms_[m2] = c;
    }
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().second.inverse();
}

namespace {

// Univariate view in variable `var`: degree -> coefficient polynomial.
std::map<int, Poly> univar(const Poly& p, int var) {
  std::map<int, Poly> out;
  for (int k = 0; k <= p.degree_in(var); ++k) {
    Poly c = p.coeff_of(var, k);
    if (!c.is_zero()) out[k] = c;
  }
  return out;
}

// content of p viewed univariately in var (gcd of coefficients)
Poly content_in(const Poly& p, int var) {
  Poly g;
  for (int k = 0; k <= p.degree_in(var); ++k) {
    Poly c = p.coeff_of(var, k);
    if (!c.is_zero()) g = Poly::gcd(g, c);
  }
  return g;
}

// pseudo-remainder of u by w in variable var (both nonzero, deg_var u >= deg_var w)
Poly prem(Poly u, const Poly& w, int var) {
  int dw = w.degree_in(var);
  Poly lw = w.coeff_of(var, dw);
  int du = u.degree_in(var);
  while (!u.is_zero() && (du = u.degree_in(var)) >= dw) {
    Poly lu = u.coeff_of(var, du);
    u = u * lw - w * lu * Poly::variable(var, du - dw);
    // degree strictly drops; loop terminates
  }
  return u;
}

}  // namespace

namespace {

// gcd when one argument is a single term: the common monomial part, monic.
Poly monomial_gcd(const Monomial& m, const Poly& q) {
  Monomial g = m;
  for (const auto& [qm, qc] : q.terms())
    for (int v = 0; v < kMaxVars; ++v) g.e[v] = std::min(g.e[v], qm.e[v]);
  Poly r;
  r.add_term(g, Cyclotomic::one());
  return r;
}

// ---- heuristic gcd (evaluate at a large integer, reconstruct, verify) ----

// gcd in Z[omega] (Euclidean via nearest-rounding division)
void eis_divmod(const mpz_class& xa, const mpz_class& xb, const mpz_class& ya,
                const mpz_class& yb, mpz_class* qa, mpz_class* qb) {
  // x * conj(y) / N(y), rounded to nearest in each coordinate:
  // (xa + xb w)((ya-yb) - yb w) = xa(ya-yb) + xb*yb + (xb(ya-yb) - xa*yb - xb*yb) w
  mpz_class n = ya * ya - ya * yb + yb * yb;
  mpz_class ra = xa * (ya - yb) + xb * yb;
  mpz_class rb = xb * (ya - yb) - xa * yb - xb * yb;
  auto round_div = [](const mpz_class& num, const mpz_class& den) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r > den) q += 1;
    return q;
  };
  *qa = round_div(ra, n);
  *qb = round_div(rb, n);
}

void eis_gcd(mpz_class xa, mpz_class xb, mpz_class ya, mpz_class yb,
             mpz_class* ga, mpz_class* gb) {
  while (ya != 0 || yb != 0) {
    mpz_class qa, qb;
    eis_divmod(xa, xb, ya, yb, &qa, &qb);
    // r = x - q*y ; (qa+qb w)(ya+yb w) = qa ya - qb yb + (qa yb + qb ya - qb yb) w
    mpz_class pa = qa * ya - qb * yb;
    mpz_class pb = qa * yb + qb * ya - qb * yb;
    mpz_class ra = xa - pa, rb = xb - pb;
    xa = ya; xb = yb;
    ya = ra; yb = rb;
  }
  *ga = xa;
  *gb = xb;
}

struct ZPoly {  // integer-coefficient image of a Poly: coefficients in Z[omega]
  std::map<Monomial, std::pair<mpz_class, mpz_class>> terms;
};

// clears denominators and integer content
ZPoly z_primitive(const Poly& p) {
  mpz_class lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_class d1 = c.re().get_den(), d2 = c.wc().get_den();
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), d1.get_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), l.get_mpz_t(), d2.get_mpz_t());
  }
  ZPoly z;
  mpz_class content = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_class a = c.re().get_num() * (lcm / c.re().get_den());
    mpz_class b = c.wc().get_num() * (lcm / c.wc().get_den());
    mpz_class g1, g2;
    mpz_gcd(g1.get_mpz_t(), content.get_mpz_t(), a.get_mpz_t());
    mpz_gcd(g2.get_mpz_t(), g1.get_mpz_t(), b.get_mpz_t());
    content = g2;
    z.terms[m] = {a, b};
  }
  if (content > 1)
    for (auto& [m, ab] : z.terms) {
      ab.first /= content;
      ab.second /= content;
    }
  return z;
}

Poly z_to_poly(const ZPoly& z) {
  Poly p;
  for (const auto& [m, ab] : z.terms)
    p.add_term(m, Cyclotomic(mpq_class(ab.first), mpq_class(ab.second)));
  return p;
}

int z_main_var(const ZPoly& a, const ZPoly& b) {
  for (int v = kMaxVars - 1; v >= 0; --v) {
    for (const auto& [m, c] : a.terms)
      if (m.e[v] > 0) return v;
    for (const auto& [m, c] : b.terms)
      if (m.e[v] > 0) return v;
  }
  return -1;
}

mpz_class z_height(const ZPoly& a) {
  mpz_class h = 0;
  for (const auto& [m, ab] : a.terms) {
    mpz_class x = abs(ab.first), y = abs(ab.second);
    if (x > h) h = x;
    if (y > h) h = y;
  }
  return h;
}

ZPoly z_eval(const ZPoly& a, int var, const mpz_class& xi) {
  ZPoly r;
  for (const auto& [m, ab] : a.terms) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), xi.get_mpz_t(), m.e[var]);
    Monomial m2 = m;
    m2.e[var] = 0;
    auto& slot = r.terms[m2];
    slot.first += ab.first * p;
    slot.second += ab.second * p;
  }
  for (auto it = r.terms.begin(); it != r.terms.end();)
    it = (it->second.first == 0 && it->second.second == 0) ? r.terms.erase(it) : std::next(it);
  return r;
}

std::optional<ZPoly> z_reconstruct(ZPoly img, int var, const mpz_class& xi);

// heuristic gcd: evaluate the main variable at a large integer, take the gcd
// of the images, reconstruct xi-adically, verify by trial division
std::optional<Poly> heu_gcd(const Poly& A, const Poly& B) {
  ZPoly a = z_primitive(A), b = z_primitive(B);
  int var = z_main_var(a, b);
  if (var < 0) return Poly(1L);
  mpz_class ha = z_height(a), hb = z_height(b);
  mpz_class xi = 2 * (ha > hb ? ha : hb) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    ZPoly ia = z_eval(a, var, xi), ib = z_eval(b, var, xi);
    if (ia.terms.empty() || ib.terms.empty()) {
      xi = xi * 3 + 11;
      continue;
    }
    std::optional<Poly> gin;
    if (z_main_var(ia, ib) < 0) {
      // base case: gcd in Z[omega]
      mpz_class ga, gb;
      const auto& ca = ia.terms.begin()->second;
      const auto& cb = ib.terms.begin()->second;
      eis_gcd(ca.first, ca.second, cb.first, cb.second, &ga, &gb);
      Poly g;
      g.add_term(Monomial{}, Cyclotomic(mpq_class(ga), mpq_class(gb)));
      gin = g;
    } else {
      gin = heu_gcd(z_to_poly(ia), z_to_poly(ib));
    }
    if (gin && !gin->is_zero()) {
      // keep the image's integer content: it carries xi-adic digits
      ZPoly raw;
      bool integral = true;
      for (const auto& [m, c] : gin->terms()) {
        if (c.re().get_den() != 1 || c.wc().get_den() != 1) {
          integral = false;
          break;
        }
        raw.terms[m] = {c.re().get_num(), c.wc().get_num()};
      }
      if (!integral) {
        xi = xi * 73794 / 27011 + 37;
        continue;
      }
      auto cand = z_reconstruct(raw, var, xi);
      if (cand) {
        Poly g = z_to_poly(z_primitive(z_to_poly(*cand)));
        if (!g.is_zero() && A.divide(g) && B.divide(g)) return g;
      }
    }
    xi = xi * 73794 / 27011 + 37;
  }
  return std::nullopt;
}

// balanced xi-adic reconstruction of a polynomial in `var` from its value
std::optional<ZPoly> z_reconstruct(ZPoly img, int var, const mpz_class& xi) {
  ZPoly out;
  int deg = 0;
  mpz_class half = xi / 2;
  while (!img.terms.empty()) {
    if (deg > 512) return std::nullopt;
    ZPoly digit;
    ZPoly next;
    for (auto& [m, ab] : img.terms) {
      // balanced remainder in (-xi/2, xi/2]
      auto bal = [&](const mpz_class& x, mpz_class* rem, mpz_class* quot) {
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), xi.get_mpz_t());
        if (r > half) {
          r -= xi;
          q += 1;
        }
        *rem = r;
        *quot = q;
      };
      mpz_class ra, qa, rb, qb;
      bal(ab.first, &ra, &qa);
      bal(ab.second, &rb, &qb);
      if (ra != 0 || rb != 0) digit.terms[m] = {ra, rb};
      if (qa != 0 || qb != 0) next.terms[m] = {qa, qb};
    }
    for (const auto& [m, ab] : digit.terms) {
      Monomial m2 = m;
      m2.e[var] = static_cast<uint16_t>(deg);
      out.terms[m2] = ab;
    }
    img = std::move(next);
    ++deg;
  }
  return out;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1L);
  if (a.terms().size() == 1) return monomial_gcd(a.terms().begin()->first, b);
  if (b.terms().size() == 1) return monomial_gcd(b.terms().begin()->first, a);

  if (auto g = heu_gcd(a, b)) return g->monic();

  int var = -1;
  for (int v = kMaxVars - 1; v >= 0; --v) {
    if (a.depends_on(v) || b.depends_on(v)) {
      var = v;
      break;
    }
  }
  if (var < 0) return Poly(1L);

  if (!a.depends_on(var) || !b.depends_on(var)) {
    // gcd must not involve var: it divides the var-coefficients of the other
    Poly g = !a.depends_on(var) ? a : b;
    const Poly& h = !a.depends_on(var) ? b : a;
    return Poly::gcd(g, content_in(h, var)).monic();
  }

  Poly ca = content_in(a, var);
  Poly cb = content_in(b, var);
  Poly pa = a.divexact(ca);
  Poly pb = b.divexact(cb);
  Poly cont = Poly::gcd(ca, cb);

  Poly r0 = pa, r1 = pb;
  if (r0.degree_in(var) < r1.degree_in(var)) std::swap(r0, r1);
  while (true) {
    Poly r = prem(r0, r1, var);
    if (r.is_zero()) break;
    Poly cr = content_in(r, var);
    r0 = r1;
    r1 = r.divexact(cr);
  }
  Poly cg = content_in(r1, var);
  Poly g = cont * r1.divexact(cg);
  return g.monic();
}

std::optional<Poly> Poly::cbrt() const {
  if (is_zero()) return Poly();
  if (is_constant()) {
    auto c = constant_value().cbrt();
    if (!c) return std::nullopt;
    return Poly(*c);
  }
  int var = -1;
  for (int v = kMaxVars - 1; v >= 0; --v) {
    if (depends_on(v)) {
      var = v;
      break;
    }
  }
  int d = degree_in(var);
  if (d % 3 != 0) return std::nullopt;
  int m = d / 3;
  auto pl = univar(*this, var);
  auto top = pl.find(d);
  if (top == pl.end()) return std::nullopt;
  auto qm = top->second.cbrt();
  if (!qm) return std::nullopt;

  std::map<int, Poly> q;  // coefficients of the root
  q[m] = *qm;
  Poly three_qm2 = q[m] * q[m] * Cyclotomic(3);
  for (int k = 1; k <= m; ++k) {
    // coefficient of var^(3m-k) in Q^3, from already-known q_i (i > m-k)
    Poly acc;
    for (const auto& [i, qi] : q)
      for (const auto& [j, qj] : q) {
        int l = 3 * m - k - i - j;
        if (l <= m - k || l > m) continue;
        auto it = q.find(l);
        if (it != q.end()) acc = acc + qi * qj * it->second;
      }
    Poly target;
    auto it = pl.find(3 * m - k);
    if (it != pl.end()) target = it->second;
    auto qk = (target - acc).divide(three_qm2);
    if (!qk) return std::nullopt;
    if (!qk->is_zero()) q[m - k] = *qk;
  }
  Poly root;
  for (const auto& [k, c] : q) root = root + c * Poly::variable(var, k);
  if (root * root * root != *this) return std::nullopt;
  return root;
}

std::string Poly::str(const std::vector<std::string>& var_names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // print high-degree terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (int v = 0; v < kMaxVars; ++v) {
      if (m.e[v] > 0) {
        os << "*" << (v < static_cast<int>(var_names.size()) ? var_names[v]
                                                             : "x" + std::to_string(v));
        if (m.e[v] > 1) os << "^" << m.e[v];
      }
    }
  }
  return os.str();
}

}  // namespace sb
