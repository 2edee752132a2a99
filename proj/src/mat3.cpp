#include "sb/mat3.hpp"

#include <sstream>

#include "sb/errors.hpp"

namespace sb {

Mat3::Mat3(TowerPtr tower) : tower_(std::move(tower)) {
  for (auto& row : m_)
    for (auto& e : row) e = TowerElement(tower_);
}

Mat3 Mat3::identity(const TowerPtr& tower) {
  Mat3 r(tower);
  for (int i = 0; i < 3; ++i) r.m_[i][i] = tower->one();
  return r;
}

Mat3 Mat3::diagonal(const TowerElement& a, const TowerElement& b, const TowerElement& c) {
  Mat3 r(a.tower());
  r.m_[0][0] = a;
  r.m_[1][1] = b;
  r.m_[2][2] = c;
  return r;
}

Mat3 Mat3::scalar(const TowerElement& a) { return diagonal(a, a, a); }

Mat3 Mat3::cycle(const TowerPtr& tower) {
  Mat3 r(tower);
  r.m_[1][0] = tower->one();
  r.m_[2][1] = tower->one();
  r.m_[0][2] = tower->one();
  return r;
}

bool Mat3::operator==(const Mat3& o) const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (m_[i][j] != o.m_[i][j]) return false;
  return true;
}

Mat3 Mat3::operator+(const Mat3& o) const {
  Mat3 r(tower_);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m_[i][j] = m_[i][j] + o.m_[i][j];
  return r;
}

Mat3 Mat3::operator-(const Mat3& o) const {
  Mat3 r(tower_);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m_[i][j] = m_[i][j] - o.m_[i][j];
  return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r(tower_);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      TowerElement acc = tower_->zero();
      for (int k = 0; k < 3; ++k) acc = acc + m_[i][k] * o.m_[k][j];
      r.m_[i][j] = acc;
    }
  return r;
}

Mat3 Mat3::operator*(const TowerElement& s) const {
  Mat3 r(tower_);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m_[i][j] = m_[i][j] * s;
  return r;
}

std::array<TowerElement, 3> Mat3::apply(const std::array<TowerElement, 3>& v) const {
  std::array<TowerElement, 3> r;
  for (int i = 0; i < 3; ++i)
    r[i] = m_[i][0] * v[0] + m_[i][1] * v[1] + m_[i][2] * v[2];
  return r;
}

TowerElement Mat3::det() const {
  return m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) -
         m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
         m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
}

Mat3 Mat3::adjugate() const {
  Mat3 r(tower_);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      // cofactor with cyclic index choice absorbs the sign
      r.m_[j][i] = m_[r0][c0] * m_[r1][c1] - m_[r0][c1] * m_[r1][c0];
    }
  return r;
}

std::optional<std::pair<Mat3, TowerElement>> Mat3::try_invert() const {
  TowerElement d = det();
  if (d.is_zero()) return std::nullopt;
  TowerElement dinv = d.inverse();
  Mat3 a = adjugate();
  return std::make_pair(a * dinv, d);
}

std::pair<Mat3, TowerElement> Mat3::invert() const {
  auto r = try_invert();
  if (!r) throw Singular("singular matrix; adjugate: " + adjugate().str());
  return *r;
}

Mat3 Mat3::pow(int n) const {
  if (n == 0) return identity(tower_);
  Mat3 b = n > 0 ? *this : invert().first;
  unsigned k = n > 0 ? n : -n;
  Mat3 r = identity(tower_);
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

bool Mat3::is_zero() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!m_[i][j].is_zero()) return false;
  return true;
}

bool Mat3::is_diagonal() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && !m_[i][j].is_zero()) return false;
  return true;
}

bool Mat3::is_scalar() const {
  return is_diagonal() && m_[0][0] == m_[1][1] && m_[1][1] == m_[2][2];
}

TowerElement Mat3::entry_product() const {
  TowerElement p = tower_->one();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p = p * m_[i][j];
  return p;
}

Mat3 Mat3::sigma_columns() const {
  Mat3 r(tower_);
  for (int j = 0; j < 3; ++j) {
    int zeros = 0;
    for (int i = 0; i < 3; ++i)
      if (m_[i][j].is_zero()) ++zeros;
    if (zeros >= 2)
      throw DegenerateColumn("column " + std::to_string(j + 1) + " is a coordinate point");
    r.m_[0][j] = m_[1][j] * m_[2][j];
    r.m_[1][j] = m_[0][j] * m_[2][j];
    r.m_[2][j] = m_[0][j] * m_[1][j];
  }
  return r;
}

Mat3 Mat3::galois(const GaloisElement& sigma) const {
  Mat3 r(tower_);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m_[i][j] = tower_->apply(sigma, m_[i][j]);
  return r;
}

std::optional<TowerElement> Mat3::proportionality(const Mat3& o) const {
  std::optional<TowerElement> c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (m_[i][j].is_zero()) {
        if (!o.m_[i][j].is_zero()) return std::nullopt;
        continue;
      }
      TowerElement q = o.m_[i][j] / m_[i][j];
      if (!c)
        c = q;
      else if (*c != q)
        return std::nullopt;
    }
  return c;
}

std::string Mat3::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << m_[i][j].str();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace sb
