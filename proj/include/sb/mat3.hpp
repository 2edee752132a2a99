#ifndef SB_MAT3_HPP_
#define SB_MAT3_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "sb/tower.hpp"

namespace sb {

/// 3x3 matrix over a shared tower, exact arithmetic throughout.
class Mat3 {
 public:
  Mat3() = default;
  explicit Mat3(TowerPtr tower);

  static Mat3 identity(const TowerPtr& tower);
  static Mat3 diagonal(const TowerElement& a, const TowerElement& b, const TowerElement& c);
  static Mat3 scalar(const TowerElement& a);
  /// The cyclic permutation matrix sending e1 -> e2 -> e3 -> e1
  /// (columns: e2, e3, e1); the paper's "(123)".
  static Mat3 cycle(const TowerPtr& tower);

  const TowerPtr& tower() const { return tower_; }
  const TowerElement& at(int i, int j) const { return m_[i][j]; }
  TowerElement& at(int i, int j) { return m_[i][j]; }

  bool operator==(const Mat3& o) const;
  bool operator!=(const Mat3& o) const { return !(*this == o); }

  Mat3 operator+(const Mat3& o) const;
  Mat3 operator-(const Mat3& o) const;
  Mat3 operator*(const Mat3& o) const;
  Mat3 operator*(const TowerElement& s) const;

  std::array<TowerElement, 3> apply(const std::array<TowerElement, 3>& v) const;

  TowerElement det() const;
  Mat3 adjugate() const;
  /// (inverse, det); throws Singular when det = 0.
  std::pair<Mat3, TowerElement> invert() const;
  std::optional<std::pair<Mat3, TowerElement>> try_invert() const;

  Mat3 pow(int n) const;

  bool is_zero() const;
  bool is_diagonal() const;
  bool is_scalar() const;

  /// Product of all nine entries.
  TowerElement entry_product() const;

  /// Column-wise (x,y,z) -> (yz,xz,xy); throws DegenerateColumn when some
  /// column has two zero coordinates.
  Mat3 sigma_columns() const;

  /// Entrywise Galois action.
  Mat3 galois(const GaloisElement& sigma) const;

  /// If o == c * this for a scalar c of the tower, returns c.
  std::optional<TowerElement> proportionality(const Mat3& o) const;

  std::string str() const;

 private:
  TowerPtr tower_;
  std::array<std::array<TowerElement, 3>, 3> m_;
};

}  // namespace sb

#endif  // SB_MAT3_HPP_
