#ifndef SB_TOWER_HPP_
#define SB_TOWER_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sb/ratfun.hpp"

namespace sb {

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

enum class CubeStatus { Cube, NotCube, Undecided };

struct CubeCheck {
  CubeStatus status = CubeStatus::Undecided;
  std::optional<RatFun> witness;  // set iff status == Cube
  std::string certificate;        // human-readable reason for NotCube / Cube
};

/// Galois group element g^i g'^j of a (one- or two-layer) cubic tower.
/// g scales the first-layer generator by omega, g' the second-layer one.
struct GaloisElement {
  int i = 0, j = 0;  // exponents mod 3

  GaloisElement() = default;
  GaloisElement(int i_, int j_) : i(((i_ % 3) + 3) % 3), j(((j_ % 3) + 3) % 3) {}

  GaloisElement compose(const GaloisElement& o) const { return {i + o.i, j + o.j}; }
  GaloisElement inverse() const { return {-i, -j}; }
  bool is_identity() const { return i == 0 && j == 0; }
  /// 1 for the identity, otherwise 3.
  int order() const { return is_identity() ? 1 : 3; }
  bool operator==(const GaloisElement& o) const { return i == o.i && j == o.j; }
};

struct TowerLayer {
  std::string generator;  // e.g. "t"
  RatFun radicand;        // d with generator^3 = d, an element of k
  CubeCheck non_cube;     // status of the non-cube requirement
};

/// Element of k, L = k(t | t^3 = d1) or F = L(s | s^3 = d2), with k the
/// rational function field over Q(omega) in the tower's variables.
/// Coefficients are indexed by t^i s^j, 0 <= i,j <= 2; unused when the tower
/// has fewer layers. Representation is unique (reduction always applied).
class TowerElement {
 public:
  TowerElement() = default;  // invalid element; tower() == nullptr
  explicit TowerElement(TowerPtr tower) : tower_(std::move(tower)) {}

  const TowerPtr& tower() const { return tower_; }
  bool valid() const { return tower_ != nullptr; }

  const RatFun& coeff(int i, int j) const { return c_[i + 3 * j]; }
  void set_coeff(int i, int j, RatFun v) { c_[i + 3 * j] = std::move(v); }

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in the base field k.
  bool in_base() const;
  /// The k-value of a base-field element; throws if not in k.
  const RatFun& base_value() const;

  bool operator==(const TowerElement& o) const;
  bool operator!=(const TowerElement& o) const { return !(*this == o); }

  TowerElement operator+(const TowerElement& o) const;
  TowerElement operator-(const TowerElement& o) const;
  TowerElement operator-() const;
  TowerElement operator*(const TowerElement& o) const;
  TowerElement operator/(const TowerElement& o) const;
  TowerElement inverse() const;
  TowerElement pow(int n) const;

  std::string str() const;

 private:
  friend class FieldTower;
  TowerPtr tower_;
  std::array<RatFun, 9> c_{};
};

/// A field tower over k = Q(omega)(vars): at most two cubic radical layers,
/// each carrying the Galois generator that scales its radical by omega.
class FieldTower : public std::enable_shared_from_this<FieldTower> {
 public:
  /// Builds and validates a tower; checks radicands and records their
  /// non-cube status (certified or assumed).
  static TowerPtr make(std::vector<std::string> variables,
                       std::vector<std::pair<std::string, RatFun>> layers);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<TowerLayer>& layers() const { return layers_; }
  int num_layers() const { return static_cast<int>(layers_.size()); }

  int variable_index(const std::string& name) const;  // -1 if unknown

  TowerElement zero() const;
  TowerElement one() const;
  TowerElement constant(long n) const;
  TowerElement from_base(const RatFun& v) const;
  /// The generator of the given layer (0-based) as an element.
  TowerElement generator(int layer) const;
  TowerElement from_coeffs(const std::array<RatFun, 9>& c) const;

  /// Galois action: field automorphism fixing k; sigma^3 = id.
  TowerElement apply(const GaloisElement& sigma, const TowerElement& x) const;

  /// x * sigma(x) * sigma^2(x); requires sigma of order 3.
  TowerElement norm(const TowerElement& x, const GaloisElement& sigma) const;

  struct H90Solution {
    TowerElement lambda;
    std::string candidate;  // which candidate produced lambda
    uint64_t seed;          // RNG seed used for the random fallback
  };
  /// Solves lambda / sigma(lambda) = mu for mu of norm 1, by the telescoping
  /// candidate lambda = c + mu sigma(c) + mu sigma(mu) sigma^2(c).
  H90Solution hilbert90(const TowerElement& mu, const GaloisElement& sigma,
                        uint64_t seed = 0x5b5b5b5bULL) const;

  /// Cube test in the base field k: sound, possibly undecided.
  CubeCheck is_cube(const RatFun& x) const;

  std::string describe() const;

 private:
  FieldTower() = default;
  void check_same(const TowerElement& x) const;

  std::vector<std::string> vars_;
  std::vector<TowerLayer> layers_;
};

}  // namespace sb

#endif  // SB_TOWER_HPP_
