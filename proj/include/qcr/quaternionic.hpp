#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcr/linalg.hpp"
#include "qcr/quaternion.hpp"
#include "qcr/random.hpp"

namespace qcr {

using RationalMatrix = Matrix<Rational>;
using ComplexMatrix = Matrix<GaussianRational>;

/// A linear hypercomplex structure: rational matrices I, J, K on a space of
/// dimension 4k with I^2 = J^2 = K^2 = -1 and IJ = K, JK = I, KI = J.
/// Stands in for the quaternionic structure it represents.
class HypercomplexStructure {
 public:
  HypercomplexStructure() = default;
  /// Throws invalid-structure naming every failed identity.
  HypercomplexStructure(RationalMatrix i, RationalMatrix j, RationalMatrix k);

  const RationalMatrix& i() const { return i_; }
  const RationalMatrix& j() const { return j_; }
  const RationalMatrix& k() const { return k_; }
  /// 0 -> I, 1 -> J, 2 -> K.
  const RationalMatrix& generator(int index) const;

  std::size_t dim() const { return i_.rows(); }
  std::size_t quaternionic_dim() const { return dim() / 4; }

  friend bool operator==(const HypercomplexStructure& a, const HypercomplexStructure& b) {
    return a.i_ == b.i_ && a.j_ == b.j_ && a.k_ == b.k_;
  }

 private:
  RationalMatrix i_, j_, k_;
};

/// Names of the violated structure identities (empty when valid).
std::vector<std::string> structure_violations(const RationalMatrix& i, const RationalMatrix& j,
                                              const RationalMatrix& k);

/// Point (a, b, c) of the unit sphere; the admissible complex structure aI + bJ + cK.
struct AdmissiblePoint {
  Rational a{0}, b{0}, c{0};

  bool on_sphere() const { return a * a + b * b + c * c == 1; }
  friend bool operator==(const AdmissiblePoint&, const AdmissiblePoint&) = default;
};

/// Affine coordinate zeta on the twistor sphere, or the point at infinity.
struct SphereChart {
  std::optional<GaussianRational> zeta;

  static SphereChart infinity() { return {}; }
  static SphereChart at(GaussianRational z) { return {std::move(z)}; }
  bool at_infinity() const { return !zeta.has_value(); }
  friend bool operator==(const SphereChart&, const SphereChart&) = default;
};

/// (a,b,c) = ((1-|z|^2), 2 Re z, 2 Im z) / (1+|z|^2); infinity -> (-1,0,0).
AdmissiblePoint chart_to_sphere(const SphereChart& z);
SphereChart sphere_to_chart(const AdmissiblePoint& p);

/// First `count` points of a fixed deterministic sequence of rational chart
/// points, starting with infinity, 0, 1, i.
std::vector<SphereChart> sphere_samples(std::size_t count);

/// Left-multiplication structure of H^k in the basis (1, i, j, k) per coordinate.
HypercomplexStructure standard_structure(std::size_t k);

/// aI + bJ + cK; throws invalid-input off the unit sphere.
RationalMatrix admissible_operator(const HypercomplexStructure& s, const AdmissiblePoint& p);
RationalMatrix admissible_operator(const HypercomplexStructure& s, const SphereChart& z);

/// I* = -I^T, J* = -J^T, K* = -K^T on the dual space (dual basis coordinates).
HypercomplexStructure dual_structure(const HypercomplexStructure& s);

HypercomplexStructure direct_sum(const HypercomplexStructure& a, const HypercomplexStructure& b);

/// Same quaternionic structure, representative rotated by R in SO(3): the new
/// generators are the admissible operators at R e1, R e2, R e3.
HypercomplexStructure rotate_representative(const HypercomplexStructure& s, const RationalMatrix& rotation);

/// Push-forward (phi I phi^-1, phi J phi^-1, phi K phi^-1) along an invertible map.
HypercomplexStructure transport(const HypercomplexStructure& s, const RationalMatrix& phi);

/// Linear map t together with the rotation T of the sphere it induces.
struct QuaternionicMap {
  RationalMatrix map;
  RationalMatrix rotation;
};

/// Rotation R in SO(3) with t (aI+bJ+cK) = (a'I'+b'J'+c'K') t, (a',b',c') = R(a,b,c),
/// if one exists. For t = 0 every rotation works and the identity is returned.
std::optional<RationalMatrix> is_quaternionic_map(const RationalMatrix& t, const HypercomplexStructure& from,
                                                  const HypercomplexStructure& to);

/// Hypercomplex isomorphism onto standard_structure(k) (rotation = Id).
QuaternionicMap standardize(const HypercomplexStructure& s);

/// Random element of Sp(1).GL(k,H) acting by x -> a x B, transported to s.
QuaternionicMap random_automorphism(const HypercomplexStructure& s, std::uint64_t seed);
QuaternionicMap random_automorphism(const HypercomplexStructure& s, Rng& rng);
/// Same, restricted to GL(k,H) (hypercomplex, rotation = Id).
QuaternionicMap random_hypercomplex_automorphism(const HypercomplexStructure& s, Rng& rng);

// Quaternion helpers -------------------------------------------------------

/// Matrix of x -> q x on H = R^4 (basis 1, i, j, k).
RationalMatrix left_mult_matrix(const Quaternion& q);
/// Matrix of x -> x q.
RationalMatrix right_mult_matrix(const Quaternion& q);
/// Matrix of v -> q v q^-1 on Im H = R^3.
RationalMatrix conjugation_rotation(const Quaternion& q);
/// Real 4k x 4k matrix of the row-vector action x -> a x B on H^k.
RationalMatrix quaternionic_action_matrix(const Quaternion& a, const Matrix<Quaternion>& b);

bool is_rotation(const RationalMatrix& r);

Quaternion random_quaternion(Rng& rng, long bound);
/// q^2 / |q|^2 for random nonzero integral q: a rational point of S^3.
Quaternion random_unit_quaternion(Rng& rng);
RationalMatrix random_rotation(Rng& rng);
/// q i q^-1 for random q: a rational point of S^2 in Im H.
Quaternion random_imaginary_unit(Rng& rng);
/// Random invertible n x n matrix with small integer entries.
RationalMatrix random_invertible(Rng& rng, std::size_t n);

}  // namespace qcr
