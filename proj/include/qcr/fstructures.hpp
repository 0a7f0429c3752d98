#pragma once

#include <string>
#include <vector>

#include "qcr/twistor.hpp"

namespace qcr {

/// Linear f-quaternionic structure: E = U + V (direct) with J(V) in U for every admissible J.
struct FQuatTriple {
  HypercomplexStructure structure;
  Subspace<Rational> u;
  Subspace<Rational> v;

  friend bool operator==(const FQuatTriple&, const FQuatTriple&) = default;
};

/// Names of the violated clauses; empty when the triple is valid. Also checks
/// that (U, E) is CR and (V, E) is co-CR.
std::vector<std::string> validate_triple(const FQuatTriple& t, std::size_t samples = kDefaultSphereSamples);

/// (U, E) and (V, E); throw invalid-triple on an invalid triple.
Pair cr_side(const FQuatTriple& t, std::size_t samples = kDefaultSphereSamples);
Pair cocr_side(const FQuatTriple& t, std::size_t samples = kDefaultSphereSamples);

/// (A, q.B) in GL(l,R) x (Sp(1).GL(m,H)) acting on (Im H)^l x H^m by
/// (X, Y) -> (q (A X) q^-1, q Y B^-1). q is any nonzero rational quaternion:
/// the action only sees q up to a nonzero real factor, so (q, B) is a class
/// under simultaneous real rescaling. Stored with the first nonzero coordinate
/// of q positive.
class GroupElement {
 public:
  GroupElement(RationalMatrix a, Quaternion q, Matrix<Quaternion> b);
  static GroupElement identity(std::size_t l, std::size_t m);

  const RationalMatrix& a() const { return a_; }
  const Quaternion& q() const { return q_; }
  const Matrix<Quaternion>& b() const { return b_; }
  std::size_t l() const { return a_.rows(); }
  std::size_t m() const { return b_.rows(); }

 private:
  RationalMatrix a_;
  Quaternion q_;
  Matrix<Quaternion> b_;
};

/// Same class: equal induced maps.
bool equivalent(const GroupElement& g, const GroupElement& h);

/// Inverse of a square quaternionic matrix; throws singular-matrix.
Matrix<Quaternion> quaternion_matrix_inverse(const Matrix<Quaternion>& b);

/// Evaluates the action formula on a point (X_1..X_l, Y_1..Y_m) with X imaginary.
std::vector<Quaternion> group_act(const GroupElement& g, const std::vector<Quaternion>& point);

/// The real 4(l+m) x 4(l+m) matrix of the action extended to H^(l+m).
RationalMatrix induced_automorphism(const GroupElement& g);

GroupElement group_compose(const GroupElement& g, const GroupElement& h);

/// Rotation of Im H given by conjugation with q.
RationalMatrix rho(const GroupElement& g);

GroupElement random_group_element(std::size_t l, std::size_t m, Rng& rng);

/// E = R + W identified with H through a conformal frame of the 3-space W:
/// `gram` is the inner product on W = R^3, `frame` has the frame vectors as
/// columns. Requires frame^T gram frame = c Id with c > 0 (invalid-frame) and
/// det frame > 0 (wrong-orientation). Returns (E, U = W, V = R).
FQuatTriple conformal_3d(const RationalMatrix& gram, const RationalMatrix& frame);

}  // namespace qcr
