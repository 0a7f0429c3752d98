#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qcr/quaternionic.hpp"
#include "qcr/subspace.hpp"

namespace qcr {

constexpr std::size_t kDefaultSphereSamples = 25;

/// A quaternionic space E together with a real subspace U of E.
struct Pair {
  HypercomplexStructure structure;
  Subspace<Rational> subspace;

  Pair() = default;
  Pair(HypercomplexStructure s, Subspace<Rational> u);

  std::size_t dim() const { return structure.dim(); }
  friend bool operator==(const Pair&, const Pair&) = default;
};

/// Frame M(zeta) = M0 + zeta M1 of the (-i)-eigenbundle over the twistor
/// sphere; in the chart at infinity the frame is M1 + w M0 (w = 1/zeta).
struct AntiholoFrame {
  ComplexMatrix m0;
  ComplexMatrix m1;

  ComplexMatrix at(const SphereChart& z) const;
};

/// N(zeta) = N0 + zeta N1: the tautological map into (E/U)^C in the frame.
struct SheafPencil {
  ComplexMatrix n0;
  ComplexMatrix n1;

  std::size_t rows() const { return n0.rows(); }
  std::size_t cols() const { return n0.cols(); }
  ComplexMatrix at(const SphereChart& z) const;
  Matrix<Polynomial> polynomial() const;
  /// N1 + w N0, the pencil in the chart at infinity.
  Matrix<Polynomial> reversed() const;
};

/// Degrees of the line bundles in a splitting over CP^1, ascending.
struct SplittingType {
  std::vector<int> degrees;

  SplittingType() = default;
  explicit SplittingType(std::vector<int> d);

  std::size_t rank() const { return degrees.size(); }
  bool empty() const { return degrees.empty(); }
  long total() const;
  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

/// Marker for a cokernel that is not locally free: the non-unit invariant
/// factors of the pencil, finite ones as polynomials in zeta and those at
/// infinity as "inf^d".
struct TorsionMarker {
  std::vector<std::string> factors;
  friend bool operator==(const TorsionMarker&, const TorsionMarker&) = default;
};

struct SheafReport {
  bool is_cr = false;
  bool is_co_cr = false;
  SplittingType minus;
  std::variant<SplittingType, TorsionMarker> plus;

  bool plus_is_torsion() const { return std::holds_alternative<TorsionMarker>(plus); }
  const SplittingType& plus_splitting() const;
  friend bool operator==(const SheafReport&, const SheafReport&) = default;
};

/// How the fibre rank of a pencil behaves over the whole of CP^1.
struct FiberProfile {
  std::size_t generic_rank = 0;
  /// Non-unit invariant factors (rank drops at finite zeta).
  std::vector<Polynomial> finite_factors;
  /// Rank of N1 (fibre at infinity).
  std::size_t rank_at_infinity = 0;

  bool constant_rank() const { return finite_factors.empty() && rank_at_infinity == generic_rank; }
};

/// Kronecker invariants of a pencil that Wong sequences expose cheaply:
/// right minimal indices e (kernel), left minimal indices h (cokernel) and the
/// total degree of the regular part, from rank = sum e + sum h + regular_degree.
struct PencilIndices {
  std::vector<int> right;
  std::vector<int> left;
  std::size_t generic_rank = 0;
  std::size_t regular_degree = 0;

  /// No finite or infinite elementary divisors: the fibre rank never drops.
  bool constant_rank() const { return regular_degree == 0; }
};

AntiholoFrame antiholomorphic_frame(const HypercomplexStructure& s);
SheafPencil sheaf_pencil(const Pair& p);

PencilIndices pencil_indices(const SheafPencil& n);

/// Smith invariant factors plus the chart at infinity.
FiberProfile fiber_profile(const SheafPencil& n);
std::vector<std::string> torsion_factors(const SheafPencil& n);

/// Direct definitions at one admissible structure J: U + JU = E, resp. U cap JU = 0.
bool cr_at(const Pair& p, const AdmissiblePoint& point);
bool co_cr_at(const Pair& p, const AdmissiblePoint& point);

/// U + JU = E for every J on the sphere. Cross-checked against the direct
/// definition at `samples` rational sphere points (internal-error on mismatch).
bool is_cr_pair(const Pair& p, std::size_t samples = kDefaultSphereSamples);
/// U cap JU = 0 for every J on the sphere; cross-checked likewise.
bool is_co_cr_pair(const Pair& p, std::size_t samples = kDefaultSphereSamples);

/// dim(W_j cap ker b) for W_0 = ker a, W_{j+1} = a^-1(b W_j), until the
/// sequence is stable. Entry j counts the polynomial kernel vectors of a + zeta b
/// of exact minimal degree <= j.
std::vector<std::size_t> chain_increments(const ComplexMatrix& a, const ComplexMatrix& b);

/// Splitting type of the kernel sheaf (degrees -1 - minimal index).
SplittingType kernel_splitting(const SheafPencil& n);
/// Splitting type of the cokernel (the left minimal indices); throws
/// torsion-detected if the fibre rank drops anywhere on CP^1.
SplittingType cokernel_splitting(const SheafPencil& n);

SheafReport analyze_pair(const Pair& p, std::size_t samples = kDefaultSphereSamples);

}  // namespace qcr
