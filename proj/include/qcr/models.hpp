#pragma once

#include <string>
#include <vector>

#include "qcr/fstructures.hpp"
#include "qcr/twistor.hpp"

namespace qcr {

enum class FactorTag { CoV, CoVp, CrV, CrVp };

/// One model factor: CoV(k) = V_k, CoVp(k) = V'_k and CrV, CrVp their dual pairs.
struct FactorSpec {
  FactorTag tag = FactorTag::CoV;
  int k = 1;

  /// Throws invalid-input when k is out of range for the tag.
  void validate() const;
  friend bool operator==(const FactorSpec&, const FactorSpec&) = default;
  friend auto operator<=>(const FactorSpec&, const FactorSpec&) = default;
};

/// Sorted multiset of factors.
using Decomposition = std::vector<FactorSpec>;

std::string tag_name(FactorTag tag);
FactorTag parse_tag(const std::string& name);
/// "CoV:2" etc.
std::string to_string(const FactorSpec& f);
FactorSpec parse_factor(const std::string& text);
FactorSpec dual_factor(const FactorSpec& f);

/// V_k in H^k: (z1, conj(z1) + z2 j, z3 - conj(z2) j, ...) with conj(z_k) = (-1)^k z_k.
Pair model_V(int k);
/// V'_k in H^(2k+1): the same pattern in 2k slots followed by -conj(z_2k) j.
Pair model_Vp(int k);
Pair model_for(const FactorSpec& f);

/// Quaternionic dimension of the ambient space of the model.
std::size_t quaternionic_dim(const FactorSpec& f);
std::size_t quaternionic_dim(const Decomposition& d);

/// Random nonempty co-CR (co) or CR multiset of total quaternionic dimension
/// at most max_quaternionic_dim.
Decomposition random_decomposition(Rng& rng, bool co, std::size_t max_quaternionic_dim);
/// Isomorphic copy of p: transported by a random quaternionic automorphism
/// composed with a random change of basis, with a randomly rotated representative.
Pair random_presentation(const Pair& p, Rng& rng);

/// (Ann U, E*).
Pair dual_pair(const Pair& p);
Pair direct_sum(const Pair& a, const Pair& b);
/// Direct sum of the models of all factors, in order.
Pair model_product(const Decomposition& factors);

/// Model factors of a CR or co-CR pair, read off the sheaf splitting and
/// verified by rebuilding the model product and comparing reports.
Decomposition classify(const Pair& p, std::size_t samples = kDefaultSphereSamples);
/// Same, from an already computed report (no verification).
Decomposition decomposition_from_report(const SheafReport& report);

/// E = H^(l+m), U = (Im H)^l x H^m, V = R^l (real axes of the first l coordinates).
FQuatTriple model_f_triple(int l, int m);

/// Violations of the co-CR degree laws: total = 2k, every degree >= 1, odd
/// degrees with even multiplicity. Empty when all hold.
std::vector<std::string> co_cr_degree_violations(const SplittingType& plus, std::size_t quaternionic_dim);

}  // namespace qcr
