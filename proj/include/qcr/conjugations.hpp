#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcr/twistor.hpp"

namespace qcr {

/// H (x) R^n with basis 1(x)u_a, i(x)u_a, j(x)u_a, k(x)u_a at index 4a + c.
struct Quaternionification {
  std::size_t n = 0;
  HypercomplexStructure structure;
};

Quaternionification quaternionify(std::size_t n);
/// Id_H (x) f for a real map f: R^n -> R^p (p x n matrix).
RationalMatrix quaternionify_map(const RationalMatrix& f);

/// An involutive quaternionic automorphism other than the identity, with the
/// rotation by pi it induces on the sphere.
struct ConjugationMap {
  RationalMatrix map;
  RationalMatrix rotation;
};

/// q' (x) u -> -q q' q (x) u on H (x) R^n; q must be an imaginary unit.
ConjugationMap tau(const Quaternion& q, std::size_t n);

bool is_conjugation(const RationalMatrix& m, const HypercomplexStructure& s);
/// Throws invalid-conjugation naming the failed property.
ConjugationMap as_conjugation(const RationalMatrix& m, const HypercomplexStructure& s);

struct RealForm {
  /// Common fixed space of both conjugations.
  Subspace<Rational> u;
  /// Columns (b, I'b, J'b, K'b) for each basis vector b of U: an isomorphism
  /// from quaternionify(dim U) onto E.
  RationalMatrix iso;
  /// Rotation induced by iso; its first two columns are the fixed axes of the
  /// two conjugations' sphere symmetries.
  RationalMatrix rotation;
};

/// E = U^H for two distinct commuting conjugations. Under iso the
/// conjugations become tau(i) and tau(j).
RealForm recover_real_form(const HypercomplexStructure& s, const RationalMatrix& t1, const RationalMatrix& t2);

/// B = {1(x)e - i(x)Ie - j(x)Je - k(x)Ke} inside H (x) E.
Subspace<Rational> graph_subspace(const HypercomplexStructure& s);
/// tau_i(B) + tau_j(B) + tau_k(B) inside H (x) R^n.
Subspace<Rational> cosum_subspace(const Subspace<Rational>& b);

/// Fixed imaginary units i, j, k followed by `extra` seeded random ones.
std::vector<Quaternion> conjugation_sample(std::size_t extra, std::uint64_t seed);

constexpr std::size_t kExtraConjugations = 10;
constexpr std::uint64_t kConjugationSeed = 20240611;

/// Names of the failed checks for H (x) E = B + C (direct), C quaternionic and
/// B = intersection of tau_q(C) over the sample.
std::vector<std::string> graph_decomposition_violations(const HypercomplexStructure& s,
                                                        std::size_t extra = kExtraConjugations,
                                                        std::uint64_t seed = kConjugationSeed);

/// CR pair (image of U in U^H / C, quotient structure) for a quaternionic
/// subspace C of H (x) U; the conjugation conditions are checked on the sample
/// and the result is certified with is_cr_pair.
Pair cr_from_subspace(const Subspace<Rational>& c, std::size_t extra = kExtraConjugations,
                      std::uint64_t seed = kConjugationSeed);
/// C = (iota^H)^-1(C_E) for the inclusion iota of U (its basis rows) into E.
Subspace<Rational> subspace_from_cr(const Pair& p);
/// Dual pair of cr_from_subspace(Ann B); certified with is_co_cr_pair.
Pair cocr_from_subspace(const Subspace<Rational>& b, std::size_t extra = kExtraConjugations,
                        std::uint64_t seed = kConjugationSeed);

}  // namespace qcr
