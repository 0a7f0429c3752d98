#include <gtest/gtest.h>

#include "qcr/models.hpp"
#include "test_support.hpp"

namespace qcr {
namespace {

using testing::random_basis_change;
using testing::transport_pair;

std::vector<Rational> rationals(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

SplittingType plus_of(const Pair& p) { return analyze_pair(p).plus_splitting(); }

Pair conjugated(const Pair& p, Rng& rng) {
  const Pair moved = transport_pair(p, random_basis_change(rng, p.dim()));
  return Pair(rotate_representative(moved.structure, random_rotation(rng)), moved.subspace);
}

TEST(ModelV, FirstModelIsImaginaryLine) {
  const auto p = model_V(1);
  EXPECT_EQ(p.structure, standard_structure(1));
  EXPECT_EQ(p.subspace, Subspace<Rational>::span(4, RationalMatrix{{0, 1, 0, 0}}));
  EXPECT_EQ(plus_of(p).degrees, (std::vector<int>{2}));
}

TEST(ModelV, PatternMembershipForKTwo) {
  const auto p = model_V(2);
  EXPECT_EQ(p.subspace.dim(), 3u);
  // z1 = 1 + 2i, z2 = 3 (real since conj(z2) = z2): (1 + 2i, 1 - 2i + 3j).
  EXPECT_TRUE(p.subspace.contains(rationals({1, 2, 0, 0, 1, -2, 3, 0})));
  // z2 = i is excluded by the reality constraint: (0, i j) = (0, k).
  EXPECT_FALSE(p.subspace.contains(rationals({0, 0, 0, 0, 0, 0, 0, 1})));
  EXPECT_EQ(plus_of(p).degrees, (std::vector<int>{4}));
}

TEST(ModelV, PatternMembershipForKThree) {
  const auto p = model_V(3);
  EXPECT_EQ(p.subspace.dim(), 5u);
  // z1 = 1, z2 = 2 + i, z3 = 5i: (1, 1 + (2 + i) j, 5i - (2 - i) j) = (1, 1 + 2j + k, 5i - 2j + k).
  EXPECT_TRUE(p.subspace.contains(rationals({1, 0, 0, 0, 1, 0, 2, 1, 0, 5, -2, 1})));
  EXPECT_EQ(plus_of(p).degrees, (std::vector<int>{6}));
}

TEST(ModelVp, DimensionsAndSplittings) {
  EXPECT_EQ(model_Vp(0).dim(), 4u);
  EXPECT_EQ(model_Vp(0).subspace.dim(), 0u);
  EXPECT_EQ(plus_of(model_Vp(0)).degrees, (std::vector<int>{1, 1}));
  const auto p = model_Vp(1);
  EXPECT_EQ(p.dim(), 12u);
  EXPECT_EQ(p.subspace.dim(), 4u);
  // z1 = i, z2 = 1 + i: (i, -i + (1 + i) j, -(1 - i) j) = (i, -i + j + k, -j + k).
  EXPECT_TRUE(p.subspace.contains(rationals({0, 1, 0, 0, 0, -1, 1, 1, 0, 0, -1, 1})));
  EXPECT_EQ(plus_of(p).degrees, (std::vector<int>{3, 3}));
  EXPECT_EQ(plus_of(model_Vp(2)).degrees, (std::vector<int>{5, 5}));
}

TEST(ModelV, RejectsBadIndices) {
  EXPECT_THROW(model_V(0), Error);
  EXPECT_THROW(model_Vp(-1), Error);
  EXPECT_THROW(model_f_triple(0, 0), Error);
}

TEST(DualPair, ExamplesAndInvolution) {
  const auto v1 = dual_pair(model_V(1));
  EXPECT_TRUE(analyze_pair(v1).is_cr);
  EXPECT_EQ(analyze_pair(v1).minus.degrees, (std::vector<int>{-2}));
  const Pair e(standard_structure(2), Subspace<Rational>::whole(8));
  const auto d = dual_pair(e);
  EXPECT_EQ(d.subspace.dim(), 0u);
  EXPECT_EQ(d.structure, dual_structure(e.structure));
  Rng rng(40);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = testing::random_pair(rng, 1 + trial % 2);
    EXPECT_EQ(dual_pair(dual_pair(p)), p);
    EXPECT_EQ(analyze_pair(dual_pair(dual_pair(p))), analyze_pair(p));
  }
}

TEST(DirectSum, Examples) {
  EXPECT_EQ(plus_of(direct_sum(model_V(1), model_V(1))).degrees, (std::vector<int>{2, 2}));
  EXPECT_EQ(plus_of(direct_sum(model_V(1), model_Vp(0))).degrees, (std::vector<int>{1, 1, 2}));
  const auto empty = model_product({});
  EXPECT_EQ(empty.dim(), 0u);
  EXPECT_EQ(direct_sum(model_V(2), empty), model_V(2));
  EXPECT_EQ(direct_sum(empty, model_V(2)), model_V(2));
}

TEST(Factor, ParseAndFormat) {
  EXPECT_EQ(parse_factor("CoV:2"), (FactorSpec{FactorTag::CoV, 2}));
  EXPECT_EQ(to_string(FactorSpec{FactorTag::CrVp, 0}), "CrVp:0");
  EXPECT_THROW(parse_factor("CoV:0"), Error);
  EXPECT_THROW(parse_factor("XY:1"), ParseError);
  EXPECT_THROW(parse_factor("CoV"), ParseError);
  EXPECT_EQ(dual_factor(FactorSpec{FactorTag::CoVp, 3}), (FactorSpec{FactorTag::CrVp, 3}));
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(model_V(2)), (Decomposition{{FactorTag::CoV, 2}}));
  const Pair zero(standard_structure(2), Subspace<Rational>::zero(8));
  EXPECT_EQ(classify(zero), (Decomposition{{FactorTag::CoVp, 0}, {FactorTag::CoVp, 0}}));
  const Pair whole(standard_structure(2), Subspace<Rational>::whole(8));
  EXPECT_EQ(classify(whole), (Decomposition{{FactorTag::CrVp, 0}, {FactorTag::CrVp, 0}}));
}

TEST(Classify, RecoversProductUnderAutomorphisms) {
  const Decomposition input = {{FactorTag::CoV, 1}, {FactorTag::CoV, 1}, {FactorTag::CoVp, 1}};
  const auto product = model_product(input);
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) EXPECT_EQ(classify(conjugated(product, rng)), input);
}

TEST(Classify, RandomMultisetsAndDuals) {
  Rng rng(42);
  for (int trial = 0; trial < 8; ++trial) {
    const bool co = rng.coin();
    Decomposition input;
    std::size_t budget = 5;
    while (budget > 0 && (input.empty() || rng.coin())) {
      input.push_back(testing::random_factor(rng, co, budget));
      const auto& f = input.back();
      budget -= (f.tag == FactorTag::CoVp || f.tag == FactorTag::CrVp) ? 2 * f.k + 1 : f.k;
    }
    std::sort(input.begin(), input.end());
    const auto p = conjugated(model_product(input), rng);
    EXPECT_EQ(classify(p), input);
    Decomposition duals;
    for (const auto& f : input) duals.push_back(dual_factor(f));
    std::sort(duals.begin(), duals.end());
    EXPECT_EQ(classify(dual_pair(p)), duals);
  }
}

TEST(Classify, Errors) {
  const Pair degenerate(standard_structure(1), Subspace<Rational>::span(4, RationalMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}}));
  try {
    classify(degenerate);
    FAIL() << "expected not-classifiable";
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "not-classifiable");
  }
  SheafReport fake;
  fake.is_co_cr = true;
  fake.plus = SplittingType({3});
  try {
    decomposition_from_report(fake);
    FAIL() << "expected inconsistency";
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "inconsistency");
  }
  fake.plus = SplittingType({0, 2});
  EXPECT_THROW(decomposition_from_report(fake), Error);
  EXPECT_EQ(co_cr_degree_violations(SplittingType({3}), 1).size(), 2u);
  EXPECT_TRUE(co_cr_degree_violations(SplittingType({3, 3}), 3).empty());
}

TEST(ModelFTriple, Shapes) {
  const auto t = model_f_triple(1, 0);
  EXPECT_EQ(t.u, Subspace<Rational>::span(4, RationalMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(t.v, Subspace<Rational>::span(4, RationalMatrix{{1, 0, 0, 0}}));
  const auto q = model_f_triple(0, 2);
  EXPECT_EQ(q.v.dim(), 0u);
  EXPECT_EQ(q.u.dim(), 8u);
  const auto mixed = model_f_triple(2, 1);
  EXPECT_EQ(mixed.u.dim(), 10u);
  EXPECT_EQ(mixed.v.dim(), 2u);
}

TEST(RandomDecomposition, RespectsBudgetAndKind) {
  Rng rng(71);
  for (int t = 0; t < 200; ++t) {
    const bool co = t % 2 == 0;
    const std::size_t budget = 1 + static_cast<std::size_t>(t % 6);
    const Decomposition d = random_decomposition(rng, co, budget);
    ASSERT_FALSE(d.empty());
    EXPECT_TRUE(std::is_sorted(d.begin(), d.end()));
    EXPECT_LE(quaternionic_dim(d), budget);
    EXPECT_EQ(model_product(d).structure.quaternionic_dim(), quaternionic_dim(d));
    for (const auto& f : d) {
      EXPECT_EQ(f.tag == FactorTag::CoV || f.tag == FactorTag::CoVp, co);
      EXPECT_NO_THROW(f.validate());
    }
  }
  EXPECT_THROW(random_decomposition(rng, true, 0), Error);
}

TEST(RandomPresentation, PreservesReportAndChangesCoordinates) {
  Rng rng(72);
  for (const auto& p : {model_V(2), model_Vp(1), dual_pair(model_V(1))}) {
    const Pair q = random_presentation(p, rng);
    EXPECT_EQ(analyze_pair(q), analyze_pair(p));
    EXPECT_EQ(q.subspace.dim(), p.subspace.dim());
    EXPECT_FALSE(q.structure == p.structure);
  }
}

}  // namespace
}  // namespace qcr
