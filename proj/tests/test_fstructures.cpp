#include <gtest/gtest.h>

#include "qcr/fstructures.hpp"
#include "qcr/models.hpp"
#include "test_support.hpp"

namespace qcr {
namespace {

using testing::random_basis_change;

const Quaternion kI = Quaternion::unit_i();
const Quaternion kJ = Quaternion::unit_j();
const Quaternion kK = Quaternion::unit_k();

std::vector<Rational> flatten(const std::vector<Quaternion>& point) {
  std::vector<Rational> out;
  for (const auto& q : point)
    for (int c = 0; c < 4; ++c) out.push_back(q.coeff(c));
  return out;
}

std::vector<Rational> apply_matrix(const RationalMatrix& m, const std::vector<Rational>& x) {
  std::vector<Rational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * x[c];
  return out;
}

std::vector<Quaternion> random_point(Rng& rng, std::size_t l, std::size_t m) {
  std::vector<Quaternion> out;
  for (std::size_t a = 0; a < l; ++a) {
    const Quaternion q = random_quaternion(rng, 4);
    out.push_back(q - Quaternion(q.coeff(0), 0, 0, 0));
  }
  for (std::size_t c = 0; c < m; ++c) out.push_back(random_quaternion(rng, 4));
  return out;
}

TEST(Triple, ValidExamples) {
  EXPECT_TRUE(validate_triple(model_f_triple(1, 0)).empty());
  EXPECT_TRUE(validate_triple(model_f_triple(2, 1)).empty());
  const FQuatTriple quaternionic{standard_structure(1), Subspace<Rational>::whole(4), Subspace<Rational>::zero(4)};
  EXPECT_TRUE(validate_triple(quaternionic).empty());
}

TEST(Triple, InvalidExamples) {
  const auto u = Subspace<Rational>::span(4, RationalMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}});
  const FQuatTriple same{standard_structure(1), u, u};
  const auto violations = validate_triple(same);
  ASSERT_FALSE(violations.empty());
  EXPECT_EQ(violations.front(), "direct-sum");
  try {
    cr_side(same);
    FAIL() << "expected invalid-triple";
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "invalid-triple");
    EXPECT_EQ(e.details(), violations);
  }
  // E = R.1 + span{i, j, k} swapped roles: J(Im H) is not inside R.
  const auto t = model_f_triple(1, 0);
  const FQuatTriple swapped{t.structure, t.v, t.u};
  EXPECT_FALSE(validate_triple(swapped).empty());
}

TEST(Triple, Sides) {
  EXPECT_EQ(analyze_pair(cocr_side(model_f_triple(1, 0))).plus_splitting().degrees, (std::vector<int>{2}));
  EXPECT_EQ(analyze_pair(cocr_side(model_f_triple(2, 1))).plus_splitting().degrees, (std::vector<int>{1, 1, 2, 2}));
  EXPECT_EQ(analyze_pair(cocr_side(model_f_triple(1, 2))).plus_splitting().degrees, (std::vector<int>{1, 1, 1, 1, 2}));
  const auto cr = cr_side(model_f_triple(0, 1));
  EXPECT_EQ(cr.subspace, Subspace<Rational>::whole(4));
  EXPECT_EQ(analyze_pair(cr).minus.degrees, (std::vector<int>{-1, -1}));
  for (auto [l, m] : {std::pair{1, 0}, {2, 1}, {1, 2}}) {
    const auto t = model_f_triple(l, m);
    EXPECT_TRUE(is_cr_pair(cr_side(t)));
    EXPECT_TRUE(is_co_cr_pair(cocr_side(t)));
  }
}

TEST(GroupAct, IdentityAndScaling) {
  Rng rng(50);
  const auto id = GroupElement::identity(1, 1);
  const auto x = random_point(rng, 1, 1);
  EXPECT_EQ(group_act(id, x), x);
  const GroupElement scale(RationalMatrix{{2}}, Quaternion(1), Matrix<Quaternion>(0, 0));
  const std::vector<Quaternion> p = {Quaternion(0, 1, -2, 3)};
  EXPECT_EQ(group_act(scale, p), (std::vector<Quaternion>{Quaternion(0, 2, -4, 6)}));
  EXPECT_THROW(group_act(scale, {Quaternion(1, 0, 0, 0)}), Error);
  EXPECT_THROW(group_act(scale, {}), Error);
}

TEST(GroupAct, QuarterTurnAboutI) {
  // q = 1 + i stands for the unit (1 + i)/sqrt(2): conjugation turns Im H by pi/2 about i.
  const Quaternion q(1, 1, 0, 0);
  const GroupElement g(RationalMatrix{{1}}, q, Matrix<Quaternion>{{Quaternion(1)}});
  EXPECT_EQ(q * kJ * q.inverse(), kK);
  const RationalMatrix quarter{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}};
  EXPECT_EQ(rho(g), quarter);
  EXPECT_EQ(group_act(g, {kI, kJ}), (std::vector<Quaternion>{kI, q * kJ}));
  EXPECT_EQ(group_act(g, {kJ, Quaternion(1)}), (std::vector<Quaternion>{kK, q}));
  const auto s = standard_structure(2);
  const auto r = is_quaternionic_map(induced_automorphism(g), s, s);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, quarter);
}

TEST(GroupAct, RhoOfJ) {
  const GroupElement g(RationalMatrix::identity(1), kJ, Matrix<Quaternion>(0, 0));
  EXPECT_EQ(rho(g), (RationalMatrix{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}));
}

TEST(GroupAct, FormulaMatchesInducedMatrix) {
  Rng rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    const auto l = static_cast<std::size_t>(rng.uniform(0, 2));
    const auto m = static_cast<std::size_t>(rng.uniform(l == 0 ? 1 : 0, 2));
    const auto g = random_group_element(l, m, rng);
    const auto x = random_point(rng, l, m);
    EXPECT_EQ(flatten(group_act(g, x)), apply_matrix(induced_automorphism(g), flatten(x)));
  }
}

TEST(GroupAct, AutomorphismsOfModels) {
  Rng rng(52);
  for (auto [l, m] : {std::pair{1, 0}, {2, 1}, {1, 2}}) {
    const auto t = model_f_triple(l, m);
    for (int trial = 0; trial < 10; ++trial) {
      const auto g = random_group_element(l, m, rng);
      const auto phi = induced_automorphism(g);
      EXPECT_EQ(image(phi, t.u), t.u);
      EXPECT_EQ(image(phi, t.v), t.v);
      const auto r = is_quaternionic_map(phi, t.structure, t.structure);
      ASSERT_TRUE(r.has_value());
      EXPECT_EQ(*r, rho(g));
    }
  }
}

TEST(GroupAct, ActsOnRealAxesByA) {
  Rng rng(53);
  const auto g = random_group_element(3, 0, rng);
  const auto phi = induced_automorphism(g);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) EXPECT_EQ(phi(4 * b, 4 * a), g.a()(b, a));
}

TEST(GroupCompose, Homomorphism) {
  Rng rng(54);
  for (int trial = 0; trial < 50; ++trial) {
    const auto l = static_cast<std::size_t>(rng.uniform(0, 2));
    const auto m = static_cast<std::size_t>(rng.uniform(l == 0 ? 1 : 0, 2));
    const auto g = random_group_element(l, m, rng);
    const auto h = random_group_element(l, m, rng);
    const auto gh = group_compose(g, h);
    EXPECT_EQ(induced_automorphism(gh), induced_automorphism(g) * induced_automorphism(h));
    const auto x = random_point(rng, l, m);
    EXPECT_EQ(group_act(gh, x), group_act(g, group_act(h, x)));
    EXPECT_EQ(rho(gh), rho(g) * rho(h));
    EXPECT_TRUE(equivalent(group_compose(g, GroupElement::identity(l, m)), g));
  }
  EXPECT_THROW(group_compose(GroupElement::identity(1, 0), GroupElement::identity(0, 1)), Error);
}

TEST(GroupElement, SignCanonicalAndRealRescaling) {
  Rng rng(55);
  const auto g = random_group_element(1, 1, rng);
  const GroupElement flipped(g.a(), Quaternion(-1) * g.q(), Quaternion(-1) * g.b());
  EXPECT_EQ(flipped.q(), g.q());
  EXPECT_TRUE(equivalent(flipped, g));
  const GroupElement scaled(g.a(), Quaternion(3) * g.q(), Quaternion(3) * g.b());
  EXPECT_TRUE(equivalent(scaled, g));
  EXPECT_THROW(GroupElement(RationalMatrix{{0}}, Quaternion(1), Matrix<Quaternion>(0, 0)), Error);
  EXPECT_THROW(GroupElement(RationalMatrix(0, 0), Quaternion(1), Matrix<Quaternion>{{Quaternion()}}), Error);
}

TEST(QuaternionMatrix, InverseBothSides) {
  Rng rng(56);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_group_element(0, 3, rng);
    const auto inv = quaternion_matrix_inverse(g.b());
    EXPECT_EQ(g.b() * inv, Matrix<Quaternion>::identity(3));
    EXPECT_EQ(inv * g.b(), Matrix<Quaternion>::identity(3));
  }
}

TEST(Conformal3d, StandardFrame) {
  const auto id = RationalMatrix::identity(3);
  const auto t = conformal_3d(id, id);
  EXPECT_EQ(t, model_f_triple(1, 0));
  EXPECT_EQ(analyze_pair(cocr_side(t)).plus_splitting().degrees, (std::vector<int>{2}));
}

TEST(Conformal3d, Errors) {
  const auto id = RationalMatrix::identity(3);
  try {
    conformal_3d(id, RationalMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    FAIL() << "expected wrong-orientation";
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "wrong-orientation");
  }
  try {
    conformal_3d(id, RationalMatrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    FAIL() << "expected invalid-frame";
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "invalid-frame");
  }
}

TEST(Conformal3d, RandomFramesAndRescaling) {
  Rng rng(57);
  for (int trial = 0; trial < 10; ++trial) {
    RationalMatrix m = random_basis_change(rng, 3);
    if (determinant(m) < 0)
      for (std::size_t c = 0; c < 3; ++c) m(0, c) = -m(0, c);
    const RationalMatrix gram = m.transpose() * m;
    const RationalMatrix frame = *inverse(m) * random_rotation(rng);
    const auto t = conformal_3d(gram, frame);
    EXPECT_TRUE(validate_triple(t).empty());
    const auto report = analyze_pair(cocr_side(t));
    EXPECT_EQ(report.plus_splitting().degrees, (std::vector<int>{2}));
    const Rational lambda = Rational(trial + 2) / 3;
    EXPECT_EQ(analyze_pair(cocr_side(conformal_3d(lambda * lambda * gram, lambda * frame))), report);
    // The Gram of the triple's E-coordinates lies in the conformal class: rotations of Im H act by CO(3).
    EXPECT_TRUE(is_quaternionic_map(RationalMatrix::identity(4), t.structure, t.structure).has_value());
  }
}

}  // namespace
}  // namespace qcr
