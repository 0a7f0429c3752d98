#include <gtest/gtest.h>

#include "qcr/json_io.hpp"
#include "test_support.hpp"

namespace qcr {
namespace {

using io::Json;

template <typename F>
std::string error_name(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.name();
  }
  return "none";
}

TEST(JsonIo, RationalsAreStringsAndAcceptIntegers) {
  EXPECT_EQ(io::to_json(Rational(-3, 4)), Json("-3/4"));
  EXPECT_EQ(io::to_json(Rational(6) / 3), Json("2"));
  EXPECT_EQ(io::rational_from_json(Json("-10/4")), Rational(-5, 2));
  EXPECT_EQ(io::rational_from_json(Json(7)), Rational(7));
  EXPECT_EQ(error_name([] { io::rational_from_json(Json("1/0")); }), "parse-error");
  EXPECT_EQ(error_name([] { io::rational_from_json(Json("x")); }), "parse-error");
  EXPECT_EQ(error_name([] { io::rational_from_json(Json("1/-2")); }), "parse-error");
  EXPECT_EQ(error_name([] { io::rational_from_json(Json(0.5)); }), "parse-error");
}

TEST(JsonIo, MatricesRoundTripAndRejectRaggedRows) {
  Rng rng(101);
  for (int t = 0; t < 10; ++t) {
    const auto m = testing::random_rational_matrix(rng, 1 + t % 4, 1 + t % 3);
    EXPECT_EQ(io::matrix_from_json(io::to_json(m), m.cols()), m);
  }
  EXPECT_EQ(io::matrix_from_json(Json::array(), 3), RationalMatrix(0, 3));
  EXPECT_EQ(error_name([] { io::matrix_from_json(Json::parse(R"([["1","2"],["3"]])"), 2); }), "parse-error");
  EXPECT_EQ(error_name([] { io::square_matrix_from_json(Json::parse(R"([["1","2"]])")); }), "parse-error");
}

TEST(JsonIo, QuaternionsRoundTrip) {
  Rng rng(102);
  for (int t = 0; t < 10; ++t) {
    const Quaternion q = Rational(1, 1 + t) * random_quaternion(rng, 5);
    EXPECT_EQ(io::quaternion_from_json(io::to_json(q)), q);
  }
  EXPECT_EQ(error_name([] { io::quaternion_from_json(Json("1,2,3")); }), "parse-error");
}

TEST(JsonIo, PairsRoundTripIncludingNestedDocuments) {
  Rng rng(103);
  for (const auto& p : {model_V(2), model_Vp(1), dual_pair(model_V(3)), testing::random_pair(rng, 2)}) {
    const Json j = io::to_json(p);
    const Pair back = io::pair_from_json(j);
    EXPECT_EQ(back.structure, p.structure);
    EXPECT_EQ(back.subspace, p.subspace);
    EXPECT_EQ(io::to_json(back), j);
    Json wrapped = Json::object();
    wrapped["pair"] = j;
    wrapped["unrelated"] = 1;
    EXPECT_EQ(io::pair_from_json(wrapped).subspace, p.subspace);
  }
}

TEST(JsonIo, MalformedStructuresAreRejected) {
  Json j = io::to_json(standard_structure(1));
  j["J"] = j["I"];
  EXPECT_EQ(error_name([&] { io::structure_from_json(j); }), "invalid-structure");
  Json missing = io::to_json(standard_structure(1));
  missing.erase("K");
  EXPECT_EQ(error_name([&] { io::structure_from_json(missing); }), "parse-error");
}

TEST(JsonIo, ReportsRoundTripIncludingTorsion) {
  RationalMatrix span(2, 4);
  span(0, 0) = 1;
  span(1, 1) = 1;
  const Pair torsion(standard_structure(1), Subspace<Rational>::span(4, span));
  for (const auto& p : {model_V(1), model_Vp(2), dual_pair(model_V(2)), torsion}) {
    const SheafReport r = analyze_pair(p);
    EXPECT_EQ(io::report_from_json(io::to_json(r)), r);
  }
  EXPECT_TRUE(io::report_from_json(io::to_json(analyze_pair(torsion))).plus_is_torsion());
}

TEST(JsonIo, DecompositionsRoundTripAndRejectUnknownTags) {
  const Decomposition d = {{FactorTag::CoV, 1}, {FactorTag::CoVp, 0}, {FactorTag::CoVp, 2}};
  EXPECT_EQ(io::decomposition_from_json(io::to_json(d)), d);
  EXPECT_EQ(error_name([] { io::decomposition_from_json(Json::parse(R"([{"tag":"Foo","k":1}])")); }), "parse-error");
  EXPECT_EQ(error_name([] { io::decomposition_from_json(Json::parse(R"([{"tag":"CoV","k":0}])")); }), "invalid-input");
}

TEST(JsonIo, TriplesGroupElementsAndRealFormsRoundTrip) {
  Rng rng(104);
  const FQuatTriple t = model_f_triple(2, 1);
  const FQuatTriple tb = io::triple_from_json(io::to_json(t));
  EXPECT_EQ(tb.structure, t.structure);
  EXPECT_EQ(tb.u, t.u);
  EXPECT_EQ(tb.v, t.v);

  const GroupElement g = random_group_element(2, 1, rng);
  EXPECT_EQ(induced_automorphism(io::group_element_from_json(io::to_json(g))), induced_automorphism(g));

  const RealForm f = recover_real_form(quaternionify(2).structure, tau(Quaternion::unit_i(), 2).map,
                                       tau(Quaternion::unit_j(), 2).map);
  const RealForm fb = io::real_form_from_json(io::to_json(f));
  EXPECT_EQ(fb.u, f.u);
  EXPECT_EQ(fb.iso, f.iso);
  EXPECT_EQ(fb.rotation, f.rotation);
}

TEST(JsonIo, UpstreamErrorsAreForwardedByName) {
  const Error original("not-classifiable", "models-classification", "mixed pair", {"detail"});
  const Json doc = io::error_document(original);
  try {
    io::pair_from_json(doc);
    FAIL() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "not-classifiable");
    EXPECT_EQ(e.module(), "models-classification");
    EXPECT_EQ(e.details(), std::vector<std::string>{"detail"});
  }
  EXPECT_EQ(error_name([] { io::parse_document("{\"a\":"); }), "parse-error");
}

}  // namespace
}  // namespace qcr
