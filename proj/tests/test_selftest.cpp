#include <gtest/gtest.h>

#include "qcr/selftest.hpp"

namespace qcr {
namespace {

TEST(Selftest, DefaultRunPasses) {
  const auto summary = run_selftest({});
  for (const auto& r : summary.results) EXPECT_TRUE(r.passed) << r.module << ": " << r.invariant << " " << r.reproducer;
  EXPECT_EQ(summary.failed(), 0u);
  EXPECT_GE(summary.results.size(), 20u);
}

TEST(Selftest, DeterministicForSeed) {
  SelftestOptions options;
  options.seed = 7;
  const auto a = run_selftest(options), b = run_selftest(options);
  ASSERT_EQ(a.results.size(), b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    EXPECT_EQ(a.results[i].passed, b.results[i].passed);
    EXPECT_EQ(a.results[i].reproducer, b.results[i].reproducer);
  }
}

TEST(Selftest, CorruptedUnitTableIsCaughtByName) {
  SelftestOptions options;
  options.corrupt_quaternion_table = true;
  const auto summary = run_selftest(options);
  std::vector<std::string> failing;
  for (const auto& r : summary.results)
    if (!r.passed) {
      EXPECT_EQ(r.module, "quaternion-structures");
      EXPECT_FALSE(r.reproducer.empty());
      failing.push_back(r.invariant);
    }
  EXPECT_EQ(failing, (std::vector<std::string>{"unit table matches the quaternion product",
                                               "table left multiplications satisfy IJ = K"}));
}

}  // namespace
}  // namespace qcr
