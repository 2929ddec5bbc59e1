#include "subsum/oracle.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace subsum {
namespace {

std::vector<Count> as_counts(std::initializer_list<long> values) { return {values.begin(), values.end()}; }

TEST(OracleEnum, Examples) {
  EXPECT_EQ(oracle_enum(GroupSpec({4}), 2).entries, as_counts({1, 2, 1, 2}));
  EXPECT_EQ(oracle_enum(GroupSpec({2, 2}), 4).entries, as_counts({1, 0, 0, 0}));
  for (const auto& spec : {GroupSpec({1}), GroupSpec({5}), GroupSpec({2, 3}), GroupSpec({2, 2, 2})}) {
    const auto table = oracle_enum(spec, 0);
    EXPECT_EQ(table.entries[0], 1);
    EXPECT_EQ(table.column_sum(), 1);
  }
}

TEST(OracleEnum, RejectsLargeGroups) {
  try {
    oracle_enum(GroupSpec({21}), 2);
    FAIL() << "expected a size-limit error";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("limit"), std::string::npos);
  }
  EXPECT_NO_THROW(oracle_enum(GroupSpec({4, 5}), 1));
}

TEST(OracleDp, Examples) {
  EXPECT_EQ(oracle_dp(GroupSpec({6}), 3).entries, as_counts({4, 3, 3, 4, 3, 3}));
  EXPECT_EQ(oracle_dp(GroupSpec({5}), 2).entries, as_counts({2, 2, 2, 2, 2}));
  EXPECT_EQ(oracle_dp(GroupSpec({1}), 1).entries, as_counts({1}));
  EXPECT_EQ(oracle_dp(GroupSpec({3}), 7).entries, as_counts({0, 0, 0}));
}

TEST(Oracles, AgreeOnEveryGroupUpToTwenty) {
  for (const auto& spec : verification_family(kEnumOrderLimit)) {
    for (std::uint64_t k = 0; k <= spec.order(); ++k) {
      const CountTable enumerated = oracle_enum(spec, k);
      const CountTable dynamic = oracle_dp(spec, k);
      ASSERT_EQ(enumerated, dynamic) << spec.to_string() << " k=" << k;
      ASSERT_EQ(enumerated.column_sum(), binomial(spec.order(), k));
    }
  }
}

TEST(OracleDp, IndependentOfProcessingOrder) {
  for (const auto& moduli : std::vector<std::vector<std::uint64_t>>{{7}, {12}, {2, 6}, {3, 3}, {2, 2, 2, 2}}) {
    const GroupSpec spec(moduli);
    for (std::uint64_t k = 0; k <= spec.order(); ++k) {
      ASSERT_EQ(oracle_dp(spec, k), oracle_dp(spec, k, ElementOrder::kReversed)) << spec.to_string() << " k=" << k;
    }
  }
}

TEST(OracleDp, ColumnSumBeyondEnumerationRange) {
  const GroupSpec spec({4, 16});
  for (const std::uint64_t k : {3u, 17u, 32u}) EXPECT_EQ(oracle_dp(spec, k).column_sum(), binomial(64, k));
}

TEST(VerificationFamily, PinnedContents) {
  const auto family = verification_family(16);
  std::vector<std::string> names;
  for (const auto& spec : family) names.push_back(spec.to_string());
  const std::vector<std::string> expected{
      "1",   "2",   "3",   "4",   "5",   "6",     "7",     "8",    "9",   "10",  "11",  "12", "13",
      "14",  "15",  "16",  "2,2", "2,2,2", "2,2,3", "2,2,4", "2,3", "2,4", "2,5", "2,6", "2,8",
      "3,3", "3,4", "3,5", "4,4"};
  EXPECT_EQ(names, expected);
}

TEST(VerifyAgainstOracles, ReportsNothingForTheFormula) {
  for (const auto& spec : verification_family(12)) {
    EXPECT_FALSE(verify_against_oracles(spec, OracleChoice::kBoth).has_value()) << spec.to_string();
  }
}

TEST(Mismatch, DescribesEveryField) {
  const Mismatch m{GroupSpec({4}), 2, GroupElement{{1}}, 2, Count(3), std::nullopt};
  EXPECT_EQ(m.describe(), "mismatch: moduli=4 k=2 b=1 formula=2 enum=3");
}

}  // namespace
}  // namespace subsum
