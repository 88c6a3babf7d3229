#include <gtest/gtest.h>

#include "hvcode/json_io.hpp"
#include "hvcode/oracle.hpp"

using namespace hvcode;

TEST(BruteEnumerate, Examples) {
  EXPECT_EQ(oracle::brute_enumerate(CountFamily::Square, 5).count, 104);
  EXPECT_EQ(oracle::brute_enumerate(CountFamily::ConvexPermutomino, 3).count, 4);
  EXPECT_EQ(oracle::colored_co_indecomposable(3).size(), 4u);
  EXPECT_EQ(oracle::brute_enumerate(CountFamily::FullyIndec, 3).count, 0);
  EXPECT_EQ(oracle::brute_enumerate(CountFamily::MarkedWords, 3).count, 10);
}

TEST(BruteEnumerate, Bounds) {
  EXPECT_THROW(oracle::brute_enumerate(CountFamily::Square, 10), Error);
  EXPECT_THROW(oracle::brute_enumerate(CountFamily::ConvexPermutomino, 6), Error);
  EXPECT_THROW(oracle::colored_co_indecomposable(10), Error);
  EXPECT_THROW(oracle::brute_generic_grid_count(10, 10, 6, false), Error);
}

TEST(BruteEnumerate, RoutesAgree) {
  for (int n = 2; n <= 5; ++n)
    EXPECT_EQ(BigInt(oracle::colored_co_indecomposable(n).size()),
              oracle::brute_enumerate(CountFamily::ConvexPermutomino, n).count);
}

TEST(Histogram, Examples) {
  EXPECT_EQ(oracle::brute_refined_histogram(CountFamily::Square, 2), Polynomial::monomial(2, 2, 2));
  EXPECT_EQ(oracle::brute_refined_histogram(CountFamily::ConvexPermutomino, 2), Polynomial::monomial(1, 1));
  Polynomial three;
  three.add_term(3, 3, 3);
  three.add_term(3, 2, 1);
  three.add_term(2, 3, 1);
  three.add_term(2, 2, 1);
  EXPECT_EQ(oracle::brute_refined_histogram(CountFamily::Square, 3), three);
}

TEST(Audit, SquareCensus) {
  const auto a3 = oracle::bijection_audit(DecodeMode::Square, 3);
  EXPECT_TRUE(a3.ok());
  EXPECT_EQ(a3.success_count, 6u);
  EXPECT_EQ(a3.failure_count("SW"), 2u);
  EXPECT_EQ(a3.failure_count("NW"), 2u);
  const auto a4 = oracle::bijection_audit(DecodeMode::Square, 4);
  EXPECT_TRUE(a4.ok());
  EXPECT_EQ(a4.success_count, 24u);
  EXPECT_EQ(a4.failure_count("SW"), 12u);
  EXPECT_EQ(a4.failure_count("NW"), 12u);
}

TEST(Audit, AllModes) {
  for (int n = 2; n <= 8; ++n) {
    for (auto mode : {DecodeMode::Square, DecodeMode::FullyIndec, DecodeMode::Permutomino}) {
      if (mode == DecodeMode::Permutomino && n > 7) continue;
      const auto a = oracle::bijection_audit(mode, n);
      EXPECT_TRUE(a.ok()) << to_string(mode) << " " << n << ": " << (a.violations.empty() ? "" : a.violations[0]);
      EXPECT_EQ(a.internal_contradictions, 0u);
      EXPECT_EQ(a.roundtrip_failures, 0u);
      EXPECT_EQ(a.words, static_cast<std::uint64_t>(count(CountFamily::MarkedWords, n)));
      std::uint64_t fails = 0;
      for (const auto& [k, c] : a.failures) fails += c;
      EXPECT_EQ(a.success_count + fails, a.words);
    }
  }
  EXPECT_EQ(oracle::bijection_audit(DecodeMode::Permutomino, 4).success_count, 18u);
}

TEST(Audit, CensusFormula) {
  EXPECT_EQ(oracle::expected_census(3, 1), 2u);
  EXPECT_EQ(oracle::expected_census(4, 1), 8u);
  EXPECT_EQ(oracle::expected_census(4, 2), 4u);
}

TEST(Audit, Json) {
  const auto j = to_json(oracle::bijection_audit(DecodeMode::Square, 3));
  EXPECT_EQ(j["success_count"], 6);
  EXPECT_EQ(j["mode"], "square");
  EXPECT_EQ(j["internal_contradictions"], 0);
}

TEST(GridCensus, Examples) {
  EXPECT_EQ(oracle::brute_generic_grid_count(5, 5, 3, false), 600);
  EXPECT_EQ(oracle::brute_generic_grid_count(3, 3, 3, false), 6);
  EXPECT_EQ(oracle::brute_generic_grid_count(4, 4, 2, true), 36);
  EXPECT_EQ(oracle::brute_generic_grid_count(4, 5, 3, true), exact_generic_polygon_count(4, 5, 3));
  EXPECT_EQ(oracle::brute_generic_grid_count(6, 4, 4, false), exact_generic_count(6, 4, 4));
}

TEST(Naive, Predicates) {
  EXPECT_TRUE(oracle::naive_decomposable({2, 1, 3}));
  EXPECT_FALSE(oracle::naive_decomposable({2, 3, 1}));
  EXPECT_TRUE(oracle::naive_co_decomposable({3, 1, 2}));
  EXPECT_FALSE(oracle::naive_square({1, 4, 3, 2, 5}));
  EXPECT_TRUE(oracle::naive_triangular({3, 5, 4, 1, 2}, 0) || !oracle::naive_square({3, 5, 4, 1, 2}));
}
