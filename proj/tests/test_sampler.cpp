#include <cmath>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "hvcode/json_io.hpp"
#include "hvcode/oracle.hpp"
#include "hvcode/sampler.hpp"

using namespace hvcode;

TEST(Rng, SplitMixReferenceValues) {
  RngStream r(0);
  EXPECT_EQ(r.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(r.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(r.counter(), 2u);
  RngStream a(42), b(42);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a.next(), b.next());
  EXPECT_NE(RngStream::substream(42, 0).next(), RngStream::substream(42, 1).next());
}

TEST(Rng, BoundedDraws) {
  RngStream r(9);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 70000; ++i) ++hits[r.below(std::uint64_t{7})];
  for (int h : hits) EXPECT_NEAR(h, 10000, 500);
  EXPECT_THROW(r.below(std::uint64_t{0}), Error);
  const BigInt big = (BigInt(1) << 100) + 3;
  for (int i = 0; i < 100; ++i) {
    const BigInt v = r.below(big);
    ASSERT_GE(v, 0);
    ASSERT_LT(v, big);
  }
}

TEST(MarkedWordRank, Bijection) {
  for (int n = 2; n <= 7; ++n) {
    const auto words = oracle::all_marked_words(n);
    std::set<BigInt> ranks;
    for (const auto& w : words) {
      const BigInt r = rank_marked_word(w);
      ASSERT_EQ(unrank_marked_word(n, r), w);
      ranks.insert(r);
    }
    EXPECT_EQ(BigInt(ranks.size()), count(CountFamily::MarkedWords, n));
    EXPECT_EQ(*ranks.rbegin(), count(CountFamily::MarkedWords, n) - 1);
  }
  EXPECT_THROW(unrank_marked_word(3, 10), Error);
}

TEST(MarkedWordSampler, LengthTwo) {
  RngStream r(3);
  int first = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto w = sample_marked_word(2, r);
    ASSERT_EQ(w.size(), 2);
    first += w.mark() == 1;
  }
  EXPECT_NEAR(first, 5000, 250);
  EXPECT_THROW(sample_marked_word(1, r), Error);
}

TEST(MarkedWordSampler, ChiSquareLengthThree) {
  RngStream r(11);
  std::map<std::string, int> hits;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++hits[format(sample_marked_word(3, r))];
  ASSERT_EQ(hits.size(), 10u);
  double chi = 0;
  for (const auto& [w, h] : hits) chi += (h - draws / 10.0) * (h - draws / 10.0) / (draws / 10.0);
  EXPECT_LT(chi, 30.0);
}

TEST(MarkedWordSampler, FrequenciesLengthFour) {
  RngStream r(12);
  std::map<BigInt, int> hits;
  const int draws = 480000;
  for (int i = 0; i < draws; ++i) ++hits[rank_marked_word(sample_marked_word(4, r))];
  ASSERT_EQ(hits.size(), 48u);
  const double p = 1.0 / 48, mean = draws * p, sd = std::sqrt(draws * p * (1 - p));
  for (const auto& [rk, h] : hits) EXPECT_LT(std::abs(h - mean), 5 * sd) << rk;
}

TEST(ObjectSampler, OutputsBelongToFamily) {
  RngStream r(4);
  for (int n : {1, 2, 5, 30, 200}) {
    const auto cp = sample_code(SampleFamily::Square, n, r);
    EXPECT_TRUE(subclass_report(cp).square);
  }
  for (int n : {4, 9, 40}) {
    const auto cp = sample_code(SampleFamily::FullyIndec, n, r);
    EXPECT_TRUE(subclass_report(cp).fully_indecomposable());
  }
  for (int n : {2, 6, 40}) {
    const auto pm = std::get<Permutomino>(sample_object(SampleFamily::ConvexPermutomino, n, r));
    EXPECT_EQ(pm.size(), n);
  }
  EXPECT_THROW(sample_code(SampleFamily::FullyIndec, 3, r), Error);
  EXPECT_THROW(sample_code(SampleFamily::ConvexPermutomino, 1, r), Error);
}

TEST(ObjectSampler, AcceptanceRateMatchesCounts) {
  RngStream r(21);
  SampleStats st;
  const int samples = 4000;
  for (int i = 0; i < samples; ++i) sample_code(SampleFamily::Square, 20, r, &st);
  const double p = static_cast<double>(count(CountFamily::Square, 20)) /
                   static_cast<double>(count(CountFamily::MarkedWords, 20));
  const double rate = samples / static_cast<double>(st.attempts);
  const double sd = std::sqrt(p * (1 - p) / static_cast<double>(st.attempts));
  EXPECT_NEAR(rate, p, 3 * sd);
  EXPECT_GT(p, 0.5);
}

TEST(ObjectSampler, UniformOverPermutominoes) {
  RngStream r(8);
  std::map<std::string, int> hits;
  const int draws = 18000;
  for (int i = 0; i < draws; ++i) ++hits[format(std::get<Permutomino>(sample_object(SampleFamily::ConvexPermutomino, 4, r)))];
  ASSERT_EQ(hits.size(), 18u);
  double chi = 0;
  for (const auto& [k, h] : hits) chi += (h - 1000.0) * (h - 1000.0) / 1000.0;
  EXPECT_LT(chi, 45.0);  // 17 dof, far tail
}

TEST(Batch, DeterministicAndThreadIndependent) {
  const auto a = sample_batch(SampleFamily::Square, 30, 40, 7, 1);
  const auto b = sample_batch(SampleFamily::Square, 30, 40, 7, 4);
  EXPECT_EQ(batch_json(SampleFamily::Square, 30, 7, a).dump(), batch_json(SampleFamily::Square, 30, 7, b).dump());
  const auto c = sample_batch(SampleFamily::Square, 30, 40, 8, 1);
  EXPECT_NE(batch_json(SampleFamily::Square, 30, 7, a).dump(), batch_json(SampleFamily::Square, 30, 8, c).dump());
  // Item i only depends on its substream.
  RngStream s = RngStream::substream(7, 5);
  EXPECT_EQ(std::get<ColoredPermutation>(a[5]), std::get<ColoredPermutation>(sample_object(SampleFamily::Square, 30, s)));
}

TEST(Grid, ExactCounts) {
  EXPECT_EQ(exact_generic_count(5, 5, 3), 600);
  EXPECT_EQ(exact_generic_polygon_count(4, 4, 2), 36);
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(exact_generic_count(n, n, n), count(CountFamily::Square, n));
    EXPECT_EQ(exact_generic_polygon_count(n, n, n), count(CountFamily::ConvexPermutomino, n));
  }
  EXPECT_THROW(exact_generic_count(3, 5, 4), Error);
  EXPECT_THROW(exact_generic_polygon_count(5, 5, 1), Error);
}

TEST(Grid, SamplesValidate) {
  RngStream r(13);
  for (int i = 0; i < 50; ++i) {
    EXPECT_TRUE(is_valid_config(sample_exterior_config(40, 30, 12, r)));
    EXPECT_TRUE(is_valid_polygon(sample_convex_polygon(40, 30, 12, r), 12));
  }
  const auto g = sample_exterior_config(1000, 800, 50, r);
  EXPECT_EQ(g.points.size(), 50u);
  EXPECT_TRUE(is_valid_config(g));
}

TEST(Grid, UniformOverSmallGrid) {
  // exact_generic_polygon_count(3, 3, 2) = 9 stretchings of the unit square.
  RngStream r(14);
  std::map<std::vector<Point>, int> hits;
  for (int i = 0; i < 9000; ++i) ++hits[sample_convex_polygon(3, 3, 2, r).turnpoints];
  ASSERT_EQ(hits.size(), 9u);
  for (const auto& [k, h] : hits) EXPECT_NEAR(h, 1000, 150);
}

TEST(Subset, Floyd) {
  RngStream r(15);
  std::map<std::vector<int>, int> hits;
  for (int i = 0; i < 10000; ++i) {
    const auto s = sample_subset(5, 2, r);
    ASSERT_TRUE(std::is_sorted(s.begin(), s.end()));
    ++hits[s];
  }
  ASSERT_EQ(hits.size(), 10u);
  for (const auto& [k, h] : hits) EXPECT_NEAR(h, 1000, 150);
}
