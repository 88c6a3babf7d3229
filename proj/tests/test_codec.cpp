#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "hvcode/codec.hpp"
#include "hvcode/oracle.hpp"
#include "hvcode/sampler.hpp"

using namespace hvcode;

namespace {

DecodeFailure expect_failure(const DecodeOutcome& o) {
  if (!std::holds_alternative<DecodeFailure>(o)) {
    ADD_FAILURE() << "expected a failure";
    return {};
  }
  return std::get<DecodeFailure>(o);
}

ColoredPermutation expect_success(const DecodeOutcome& o) {
  EXPECT_TRUE(is_success(o));
  return std::get<ColoredPermutation>(o);
}

}  // namespace

TEST(MarkedWordText, ParseAndFormat) {
  const auto w = parse_marked_word("XY,UR,UL,DR,XY@3");
  EXPECT_EQ(w.size(), 5);
  EXPECT_EQ(w.mark(), 3);
  EXPECT_EQ(w.u(2), HLetter::U);
  EXPECT_EQ(w.v(4), VLetter::R);
  EXPECT_EQ(format(w), "XY,UR,UL,DR,XY@3");
  EXPECT_EQ(parse_marked_word("XY,XY@2").size(), 2);
}

TEST(MarkedWordText, Errors) {
  auto kind_of = [](const char* text) {
    try {
      parse_marked_word(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InternalContradiction;
  };
  EXPECT_EQ(kind_of("XY,UR,XY@2"), ErrorKind::InvalidMark);
  EXPECT_EQ(kind_of("XY,UL,XY@4"), ErrorKind::InvalidMark);
  EXPECT_EQ(kind_of("UL,UL,XY@1"), ErrorKind::BadFrame);
  EXPECT_EQ(kind_of("XY,QL,XY@1"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of("XY,XY"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of("XY,XY@x"), ErrorKind::SyntaxError);
}

TEST(Encode, Examples) {
  EXPECT_EQ(format(encode(Permutation{1, 2})), "XY,XY@1");
  EXPECT_EQ(format(encode(Permutation{2, 1})), "XY,XY@2");
  EXPECT_EQ(format(encode(Permutation{3, 5, 4, 1, 2})), "XY,UR,UL,DR,XY@3");
  EXPECT_EQ(format(encode(parse_colored_permutation("1,2*,3"))), "XY,DR,XY@1");
  EXPECT_EQ(format(encode(Permutation{2, 1, 3})), "XY,DL,XY@2");
  EXPECT_EQ(format(encode(Permutation{1, 4, 2, 3})), "XY,UR,DR,XY@1");
}

TEST(Encode, RejectsInteriorPoints) {
  try {
    encode(Permutation{1, 4, 3, 2, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSquare);
  }
}

TEST(Decode, SquareExamples) {
  EXPECT_EQ(format(expect_success(decode(parse_marked_word("XY,UR,UL,DR,XY@3"), DecodeMode::Square))),
            "3,5,4,1,2");
  EXPECT_EQ(format(expect_success(decode(parse_marked_word("XY,UL,XY@1"), DecodeMode::Square))), "1,2,3");

  const auto sw = expect_failure(decode(parse_marked_word("XY,DL,XY@1"), DecodeMode::Square));
  EXPECT_EQ(sw.stop_index, 2);
  EXPECT_EQ(sw.kind, FailureKind::SW);
  EXPECT_EQ(sw.prefix, Permutation({1}));
  EXPECT_EQ(to_string(sw.pair), "DL");
  EXPECT_EQ(expect_failure(decode(parse_marked_word("XY,DR,XY@1"), DecodeMode::Square)).kind, FailureKind::SW);

  const auto nw = expect_failure(decode(parse_marked_word("XY,UR,XY@3"), DecodeMode::Square));
  EXPECT_EQ(nw.stop_index, 2);
  EXPECT_EQ(nw.kind, FailureKind::NW);
  EXPECT_EQ(nw.prefix, Permutation({1}));
  EXPECT_EQ(to_string(nw.pair), "UR");
  const auto nw2 = expect_failure(decode(parse_marked_word("XY,DL,XY@3"), DecodeMode::Square));
  EXPECT_EQ(nw2.kind, FailureKind::NW);
  EXPECT_EQ(to_string(nw2.pair), "DL");
}

TEST(Decode, LengthThreeCensus) {
  int ok = 0, fail = 0;
  std::set<std::vector<int>> seen;
  for (const auto& w : oracle::all_marked_words(3)) {
    const auto o = decode(w, DecodeMode::Square);
    if (auto* cp = std::get_if<ColoredPermutation>(&o)) {
      ++ok;
      seen.insert({cp->perm().values().begin(), cp->perm().values().end()});
    } else {
      ++fail;
    }
  }
  EXPECT_EQ(ok, 6);
  EXPECT_EQ(fail, 4);
  EXPECT_EQ(seen.size(), 6u);
}

TEST(Decode, FigureWord) {
  const auto w = parse_marked_word("XY,DL,DL,UL,UR,UL,UR,XY@3");
  const auto cp = expect_success(decode(w, DecodeMode::Square));
  EXPECT_EQ(cp.size(), 8);
  EXPECT_EQ(cp.perm()(1), 3);
  EXPECT_TRUE(is_square(cp.perm()));
  EXPECT_EQ(encode(cp), w);
  EXPECT_EQ(format(cp), "3,2,1,4,6,8,7,5");
  EXPECT_TRUE(oracle::naive_square(std::vector<int>(cp.perm().values().begin(), cp.perm().values().end())));
}

TEST(Decode, ModeOverlays) {
  const auto w = parse_marked_word("XY,UL,XY@1");
  const auto f = expect_failure(decode(w, DecodeMode::FullyIndec));
  EXPECT_EQ(f.stop_index, 2);
  EXPECT_EQ(f.kind, FailureKind::SW);

  const auto cp = expect_success(decode(parse_marked_word("XY,DR,XY@1"), DecodeMode::Permutomino));
  EXPECT_EQ(format(cp), "1,2*,3");
}

TEST(Decode, CursorsSkipUsedRows) {
  // The left-lower search must start from the cursor, not from sigma(i-1).
  for (const Permutation& p : {Permutation{1, 4, 2, 3}, Permutation{2, 1, 4, 3}}) {
    const auto cp = expect_success(decode(encode(p), DecodeMode::Square));
    EXPECT_EQ(cp.perm(), p);
  }
}

TEST(Decode, FailurePairsAndClasses) {
  for (int n = 3; n <= 7; ++n)
    for (const auto& w : oracle::all_marked_words(n)) {
      const auto o = decode(w, DecodeMode::Square);
      const auto* f = std::get_if<DecodeFailure>(&o);
      if (!f) continue;
      const std::string pair = to_string(f->pair);
      if (f->kind == FailureKind::SW) {
        ASSERT_TRUE(pair == "DL" || pair == "DR") << format(w);
        ASSERT_TRUE(subclass_report(f->prefix).is_triangular(Corner::SW)) << format(w);
      } else {
        ASSERT_TRUE(pair == "UR" || pair == "DL") << format(w);
        ASSERT_TRUE(subclass_report(f->prefix).is_triangular(Corner::NW)) << format(w);
      }
      ASSERT_EQ(f->prefix.size(), f->stop_index - 1);
      ASSERT_EQ(static_cast<int>(f->suffix_u.size()), n - f->stop_index);
      ASSERT_EQ(static_cast<int>(f->suffix_v.size()), n - f->stop_index);
    }
}

TEST(RoundTrip, ExhaustiveSquare) {
  for (int n = 2; n <= 8; ++n)
    for (const auto& cp : oracle::brute_enumerate(CountFamily::Square, n).permutations)
      ASSERT_EQ(expect_success(decode(encode(cp), DecodeMode::Square)), cp);
}

TEST(RoundTrip, ExhaustiveFullyIndec) {
  for (int n = 4; n <= 8; ++n)
    for (const auto& cp : oracle::brute_enumerate(CountFamily::FullyIndec, n).permutations)
      ASSERT_EQ(expect_success(decode(encode(cp), DecodeMode::FullyIndec)), cp);
}

TEST(RoundTrip, ExhaustiveColored) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& cp : oracle::colored_co_indecomposable(n))
      ASSERT_EQ(expect_success(decode(encode(cp), DecodeMode::Permutomino)), cp);
}

TEST(RoundTrip, RandomLarge) {
  RngStream rng(20240917);
  for (int n : {50, 1000, 100000}) {
    const auto cp = sample_code(SampleFamily::Square, n, rng);
    const auto w = encode(cp);
    EXPECT_EQ(expect_success(decode(w, DecodeMode::Square)), cp);
  }
}

TEST(Complexity, PointerAdvancesAreLinear) {
  RngStream rng(5);
  for (int n : {1000, 10000, 100000}) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto w = sample_marked_word(n, rng);
      DecodeStats st;
      decode(w, DecodeMode::Square, &st);
      EXPECT_LE(st.steps, static_cast<std::uint64_t>(n));
      EXPECT_LE(st.pointer_advances, 4u * static_cast<std::uint64_t>(n));
    }
  }
}
