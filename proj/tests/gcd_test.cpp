// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ancientnt/gcd.hpp"

using namespace ancientnt;

namespace {

std::vector<std::string> lines_of(const GcdTrace& t, bool grouped = true) { return render_trace(t, grouped); }

std::size_t count_kind(const GcdTrace& t, StepKind kind) {
  std::size_t n = 0;
  for (const auto& s : t.steps) n += s.kind == kind ? 1 : 0;
  return n;
}

}  // namespace

TEST(TwoAdicSplitTest, Examples) {
  EXPECT_EQ(two_adic_split(Natural{98}), (TwoAdicSplit{1, Natural{49}}));
  EXPECT_EQ(two_adic_split(Natural{7}), (TwoAdicSplit{0, Natural{7}}));
  EXPECT_EQ(two_adic_split(Natural{96}), (TwoAdicSplit{5, Natural{3}}));
  EXPECT_THROW(two_adic_split(Natural{}), std::domain_error);
}

TEST(TwoAdicSplitTest, Reconstructs) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Natural n = Natural::random_with_bits(rng, 1 + rng() % 300) << (rng() % 70);
    const auto s = two_adic_split(n);
    ASSERT_TRUE(s.odd_part.is_odd());
    ASSERT_EQ(Natural::power_of_two(s.exponent) * s.odd_part, n);
  }
}

TEST(AncientGcdTest, Examples) {
  EXPECT_EQ(ancient_gcd(Natural{98}, Natural{63}).result, Natural{7});
  const auto same = ancient_gcd(Natural{7}, Natural{7});
  EXPECT_EQ(same.result, Natural{7});
  EXPECT_EQ(count_kind(same, StepKind::Subtract), 0u);
  EXPECT_EQ(ancient_gcd(Natural{1071}, Natural{462}).result, Natural{21});
}

TEST(AncientGcdTest, ZeroHandling) {
  EXPECT_THROW(ancient_gcd(Natural{}, Natural{}), std::domain_error);
  EXPECT_EQ(ancient_gcd(Natural{12}, Natural{}).result, Natural{12});
  EXPECT_EQ(ancient_gcd(Natural{}, Natural{12}).result, Natural{12});
}

TEST(AncientGcdTest, PreSplitScalesByCommonTwoPower) {
  // 48 = 2^4 * 3, 36 = 2^2 * 9: odd parts give 3, scaled by 2^2.
  const auto t = ancient_gcd(Natural{48}, Natural{36});
  EXPECT_EQ(t.result, Natural{12});
  ASSERT_FALSE(t.steps.empty());
  EXPECT_EQ(t.steps.front().kind, StepKind::RemoveTwoPower);
  EXPECT_EQ(t.steps.back().operands, (std::vector<Natural>{Natural{3}, Natural{4}, Natural{12}}));
  EXPECT_FALSE(check_trace(t).has_value());
}

TEST(SubtractiveGcdTest, PrefixOf98And63AndExamples) {
  const auto t = subtractive_gcd(Natural{98}, Natural{63});
  EXPECT_EQ(t.result, Natural{7});
  const auto lines = lines_of(t);
  ASSERT_GE(lines.size(), 3u);
  EXPECT_EQ(lines[0], "98-63=35");
  EXPECT_EQ(lines[1], "63-35=28");
  EXPECT_EQ(lines[2], "35-28=7");

  const auto five = subtractive_gcd(Natural{5}, Natural{5});
  EXPECT_EQ(five.result, Natural{5});
  EXPECT_EQ(five.counts.subtractions, 0u);

  const auto t21 = subtractive_gcd(Natural{21}, Natural{6});
  EXPECT_EQ(t21.result, Natural{3});
  EXPECT_EQ(lines_of(t21), (std::vector<std::string>{"21-6=15", "15-6=9", "9-6=3", "6-3=3", "3=3"}));
  EXPECT_EQ(t21.counts.subtractions, 4u);

  EXPECT_THROW(subtractive_gcd(Natural{}, Natural{3}), std::domain_error);
  EXPECT_THROW(subtractive_gcd(Natural{3}, Natural{}), std::domain_error);
}

TEST(AncientVariantTest, TraceOf63And35) {
  const auto t = ancient_gcd_variant(Natural{63}, Natural{35});
  EXPECT_EQ(t.result, Natural{7});
  EXPECT_EQ(lines_of(t), (std::vector<std::string>{"63-35=28", "28=4×7", "35-7=28", "28=4×7", "7=7"}));
  EXPECT_EQ(lines_of(t, false),
            (std::vector<std::string>{"63-35=28", "28/2=14", "14/2=7", "35-7=28", "28/2=14", "14/2=7", "7=7"}));
  EXPECT_EQ(t.counts.shifts, 4u);
  EXPECT_EQ(t.counts.subtractions, 2u);
}

TEST(AncientVariantTest, ExamplesAndErrors) {
  const auto nine = ancient_gcd_variant(Natural{9}, Natural{9});
  EXPECT_EQ(nine.result, Natural{9});
  EXPECT_EQ(nine.counts.subtractions, 0u);
  EXPECT_EQ(ancient_gcd_variant(Natural{105}, Natural{77}).result, Natural{7});
  EXPECT_EQ(ancient_gcd_variant(Natural{35}, Natural{63}).result, Natural{7});
  EXPECT_THROW(ancient_gcd_variant(Natural{98}, Natural{63}), std::domain_error);
  EXPECT_THROW(ancient_gcd_variant(Natural{63}, Natural{}), std::domain_error);
}

TEST(BinaryGcdTest, Examples) {
  EXPECT_EQ(binary_gcd(Natural{98}, Natural{63}).result, Natural{7});
  EXPECT_EQ(binary_gcd(Natural{}, Natural{}).result, Natural{});
  EXPECT_EQ(binary_gcd(Natural{12}, Natural{}).result, Natural{12});
  EXPECT_EQ(binary_gcd(Natural{}, Natural{12}).result, Natural{12});
}

TEST(BinaryGcdTest, JointHalvingsOf48And36) {
  // Step 1: 48 mod 36 = 12 -> (36, 12). Step 2 halves both twice -> (9, 3), k = 2.
  const auto t = binary_gcd(Natural{48}, Natural{36});
  EXPECT_EQ(t.result, Natural{12});
  ASSERT_GE(t.steps.size(), 5u);
  EXPECT_EQ(t.steps[0].kind, StepKind::ModReduce);
  const auto lines = lines_of(t);
  const std::vector<std::string> step2(lines.begin() + 1, lines.begin() + 5);
  EXPECT_EQ(step2, (std::vector<std::string>{"36/2=18", "12/2=6", "18/2=9", "6/2=3"}));
  EXPECT_EQ(t.steps.back().operands, (std::vector<Natural>{Natural{3}, Natural{4}, Natural{12}}));
  EXPECT_GE(t.counts.shifts, 2u);
}

TEST(EuclidGcdTest, Examples) {
  const auto t = euclid_gcd(Natural{98}, Natural{63});
  EXPECT_EQ(t.result, Natural{7});
  EXPECT_EQ(t.counts.mod_reductions, 4u);
  EXPECT_EQ(lines_of(t), (std::vector<std::string>{"98 mod 63=35", "63 mod 35=28", "35 mod 28=7", "28 mod 7=0", "7=7"}));
  EXPECT_EQ(euclid_gcd(Natural{17}, Natural{}).result, Natural{17});
  const auto thirteen = euclid_gcd(Natural{13}, Natural{13});
  EXPECT_EQ(thirteen.result, Natural{13});
  EXPECT_EQ(thirteen.counts.mod_reductions, 1u);
  EXPECT_EQ(euclid_gcd(Natural{}, Natural{}).result, Natural{});
}

TEST(ExtendedGcdTest, Examples) {
  const auto r = extended_gcd(Natural{98}, Natural{63});
  EXPECT_EQ(r.g, Natural{7});
  EXPECT_EQ(r.u, Integer{2});
  EXPECT_EQ(r.v, Integer{-3});
  const auto z = extended_gcd(Natural{17}, Natural{});
  EXPECT_EQ(z.g, Natural{17});
  EXPECT_EQ(z.u, Integer{1});
  EXPECT_EQ(z.v, Integer{0});
  const auto s = extended_gcd(Natural{3}, Natural{5});
  EXPECT_EQ(s.g, Natural{1});
  EXPECT_EQ(s.u, Integer{2});
  EXPECT_EQ(s.v, Integer{-1});
  EXPECT_THROW(extended_gcd(Natural{}, Natural{}), std::domain_error);
}

TEST(ExtendedGcdTest, BezoutOnSeededRandomPairs) {
  std::mt19937_64 rng(0xB320);
  for (int i = 0; i < 1000; ++i) {
    const Natural a = Natural::random_with_bits(rng, 1 + rng() % 512);
    const Natural b = Natural::random_with_bits(rng, rng() % 512);
    const auto r = extended_gcd(a, b);
    ASSERT_EQ(r.u * Integer{a} + r.v * Integer{b}, Integer{r.g});
    ASSERT_EQ(r.g, euclid_gcd(a, b, TraceMode::CountsOnly).result);
  }
}

// Exhaustive over 1..512 per the cross-algorithm agreement property.
TEST(CrossAlgorithmTest, ExhaustiveAgreement) {
  for (std::uint32_t a = 1; a <= 512; ++a) {
    for (std::uint32_t b = 1; b <= 512; ++b) {
      const Natural na{a}, nb{b};
      const Natural ref{std::gcd(a, b)};
      ASSERT_EQ(euclid_gcd(na, nb, TraceMode::CountsOnly).result, ref);
      ASSERT_EQ(ancient_gcd(na, nb, TraceMode::CountsOnly).result, ref) << a << "," << b;
      ASSERT_EQ(subtractive_gcd(na, nb, TraceMode::CountsOnly).result, ref) << a << "," << b;
      ASSERT_EQ(binary_gcd(na, nb, TraceMode::CountsOnly).result, ref) << a << "," << b;
      if ((a & 1) && (b & 1)) {
        ASSERT_EQ(ancient_gcd_variant(na, nb, TraceMode::CountsOnly).result, ref);
      }
    }
  }
}

TEST(CrossAlgorithmTest, DivisorProperty) {
  for (std::uint32_t a = 1; a <= 128; ++a) {
    for (std::uint32_t b = 1; b <= 128; ++b) {
      const std::uint32_t g = static_cast<std::uint32_t>(binary_gcd(Natural{a}, Natural{b}).result.to_u64());
      ASSERT_EQ(a % g, 0u);
      ASSERT_EQ(b % g, 0u);
      for (std::uint32_t d = 1; d <= std::min(a, b); ++d) {
        if (a % d == 0 && b % d == 0) {
          ASSERT_EQ(g % d, 0u);
        }
      }
    }
  }
}

TEST(CrossAlgorithmTest, SplitIdentity) {
  for (std::uint32_t a = 1; a <= 200; ++a) {
    for (std::uint32_t b = 1; b <= 200; ++b) {
      const auto sa = two_adic_split(Natural{a});
      const auto sb = two_adic_split(Natural{b});
      const Natural odd = ancient_gcd(sa.odd_part, sb.odd_part, TraceMode::CountsOnly).result;
      ASSERT_EQ(ancient_gcd(Natural{a}, Natural{b}, TraceMode::CountsOnly).result,
                Natural::power_of_two(std::min(sa.exponent, sb.exponent)) * odd);
    }
  }
}

TEST(CrossAlgorithmTest, RandomLargeOperands) {
  std::mt19937_64 rng(4096);
  // Equal bit lengths: the subtractive methods take about a/b steps.
  for (int i = 0; i < 60; ++i) {
    const std::size_t bits = 1024 + rng() % 3073;
    const Natural a = Natural::random_with_bits(rng, bits);
    const Natural b = Natural::random_with_bits(rng, bits);
    const Natural ref = euclid_gcd(a, b, TraceMode::CountsOnly).result;
    ASSERT_EQ(ancient_gcd(a, b, TraceMode::CountsOnly).result, ref);
    ASSERT_EQ(subtractive_gcd(a, b, TraceMode::CountsOnly).result, ref);
    ASSERT_EQ(binary_gcd(a, b, TraceMode::CountsOnly).result, ref);
    // Planted common factor.
    const Natural f = Natural::random_with_bits(rng, 200);
    ASSERT_EQ(binary_gcd(a * f, b * f, TraceMode::CountsOnly).result, ref * f);
    ASSERT_EQ(ancient_gcd(a * f, b * f, TraceMode::CountsOnly).result, ref * f);
  }
}

// Counts-only runs must tally exactly what the full trace would.
TEST(TraceTest, CountsIndependentOfTraceMode) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    // Bit lengths within 6 of each other keep the subtraction count small.
    const std::size_t bits = 7 + rng() % 74;
    Natural a = Natural::random_with_bits(rng, bits);
    Natural b = Natural::random_with_bits(rng, bits - rng() % 7);
    for (auto algo : all_gcd_algorithms) {
      if (algo == GcdAlgorithm::AncientVariant && (a.is_even() || b.is_even())) continue;
      const auto full = run_gcd(algo, a, b, TraceMode::Full);
      const auto lean = run_gcd(algo, a, b, TraceMode::CountsOnly);
      ASSERT_EQ(full.counts, lean.counts) << algorithm_name(algo) << " " << a.to_string() << "," << b.to_string();
      ASSERT_EQ(full.result, lean.result);
      ASSERT_TRUE(lean.steps.size() <= 1);
    }
  }
}

TEST(TraceTest, ReplayAndStepIdentities) {
  for (std::uint32_t a = 0; a <= 90; ++a) {
    for (std::uint32_t b = 0; b <= 90; ++b) {
      for (auto algo : all_gcd_algorithms) {
        const Natural na{a}, nb{b};
        GcdTrace t;
        try {
          t = run_gcd(algo, na, nb);
        } catch (const std::domain_error&) {
          continue;
        }
        const auto failure = check_trace(t);
        ASSERT_FALSE(failure.has_value()) << algorithm_name(algo) << " " << a << "," << b << ": " << *failure;
      }
    }
  }
}

TEST(TraceTest, ReplayRejectsTamperedTraces) {
  auto t = subtractive_gcd(Natural{98}, Natural{63});
  ASSERT_FALSE(check_trace(t).has_value());

  auto wrong_diff = t;
  wrong_diff.steps[0].operands[2] = Natural{36};
  EXPECT_TRUE(check_trace(wrong_diff).has_value());

  auto wrong_result = t;
  wrong_result.result = Natural{14};
  EXPECT_TRUE(check_trace(wrong_result).has_value());

  // "28-7=14" is not a valid subtraction.
  auto bad_line = t;
  bad_line.steps[3].operands = {Natural{28}, Natural{7}, Natural{14}};
  EXPECT_TRUE(check_trace(bad_line).has_value());

  auto unknown_source = t;
  unknown_source.steps[1].operands = {Natural{64}, Natural{35}, Natural{29}};
  EXPECT_TRUE(check_trace(unknown_source).has_value());

  auto bad_power = ancient_gcd_variant(Natural{63}, Natural{35});
  bad_power.steps[1].operands[1] = Natural{3};
  EXPECT_TRUE(check_trace(bad_power).has_value());
}

TEST(TraceTest, TerminationMeasures) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t bits = 7 + rng() % 34;
    const Natural a = Natural::random_with_bits(rng, bits);
    const Natural b = Natural::random_with_bits(rng, bits - rng() % 7);

    // Subtractive: the operand sum drops at every subtraction.
    Natural x = a, y = b;
    Natural sum = x + y;
    for (const auto& s : subtractive_gcd(a, b).steps) {
      if (s.kind != StepKind::Subtract) continue;
      const Natural next = s.operands[1] + s.operands[2];
      ASSERT_LT(next, sum);
      sum = next;
    }

    // Binary: a + b drops across every Step 4-5 cycle. A cycle opens with
    // the Subtract step that records the larger and smaller of (a, b).
    const auto bt = binary_gcd(a, b);
    std::optional<Natural> prev;
    for (const auto& s : bt.steps) {
      if (s.kind != StepKind::Subtract) continue;
      const Natural cur = s.operands[0] + s.operands[1];
      if (prev) {
        ASSERT_LT(cur, *prev);
      }
      prev = cur;
    }
  }
}

TEST(GcdTest, AlgorithmNamesRoundTrip) {
  for (auto algo : all_gcd_algorithms) EXPECT_EQ(parse_algorithm(algorithm_name(algo)), algo);
  EXPECT_FALSE(parse_algorithm("stein").has_value());
}
