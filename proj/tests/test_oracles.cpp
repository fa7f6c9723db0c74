#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace dicon;
using namespace testsupport;

TEST(Oracles, ShufflesAreLexicographicAndComplete) {
  for (int r = 0; r <= 5; ++r)
    for (int s = 0; s <= 5; ++s) {
      auto sh = enumerateShuffles(r, s);
      EXPECT_EQ(Integer(static_cast<long>(sh.size())), binomial(r + s, r));
      for (std::size_t i = 0; i < sh.size(); ++i) {
        EXPECT_EQ(sh[i].iSeq.size(), static_cast<std::size_t>(r));
        EXPECT_EQ(sh[i].jSeq.size(), static_cast<std::size_t>(s));
        EXPECT_TRUE(std::is_sorted(sh[i].iSeq.begin(), sh[i].iSeq.end()));
        EXPECT_TRUE(std::is_sorted(sh[i].jSeq.begin(), sh[i].jSeq.end()));
        std::vector<int> all = sh[i].iSeq;
        all.insert(all.end(), sh[i].jSeq.begin(), sh[i].jSeq.end());
        std::sort(all.begin(), all.end());
        for (int k = 0; k < r + s; ++k) EXPECT_EQ(all[static_cast<std::size_t>(k)], k + 1);
        if (i) {
          EXPECT_LT(sh[i - 1].iSeq, sh[i].iSeq);
        }
      }
    }
  EXPECT_THROW(enumerateShuffles(-1, 2), Error);
}

TEST(Oracles, SpExamples) {
  auto two = shuffleTermsSp(2, 2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_TRUE(two[0].A.empty());
  EXPECT_EQ(two[0].Lambda, weightFromInts({2, 1}));
  auto odd = shuffleTermsSp(3, 1);
  ASSERT_EQ(odd.size(), 1u);
  EXPECT_EQ(odd[0].Lambda[0], 2);  // n - r - s in position p - r
  EXPECT_TRUE(shuffleTermsSp(4, 1).empty());
}

TEST(Oracles, ZeroCaseHasNoSurvivors) {
  const auto g = GroupCase::sp(2);
  FormContext ctx(g, 2);
  EXPECT_TRUE(survivingTerms(ctx, weightFromInts({2, 2}), SumVariant::V2).empty());
}

TEST(Oracles, FirstOddFormSingleTrivialTerm) {
  for (int q = 1; q <= 4; ++q) {
    const auto g = GroupCase::soOdd(1, q);
    FormContext ctx(g, 1);
    const Weight l0 = defaultLambda(g, 1);
    auto t = survivingTerms(ctx, l0, SumVariant::V2);
    ASSERT_EQ(t.size(), 1u);
    EXPECT_TRUE(t[0].A.empty());
    EXPECT_TRUE(t[0].C.empty());
    EXPECT_EQ(t[0].Lambda, l0);
  }
}

TEST(Oracles, SuTwoTwoHasTwoSurvivors) {
  const auto g = GroupCase::su(2, 2);
  FormContext ctx(g, 2);
  EXPECT_EQ(survivingTerms(ctx, defaultLambda(g, 2), SumVariant::V2).size(), 2u);
}

TEST(Oracles, PredictionsAreSelfConsistent) {
  for (const auto& g : casesUpToRank(8))
    for (const auto& f : realForms(g)) EXPECT_TRUE(predictedWeightsConsistent(g, f.index)) << g.name();
}

TEST(Oracles, CharacterizationsMatchBruteForce) {
  for (const auto& g : casesUpToRank(7))
    for (const auto& f : realForms(g)) {
      OracleCheck oc = checkOracleAgainstBruteForce(g, f.index);
      const bool bd = g.family == Family::SOodd || g.family == Family::SOeven;
      EXPECT_EQ(oc.applicable, !(bd && (f.index == 2 || f.index == 4))) << g.name() << " form " << f.index;
      if (oc.applicable) {
        EXPECT_TRUE(oc.matched) << g.name() << " form " << f.index << ": " << oc.detail;
      }
    }
}

TEST(Oracles, ShuffleFamiliesCountsAndUnitValues) {
  for (int n = 1; n <= 6; ++n) {
    for (Family fam : {Family::Sp, Family::SOstar}) {
      GroupCase g;
      g.family = fam;
      g.n = n;
      for (const auto& f : realForms(g)) {
        const int p = formParameter(g, f.index);
        const int q = fam == Family::Sp || n % 2 == 0 ? n - p : n - 1 - p;
        FormContext ctx(g, f.index);
        auto terms = survivingTerms(ctx, defaultLambda(g, f.index), SumVariant::V2);
        const bool zero = fam == Family::Sp && p % 2 == 1 && q % 2 == 1;
        const Integer want = zero ? Integer(0) : binomial(p / 2 + q / 2, p / 2);
        EXPECT_EQ(Integer(static_cast<long>(terms.size())), want) << g.name() << " form " << f.index;
        for (const auto& t : terms) {
          EXPECT_EQ(abs(t.value), 1) << g.name();
          if (fam == Family::Sp) {
            EXPECT_EQ(2 * static_cast<int>(t.A.size()), p * q) << g.name();
          }
        }
      }
    }
  }
}

TEST(Oracles, SuSurvivorsShareOneC) {
  for (int p = 1; p <= 3; ++p)
    for (int q = p + 1; p + q <= 6; ++q) {
      const auto g = GroupCase::su(p, q);
      for (const auto& f : realForms(g)) {
        FormContext ctx(g, f.index);
        auto terms = survivingTerms(ctx, defaultLambda(g, f.index), SumVariant::V2);
        ASSERT_FALSE(terms.empty()) << g.name();
        for (const auto& t : terms) EXPECT_EQ(t.C, terms.front().C) << g.name() << " form " << f.index;
      }
    }
}

TEST(Oracles, FirstOrthogonalFormHasOneSurvivor) {
  for (int p = 1; p <= 3; ++p)
    for (int q = p - 1; q <= 4; ++q) {
      for (const GroupCase& g : {GroupCase::soOdd(p, q), q >= p ? GroupCase::soEven(p, q) : GroupCase::soOdd(p, q)}) {
        FormContext ctx(g, 1);
        EXPECT_EQ(survivingTerms(ctx, defaultLambda(g, 1), SumVariant::V2).size(), 1u) << g.name();
      }
    }
}

TEST(Oracles, SurvivorValuesMatchDirectEvaluation) {
  Gen gen(31);
  for (int trial = 0; trial < 30; ++trial) {
    const GroupCase g = gen.groupCase(5);
    const auto forms = realForms(g);
    const int idx = gen.uniform(1, static_cast<int>(forms.size()));
    FormContext ctx(g, idx);
    const Weight l = sampleLambdas(ctx, static_cast<std::uint64_t>(trial), 1)[1];
    for (const auto& t : survivingTerms(ctx, l, SumVariant::Orig))
      EXPECT_EQ(t.value, naiveDim(ctx.rs.compactPositive, ctx.rs.rank, t.Lambda));
  }
}
