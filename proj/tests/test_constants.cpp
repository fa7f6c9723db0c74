#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace dicon;
using namespace testsupport;

namespace {

Weight W(std::initializer_list<long> xs) { return weightFromInts(xs); }

Integer bruteAt(const GroupCase& g, int form, const Weight& l) {
  FormContext ctx(g, form);
  return constantBruteForceOrig(ctx, l).c;
}

Integer bruteAt0(const GroupCase& g, int form) { return bruteAt(g, form, defaultLambda(g, form)); }

// The constant recomputed from h alone, one subset at a time.
Rational naiveConstant(const GroupCase& g, int form, const Weight& lambda) {
  const RootSystem rs = buildRootSystem(g);
  const Weight h = realForm(g, form).h;
  std::vector<Root> nl, lk, shifts;
  int bigN = 0;
  for (const auto& a : rs.positive) {
    const Rational v = naivePair(h, a.coeffs);
    if (v > 0) ++bigN;
    if (v == 0) (rs.isCompact(a) ? lk : nl).push_back(a);
  }
  Weight rhoN(rs.rank, Rational(0));
  for (const auto& a : nl)
    for (std::size_t i = 0; i < rs.rank; ++i) rhoN[i] += Rational(a.coeffs[i]) / 2;
  shifts = nl;
  for (const auto& a : rs.allRoots())
    if (!rs.isCompact(a) && naivePair(h, a.coeffs) == 1) shifts.push_back(-a);
  Weight base = lambda;
  for (std::size_t i = 0; i < rs.rank; ++i) base[i] -= rhoN[i];
  Rational lhs = naiveSubsetSum(rs.compactPositive, rs.rank, base, shifts);
  if (bigN % 2) lhs = -lhs;
  return lhs / naiveDim(lk, rs.rank, lambda);
}

// Parameter ranges of the table reproduction.
std::vector<GroupCase> tableCases(Family f) {
  std::vector<GroupCase> out;
  switch (f) {
    case Family::SU:
      for (int p = 1; p <= 3; ++p)
        for (int q = p; p + q <= 6; ++q) out.push_back(GroupCase::su(p, q));
      break;
    case Family::Sp:
      for (int n = 1; n <= 6; ++n) out.push_back(GroupCase::sp(n));
      break;
    case Family::SOodd:
      for (int p = 1; p <= 3; ++p)
        for (int q = p - 1; q <= 4; ++q) out.push_back(GroupCase::soOdd(p, q));
      break;
    case Family::SOeven:
      for (int p = 1; p <= 3; ++p)
        for (int q = p; q <= 4; ++q) out.push_back(GroupCase::soEven(p, q));
      break;
    case Family::SOstar:
      for (int n = 1; n <= 6; ++n) out.push_back(GroupCase::soStar(n));
      break;
  }
  return out;
}

std::vector<GroupCase> allTableCases() {
  std::vector<GroupCase> out;
  for (Family f : {Family::SU, Family::Sp, Family::SOodd, Family::SOeven, Family::SOstar})
    for (const auto& g : tableCases(f)) out.push_back(g);
  return out;
}

void expectTableReproduced(Family f) {
  for (const auto& g : tableCases(f))
    for (const auto& form : realForms(g))
      EXPECT_EQ(bruteAt0(g, form.index), constantClosedForm(g, form.index)) << g.name() << " form " << form.index;
}

}  // namespace

TEST(Constants, LeviExamples) {
  {
    FormContext ctx(GroupCase::sp(2), 2);
    EXPECT_EQ(ctx.levi.deltaNPlusL, (std::vector<Root>{epsilon(2, {{1, 1}, {2, 1}})}));
    EXPECT_TRUE(ctx.levi.deltaP1.empty());
    EXPECT_EQ(ctx.levi.bigN, 2);
  }
  {
    FormContext ctx(GroupCase::su(2, 2), 2);
    std::set<Root> nl(ctx.levi.deltaNPlusL.begin(), ctx.levi.deltaNPlusL.end());
    EXPECT_EQ(nl, (std::set<Root>{epsilon(4, {{1, 1}, {3, -1}}), epsilon(4, {{2, 1}, {4, -1}})}));
    EXPECT_TRUE(ctx.levi.deltaP1.empty());
  }
  for (int q = 1; q <= 4; ++q) {
    FormContext ctx(GroupCase::soOdd(1, q), 1);
    EXPECT_TRUE(ctx.levi.deltaNPlusL.empty());
    EXPECT_TRUE(ctx.levi.deltaP1.empty());
  }
}

TEST(Constants, OrthogonalityExamples) {
  EXPECT_TRUE(checkRhoNOrthogonal(FormContext(GroupCase::sp(2), 2).levi));
  EXPECT_TRUE(FormContext(GroupCase::sp(2), 2).levi.deltaLKPlus.empty());
  EXPECT_TRUE(checkRhoNOrthogonal(FormContext(GroupCase::soOdd(2, 2), 1).levi));
}

// Computed characterization over every form of rank <= 8: the hypothesis
// fails exactly on the second orthogonal form once p >= 3.
TEST(Constants, OrthogonalityCharacterization) {
  for (const auto& g : casesUpToRank(8))
    for (const auto& f : realForms(g)) {
      const bool bd = g.family == Family::SOodd || g.family == Family::SOeven;
      const bool expected = !(bd && f.index == 2 && g.p >= 3);
      EXPECT_EQ(checkRhoNOrthogonal(FormContext(g, f.index).levi), expected) << g.name() << " form " << f.index;
    }
}

TEST(Constants, BruteForceExamples) {
  EXPECT_EQ(bruteAt0(GroupCase::su(1, 1), 1), 1);
  EXPECT_EQ(bruteAt0(GroupCase::su(1, 1), 2), -1);
  EXPECT_EQ(bruteAt(GroupCase::sp(2), 3, W({2, 1})), -1);
  EXPECT_EQ(defaultLambda(GroupCase::sp(2), 2), W({2, 2}));
  EXPECT_EQ(bruteAt(GroupCase::sp(2), 2, W({2, 2})), 0);
  EXPECT_EQ(bruteAt0(GroupCase::soOdd(1, 1), 1), -1);
}

TEST(Constants, DefaultLambdaExamples) {
  EXPECT_EQ(defaultLambda(GroupCase::sp(3), 2), W({3, 3, 2}));
  for (int q = 1; q <= 4; ++q) {
    Weight want{Rational(1, 2)};
    for (int i = q; i >= 1; --i) want.emplace_back(i);
    EXPECT_EQ(defaultLambda(GroupCase::soOdd(1, q), 1), want);
    Weight wantD{Rational(1, 2)};
    for (int i = q; i >= 1; --i) wantD.emplace_back(2 * i - 1, 2);
    EXPECT_EQ(defaultLambda(GroupCase::soEven(1, q), 1), wantD);
  }
}

// Values of the closed forms, evaluated by hand.
TEST(Constants, ClosedFormValues) {
  auto row = [](const GroupCase& g) {
    std::vector<long> v;
    for (const auto& f : realForms(g)) v.push_back(constantClosedForm(g, f.index).get_si());
    return v;
  };
  EXPECT_EQ(row(GroupCase::su(2, 3)), (std::vector<long>{1, 2, 1}));
  EXPECT_EQ(row(GroupCase::su(1, 2)), (std::vector<long>{1, 1}));
  EXPECT_EQ(row(GroupCase::sp(5)), (std::vector<long>{1, -1, -2, 2, 1, -1}));
  EXPECT_EQ(row(GroupCase::sp(4)), (std::vector<long>{1, 0, -2, 0, 1}));
  EXPECT_EQ(row(GroupCase::soStar(4)), (std::vector<long>{1, -2, 1}));
  EXPECT_EQ(row(GroupCase::soStar(3)), (std::vector<long>{1, -1}));
  EXPECT_EQ(row(GroupCase::soOdd(1, 1)), (std::vector<long>{-1, 1, 0}));
  EXPECT_EQ(row(GroupCase::soOdd(3, 3)), (std::vector<long>{16, -16, 0}));
  EXPECT_EQ(row(GroupCase::soEven(2, 3)), (std::vector<long>{4, 4, 8}));
  EXPECT_EQ(row(GroupCase::soEven(2, 2)), (std::vector<long>{4, 4, 4, 4}));
  EXPECT_EQ(row(GroupCase::soEven(3, 3)), (std::vector<long>{-16, -16, 16, 16}));
  EXPECT_EQ(closedFormExpression(GroupCase::sp(4), 2), "0");
}

TEST(Constants, SingleTermForms) {
  for (const auto& g : casesUpToRank(7))
    for (const auto& f : realForms(g)) {
      FormContext ctx(g, f.index);
      if (ctx.subsetBits() != 0) continue;
      const Weight l = defaultLambda(g, f.index);
      Rational want = evalDimPoly(ctx.PK, l) / evalDimPoly(ctx.PLK, l);
      if (ctx.levi.bigN % 2) want = -want;
      EXPECT_EQ(Rational(constantBruteForceOrig(ctx, l).c), want) << g.name() << " form " << f.index;
    }
}

TEST(Constants, MatchesNaiveRecomputation) {
  for (const auto& g : casesUpToRank(5))
    for (const auto& f : realForms(g)) {
      FormContext ctx(g, f.index);
      if (ctx.subsetBits() > 14) continue;
      for (const auto& l : sampleLambdas(ctx, 3, 1))
        EXPECT_EQ(Rational(constantBruteForceOrig(ctx, l).c), naiveConstant(g, f.index, l))
            << g.name() << " form " << f.index;
    }
}

TEST(TableReproduction, SU) { expectTableReproduced(Family::SU); }
TEST(TableReproduction, Sp) { expectTableReproduced(Family::Sp); }
TEST(TableReproduction, SOodd) { expectTableReproduced(Family::SOodd); }
TEST(TableReproduction, SOeven) { expectTableReproduced(Family::SOeven); }
TEST(TableReproduction, SOstar) { expectTableReproduced(Family::SOstar); }

TEST(Constants, LambdaIndependence) {
  for (const auto& g : allTableCases())
    for (const auto& f : realForms(g)) {
      FormContext ctx(g, f.index);
      auto ls = sampleLambdas(ctx, 7, 2);
      ASSERT_EQ(ls.size(), 3u);
      EXPECT_NE(ls[0], ls[1]);
      EXPECT_NE(ls[1], ls[2]);
      EXPECT_NE(ls[0], ls[2]);
      const Integer c0 = constantBruteForceOrig(ctx, ls[0]).c;
      EXPECT_EQ(constantBruteForceOrig(ctx, ls[1]).c, c0) << g.name() << " form " << f.index;
      EXPECT_EQ(constantBruteForceOrig(ctx, ls[2]).c, c0) << g.name() << " form " << f.index;
    }
}

TEST(Constants, SampledWeightsDependOnlyOnSeed) {
  FormContext ctx(GroupCase::soEven(2, 3), 1);
  EXPECT_EQ(sampleLambdas(ctx, 5, 3), sampleLambdas(ctx, 5, 3));
  EXPECT_NE(sampleLambdas(ctx, 5, 3), sampleLambdas(ctx, 6, 3));
}

TEST(Constants, OrigEqualsRewrittenWhereOrthogonal) {
  for (const auto& g : allTableCases())
    for (const auto& f : realForms(g)) {
      FormContext ctx(g, f.index);
      if (!checkRhoNOrthogonal(ctx.levi)) continue;
      for (const auto& l : sampleLambdas(ctx, 9, 1))
        EXPECT_EQ(constantBruteForceOrig(ctx, l).c, constantBruteForceV2(ctx, l).c) << g.name() << " form " << f.index;
    }
}

TEST(Constants, ThirdOddFormSumVanishes) {
  for (int p = 1; p <= 3; ++p)
    for (int q = p; q <= 4; ++q) {
      FormContext ctx(GroupCase::soOdd(p, q), 3);
      for (const auto& l : sampleLambdas(ctx, 1, 2))
        EXPECT_EQ(alternatingSum(ctx, l, SumVariant::Orig, {}).lhs, 0) << ctx.group().name();
    }
}

TEST(Constants, AutomorphismSigns) {
  for (const auto& g : casesUpToRank(7)) {
    if (g.family != Family::SOodd && g.family != Family::SOeven) continue;
    const int want12 = g.family == Family::SOodd ? -1 : 1;
    auto s2 = partnerAutomorphism(g, 2);
    ASSERT_TRUE(s2);
    EXPECT_EQ(s2->first, 1);
    EXPECT_EQ(autoSignRelation(g, s2->second, 1, 2), want12) << g.name();
    EXPECT_EQ(bruteAt0(g, 2), want12 * bruteAt0(g, 1)) << g.name();
    EXPECT_EQ(constantClosedForm(g, 2), want12 * constantClosedForm(g, 1)) << g.name();
    if (g.family == Family::SOeven && g.q == g.p) {
      auto s4 = partnerAutomorphism(g, 4);
      ASSERT_TRUE(s4);
      EXPECT_EQ(autoSignRelation(g, s4->second, 3, 4), 1) << g.name();
      EXPECT_EQ(bruteAt0(g, 4), bruteAt0(g, 3)) << g.name();
    }
  }
}

TEST(Constants, AutomorphismHypothesesChecked) {
  const auto g = GroupCase::soOdd(2, 2);
  // identity does not carry h1 to h2
  try {
    autoSignRelation(g, SignedPermutation::identity(4), 1, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesisFailed);
  }
  // swapping a first-block and a second-block coordinate mixes compact and noncompact
  SignedPermutation mix = SignedPermutation::identity(4);
  std::swap(mix.perm[0], mix.perm[2]);
  EXPECT_THROW(autoSignRelation(g, mix, 1, 2), Error);
  SignedPermutation bad = SignedPermutation::identity(4);
  bad.perm[1] = 0;
  EXPECT_THROW(autoSignRelation(g, bad, 1, 2), Error);
}

TEST(Constants, LambdaDegenerateReported) {
  FormContext ctx(GroupCase::soOdd(2, 2), 1);
  ASSERT_FALSE(ctx.levi.deltaLKPlus.empty());
  try {
    constantBruteForceOrig(ctx, zeroWeight(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LambdaDegenerate);
  }
}

TEST(Constants, OrthogonalityViolationReported) {
  const auto g = GroupCase::soEven(2, 2);
  FormContext ctx(g, RealForm{1, "h=0", zeroWeight(4), "always"});
  EXPECT_FALSE(checkRhoNOrthogonal(ctx.levi));
  try {
    alternatingSum(ctx, W({4, 3, 2, 1}), SumVariant::V2, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrthogonalityViolated);
  }
  FormContext second(GroupCase::soOdd(3, 2), 2);
  EXPECT_THROW(constantBruteForceV2(second, defaultLambda(GroupCase::soOdd(3, 2), 2)), Error);
}

TEST(Constants, TermCapReported) {
  const auto g = GroupCase::sp(6);
  FormContext ctx(g, 4);
  ASSERT_GT(ctx.subsetBits(), 3u);
  SumOptions o;
  o.termCap = 8;
  try {
    constantBruteForceOrig(ctx, defaultLambda(g, 4), o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(Constants, ReportMethods) {
  const auto g = GroupCase::su(2, 3);
  ReportOptions closed;
  closed.method = Method::Closed;
  auto rc = constantReport(g, 2, closed);
  EXPECT_EQ(rc.cClosed, 2);
  EXPECT_FALSE(rc.cBrute);
  EXPECT_FALSE(rc.agree);

  ReportOptions both;
  both.extraLambdas = 2;
  auto rb = constantReport(g, 2, both);
  ASSERT_TRUE(rb.cBrute);
  EXPECT_EQ(*rb.cBrute, 2);
  EXPECT_EQ(rb.lambdaUsed.size(), 3u);
  EXPECT_EQ(rb.agree, std::optional<bool>(true));

  ReportOptions brute;
  brute.method = Method::Brute;
  auto rr = constantReport(g, 2, brute);
  EXPECT_TRUE(rr.cBrute);
  EXPECT_FALSE(rr.agree);
}
