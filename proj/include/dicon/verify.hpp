#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "report.hpp"

namespace dicon {

struct VerifyConfig {
  /// Only cases with rank <= maxRank are visited; 0 keeps the full ranges.
  int maxRank = 0;
  unsigned workers = 1;
  std::uint64_t seed = 1;
  std::uint64_t termCap = std::uint64_t{1} << 24;
  /// Flips the sign of one closed-form constant so the harness must fail.
  bool injectFault = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> skipped;

  CriterionResult(int id_, std::string name_) : id(id_), name(std::move(name_)) {}

  bool passed() const { return failures.empty(); }

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

struct VerifyReport {
  std::vector<CriterionResult> criteria;

  bool passed() const {
    return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.passed(); });
  }

  Json toJson() const {
    Json j;
    Json arr = Json::array();
    for (const auto& c : criteria) {
      Json e;
      e["id"] = c.id;
      e["name"] = c.name;
      e["passed"] = c.passed();
      e["checks"] = c.checks;
      e["failures"] = c.failures;
      e["skipped"] = c.skipped;
      arr.push_back(std::move(e));
    }
    j["criteria"] = std::move(arr);
    j["passed"] = passed();
    return j;
  }

  std::string toText() const {
    std::string out;
    for (const auto& c : criteria) {
      out += std::string(c.passed() ? "PASS" : "FAIL") + "  [" + std::to_string(c.id) + "] " + c.name + "  (" +
             std::to_string(c.checks) + " checks";
      if (!c.failures.empty()) out += ", " + std::to_string(c.failures.size()) + " failed";
      if (!c.skipped.empty()) out += ", " + std::to_string(c.skipped.size()) + " skipped";
      out += ")\n";
      for (const auto& f : c.failures) out += "      " + f + "\n";
      for (const auto& s : c.skipped) out += "      skipped: " + s + "\n";
    }
    return out;
  }
};

/// Cases of the table-reproduction range, optionally capped by rank.
inline std::vector<GroupCase> acceptanceCases(int maxRank = 0) {
  std::vector<GroupCase> all;
  for (int p = 1; p <= 3; ++p)
    for (int q = p; p + q <= 6; ++q) all.push_back(GroupCase::su(p, q));
  for (int n = 1; n <= 6; ++n) all.push_back(GroupCase::sp(n));
  for (int p = 1; p <= 3; ++p)
    for (int q = std::max(0, p - 1); q <= 4; ++q) all.push_back(GroupCase::soOdd(p, q));
  for (int p = 1; p <= 3; ++p)
    for (int q = p; q <= 4; ++q) all.push_back(GroupCase::soEven(p, q));
  for (int n = 1; n <= 6; ++n) all.push_back(GroupCase::soStar(n));
  if (maxRank <= 0) return all;
  std::vector<GroupCase> out;
  for (const auto& g : all)
    if (g.rank() <= maxRank) out.push_back(g);
  return out;
}

inline std::string formName(const GroupCase& g, int index) { return g.name() + " form " + std::to_string(index); }

/// Brute force at lambda_0 against the closed form for every form of every
/// case.  Forms beyond the term cap are listed in `skipped`.
inline std::vector<CaseDocument> tableRun(const std::vector<GroupCase>& cases, const SumOptions& sum, bool injectFault,
                                          std::vector<std::string>* skipped = nullptr) {
  std::vector<CaseDocument> docs;
  bool faultPending = injectFault;
  ReportOptions opt;
  opt.method = Method::Both;
  opt.sum = sum;
  for (const auto& g : cases) {
    CaseDocument d;
    d.group = g;
    for (const auto& f : realForms(g)) {
      try {
        ConstantReport r = constantReport(g, f.index, opt);
        if (faultPending && r.cClosed != 0) {
          r.cClosed = -r.cClosed;
          r.agree = r.cBrute && *r.cBrute == r.cClosed;
          faultPending = false;
        }
        d.forms.push_back(std::move(r));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::TooLarge) throw;
        if (skipped) skipped->push_back(formName(g, f.index) + ": " + e.what());
      }
    }
    docs.push_back(std::move(d));
  }
  return docs;
}

inline std::string docsJson(const std::vector<CaseDocument>& docs) {
  Json arr = Json::array();
  for (const auto& d : docs) arr.push_back(toJson(d));
  return Json{{"cases", arr}}.dump(2);
}

inline VerifyReport runVerification(const VerifyConfig& cfg) {
  VerifyReport rep;
  const auto cases = acceptanceCases(cfg.maxRank);
  SumOptions sum;
  sum.termCap = cfg.termCap;
  sum.workers = cfg.workers;
  const int pkMaxRank = cfg.maxRank > 0 ? std::min(8, cfg.maxRank) : 8;

  auto guarded = [](CriterionResult& c, const std::string& where, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::TooLarge) c.skipped.push_back(where + ": " + e.what());
      else c.check(false, where + ": " + e.what());
    }
  };

  {
    CriterionResult c{1, "table reproduction: brute force at lambda_0 equals the closed form"};
    auto docs = tableRun(cases, sum, cfg.injectFault, &c.skipped);
    for (const auto& d : docs)
      for (const auto& r : d.forms)
        c.check(r.agree.value_or(false), formName(d.group, r.form.index) + ": brute " +
                                             (r.cBrute ? toString(*r.cBrute) : "?") + " vs closed " +
                                             toString(r.cClosed));
    rep.criteria.push_back(std::move(c));
  }
  {
    CriterionResult c{2, "dimension polynomial values on so(2p) and so(2q+1)"};
    for (int p = 1; p <= pkMaxRank; ++p) {
      DimPoly P = makeDimPoly(positiveRoots(RootType::D, static_cast<std::size_t>(p)), static_cast<std::size_t>(p));
      Weight l;
      for (int i = p; i >= 1; --i) l.push_back(Rational(2 * i - 1, 2));
      c.check(evalDimPoly(P, l) == Rational(pow2(static_cast<unsigned long>(p - 1))), "so(2p) at p=" + std::to_string(p));
    }
    for (int q = 1; q <= pkMaxRank; ++q) {
      DimPoly P = makeDimPoly(positiveRoots(RootType::B, static_cast<std::size_t>(q)), static_cast<std::size_t>(q));
      Weight m;
      for (int i = q; i >= 1; --i) m.emplace_back(i);
      c.check(evalDimPoly(P, m) == Rational(pow2(static_cast<unsigned long>(q))), "so(2q+1) at q=" + std::to_string(q));
    }
    rep.criteria.push_back(std::move(c));
  }
  {
    CriterionResult c{3, "lambda-independence at three weights"};
    for (const auto& g : cases)
      for (const auto& f : realForms(g))
        guarded(c, formName(g, f.index), [&] {
          FormContext ctx(g, f.index);
          auto ls = sampleLambdas(ctx, cfg.seed, 2);
          std::vector<Integer> cs;
          for (const auto& l : ls) cs.push_back(constantBruteForceOrig(ctx, l, sum).c);
          c.check(cs[0] == cs[1] && cs[1] == cs[2], formName(g, f.index) + ": " + toString(cs[0]) + ", " +
                                                        toString(cs[1]) + ", " + toString(cs[2]));
        });
    rep.criteria.push_back(std::move(c));
  }
  {
    CriterionResult c{4, "orig sum equals rewritten sum; rho_n(l) orthogonal to l cap k"};
    for (const auto& g : cases)
      for (const auto& f : realForms(g))
        guarded(c, formName(g, f.index), [&] {
          FormContext ctx(g, f.index);
          const bool orth = checkRhoNOrthogonal(ctx.levi);
          c.check(orth, formName(g, f.index) + ": rho_n(l) not orthogonal to the compact roots of l");
          if (!orth) return;
          const Weight l0 = defaultLambda(g, f.index);
          Integer a = constantBruteForceOrig(ctx, l0, sum).c, b = constantBruteForceV2(ctx, l0, sum).c;
          c.check(a == b, formName(g, f.index) + ": orig " + toString(a) + " vs rewritten " + toString(b));
        });
    rep.criteria.push_back(std::move(c));
  }
  {
    CriterionResult c{5, "third form of SO_e(2p,2q+1), q >= p: raw sum vanishes"};
    for (const auto& g : cases) {
      if (g.family != Family::SOodd || g.q < g.p) continue;
      guarded(c, formName(g, 3), [&] {
        FormContext ctx(g, 3);
        for (const auto& l : sampleLambdas(ctx, cfg.seed, 2)) {
          Rational lhs = alternatingSum(ctx, l, SumVariant::Orig, sum).lhs;
          c.check(lhs == 0, formName(g, 3) + " at " + weightString(l) + ": sum " + toString(lhs));
        }
      });
    }
    rep.criteria.push_back(std::move(c));
  }
  {
    CriterionResult c{6, "automorphism sign relations"};
    for (const auto& g : cases) {
      if (g.family != Family::SOodd && g.family != Family::SOeven) continue;
      auto rel = [&](int f1, int f2, int expected) {
        guarded(c, formName(g, f2), [&] {
          auto sigma = partnerAutomorphism(g, f2);
          int s = autoSignRelation(g, sigma->second, f1, f2);
          c.check(s == expected, formName(g, f2) + ": sign " + std::to_string(s));
          c.check(s * constantClosedForm(g, f1) == constantClosedForm(g, f2),
                  formName(g, f2) + ": sign times c" + std::to_string(f1) + " differs from c" + std::to_string(f2));
        });
      };
      rel(1, 2, g.family == Family::SOodd ? -1 : 1);
      if (g.family == Family::SOeven && g.q == g.p) rel(3, 4, 1);
    }
    rep.criteria.push_back(std::move(c));
  }
  {
    CriterionResult c{7, "surviving terms match the combinatorial characterizations"};
    for (const auto& g : cases)
      for (const auto& f : realForms(g)) {
        const bool shuffle = g.family == Family::Sp || g.family == Family::SOstar;
        const bool su = g.family == Family::SU && g.q > g.p;
        const bool first = (g.family == Family::SOodd || g.family == Family::SOeven) && f.index == 1;
        if (!shuffle && !su && !first) continue;
        guarded(c, formName(g, f.index), [&] {
          const std::string where = formName(g, f.index);
          OracleCheck oc = checkOracleAgainstBruteForce(g, f.index, sum);
          c.check(oc.matched, where + ": " + oc.detail);
          FormContext ctx(g, f.index);
          auto terms = survivingTerms(ctx, defaultLambda(g, f.index), SumVariant::V2, sum);
          if (shuffle) {
            const int pp = formParameter(g, f.index);
            const int qq = g.family == Family::Sp || g.n % 2 == 0 ? g.n - pp : g.n - 1 - pp;
            const bool zero = g.family == Family::Sp && g.n % 2 == 0 && pp % 2 == 1;
            const Integer want = zero ? Integer(0) : binomial(pp / 2 + qq / 2, pp / 2);
            c.check(Integer(static_cast<long>(terms.size())) == want,
                    where + ": " + std::to_string(terms.size()) + " survivors, expected " + toString(want));
            for (const auto& t : terms) {
              c.check(abs(t.value) == 1, where + ": |P_K(Lambda)| = " + toString(abs(t.value)));
              if (g.family == Family::Sp)
                c.check(static_cast<int>(t.A.size()) * 2 == pp * qq, where + ": #A = " + std::to_string(t.A.size()));
            }
          } else if (su) {
            c.check(!terms.empty(), where + ": no survivors");
            for (const auto& t : terms)
              c.check(t.C == terms.front().C, where + ": survivors with different C");
          } else {
            c.check(terms.size() == 1, where + ": " + std::to_string(terms.size()) + " survivors");
          }
        });
      }
    rep.criteria.push_back(std::move(c));
  }
  {
    CriterionResult c{8, "number of real forms"};
    for (const auto& g : cases) {
      std::size_t want = 0;
      switch (g.family) {
        case Family::SU: want = static_cast<std::size_t>(g.p + 1); break;
        case Family::Sp: want = static_cast<std::size_t>(g.n + 1); break;
        case Family::SOodd: want = g.q > g.p - 1 ? 3 : 2; break;
        case Family::SOeven: want = g.q == g.p ? 4 : 3; break;
        case Family::SOstar: want = static_cast<std::size_t>(g.n % 2 == 0 ? g.n / 2 + 1 : (g.n + 1) / 2); break;
      }
      c.check(realForms(g).size() == want, g.name() + ": " + std::to_string(realForms(g).size()) + " forms");
    }
    rep.criteria.push_back(std::move(c));
  }
  {
    CriterionResult c{9, "determinism across worker counts"};
    std::string ref;
    for (unsigned w : {1u, 4u, 8u}) {
      SumOptions s = sum;
      s.workers = w;
      std::string j = docsJson(tableRun(cases, s, cfg.injectFault));
      if (ref.empty()) ref = j;
      else c.check(j == ref, std::to_string(w) + " workers: JSON differs from 1 worker");
    }
    rep.criteria.push_back(std::move(c));
  }
  return rep;
}

}  // namespace dicon
