#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "orbits.hpp"
#include "weylpoly.hpp"

namespace dicon {

// ---------------------------------------------------------------------------
// Levi data attached to h

struct LeviData {
  Weight h;
  /// noncompact positive roots vanishing on h
  std::vector<Root> deltaNPlusL;
  /// noncompact roots of either sign with value 1 on h
  std::vector<Root> deltaP1;
  /// compact positive roots vanishing on h
  std::vector<Root> deltaLKPlus;
  Weight rhoNL;
  int bigN = 0;
};

inline LeviData leviData(const RootSystem& rs, const Weight& h) {
  requireSameRank(h.size(), rs.rank, "leviData");
  LeviData L;
  L.h = h;
  for (const Root& a : rs.positive) {
    Rational v = pair(h, a);
    if (v > 0) ++L.bigN;
    if (v != 0) continue;
    (rs.isCompact(a) ? L.deltaLKPlus : L.deltaNPlusL).push_back(a);
  }
  for (const Root& a : rs.allRoots())
    if (!rs.isCompact(a) && pair(h, a) == 1) L.deltaP1.push_back(a);
  std::sort(L.deltaP1.begin(), L.deltaP1.end(), std::greater<>{});
  L.rhoNL = halfSum(L.deltaNPlusL, rs.rank);
  return L;
}

inline bool checkRhoNOrthogonal(const LeviData& L) {
  for (const Root& a : L.deltaLKPlus)
    if (pair(L.rhoNL, a) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// The alternating sums

enum class SumVariant { Orig, V2 };

inline const char* variantName(SumVariant v) { return v == SumVariant::Orig ? "orig" : "v2"; }

/// Everything needed to evaluate one alternating sum for a fixed real form.
struct FormContext {
  RootSystem rs;
  RealForm form;
  LeviData levi;
  DimPoly PK;
  DimPoly PLK;

  FormContext(const GroupCase& g, RealForm f)
      : rs(buildRootSystem(g)),
        form(std::move(f)),
        levi(leviData(rs, form.h)),
        PK(compactDimPoly(rs)),
        PLK(makeDimPoly(levi.deltaLKPlus, rs.rank)) {}

  FormContext(const GroupCase& g, int formIndex) : FormContext(g, realForm(g, formIndex)) {}

  const GroupCase& group() const { return rs.group; }

  std::size_t subsetBits() const { return levi.deltaNPlusL.size() + levi.deltaP1.size(); }

  /// Shift vectors in enumeration order: the A roots, then the C roots.
  std::vector<Root> shifts(SumVariant v) const {
    std::vector<Root> out;
    for (const Root& a : levi.deltaNPlusL) out.push_back(v == SumVariant::Orig ? a : -a);
    for (const Root& c : levi.deltaP1) out.push_back(-c);
    return out;
  }

  Weight base(const Weight& lambda, SumVariant v) const {
    return v == SumVariant::Orig ? lambda - levi.rhoNL : lambda;
  }

  int globalSign(SumVariant v) const {
    long e = levi.bigN + (v == SumVariant::V2 ? static_cast<long>(levi.deltaNPlusL.size()) : 0);
    return signPow(e);
  }
};

struct SumResult {
  /// Left-hand side including the global sign.
  Rational lhs;
  std::uint64_t termCount = 0;
  std::uint64_t survivingTermCount = 0;
  std::vector<SubsetSurvivor> survivors;
};

inline SumResult alternatingSum(const FormContext& ctx, const Weight& lambda, SumVariant v, const SumOptions& opt) {
  requireSameRank(lambda.size(), ctx.rs.rank, "alternatingSum");
  if (v == SumVariant::V2 && !checkRhoNOrthogonal(ctx.levi))
    fail(ErrorKind::OrthogonalityViolated,
         "rho_n(l) is not orthogonal to the compact roots of l for " + ctx.group().name() + " form " +
             std::to_string(ctx.form.index));
  SubsetSumResult r = alternatingSubsetSum(ctx.PK, ctx.base(lambda, v), ctx.shifts(v), opt);
  SumResult out;
  out.lhs = ctx.globalSign(v) * r.sum;
  out.termCount = r.termCount;
  out.survivingTermCount = r.survivingTermCount;
  out.survivors = std::move(r.survivors);
  return out;
}

struct BruteForceResult {
  Integer c;
  Rational lhs;
  Rational pLK;
  std::uint64_t termCount = 0;
  std::uint64_t survivingTermCount = 0;
};

inline BruteForceResult constantBruteForce(const FormContext& ctx, const Weight& lambda, SumVariant v,
                                           const SumOptions& opt = {}) {
  BruteForceResult out;
  out.pLK = evalDimPoly(ctx.PLK, lambda);
  if (out.pLK == 0) fail(ErrorKind::LambdaDegenerate, "P_{L cap K} vanishes at " + weightString(lambda));
  SumOptions o = opt;
  o.collectSurvivors = false;
  SumResult s = alternatingSum(ctx, lambda, v, o);
  out.lhs = s.lhs;
  out.termCount = s.termCount;
  out.survivingTermCount = s.survivingTermCount;
  Rational quot = s.lhs / out.pLK;
  quot.canonicalize();
  if (quot.get_den() != 1)
    fail(ErrorKind::NonIntegerQuotient, ctx.group().name() + " form " + std::to_string(ctx.form.index) + " (" +
                                            variantName(v) + "): quotient " + toString(quot) + " at " +
                                            weightString(lambda));
  out.c = quot.get_num();
  return out;
}

inline BruteForceResult constantBruteForceOrig(const FormContext& ctx, const Weight& lambda, const SumOptions& opt = {}) {
  return constantBruteForce(ctx, lambda, SumVariant::Orig, opt);
}

inline BruteForceResult constantBruteForceV2(const FormContext& ctx, const Weight& lambda, const SumOptions& opt = {}) {
  return constantBruteForce(ctx, lambda, SumVariant::V2, opt);
}

// ---------------------------------------------------------------------------
// Signed permutations of the coordinates

struct SignedPermutation {
  /// coordinate i is sent to perm[i], multiplied by sign[i]
  std::vector<int> perm;
  std::vector<int> sign;

  static SignedPermutation identity(std::size_t rank) {
    SignedPermutation s;
    for (std::size_t i = 0; i < rank; ++i) {
      s.perm.push_back(static_cast<int>(i));
      s.sign.push_back(1);
    }
    return s;
  }

  /// Negates one coordinate (0-based); for type B this is the reflection in it.
  static SignedPermutation negate(std::size_t rank, std::size_t coord) {
    SignedPermutation s = identity(rank);
    s.sign.at(coord) = -1;
    return s;
  }

  Root apply(const Root& r) const {
    Root out{std::vector<int>(r.rank(), 0)};
    for (std::size_t i = 0; i < r.rank(); ++i) out.coeffs[static_cast<std::size_t>(perm[i])] = sign[i] * r.coeffs[i];
    return out;
  }

  Weight apply(const Weight& w) const {
    Weight out = zeroWeight(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[static_cast<std::size_t>(perm[i])] = sign[i] * w[i];
    return out;
  }
};

/// Sign relating the constants of two real forms exchanged by a coordinate
/// automorphism sigma preserving the compact Cartan subalgebra.
inline int autoSignRelation(const GroupCase& g, const SignedPermutation& sigma, int form1, int form2) {
  const RootSystem rs = buildRootSystem(g);
  if (sigma.perm.size() != rs.rank || sigma.sign.size() != rs.rank)
    fail(ErrorKind::InvalidArgument, "signed permutation has wrong rank");
  std::vector<int> seen(rs.rank, 0);
  for (std::size_t i = 0; i < rs.rank; ++i) {
    int t = sigma.perm[i];
    if (t < 0 || static_cast<std::size_t>(t) >= rs.rank || seen[static_cast<std::size_t>(t)]++ ||
        (sigma.sign[i] != 1 && sigma.sign[i] != -1))
      fail(ErrorKind::InvalidArgument, "not a signed permutation");
  }
  for (const Root& a : rs.allRoots()) {
    Root s = sigma.apply(a);
    if (!rs.isRoot(s)) fail(ErrorKind::HypothesisFailed, "sigma does not preserve the root system at " + a.str());
    if (rs.isCompact(s) != rs.isCompact(a))
      fail(ErrorKind::HypothesisFailed, "sigma does not respect the compact/noncompact split at " + a.str());
  }
  std::vector<Root> img;
  for (const Root& a : rs.compactPositive) img.push_back(sigma.apply(a));
  std::sort(img.begin(), img.end(), std::greater<>{});
  if (img != rs.compactPositive) fail(ErrorKind::HypothesisFailed, "sigma does not preserve the compact positive roots");

  const RealForm f1 = realForm(g, form1), f2 = realForm(g, form2);
  if (sigma.apply(f1.h) != f2.h) fail(ErrorKind::HypothesisFailed, "sigma does not map h1 to h2");
  const LeviData L1 = leviData(rs, f1.h), L2 = leviData(rs, f2.h);

  long n = 0;
  for (const Root& b : L2.deltaNPlusL)
    for (const Root& a : L1.deltaNPlusL)
      if (sigma.apply(a) == -b) ++n;
  return signPow(n + L1.bigN + L2.bigN);
}

/// The automorphism pairing forms 1/2, and 3/4 where it exists, of the
/// orthogonal families.
inline std::optional<std::pair<int, SignedPermutation>> partnerAutomorphism(const GroupCase& g, int formIndex) {
  if (g.family != Family::SOodd && g.family != Family::SOeven) return std::nullopt;
  const std::size_t rank = static_cast<std::size_t>(g.rank());
  if (formIndex == 2) return std::make_pair(1, SignedPermutation::negate(rank, static_cast<std::size_t>(g.p - 1)));
  if (formIndex == 4 && g.family == Family::SOeven) return std::make_pair(3, SignedPermutation::negate(rank, rank - 1));
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// lambda_0

namespace detail {

class WeightBuilder {
 public:
  /// Appends `count` values start, start-1, ...
  WeightBuilder& down(Rational start, int count) {
    for (int i = 0; i < count; ++i) w_.push_back(start - i);
    return *this;
  }
  WeightBuilder& one(Rational v) {
    w_.push_back(v);
    return *this;
  }
  Weight done() { return std::move(w_); }

 private:
  Weight w_;
};

inline Rational half(long num) { return Rational(num, 2); }

}  // namespace detail

inline Weight defaultLambda(const GroupCase& g, int formIndex) {
  using detail::half;
  (void)realForm(g, formIndex);
  if (auto partner = partnerAutomorphism(g, formIndex)) return partner->second.apply(defaultLambda(g, partner->first));

  detail::WeightBuilder b;
  const int p = g.p, q = g.q, n = g.n;
  switch (g.family) {
    case Family::SU: {
      const int k = formIndex - 1;
      b.down(q, k).down(p, p - k);
      b.down(p - k, p - k).down(q - k, q - p).down(k, k);
      break;
    }
    case Family::Sp:
    case Family::SOstar: {
      const int pp = formParameter(g, formIndex);
      if (g.family == Family::SOstar && n % 2 == 1) {
        const int qq = n - 1 - pp;
        b.down(n, pp).one(pp + 1).down(n - 1, qq);
      } else {
        const int qq = n - pp;
        b.down(n, pp).down(n, qq);
      }
      break;
    }
    case Family::SOodd:
      if (formIndex == 1) {
        b.one(half(1)).down(q + half(1), p - 1);
        b.down(-1, p - 1).down(q - p + 1, q - p + 1);
      } else {
        b.down(q - half(3), p - 1).one(q - p + half(1));
        b.one(p - 1).down(0, p - 1).down(q - p, q - p);
      }
      break;
    case Family::SOeven:
      if (formIndex == 1) {
        b.one(half(1)).down(q - half(1), p - 1);
        b.down(-half(3), p - 1).down(q - p + half(1), q - p + 1);
      } else {
        b.down(q - half(3), p - 1).one(q - p + half(1));
        b.one(p - half(3)).down(half(1), p - 1).down(q - p - half(1), q - p);
      }
      break;
  }
  Weight w = b.done();
  requireSameRank(w.size(), static_cast<std::size_t>(g.rank()), "defaultLambda");
  return w;
}

inline std::vector<Weight> fundamentalWeights(const GroupCase& g) {
  const std::size_t r = static_cast<std::size_t>(g.rank());
  const RootType t = g.rootType();
  std::vector<Weight> out;
  auto prefix = [&](std::size_t i) {
    Weight w = zeroWeight(r);
    for (std::size_t j = 0; j < i; ++j) w[j] = 1;
    return w;
  };
  auto halves = [&](bool lastNegative) {
    Weight w(r, Rational(1, 2));
    if (lastNegative) w.back() = Rational(-1, 2);
    return w;
  };
  switch (t) {
    case RootType::A:
      for (std::size_t i = 1; i < r; ++i) out.push_back(prefix(i));
      break;
    case RootType::B:
      for (std::size_t i = 1; i < r; ++i) out.push_back(prefix(i));
      out.push_back(halves(false));
      break;
    case RootType::C:
      for (std::size_t i = 1; i <= r; ++i) out.push_back(prefix(i));
      break;
    case RootType::D:
      if (r < 2) {
        // no roots at all; any direction is as good as another
        out.push_back(prefix(r));
        break;
      }
      for (std::size_t i = 1; i + 2 <= r; ++i) out.push_back(prefix(i));
      out.push_back(halves(true));
      out.push_back(halves(false));
      break;
  }
  return out;
}

/// lambda_0 followed by `extra` further weights lambda_0 + sum m_i omega_i with
/// m_i drawn from [0,3]; each is distinct and has P_{L cap K} != 0.
inline std::vector<Weight> sampleLambdas(const FormContext& ctx, std::uint64_t seed, int extra) {
  const GroupCase& g = ctx.group();
  std::vector<Weight> out{defaultLambda(g, ctx.form.index)};
  const auto omegas = fundamentalWeights(g);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(g.family), static_cast<std::uint32_t>(g.p),
                    static_cast<std::uint32_t>(g.q), static_cast<std::uint32_t>(g.n),
                    static_cast<std::uint32_t>(ctx.form.index)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> coef(0, 3);
  for (int attempt = 0; attempt < 1000 && static_cast<int>(out.size()) < extra + 1; ++attempt) {
    Weight w = out.front();
    for (const Weight& om : omegas) w = w + Rational(coef(rng)) * om;
    if (evalDimPoly(ctx.PLK, w) == 0) continue;
    if (std::find(out.begin(), out.end(), w) != out.end()) continue;
    out.push_back(std::move(w));
  }
  if (static_cast<int>(out.size()) < extra + 1)
    fail(ErrorKind::LambdaDegenerate, "could not sample enough admissible weights for " + g.name());
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms

inline Integer constantClosedForm(const GroupCase& g, int formIndex) {
  (void)realForm(g, formIndex);
  const long p = g.p, q = g.q, n = g.n;
  switch (g.family) {
    case Family::SU: {
      const long k = formIndex - 1;
      return signPow(k * (p + q - k)) * binomial(p, k);
    }
    case Family::Sp: {
      const long k = formIndex - 1;
      if (n % 2 == 0 && k % 2 == 1) return 0;
      const long r = k / 2, s = (n - k) / 2;
      return signPow((k + 1) / 2) * binomial(r + s, r);
    }
    case Family::SOstar: {
      const long pp = formParameter(g, formIndex);
      const long r = pp / 2, s = n % 2 == 0 ? (n - pp) / 2 : (n - 1 - pp) / 2;
      return signPow(r) * binomial(r + s, r);
    }
    case Family::SOodd: {
      const Integer c1 = signPow(p / 2 + 1) * pow2(static_cast<unsigned long>(2 * p - 2));
      if (formIndex == 1) return c1;
      if (formIndex == 2) return -c1;
      return 0;
    }
    case Family::SOeven: {
      if (formIndex <= 2) return signPow((p - 1) / 2) * pow2(static_cast<unsigned long>(2 * p - 2));
      if (q > p) return signPow(p / 2 + 1) * pow2(static_cast<unsigned long>(2 * p - 1));
      return signPow(p / 2 + 1) * pow2(static_cast<unsigned long>(2 * p - 2));
    }
  }
  return 0;
}

/// The closed form as a formula in the family parameters.
inline std::string closedFormExpression(const GroupCase& g, int formIndex, bool latex = false) {
  (void)realForm(g, formIndex);
  auto pick = [&](const char* text, const char* tex) { return std::string(latex ? tex : text); };
  switch (g.family) {
    case Family::SU: return pick("(-1)^(k(p+q-k)) C(p,k)", "(-1)^{k(p+q-k)}\\binom{p}{k}");
    case Family::Sp:
      if (g.n % 2 == 0 && (formIndex - 1) % 2 == 1) return "0";
      return pick("(-1)^[(k+1)/2] C(r+s,r), r=[k/2], s=[(n-k)/2]",
                  "(-1)^{[\\frac{k+1}{2}]}\\binom{r+s}{r},\\ r=[\\tfrac{k}{2}],\\ s=[\\tfrac{n-k}{2}]");
    case Family::SOstar:
      if (g.n % 2 == 0)
        return pick("(-1)^(p/2) C(r+s,r), r=p/2, s=(n-p)/2", "(-1)^{p/2}\\binom{r+s}{r},\\ r=\\tfrac{p}{2},\\ s=\\tfrac{n-p}{2}");
      return pick("(-1)^(p/2) C(r+s,r), r=p/2, s=(n-1-p)/2",
                  "(-1)^{p/2}\\binom{r+s}{r},\\ r=\\tfrac{p}{2},\\ s=\\tfrac{n-1-p}{2}");
    case Family::SOodd:
      if (formIndex == 1) return pick("(-1)^([p/2]+1) 2^(2p-2)", "(-1)^{[p/2]+1}2^{2p-2}");
      if (formIndex == 2) return pick("(-1)^[p/2] 2^(2p-2)", "(-1)^{[p/2]}2^{2p-2}");
      return "0";
    case Family::SOeven:
      if (formIndex <= 2) return pick("(-1)^[(p-1)/2] 2^(2p-2)", "(-1)^{[(p-1)/2]}2^{2p-2}");
      if (g.q > g.p) return pick("(-1)^([p/2]+1) 2^(2p-1)", "(-1)^{[p/2]+1}2^{2p-1}");
      return pick("(-1)^([p/2]+1) 2^(2p-2)", "(-1)^{[p/2]+1}2^{2p-2}");
  }
  return "";
}

// ---------------------------------------------------------------------------
// Reports

enum class Method { Brute, Closed, Both };

struct ConstantReport {
  RealForm form;
  int bigN = 0;
  Integer cClosed;
  std::optional<Integer> cBrute;
  std::vector<Weight> lambdaUsed;
  std::uint64_t termCount = 0;
  std::uint64_t survivingTermCount = 0;
  std::optional<bool> agree;
};

struct ReportOptions {
  Method method = Method::Both;
  SumOptions sum;
  std::uint64_t seed = 1;
  /// Number of weights beyond lambda_0 at which the brute force is repeated.
  int extraLambdas = 0;
};

/// Brute-force constant at lambda_0 (and optionally further weights).  The
/// constant must not depend on the weight; a mismatch is reported as
/// disagreement.
inline ConstantReport constantReport(const GroupCase& g, int formIndex, const ReportOptions& opt) {
  ConstantReport rep;
  rep.cClosed = constantClosedForm(g, formIndex);
  FormContext ctx(g, formIndex);
  rep.form = ctx.form;
  rep.bigN = ctx.levi.bigN;
  if (opt.method == Method::Closed) return rep;

  std::vector<Weight> lambdas;
  Weight l0 = defaultLambda(g, formIndex);
  if (evalDimPoly(ctx.PLK, l0) == 0 || opt.extraLambdas > 0) {
    lambdas = sampleLambdas(ctx, opt.seed, std::max(opt.extraLambdas, 1));
    if (evalDimPoly(ctx.PLK, l0) == 0) lambdas.erase(lambdas.begin());
    if (opt.extraLambdas == 0) lambdas.resize(1);
  } else {
    lambdas.push_back(l0);
  }
  bool consistent = true;
  for (const Weight& l : lambdas) {
    BruteForceResult r = constantBruteForceOrig(ctx, l, opt.sum);
    if (!rep.cBrute) {
      rep.cBrute = r.c;
      rep.termCount = r.termCount;
      rep.survivingTermCount = r.survivingTermCount;
    } else if (*rep.cBrute != r.c) {
      consistent = false;
    }
    rep.lambdaUsed.push_back(l);
  }
  if (opt.method == Method::Both) rep.agree = consistent && *rep.cBrute == rep.cClosed;
  else if (!consistent) rep.agree = false;
  return rep;
}

}  // namespace dicon
