#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "constants.hpp"

namespace dicon {

/// A nonzero summand of the alternating sum.
struct SurvivingTerm {
  std::vector<Root> A;
  std::vector<Root> C;
  Weight Lambda;
  Rational value;
};

/// A summand predicted by a combinatorial characterization.
struct PredictedTerm {
  std::vector<Root> A;
  std::vector<Root> C;
  Weight Lambda;

  void normalize() {
    std::sort(A.begin(), A.end(), std::greater<>{});
    std::sort(C.begin(), C.end(), std::greater<>{});
  }

  auto key() const { return std::tie(A, C, Lambda); }
  bool operator==(const PredictedTerm& o) const { return key() == o.key(); }
  bool operator<(const PredictedTerm& o) const { return key() < o.key(); }
};

struct Shuffle {
  std::vector<int> iSeq;
  std::vector<int> jSeq;
};

/// All (r,s)-shuffles of 1..r+s, ordered lexicographically by iSeq.
inline std::vector<Shuffle> enumerateShuffles(int r, int s) {
  if (r < 0 || s < 0) fail(ErrorKind::InvalidArgument, "negative shuffle sizes");
  std::vector<Shuffle> out;
  const int m = r + s;
  std::vector<bool> pick(static_cast<std::size_t>(m), false);
  std::fill(pick.begin(), pick.begin() + r, true);
  // prev_permutation over a descending-sorted selector gives combinations in lexicographic order
  do {
    Shuffle sh;
    for (int x = 0; x < m; ++x) (pick[static_cast<std::size_t>(x)] ? sh.iSeq : sh.jSeq).push_back(x + 1);
    out.push_back(std::move(sh));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

/// Nonzero summands of the chosen variant at lambda, in subset order.
inline std::vector<SurvivingTerm> survivingTerms(const FormContext& ctx, const Weight& lambda, SumVariant v,
                                                 const SumOptions& opt = {}) {
  SumOptions o = opt;
  o.collectSurvivors = true;
  SumResult r = alternatingSum(ctx, lambda, v, o);
  const std::size_t a = ctx.levi.deltaNPlusL.size();
  const auto shifts = ctx.shifts(v);
  std::vector<SurvivingTerm> out;
  for (const auto& s : r.survivors) {
    SurvivingTerm t;
    t.Lambda = ctx.base(lambda, v);
    for (std::size_t k = 0; k < shifts.size(); ++k) {
      if (!(s.mask >> k & 1)) continue;
      if (k < a) t.A.push_back(ctx.levi.deltaNPlusL[k]);
      else t.C.push_back(ctx.levi.deltaP1[k - a]);
      addScaled(t.Lambda, shifts[k], 1);
    }
    t.value = evalDimPoly(ctx.PK, t.Lambda);
    if (t.value != s.value)
      fail(ErrorKind::HypothesisFailed, "incremental evaluation disagrees with direct evaluation at " +
                                            weightString(t.Lambda));
    out.push_back(std::move(t));
  }
  return out;
}

namespace detail {

inline Root eps(std::size_t rank, int i, int ci, int j = 0, int cj = 0) {
  Root r{std::vector<int>(rank, 0)};
  r.coeffs.at(static_cast<std::size_t>(i - 1)) += ci;
  if (cj != 0) r.coeffs.at(static_cast<std::size_t>(j - 1)) += cj;
  return r;
}

inline Weight shifted(Weight w, const std::vector<Root>& A, const std::vector<Root>& C) {
  for (const Root& r : A) addScaled(w, r, -1);
  for (const Root& r : C) addScaled(w, r, -1);
  return w;
}

}  // namespace detail

/// Surviving A-sets and weights for Sp(2n,R) and the form with p ones in h,
/// at lambda_0 with Lambda = lambda_0 - 2 rho(A).
inline std::vector<PredictedTerm> shuffleTermsSp(int n, int p) {
  using detail::eps;
  if (n < 1 || p < 0 || p > n) fail(ErrorKind::InvalidArgument, "shuffleTermsSp needs 0 <= p <= n");
  const int q = n - p;
  const std::size_t rank = static_cast<std::size_t>(n);
  std::vector<PredictedTerm> out;
  if (p % 2 == 1 && q % 2 == 1) return out;
  if (p == 0 || q == 0) {
    out.push_back({{}, {}, defaultLambda(GroupCase::sp(n), p + 1)});
    return out;
  }
  const int r = p / 2, s = q / 2;
  for (const Shuffle& sh : enumerateShuffles(r, s)) {
    PredictedTerm t;
    for (int u = 1; u <= r; ++u)
      for (int v = 1; v <= s; ++v) {
        t.A.push_back(eps(rank, p + 1 - u, 1, n + 1 - v, 1));
        const int iu = sh.iSeq[static_cast<std::size_t>(u - 1)], jv = sh.jSeq[static_cast<std::size_t>(v - 1)];
        t.A.push_back(iu < jv ? eps(rank, p + 1 - u, 1, p + v, 1) : eps(rank, u, 1, n + 1 - v, 1));
      }
    if (p % 2 == 1)
      for (int j = s + 1; j <= q; ++j) t.A.push_back(eps(rank, r + 1, 1, p + j, 1));
    if (q % 2 == 1)
      for (int i = r + 1; i <= p; ++i) t.A.push_back(eps(rank, i, 1, p + s + 1, 1));

    t.Lambda = zeroWeight(rank);
    auto at = [&](int idx) -> Rational& { return t.Lambda.at(static_cast<std::size_t>(idx - 1)); };
    for (int u = 1; u <= r; ++u) {
      const int iu = sh.iSeq[static_cast<std::size_t>(u - 1)];
      at(u) = n + 1 - iu;
      at(p + 1 - u) = iu;
    }
    for (int v = 1; v <= s; ++v) {
      const int jv = sh.jSeq[static_cast<std::size_t>(v - 1)];
      at(p + v) = n + 1 - jv;
      at(n + 1 - v) = jv;
    }
    if (p % 2 == 1) at(p - r) = n - r - s;
    if (q % 2 == 1) at(n - s) = n - r - s;
    t.normalize();
    out.push_back(std::move(t));
  }
  return out;
}

/// Same for SO*(2n), form with parameter p (even).  For odd n the C-set is
/// the same for every shuffle.
inline std::vector<PredictedTerm> shuffleTermsSOstar(int n, int p) {
  using detail::eps;
  if (n < 1 || p < 0 || p % 2 != 0 || p > (n % 2 == 0 ? n : n - 1))
    fail(ErrorKind::InvalidArgument, "shuffleTermsSOstar needs even p in range");
  const std::size_t rank = static_cast<std::size_t>(n);
  const bool odd = n % 2 == 1;
  const int q = odd ? n - 1 - p : n - p;
  const int r = p / 2, s = q / 2;
  const int off = odd ? 1 : 0;  // the middle coordinate p+1 for odd n
  std::vector<PredictedTerm> out;
  for (const Shuffle& sh : enumerateShuffles(r, s)) {
    PredictedTerm t;
    for (int u = 1; u <= r; ++u)
      for (int v = 1; v <= s; ++v) {
        t.A.push_back(eps(rank, p + 1 - u, 1, n + 1 - v, 1));
        const int iu = sh.iSeq[static_cast<std::size_t>(u - 1)], jv = sh.jSeq[static_cast<std::size_t>(v - 1)];
        t.A.push_back(iu < jv ? eps(rank, p + 1 - u, 1, p + off + v, 1) : eps(rank, u, 1, n + 1 - v, 1));
      }
    if (odd) {
      for (int i = r + 1; i <= p; ++i) t.C.push_back(eps(rank, i, 1, p + 1, 1));
      for (int j = 1; j <= s; ++j) t.C.push_back(eps(rank, p + 1, -1, p + 1 + j, -1));
    }
    t.Lambda = zeroWeight(rank);
    auto at = [&](int idx) -> Rational& { return t.Lambda.at(static_cast<std::size_t>(idx - 1)); };
    for (int u = 1; u <= r; ++u) {
      const int iu = sh.iSeq[static_cast<std::size_t>(u - 1)];
      at(u) = n + 1 - iu;
      at(p + 1 - u) = iu;
    }
    if (odd) at(p + 1) = r + s + 1;
    for (int v = 1; v <= s; ++v) {
      const int jv = sh.jSeq[static_cast<std::size_t>(v - 1)];
      at(p + off + v) = n + 1 - jv;
      at(n + 1 - v) = jv;
    }
    t.normalize();
    out.push_back(std::move(t));
  }
  return out;
}

/// Surviving terms of SU(p,q) for the form with k ones in the first block.
inline std::vector<PredictedTerm> shuffleTermsSU(int p, int q, int k) {
  using detail::eps;
  const std::size_t rank = static_cast<std::size_t>(p + q);
  std::vector<Root> C;
  for (int i = 1; i <= k; ++i)
    for (int j = 2 * p - k + 1; j <= p + q - k; ++j) C.push_back(eps(rank, i, 1, j, -1));
  std::vector<PredictedTerm> out;
  // (k, p-k)-shuffles of p,...,1; reuse increasing shuffles and reverse values
  for (const Shuffle& sh : enumerateShuffles(k, p - k)) {
    std::vector<int> is, js;
    for (auto it = sh.iSeq.rbegin(); it != sh.iSeq.rend(); ++it) is.push_back(*it);
    for (auto it = sh.jSeq.rbegin(); it != sh.jSeq.rend(); ++it) js.push_back(*it);
    PredictedTerm t;
    t.C = C;
    for (int a = 1; a <= k; ++a)
      for (int b = 1; b <= p - k; ++b) {
        const int ia = is[static_cast<std::size_t>(a - 1)], jb = js[static_cast<std::size_t>(b - 1)];
        t.A.push_back(ia < jb ? eps(rank, a, 1, p + b, -1) : eps(rank, k + b, 1, p + q - k + a, -1));
      }
    for (int x : is) t.Lambda.emplace_back(x);
    for (int x : js) t.Lambda.emplace_back(x);
    for (int x : js) t.Lambda.emplace_back(x);
    for (int x = q; x >= p + 1; --x) t.Lambda.emplace_back(x);
    for (int x : is) t.Lambda.emplace_back(x);
    t.normalize();
    out.push_back(std::move(t));
  }
  return out;
}

/// Predicted survivors of the V2 sum at lambda_0, where a characterization
/// exists.  Forms related to another form by an automorphism have none.
inline std::optional<std::vector<PredictedTerm>> predictedSurvivors(const GroupCase& g, int formIndex) {
  using detail::eps;
  (void)realForm(g, formIndex);
  const int p = g.p, q = g.q;
  const std::size_t rank = static_cast<std::size_t>(g.rank());
  const Rational h(1, 2);
  switch (g.family) {
    case Family::SU: return shuffleTermsSU(p, q, formIndex - 1);
    case Family::Sp: return shuffleTermsSp(g.n, formIndex - 1);
    case Family::SOstar: return shuffleTermsSOstar(g.n, formParameter(g, formIndex));
    case Family::SOodd:
    case Family::SOeven: break;
  }
  const bool odd = g.family == Family::SOodd;
  PredictedTerm t;
  if (formIndex == 1) {
    const int jmax = odd ? p + q : p + q - 1;
    for (int i = 2; i <= p; ++i)
      for (int j = 2 * p; j <= jmax; ++j) t.C.push_back(eps(rank, i, 1, j, -1));
    t.Lambda.push_back(h);
    for (int x = p - 1; x >= 1; --x) t.Lambda.push_back(x + h);
    if (odd) {
      for (int x = 1; x <= p - 1; ++x) t.Lambda.emplace_back(-x);
      for (int x = q; x >= p; --x) t.Lambda.emplace_back(x);
    } else {
      for (int x = 1; x <= p - 1; ++x) t.Lambda.push_back(-(x + h));
      for (int x = q - 1; x >= p; --x) t.Lambda.push_back(x + h);
      t.Lambda.push_back(h);
    }
  } else if (formIndex == 3) {
    if (odd) return std::vector<PredictedTerm>{};
    for (int j = 2 * p + 1; j <= p + q; ++j) t.A.push_back(eps(rank, p, 1, j, -1));
    for (int i = 1; i <= p - 1; ++i)
      for (int j = 2 * p + 1; j <= p + q; ++j) t.C.push_back(eps(rank, i, 1, j, -1));
    for (int j = p + 2; j <= 2 * p; ++j) {
      t.C.push_back(eps(rank, j, 1, p, 1));
      t.C.push_back(eps(rank, j, 1, p, -1));
    }
    for (int i = 1; i <= p - 1; ++i) t.C.push_back(eps(rank, p + 1, 1, i, -1));
    for (int x = p - 1; x >= 1; --x) t.Lambda.push_back(x + h);
    t.Lambda.push_back(h);
    t.Lambda.push_back(-h);
    for (int x = 1; x <= p - 1; ++x) t.Lambda.push_back(-(x + h));
    for (int x = q - 1; x >= p; --x) t.Lambda.push_back(x + h);
  } else {
    return std::nullopt;
  }
  t.normalize();
  return std::vector<PredictedTerm>{t};
}

struct OracleCheck {
  bool applicable = false;
  bool matched = false;
  std::size_t survivors = 0;
  std::size_t predicted = 0;
  std::string detail;
};

inline std::string describeTerm(const PredictedTerm& t) {
  std::ostringstream os;
  os << "A={";
  for (std::size_t i = 0; i < t.A.size(); ++i) os << (i ? "," : "") << t.A[i].str();
  os << "} C={";
  for (std::size_t i = 0; i < t.C.size(); ++i) os << (i ? "," : "") << t.C[i].str();
  os << "} Lambda=" << weightString(t.Lambda);
  return os.str();
}

/// Compares the brute-force survivors of the V2 sum at lambda_0 with the
/// combinatorial prediction: same (A, C) pairs and same weights.
inline OracleCheck checkOracleAgainstBruteForce(const GroupCase& g, int formIndex, const SumOptions& opt = {}) {
  OracleCheck out;
  auto pred = predictedSurvivors(g, formIndex);
  if (!pred) {
    out.detail = "no characterization for this form";
    return out;
  }
  out.applicable = true;
  FormContext ctx(g, formIndex);
  const Weight l0 = defaultLambda(g, formIndex);
  std::vector<PredictedTerm> got;
  for (auto& s : survivingTerms(ctx, l0, SumVariant::V2, opt)) {
    PredictedTerm t{s.A, s.C, s.Lambda};
    t.normalize();
    got.push_back(std::move(t));
  }
  std::vector<PredictedTerm> want = *pred;
  for (auto& t : want)
    if (t.Lambda.empty()) t.Lambda = detail::shifted(l0, t.A, t.C);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  out.survivors = got.size();
  out.predicted = want.size();
  out.matched = got == want;
  if (!out.matched) {
    std::ostringstream os;
    os << "survivors " << got.size() << " vs predicted " << want.size();
    for (const auto& t : got)
      if (!std::binary_search(want.begin(), want.end(), t)) os << "; unexpected " << describeTerm(t);
    for (const auto& t : want)
      if (!std::binary_search(got.begin(), got.end(), t)) os << "; missing " << describeTerm(t);
    out.detail = os.str();
  }
  return out;
}

/// The predicted weights must also be what the shifts produce from lambda_0.
inline bool predictedWeightsConsistent(const GroupCase& g, int formIndex) {
  auto pred = predictedSurvivors(g, formIndex);
  if (!pred) return true;
  const Weight l0 = defaultLambda(g, formIndex);
  for (const auto& t : *pred)
    if (detail::shifted(l0, t.A, t.C) != t.Lambda) return false;
  return true;
}

}  // namespace dicon
