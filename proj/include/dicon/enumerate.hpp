#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <thread>
#include <vector>

#include "weylpoly.hpp"

namespace dicon {

struct SumOptions {
  std::uint64_t termCap = std::uint64_t{1} << 24;
  unsigned workers = 1;
  /// Record every subset whose term is nonzero.
  bool collectSurvivors = false;
};

struct SubsetSurvivor {
  std::uint64_t mask = 0;
  /// Term value P(base + sum of chosen shifts), without the (-1)^|S| sign.
  Rational value;
};

struct SubsetSumResult {
  /// sum over subsets S of (-1)^{|S|} P(base + sum_{k in S} shift_k)
  Rational sum;
  std::uint64_t termCount = 0;
  std::uint64_t survivingTermCount = 0;
  std::vector<SubsetSurvivor> survivors;
};

namespace detail {

struct WorkerOut {
  Integer sum = 0;
  std::uint64_t surviving = 0;
  std::vector<std::pair<std::uint64_t, Integer>> survivors;
};

/// Multiplies int64 factors, spilling into the bignum only on overflow.
inline void productInto(Integer& out, const std::int64_t* xs, std::size_t m) {
  out = 1;
  std::int64_t acc = 1;
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t r;
    if (__builtin_mul_overflow(acc, xs[i], &r)) {
      out *= static_cast<long>(acc);
      acc = xs[i];
    } else {
      acc = r;
    }
  }
  out *= static_cast<long>(acc);
}

}  // namespace detail

/// Alternating subset sum of a dimension polynomial.  Each subset is visited in
/// binary-reflected Gray order so consecutive subsets differ by one shift, and
/// the pairings with the numerator roots are updated in place as integers
/// scaled by a common denominator D.  The subset range is split into
/// contiguous chunks, one per worker, and the exact partial sums are added.
inline SubsetSumResult alternatingSubsetSum(const DimPoly& P, const Weight& base, const std::vector<Root>& shifts,
                                            const SumOptions& opt) {
  requireSameRank(base.size(), P.rank, "alternatingSubsetSum");
  const std::size_t M = shifts.size();
  if (M >= 63 || (std::uint64_t{1} << M) > opt.termCap) {
    std::string need = M >= 63 ? "2^" + std::to_string(M) : std::to_string(std::uint64_t{1} << M);
    fail(ErrorKind::TooLarge, "subset count " + need + " (2^" + std::to_string(M) + ") exceeds term cap " +
                                  std::to_string(opt.termCap));
  }
  const std::uint64_t total = std::uint64_t{1} << M;
  const std::size_t m = P.numeratorRoots.size();

  Integer D = 1;
  for (const auto& x : base) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), x.get_den_mpz_t());
  if (!fitsInt64(D)) fail(ErrorKind::InvalidArgument, "weight denominators too large");
  const std::int64_t d = D.get_si();

  std::vector<std::int64_t> basePair(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational v = pair(base, P.numeratorRoots[i]) * D;
    if (v.get_den() != 1 || !fitsInt64(v.get_num())) fail(ErrorKind::InvalidArgument, "pairing out of range");
    basePair[i] = v.get_num().get_si();
  }
  // step[k*m + i] = D * <shift_k, alpha_i>
  std::vector<std::int64_t> step(M * m);
  for (std::size_t k = 0; k < M; ++k) {
    requireSameRank(shifts[k].rank(), P.rank, "shift");
    for (std::size_t i = 0; i < m; ++i) step[k * m + i] = d * pair(shifts[k], P.numeratorRoots[i]);
  }

  unsigned W = std::max(1u, opt.workers);
  if (W > total) W = static_cast<unsigned>(total);
  std::vector<detail::WorkerOut> outs(W);

  auto work = [&](unsigned w) {
    const std::uint64_t begin = total * w / W;
    const std::uint64_t end = total * (w + 1) / W;
    detail::WorkerOut& out = outs[w];
    std::vector<std::int64_t> cur(basePair);
    std::uint64_t g = begin ^ (begin >> 1);
    for (std::size_t k = 0; k < M; ++k)
      if (g >> k & 1)
        for (std::size_t i = 0; i < m; ++i) cur[i] += step[k * m + i];
    std::size_t zeros = static_cast<std::size_t>(std::count(cur.begin(), cur.end(), 0));
    bool odd = std::popcount(g) & 1;
    Integer term;
    for (std::uint64_t t = begin;;) {
      if (zeros == 0) {
        detail::productInto(term, cur.data(), m);
        if (odd) out.sum -= term;
        else out.sum += term;
        ++out.surviving;
        if (opt.collectSurvivors) out.survivors.emplace_back(g, term);
      }
      if (++t >= end) break;
      const std::size_t k = static_cast<std::size_t>(std::countr_zero(t));
      const bool removing = g >> k & 1;
      g ^= std::uint64_t{1} << k;
      odd = !odd;
      const std::int64_t* row = &step[k * m];
      for (std::size_t i = 0; i < m; ++i) {
        if (row[i] == 0) continue;
        if (cur[i] == 0) --zeros;
        cur[i] += removing ? -row[i] : row[i];
        if (cur[i] == 0) ++zeros;
      }
    }
  };

  if (W == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < W; ++w) pool.emplace_back(work, w);
  }

  SubsetSumResult res;
  res.termCount = total;
  Integer sum = 0;
  for (auto& o : outs) {
    sum += o.sum;
    res.survivingTermCount += o.surviving;
  }
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), D.get_mpz_t(), m);
  res.sum = Rational(sum) / (Rational(scale) * P.denominatorProduct);
  res.sum.canonicalize();
  if (opt.collectSurvivors) {
    Rational denom = Rational(scale) * P.denominatorProduct;
    for (auto& o : outs)
      for (auto& [mask, val] : o.survivors) {
        Rational v = Rational(val) / denom;
        v.canonicalize();
        res.survivors.push_back({mask, v});
      }
    std::sort(res.survivors.begin(), res.survivors.end(),
              [](const SubsetSurvivor& a, const SubsetSurvivor& b) { return a.mask < b.mask; });
  }
  return res;
}

}  // namespace dicon
