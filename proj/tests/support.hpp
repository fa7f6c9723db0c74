#pragma once

// Generators and naive reference computations shared by the unit tests.
// The oracles avoid the library's incremental paths on purpose.

#include <cstdint>
#include <random>
#include <vector>

#include "dicon/dicon.hpp"

namespace testsupport {

using namespace dicon;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Rational rational(int maxAbsNum = 20, int maxDen = 6) {
    Rational r(uniform(-maxAbsNum, maxAbsNum), uniform(1, maxDen));
    r.canonicalize();
    return r;
  }

  Weight weight(std::size_t rank, int maxAbsNum = 20, int maxDen = 6) {
    Weight w;
    for (std::size_t i = 0; i < rank; ++i) w.push_back(rational(maxAbsNum, maxDen));
    return w;
  }

  /// Half-integral weights, the kind the sums are evaluated at.
  Weight halfIntegralWeight(std::size_t rank, int maxAbs = 12) {
    Weight w;
    for (std::size_t i = 0; i < rank; ++i) w.emplace_back(uniform(-2 * maxAbs, 2 * maxAbs), 2);
    for (auto& x : w) x.canonicalize();
    return w;
  }

  GroupCase groupCase(int maxRank) {
    for (;;) {
      const Family f = static_cast<Family>(uniform(0, 4));
      GroupCase g;
      g.family = f;
      if (g.usesPQ()) {
        g.p = uniform(1, maxRank);
        const int qmin = f == Family::SOodd ? g.p - 1 : g.p;
        if (qmin > maxRank - g.p) continue;
        g.q = uniform(std::max(qmin, 0), maxRank - g.p);
        if (f == Family::SOodd && g.q < 0) continue;
      } else {
        g.n = uniform(1, maxRank);
      }
      return GroupCase::make(g);
    }
  }

 private:
  std::mt19937_64 rng_;
};

/// Every in-range case with rank <= maxRank, parameters small enough to keep
/// the exhaustive properties cheap.
inline std::vector<GroupCase> casesUpToRank(int maxRank) {
  std::vector<GroupCase> out;
  for (int p = 1; p <= maxRank; ++p)
    for (int q = p; p + q <= maxRank; ++q) out.push_back(GroupCase::su(p, q));
  for (int n = 1; n <= maxRank; ++n) out.push_back(GroupCase::sp(n));
  for (int p = 1; p <= maxRank; ++p)
    for (int q = p - 1; p + q <= maxRank; ++q) out.push_back(GroupCase::soOdd(p, q));
  for (int p = 1; p <= maxRank; ++p)
    for (int q = p; p + q <= maxRank; ++q) out.push_back(GroupCase::soEven(p, q));
  for (int n = 1; n <= maxRank; ++n) out.push_back(GroupCase::soStar(n));
  return out;
}

/// Roots by definition: integer vectors with the right norm and shape.
/// Positive means first nonzero coefficient positive.
inline std::vector<std::vector<int>> bruteRoots(RootType t, int rank, bool positiveOnly) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(rank), -2);
  for (;;) {
    int norm = 0, nonzero = 0, sum = 0, firstNz = 0;
    bool hasTwo = false;
    for (int c : v) {
      norm += c * c;
      sum += c;
      if (c != 0) {
        ++nonzero;
        if (firstNz == 0) firstNz = c;
      }
      if (c == 2 || c == -2) hasTwo = true;
    }
    bool isRoot = false;
    switch (t) {
      case RootType::A: isRoot = norm == 2 && sum == 0; break;
      case RootType::B: isRoot = !hasTwo && (norm == 2 || norm == 1); break;
      case RootType::C: isRoot = (!hasTwo && norm == 2) || (hasTwo && nonzero == 1); break;
      case RootType::D: isRoot = !hasTwo && norm == 2; break;
    }
    if (isRoot && (!positiveOnly || firstNz > 0)) out.push_back(v);
    std::size_t k = 0;
    while (k < v.size() && v[k] == 2) v[k++] = -2;
    if (k == v.size()) break;
    ++v[k];
  }
  return out;
}

inline Rational naivePair(const Weight& w, const std::vector<int>& a) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += w[i] * a[i];
  return s;
}

/// Weyl dimension polynomial straight from the definition.
inline Rational naiveDim(const std::vector<Root>& roots, std::size_t rank, const Weight& lambda) {
  Weight rho(rank, Rational(0));
  for (const auto& r : roots)
    for (std::size_t i = 0; i < rank; ++i) rho[i] += Rational(r.coeffs[i]) / 2;
  Rational v = 1;
  for (const auto& r : roots) v *= naivePair(lambda, r.coeffs) / naivePair(rho, r.coeffs);
  return v;
}

/// sum_S (-1)^|S| P(base + sum_{k in S} shift_k), one weight at a time.
inline Rational naiveSubsetSum(const std::vector<Root>& roots, std::size_t rank, const Weight& base,
                               const std::vector<Root>& shifts) {
  Rational total = 0;
  const std::uint64_t n = std::uint64_t{1} << shifts.size();
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    Weight w = base;
    int bits = 0;
    for (std::size_t k = 0; k < shifts.size(); ++k)
      if (mask >> k & 1) {
        ++bits;
        for (std::size_t i = 0; i < rank; ++i) w[i] += shifts[k].coeffs[i];
      }
    const Rational v = naiveDim(roots, rank, w);
    total += bits % 2 ? -v : v;
  }
  return total;
}

inline std::vector<int> nonzeroCoords(const Root& r) {
  std::vector<int> idx;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i)
    if (r.coeffs[i]) idx.push_back(static_cast<int>(i));
  return idx;
}

}  // namespace testsupport
