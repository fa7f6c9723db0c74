#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <cstddef>
#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "group_case.hpp"
#include "rational.hpp"

namespace dicon {

/// A root written in the epsilon basis; coefficients are small integers.
struct Root {
  std::vector<int> coeffs;

  auto operator<=>(const Root&) const = default;
  bool operator==(const Root&) const = default;

  std::size_t rank() const { return coeffs.size(); }

  Root operator-() const {
    Root r{coeffs};
    for (int& c : r.coeffs) c = -c;
    return r;
  }

  /// e.g. "e1-e3", "2e2", "-e1-e4".
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      int c = coeffs[i];
      if (c == 0) continue;
      if (c < 0) os << "-";
      else if (!first) os << "+";
      if (std::abs(c) != 1) os << std::abs(c);
      os << "e" << i + 1;
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }
};

inline Root epsilon(std::size_t rank, std::initializer_list<std::pair<int, int>> terms) {
  Root r{std::vector<int>(rank, 0)};
  for (auto [idx, c] : terms) r.coeffs.at(static_cast<std::size_t>(idx - 1)) += c;
  return r;
}

using Weight = std::vector<Rational>;

inline Weight weightFromInts(std::initializer_list<long> xs) {
  Weight w;
  for (long x : xs) w.emplace_back(x);
  return w;
}

inline Weight zeroWeight(std::size_t rank) { return Weight(rank, Rational(0)); }

inline Weight toWeight(const Root& r) {
  Weight w;
  w.reserve(r.rank());
  for (int c : r.coeffs) w.emplace_back(c);
  return w;
}

inline void requireSameRank(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    fail(ErrorKind::InvalidArgument,
         std::string(what) + ": rank mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
}

inline Weight operator+(Weight a, const Weight& b) {
  requireSameRank(a.size(), b.size(), "weight sum");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Weight operator-(Weight a, const Weight& b) {
  requireSameRank(a.size(), b.size(), "weight difference");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Weight operator*(const Rational& s, Weight a) {
  for (auto& x : a) x *= s;
  return a;
}

inline void addScaled(Weight& w, const Root& r, long s) {
  requireSameRank(w.size(), r.rank(), "weight update");
  for (std::size_t i = 0; i < w.size(); ++i)
    if (r.coeffs[i] != 0) w[i] += s * r.coeffs[i];
}

/// Euclidean pairing of a weight with a root.
inline Rational pair(const Weight& w, const Root& r) {
  requireSameRank(w.size(), r.rank(), "pair");
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (r.coeffs[i] != 0) s += w[i] * r.coeffs[i];
  return s;
}

inline long pair(const Root& a, const Root& b) {
  requireSameRank(a.rank(), b.rank(), "pair");
  long s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) s += static_cast<long>(a.coeffs[i]) * b.coeffs[i];
  return s;
}

/// Half the sum of a set of roots.  An empty set gives the zero weight.
inline Weight halfSum(std::span<const Root> roots, std::size_t rank) {
  Weight w = zeroWeight(rank);
  for (const Root& r : roots) addScaled(w, r, 1);
  for (auto& x : w) x /= 2;
  return w;
}

inline std::string weightString(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += toString(w[i]);
  }
  return s + ")";
}

/// Whether a root is compact for the real form in question.
inline bool isCompactRoot(const GroupCase& g, const Root& r) {
  const int split = g.firstBlock();
  switch (g.family) {
    case Family::Sp:
    case Family::SOstar: {
      // compact roots are e_i - e_j
      int plus = 0, minus = 0;
      for (int c : r.coeffs) {
        if (c == 1) ++plus;
        else if (c == -1) ++minus;
        else if (c != 0) return false;
      }
      return plus == 1 && minus == 1;
    }
    case Family::SU:
    case Family::SOodd:
    case Family::SOeven: {
      int inFirst = 0, inSecond = 0;
      for (std::size_t i = 0; i < r.rank(); ++i) {
        if (r.coeffs[i] == 0) continue;
        (static_cast<int>(i) < split ? inFirst : inSecond)++;
      }
      // a short root e_k is compact only when k sits in the second (odd) block
      if (g.family == Family::SOodd && inFirst + inSecond == 1) return inSecond == 1;
      return inFirst == 0 || inSecond == 0;
    }
  }
  return false;
}

struct RootSystem {
  GroupCase group;
  std::size_t rank = 0;
  std::vector<Root> positive;
  std::vector<Root> compactPositive;
  std::vector<Root> noncompactPositive;
  Weight rho;
  Weight rhoC;

  bool isCompact(const Root& r) const { return isCompactRoot(group, r); }

  bool isRoot(const Root& r) const {
    return std::binary_search(positive.begin(), positive.end(), r, std::greater<>{}) ||
           std::binary_search(positive.begin(), positive.end(), -r, std::greater<>{});
  }

  bool isPositive(const Root& r) const {
    return std::binary_search(positive.begin(), positive.end(), r, std::greater<>{});
  }

  /// Every root, positive ones first, each list in canonical order.
  std::vector<Root> allRoots() const {
    std::vector<Root> out = positive;
    for (const Root& r : positive) out.push_back(-r);
    return out;
  }
};

/// Positive roots of the given Lie type on `rank` coordinates, sorted in
/// decreasing lexicographic order of their coefficient vectors.
inline std::vector<Root> positiveRoots(RootType t, std::size_t rank) {
  std::vector<Root> out;
  auto e = [&](std::size_t i, int ci, std::size_t j, int cj) {
    Root r{std::vector<int>(rank, 0)};
    r.coeffs[i] += ci;
    if (cj != 0) r.coeffs[j] += cj;
    out.push_back(std::move(r));
  };
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) {
      e(i, 1, j, -1);
      if (t != RootType::A) e(i, 1, j, 1);
    }
  for (std::size_t k = 0; k < rank; ++k) {
    if (t == RootType::B) e(k, 1, k, 0);
    if (t == RootType::C) e(k, 2, k, 0);
  }
  std::sort(out.begin(), out.end(), std::greater<>{});
  return out;
}

inline RootSystem buildRootSystem(const GroupCase& g) {
  g.validate();
  RootSystem rs;
  rs.group = g;
  rs.rank = static_cast<std::size_t>(g.rank());
  rs.positive = positiveRoots(g.rootType(), rs.rank);
  for (const Root& r : rs.positive) (isCompactRoot(g, r) ? rs.compactPositive : rs.noncompactPositive).push_back(r);
  rs.rho = halfSum(rs.positive, rs.rank);
  rs.rhoC = halfSum(rs.compactPositive, rs.rank);
  return rs;
}

}  // namespace dicon
