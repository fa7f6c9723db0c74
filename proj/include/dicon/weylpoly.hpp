#pragma once

#include <vector>

#include "rootsys.hpp"

namespace dicon {

/// prod <lambda, alpha> / <rho', alpha> over a set of roots, rho' being half
/// their sum.  Evaluated pointwise only.
struct DimPoly {
  std::size_t rank = 0;
  std::vector<Root> numeratorRoots;
  std::vector<Rational> denominators;
  Rational denominatorProduct = 1;
  Weight rhoPrime;
};

inline DimPoly makeDimPoly(std::vector<Root> roots, std::size_t rank) {
  DimPoly P;
  P.rank = rank;
  for (const Root& r : roots) requireSameRank(r.rank(), rank, "makeDimPoly");
  P.rhoPrime = halfSum(roots, rank);
  for (const Root& r : roots) {
    Rational d = pair(P.rhoPrime, r);
    if (d == 0)
      fail(ErrorKind::InvalidArgument, "zero denominator at " + r.str() + ": roots do not form a positive system");
    P.denominators.push_back(d);
    P.denominatorProduct *= d;
  }
  P.numeratorRoots = std::move(roots);
  return P;
}

inline Rational evalDimPoly(const DimPoly& P, const Weight& lambda) {
  requireSameRank(lambda.size(), P.rank, "evalDimPoly");
  Rational num = 1;
  for (const Root& r : P.numeratorRoots) {
    num *= pair(lambda, r);
    if (num == 0) return 0;
  }
  return num / P.denominatorProduct;
}

/// Weyl dimension polynomial of K for the given root system.
inline DimPoly compactDimPoly(const RootSystem& rs) { return makeDimPoly(rs.compactPositive, rs.rank); }

}  // namespace dicon
