#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "rootsys.hpp"

namespace dicon {

using Partition = std::vector<int>;

struct PartitionCheck {
  bool valid = false;
  /// Type D partition with only even parts: two orbits share the partition.
  bool veryEven = false;

  explicit operator bool() const { return valid; }
};

/// Checks ordering, size, and the multiplicity rule of the Lie type.
/// `totalSize` is the size of the defining representation.
inline PartitionCheck validatePartition(RootType t, const Partition& parts, int totalSize) {
  PartitionCheck out;
  if (parts.empty()) return out;
  int sum = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) return out;
    if (i > 0 && parts[i] > parts[i - 1]) return out;
    sum += parts[i];
  }
  if (sum != totalSize) return out;
  std::map<int, int> mult;
  for (int d : parts) ++mult[d];
  for (auto [d, m] : mult) {
    bool even = d % 2 == 0;
    if ((t == RootType::B || t == RootType::D) && even && m % 2 != 0) return out;
    if (t == RootType::C && !even && m % 2 != 0) return out;
  }
  if (t == RootType::B && sum % 2 == 0) return out;
  if ((t == RootType::C || t == RootType::D) && sum % 2 != 0) return out;
  out.valid = true;
  out.veryEven = t == RootType::D && std::all_of(parts.begin(), parts.end(), [](int d) { return d % 2 == 0; });
  return out;
}

inline int partitionRank(RootType t, const Partition& parts) {
  int sum = 0;
  for (int d : parts) sum += d;
  switch (t) {
    case RootType::A: return sum;
    case RootType::B: return (sum - 1) / 2;
    case RootType::C:
    case RootType::D: return sum / 2;
  }
  return 0;
}

inline int partitionSize(const Partition& parts) {
  int sum = 0;
  for (int d : parts) sum += d;
  return sum;
}

/// Dominant h of the complex orbit: all eigenvalue strings d-1, d-3, ..., 1-d
/// merged in decreasing order, truncated to the rank.
inline Weight hFromPartition(RootType t, const Partition& parts) {
  if (!validatePartition(t, parts, partitionSize(parts)))
    fail(ErrorKind::InvalidArgument, "invalid partition for type " + std::string(1, rootTypeLetter(t)));
  std::vector<int> eig;
  for (int d : parts)
    for (int e = d - 1; e >= 1 - d; e -= 2) eig.push_back(e);
  std::sort(eig.begin(), eig.end(), std::greater<>{});
  eig.resize(static_cast<std::size_t>(partitionRank(t, parts)));
  Weight h;
  for (int e : eig) h.emplace_back(e);
  return h;
}

/// Partition of the complex orbit whose real forms are studied for `g`.
inline Partition orbitPartition(const GroupCase& g) {
  Partition out;
  auto add = [&](int d, int times) { out.insert(out.end(), static_cast<std::size_t>(std::max(times, 0)), d); };
  switch (g.family) {
    case Family::SU: add(2, g.p); add(1, g.q - g.p); break;
    case Family::Sp: add(2, g.n); break;
    case Family::SOstar:
      if (g.n % 2 == 0) add(2, g.n);
      else { add(2, g.n - 1); add(1, 2); }
      break;
    case Family::SOodd: add(3, 1); add(2, 2 * g.p - 2); add(1, 2 * (g.q - g.p + 1)); break;
    case Family::SOeven: add(3, 1); add(2, 2 * g.p - 2); add(1, 2 * (g.q - g.p) + 1); break;
  }
  return out;
}

inline std::vector<Root> simpleRoots(RootType t, std::size_t rank) {
  std::vector<Root> out;
  for (std::size_t i = 0; i + 1 < rank; ++i) {
    Root r{std::vector<int>(rank, 0)};
    r.coeffs[i] = 1;
    r.coeffs[i + 1] = -1;
    out.push_back(r);
  }
  if (rank == 0) return out;
  Root last{std::vector<int>(rank, 0)};
  switch (t) {
    case RootType::A: return out;
    case RootType::B: last.coeffs[rank - 1] = 1; break;
    case RootType::C: last.coeffs[rank - 1] = 2; break;
    case RootType::D:
      if (rank < 2) return out;
      last.coeffs[rank - 2] = 1;
      last.coeffs[rank - 1] = 1;
      break;
  }
  out.push_back(last);
  return out;
}

/// Conjugate of h under the complex Weyl group that is dominant for the fixed
/// positive system.
inline Weight dominantForm(const GroupCase& g, const Weight& h) {
  Weight w = h;
  const RootType t = g.rootType();
  if (t == RootType::A) {
    std::sort(w.begin(), w.end(), std::greater<>{});
    return w;
  }
  int negatives = 0;
  bool hasZero = false;
  for (auto& x : w) {
    if (x < 0) ++negatives;
    if (x == 0) hasZero = true;
    x = abs(x);
  }
  std::sort(w.begin(), w.end(), std::greater<>{});
  // type D Weyl group only has even numbers of sign changes
  if (t == RootType::D && negatives % 2 == 1 && !hasZero && !w.empty()) w.back() = -w.back();
  return w;
}

/// Labels alpha_i(h) on the simple roots.  Rejects non-dominant h.
inline std::vector<int> weightedDynkin(const GroupCase& g, const Weight& h) {
  requireSameRank(h.size(), static_cast<std::size_t>(g.rank()), "weightedDynkin");
  std::vector<int> labels;
  for (const Root& a : simpleRoots(g.rootType(), h.size())) {
    Rational v = pair(h, a);
    if (v < 0) fail(ErrorKind::InvalidArgument, "h is not dominant: " + a.str() + "(h) = " + toString(v));
    if (v.get_den() != 1) fail(ErrorKind::InvalidArgument, "non-integral label on " + a.str());
    labels.push_back(static_cast<int>(v.get_num().get_si()));
  }
  return labels;
}

struct RealForm {
  int index = 0;
  std::string label;
  Weight h;
  std::string existsCondition;
};

namespace detail {

inline Weight hVec(std::initializer_list<std::pair<int, int>> runs) {
  Weight h;
  for (auto [value, count] : runs)
    for (int i = 0; i < count; ++i) h.emplace_back(value);
  return h;
}

}  // namespace detail

inline std::vector<RealForm> realForms(const GroupCase& g) {
  g.validate();
  using detail::hVec;
  std::vector<RealForm> out;
  const int p = g.p, q = g.q, n = g.n;
  switch (g.family) {
    case Family::SU:
      for (int k = 0; k <= p; ++k)
        out.push_back({k + 1, "k=" + std::to_string(k),
                       hVec({{1, k}, {-1, p - k}, {1, p - k}, {0, q - p}, {-1, k}}), "always"});
      break;
    case Family::Sp:
      for (int k = 0; k <= n; ++k)
        out.push_back({k + 1, "k=" + std::to_string(k), hVec({{1, k}, {-1, n - k}}), "always"});
      break;
    case Family::SOodd:
    case Family::SOeven: {
      const bool odd = g.family == Family::SOodd;
      Weight f1 = hVec({{2, 1}, {1, p - 1}, {1, p - 1}, {0, q - p + 1}});
      Weight f2 = f1;
      f2[static_cast<std::size_t>(p - 1)] = -f2[static_cast<std::size_t>(p - 1)];
      out.push_back({1, "I", f1, "always"});
      out.push_back({2, "II", f2, "always"});
      Weight f3 = hVec({{1, p - 1}, {0, 1}, {2, 1}, {1, p - 1}, {0, q - p}});
      if (odd) {
        if (q > p - 1) out.push_back({3, "III", f3, "q > p-1"});
      } else {
        out.push_back({3, "III", f3, "always"});
        if (q == p) {
          Weight f4 = f3;
          f4.back() = -f4.back();
          out.push_back({4, "IV", f4, "q = p"});
        }
      }
      break;
    }
    case Family::SOstar: {
      int idx = 1;
      if (n % 2 == 0) {
        for (int pp = 0; pp <= n; pp += 2, ++idx)
          out.push_back({idx, "p=" + std::to_string(pp), hVec({{1, pp}, {-1, n - pp}}), "always"});
      } else {
        for (int pp = 0; pp <= n - 1; pp += 2, ++idx)
          out.push_back({idx, "p=" + std::to_string(pp), hVec({{1, pp}, {0, 1}, {-1, n - 1 - pp}}), "always"});
      }
      break;
    }
  }
  return out;
}

inline const RealForm& findForm(const std::vector<RealForm>& forms, int index) {
  for (const auto& f : forms)
    if (f.index == index) return f;
  fail(ErrorKind::InvalidArgument, "no real form with index " + std::to_string(index));
}

inline RealForm realForm(const GroupCase& g, int index) { return findForm(realForms(g), index); }

/// Index of a form inside its family's list, as used by the parameter p of
/// SO*(2n).  For the other families this is the form index minus one.
inline int formParameter(const GroupCase& g, int index) {
  if (g.family == Family::SOstar) return 2 * (index - 1);
  return index - 1;
}

// ---------------------------------------------------------------------------
// Signed tableaux

struct TableauRow {
  int length = 0;
  char startSign = '+';

  char signAt(int j) const { return (j % 2 == 0) ? startSign : (startSign == '+' ? '-' : '+'); }
  bool operator==(const TableauRow&) const = default;
};

/// Which of two real forms sharing one signed tableau is meant.  Type B and D
/// tableaux with a fixed shape may split into a pair of K-orbits.
enum class TableauVariant { None, I, II };

struct SignedTableau {
  std::vector<TableauRow> rows;
  TableauVariant variant = TableauVariant::None;
  /// Block whose last coordinate is negated for variant II (0 or 1).
  int variantBlock = 0;

  int boxes(char sign) const {
    int c = 0;
    for (const auto& r : rows)
      for (int j = 0; j < r.length; ++j)
        if (r.signAt(j) == sign) ++c;
    return c;
  }

  Partition shape() const {
    Partition s;
    for (const auto& r : rows) s.push_back(r.length);
    return s;
  }
};

inline std::string renderTableau(const SignedTableau& t) {
  std::string out;
  for (const auto& r : t.rows) {
    for (int j = 0; j < r.length; ++j) out += r.signAt(j);
    out += '\n';
  }
  if (t.variant == TableauVariant::I) out += "(I)\n";
  if (t.variant == TableauVariant::II) out += "(II)\n";
  return out;
}

inline SignedTableau signedTableau(const GroupCase& g, int formIndex) {
  const RealForm& f = realForm(g, formIndex);
  SignedTableau t;
  auto add = [&](int length, char s, int times) {
    for (int i = 0; i < times; ++i) t.rows.push_back({length, s});
  };
  const int p = g.p, q = g.q, n = g.n;
  switch (g.family) {
    case Family::SU: {
      int k = f.index - 1;
      add(2, '+', k);
      add(2, '-', p - k);
      add(1, '-', q - p);
      break;
    }
    case Family::Sp: {
      int k = f.index - 1;
      add(2, '+', k);
      add(2, '-', n - k);
      break;
    }
    case Family::SOstar: {
      int pp = formParameter(g, f.index);
      if (n % 2 == 0) {
        add(2, '+', pp);
        add(2, '-', n - pp);
      } else {
        add(2, '+', pp);
        add(2, '-', n - 1 - pp);
        add(1, '+', 1);
        add(1, '-', 1);
      }
      break;
    }
    case Family::SOodd:
    case Family::SOeven: {
      const bool odd = g.family == Family::SOodd;
      if (f.index <= 2) {
        add(3, '+', 1);
        add(2, '+', p - 1);
        add(2, '-', p - 1);
        add(1, '-', odd ? 2 * (q - p + 1) : 2 * (q - p) + 1);
        t.variant = f.index == 1 ? TableauVariant::I : TableauVariant::II;
        t.variantBlock = 0;
      } else {
        add(3, '-', 1);
        add(2, '+', p - 1);
        add(2, '-', p - 1);
        add(1, '+', 1);
        add(1, '-', odd ? 2 * (q - p) + 1 : 2 * (q - p));
        if (!odd && q == p) {
          t.variant = f.index == 3 ? TableauVariant::I : TableauVariant::II;
          t.variantBlock = 1;
        }
      }
      break;
    }
  }
  return t;
}

/// Reads the h-vector off a signed tableau.  Each row of length d starting
/// with sign s has boxes with eigenvalues d-1, d-3, ... and alternating signs.
/// The + eigenvalues fill the first block, the - eigenvalues the second;
/// orthogonal types keep the nonnegative half of each.
inline Weight hFromSignedTableau(const GroupCase& g, const SignedTableau& t) {
  const RootType type = g.rootType();
  const bool pq = g.usesPQ();
  const int p = pq ? g.p : g.n;
  const int q = pq ? g.q : g.n;
  for (std::size_t i = 0; i + 1 < t.rows.size(); ++i)
    if (t.rows[i].length < t.rows[i + 1].length) fail(ErrorKind::InvalidArgument, "tableau rows must be non-increasing");
  for (const auto& r : t.rows)
    if (r.length < 1 || (r.startSign != '+' && r.startSign != '-'))
      fail(ErrorKind::InvalidArgument, "malformed tableau row");

  int wantPlus = 0, wantMinus = 0;
  switch (g.family) {
    case Family::SU: wantPlus = p; wantMinus = q; break;
    case Family::Sp:
    case Family::SOstar: wantPlus = g.n; wantMinus = g.n; break;
    case Family::SOodd: wantPlus = 2 * p; wantMinus = 2 * q + 1; break;
    case Family::SOeven: wantPlus = 2 * p; wantMinus = 2 * q; break;
  }
  if (t.boxes('+') != wantPlus || t.boxes('-') != wantMinus)
    fail(ErrorKind::InvalidArgument, "tableau signature does not match the group");

  if (type == RootType::B || type == RootType::D) {
    // even rows of an orthogonal tableau pair up with opposite leading signs
    std::map<int, int> balance;
    for (const auto& r : t.rows)
      if (r.length % 2 == 0) balance[r.length] += r.startSign == '+' ? 1 : -1;
    for (auto [len, b] : balance)
      if (b != 0) fail(ErrorKind::InvalidArgument, "unpaired even rows of length " + std::to_string(len));
    if (!validatePartition(type, t.shape(), partitionSize(t.shape())))
      fail(ErrorKind::InvalidArgument, "tableau shape is not an orthogonal partition");
  }

  std::vector<int> plus, minus;
  for (const auto& r : t.rows)
    for (int j = 0; j < r.length; ++j) (r.signAt(j) == '+' ? plus : minus).push_back(r.length - 1 - 2 * j);
  std::sort(plus.begin(), plus.end(), std::greater<>{});
  std::sort(minus.begin(), minus.end(), std::greater<>{});

  Weight h;
  if (g.family == Family::Sp || g.family == Family::SOstar) {
    for (int e : plus) h.emplace_back(e);
  } else {
    std::size_t takePlus = type == RootType::A ? plus.size() : static_cast<std::size_t>(p);
    std::size_t takeMinus = type == RootType::A ? minus.size() : static_cast<std::size_t>(q);
    for (std::size_t i = 0; i < takePlus; ++i) h.emplace_back(plus[i]);
    for (std::size_t i = 0; i < takeMinus; ++i) h.emplace_back(minus[i]);
  }
  if (t.variant == TableauVariant::II) {
    std::size_t pos = t.variantBlock == 0 ? static_cast<std::size_t>(p - 1) : h.size() - 1;
    h[pos] = -h[pos];
  }
  return h;
}

}  // namespace dicon
