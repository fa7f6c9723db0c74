#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "error.hpp"

namespace dicon {

enum class Family { SU, SOodd, Sp, SOeven, SOstar };

/// Lie type of the complexified algebra.
enum class RootType { A, B, C, D };

inline std::string familyKey(Family f) {
  switch (f) {
    case Family::SU: return "su";
    case Family::SOodd: return "so-odd";
    case Family::Sp: return "sp";
    case Family::SOeven: return "so-even";
    case Family::SOstar: return "so-star";
  }
  return "?";
}

inline std::optional<Family> parseFamily(std::string_view s) {
  if (s == "su") return Family::SU;
  if (s == "so-odd") return Family::SOodd;
  if (s == "sp") return Family::Sp;
  if (s == "so-even") return Family::SOeven;
  if (s == "so-star") return Family::SOstar;
  return std::nullopt;
}

inline char rootTypeLetter(RootType t) { return "ABCD"[static_cast<int>(t)]; }

/// One of the five families together with its parameters.  Families that take
/// a single parameter (Sp, SO*) use n and leave p, q at zero.
struct GroupCase {
  Family family = Family::SU;
  int p = 0;
  int q = 0;
  int n = 0;

  static GroupCase su(int p, int q) { return make({Family::SU, p, q, 0}); }
  static GroupCase soOdd(int p, int q) { return make({Family::SOodd, p, q, 0}); }
  static GroupCase sp(int n) { return make({Family::Sp, 0, 0, n}); }
  static GroupCase soEven(int p, int q) { return make({Family::SOeven, p, q, 0}); }
  static GroupCase soStar(int n) { return make({Family::SOstar, 0, 0, n}); }

  static GroupCase make(GroupCase g) {
    g.validate();
    return g;
  }

  bool usesPQ() const { return family == Family::SU || family == Family::SOodd || family == Family::SOeven; }

  void validate() const {
    std::ostringstream why;
    switch (family) {
      case Family::SU:
        if (p < 1 || q < p) why << "SU(p,q) needs 1 <= p <= q, got p=" << p << " q=" << q;
        break;
      case Family::SOodd:
        if (p < 1 || q < p - 1) why << "SO_e(2p,2q+1) needs p >= 1 and q >= p-1, got p=" << p << " q=" << q;
        break;
      case Family::SOeven:
        if (p < 1 || q < p) why << "SO_e(2p,2q) needs 1 <= p <= q, got p=" << p << " q=" << q;
        break;
      case Family::Sp:
        if (n < 1) why << "Sp(2n,R) needs n >= 1, got n=" << n;
        break;
      case Family::SOstar:
        if (n < 1) why << "SO*(2n) needs n >= 1, got n=" << n;
        break;
    }
    if (!why.str().empty()) fail(ErrorKind::InvalidArgument, why.str());
  }

  /// Number of ambient coordinates.  For SU this is p+q (gl coordinates).
  int rank() const {
    switch (family) {
      case Family::SU: return p + q;
      case Family::SOodd: return p + q;
      case Family::SOeven: return p + q;
      case Family::Sp: return n;
      case Family::SOstar: return n;
    }
    return 0;
  }

  RootType rootType() const {
    switch (family) {
      case Family::SU: return RootType::A;
      case Family::SOodd: return RootType::B;
      case Family::Sp: return RootType::C;
      case Family::SOeven: return RootType::D;
      case Family::SOstar: return RootType::D;
    }
    return RootType::A;
  }

  /// Number of coordinates in the first block of K.
  int firstBlock() const { return usesPQ() ? p : n; }

  std::string name() const {
    std::ostringstream os;
    switch (family) {
      case Family::SU: os << "SU(" << p << "," << q << ")"; break;
      case Family::SOodd: os << "SO_e(" << 2 * p << "," << 2 * q + 1 << ")"; break;
      case Family::Sp: os << "Sp(" << 2 * n << ",R)"; break;
      case Family::SOeven: os << "SO_e(" << 2 * p << "," << 2 * q << ")"; break;
      case Family::SOstar: os << "SO*(" << 2 * n << ")"; break;
    }
    return os.str();
  }

  std::string latexName() const {
    std::ostringstream os;
    switch (family) {
      case Family::SU: os << "SU(" << p << "," << q << ")"; break;
      case Family::SOodd: os << "SO_e(" << 2 * p << "," << 2 * q + 1 << ")"; break;
      case Family::Sp: os << "Sp(" << 2 * n << ",\\mathbb{R})"; break;
      case Family::SOeven: os << "SO_e(" << 2 * p << "," << 2 * q << ")"; break;
      case Family::SOstar: os << "SO^*(" << 2 * n << ")"; break;
    }
    return os.str();
  }

  bool operator==(const GroupCase&) const = default;
};

}  // namespace dicon
