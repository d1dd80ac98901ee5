#pragma once

// Brute-force oracles for perfect powers relative to a semigroup: the largest
// k-th power outside S and the smallest k-th power inside it. These are the
// correctness anchor every closed form is compared against.

#include <optional>
#include <string>
#include <string_view>

#include "sqfrob/error.hpp"
#include "sqfrob/integer.hpp"
#include "sqfrob/progression.hpp"
#include "sqfrob/semigroup.hpp"

namespace sqfrob {

enum class Method { Oracle, ClosedForm, Bound };

std::string_view to_string(Method method) noexcept;

/// Certificate that a value is not in S.
struct Witness {
  enum class Kind {
    AperyFloor,         // value < first = apery[value mod second]
    ProgressionSplit,   // value = a*first + d*second with second > k*first
  };
  Kind kind;
  Integer first = 0;
  Integer second = 0;
};

struct PowerResult {
  int exponent = 2;
  Integer root = 0;
  Integer value = 0;  // root^exponent
  Method method = Method::Oracle;
  std::optional<Witness> witness;
  std::string branch;  // closed-form case label, empty otherwise
};

inline Witness non_membership_witness(const NumericalSemigroup& s, Integer value) {
  const AperyTable& t = s.apery();
  return {Witness::Kind::AperyFloor, t.entries[value % t.modulus], t.modulus};
}

inline Witness non_membership_witness(const ApSemigroup& s, Integer value) {
  const Decomposition dec = s.decompose(value);
  return {Witness::Kind::ProgressionSplit, dec.x, dec.y};
}

/// Largest m^k not in S. Every k-th power above F(S) is a member, so the scan
/// starts at floor(F^(1/k)) and walks down; 1 is always a gap when S != N.
/// Throws FullSemigroup for S = N, InvalidArgument for k < 2.
template <SemigroupLike S>
PowerResult power_frobenius_oracle(const S& s, int k) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "power exponent must be >= 2");
  if (s.is_full()) throw Error(ErrorKind::FullSemigroup, "every power lies in S = N");
  for (Integer m = kth_root_floor(s.frobenius(), k); m >= 1; --m) {
    const Integer v = ipow(m, k);
    if (!s.contains(v)) {
      return {k, m, v, Method::Oracle, non_membership_witness(s, v), {}};
    }
  }
  throw Error(ErrorKind::FullSemigroup, "no power gap found");
}

/// Smallest m^k in S (m >= 1). Halts by m = multiplicity.
template <SemigroupLike S>
PowerResult power_min_oracle(const S& s, int k) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "power exponent must be >= 2");
  for (Integer m = 1;; ++m) {
    const Integer v = ipow(m, k);
    if (s.contains(v)) return {k, m, v, Method::Oracle, std::nullopt, {}};
  }
}

/// Square Frobenius number of an AP semigroup by oracle.
inline Integer square_frobenius(const ApSemigroup& s) {
  return power_frobenius_oracle(s, 2).value;
}

}  // namespace sqfrob
