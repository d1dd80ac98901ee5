#pragma once

// Semigroups generated by arithmetic progressions <a, a+d, ..., a+kd>.

#include <vector>

#include "sqfrob/integer.hpp"
#include "sqfrob/semigroup.hpp"

namespace sqfrob {

/// M = a*x + d*y with 0 <= y < a.
struct Decomposition {
  Integer x = 0;
  Integer y = 0;
};

class ApSemigroup {
 public:
  /// Requires a >= 2, d >= 1, k >= 1 (InvalidArgument) and gcd(a, d) = 1
  /// (NonCoprime).
  ApSemigroup(Integer a, Integer d, Integer k);

  Integer a() const noexcept { return a_; }
  Integer d() const noexcept { return d_; }
  Integer k() const noexcept { return k_; }

  Integer multiplicity() const noexcept { return a_; }
  bool is_full() const noexcept { return false; }

  Decomposition decompose(Integer value) const;

  /// value is in S iff its decomposition has x >= 0 and y <= k*x.
  /// Throws NegativeInput for value < 0.
  bool contains(Integer value) const;

  /// Closed formula (floor((a-2)/k) + 1) a + (d-1)(a-1) - 1.
  Integer frobenius() const;

  /// a, a+d, ..., a+kd as listed (not minimized).
  std::vector<Integer> generators() const;
  NumericalSemigroup expand() const;

  /// -a^{-1} i^2 mod d, the residue correction for the square (a - i)^2.
  Integer lambda(Integer i) const;

  friend bool operator==(const ApSemigroup&, const ApSemigroup&) = default;

 private:
  Integer a_;
  Integer d_;
  Integer k_;
  Integer d_inverse_mod_a_;
  Integer a_inverse_mod_d_;
};

inline bool ap_contains(const ApSemigroup& s, Integer value) { return s.contains(value); }
inline Integer ap_frobenius(const ApSemigroup& s) { return s.frobenius(); }

/// Residue corrections for a given (a, d).
struct LambdaProfile {
  Integer d = 1;
  std::vector<Integer> lambdas;  // lambdas[i] * a + i^2 = 0 (mod d)
  Integer lambda_star = 0;       // max of lambdas
  std::vector<Integer> alphas;   // increasing; exactly the i with lambdas[i] == lambda_star
  Integer alpha_next = 1;        // d + alphas.front()

  /// alphas extended by alpha_next, 1-based: alpha(n + 1) == alpha_next.
  Integer alpha(std::size_t j) const { return j <= alphas.size() ? alphas[j - 1] : alpha_next; }
  std::size_t n() const noexcept { return alphas.size(); }
};

/// Throws NonCoprime if gcd(a, d) != 1, InvalidArgument if d < 1.
LambdaProfile lambda_profile(Integer a, Integer d);

/// Exact evaluation of the square-membership criterion for (a - i)^2:
///   (i + kd)^2 <= ((floor((i^2 + lambda_i a) / (ad)) + k) d - lambda_i)(a + kd).
/// Equivalent to ap_contains(s, (a - i)^2).
bool square_in_ap(const ApSemigroup& s, Integer i);

/// The bracket mu*d + alpha_j <= sqrt(target) < mu*d + alpha_{j+1}, where
/// target = (kd - lambda*)(a + kd). Squaring gives the usual form whenever
/// mu >= 0. For small a, isqrt(target) can fall below alpha_1; the bracket
/// then sits in the cell below zero and mu = -1, j = n.
struct MuJ {
  Integer mu = 0;
  std::size_t j = 1;
  Integer target = 0;
};

/// Throws DTooSmall for d < 3.
MuJ mu_j(const ApSemigroup& s);
MuJ mu_j(const ApSemigroup& s, const LambdaProfile& profile);

/// B(a, d, k) = (a - offset)^2 with offset = (mu - k) d + alpha_{j+1}.
struct SquareBound {
  MuJ bracket;
  Integer offset = 0;
  Integer root = 0;  // |a - offset|
  Integer value = 0;
};

/// Defined for every valid S with d >= 3, inside or outside the range where
/// it is a proven bound. Throws DTooSmall for d < 3.
SquareBound bound_b(const ApSemigroup& s);
SquareBound bound_b(const ApSemigroup& s, const LambdaProfile& profile);

/// a + kd >= 4 k d^3: the bound holds for the square Frobenius number.
bool bound_hypothesis(const ApSemigroup& s);

/// a + kd > 4 (kd - lambda*) d^2 + d^2. Reported, never asserted.
bool weak_bound_hypothesis(const ApSemigroup& s, const LambdaProfile& profile);

}  // namespace sqfrob
