#pragma once

#include <concepts>
#include <span>
#include <vector>

#include "sqfrob/integer.hpp"

namespace sqfrob {

/// Least element of S in each residue class modulo one of its generators.
struct AperyTable {
  Integer modulus = 1;
  std::vector<Integer> entries{0};

  /// max(entries) - modulus; -1 when modulus == 1 (S is all of N).
  Integer frobenius() const;
};

/// A numerical semigroup stored by its minimal generating set.
///
/// Construction sorts, deduplicates and drops generators representable by the
/// smaller ones, so two semigroups compare equal iff they are the same set.
/// Membership is answered from the Apery table of the multiplicity, built
/// once at construction.
class NumericalSemigroup {
 public:
  /// Throws EmptyGenerators, ZeroGenerator, NegativeInput or NonCoprime.
  explicit NumericalSemigroup(std::span<const Integer> generators);

  const std::vector<Integer>& generators() const noexcept { return generators_; }
  Integer multiplicity() const noexcept { return generators_.front(); }
  bool is_full() const noexcept { return generators_.front() == 1; }
  const AperyTable& apery() const noexcept { return apery_; }

  /// Throws NegativeInput for value < 0.
  bool contains(Integer value) const;

  /// Throws FullSemigroup when S = N.
  Integer frobenius() const;

  friend bool operator==(const NumericalSemigroup& lhs, const NumericalSemigroup& rhs) {
    return lhs.generators_ == rhs.generators_;
  }

 private:
  std::vector<Integer> generators_;
  AperyTable apery_;
};

/// Anything the power oracles can query: exact membership plus F(S).
template <class S>
concept SemigroupLike = requires(const S& s, Integer value) {
  { s.contains(value) } -> std::same_as<bool>;
  { s.frobenius() } -> std::convertible_to<Integer>;
  { s.multiplicity() } -> std::convertible_to<Integer>;
  { s.is_full() } -> std::same_as<bool>;
};

NumericalSemigroup make_semigroup(std::span<const Integer> generators);
inline NumericalSemigroup make_semigroup(std::initializer_list<Integer> generators) {
  return NumericalSemigroup(std::span<const Integer>(generators.begin(), generators.size()));
}

/// Apery table with respect to `modulus`, which must be one of the minimal
/// generators (NotAGenerator otherwise).
AperyTable apery_set(const NumericalSemigroup& s, Integer modulus);
inline AperyTable apery_set(const NumericalSemigroup& s) { return s.apery(); }

inline bool contains(const NumericalSemigroup& s, Integer value) { return s.contains(value); }
inline Integer frobenius(const NumericalSemigroup& s) { return s.frobenius(); }

/// s1*s2 - s1 - s2 for coprime s1, s2 >= 2.
Integer two_generator_frobenius(Integer s1, Integer s2);

/// Sorted non-members of S; empty for S = N.
std::vector<Integer> gaps(const NumericalSemigroup& s);

/// Number of gaps, from the Apery table (sum of (w - r) / m).
Integer genus(const NumericalSemigroup& s);

/// Largest modulus accepted for an Apery table.
inline constexpr Integer kMaxAperyModulus = Integer{1} << 26;

}  // namespace sqfrob
