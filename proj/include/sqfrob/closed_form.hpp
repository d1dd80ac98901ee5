#pragma once

// Exact square Frobenius numbers of two-generator semigroups <a, a+d> for
// d = 1..5. The d = 3, 4, 5 formulas and the non-square cases of d = 1, 2 are
// proven; the square-adjacent cases of d = 1, 2 are conjectural and can be
// replaced by the oracle value on request.

#include <optional>
#include <string_view>

#include "sqfrob/integer.hpp"

namespace sqfrob {

/// 1, 2, 3, 5, 7, 12, 17, 29, ... with u(2n) = u(2n-1) + u(2n-2) and
/// u(2n+1) = u(2n) + u(2n-2). Throws InvalidArgument for n < 1.
Integer u(int n);

/// Index n with u(n) == value, if any.
std::optional<int> u_index(Integer value);

/// Index families over the u-sequence used by the square-adjacent cases.
enum class UFamily {
  Mod4Is1Or2,          // {u(4n+1), u(4n+2) : n >= 0} = 1, 2, 7, 12, 41, ...
  Mod4Is3Or0,          // {u(4n-1), u(4n) : n >= 1}   = 3, 5, 17, 29, ...
  Mod4Is0Or3From4,     // {u(4n), u(4n+3) : n >= 1}   = 5, 17, 29, 99, ...
  Mod4Is1From5,        // {u(4n+1) : n >= 1}          = 7, 41, 239, ...
  Mod4Is1From9,        // {u(4n+1) : n >= 2}          = 41, 239, ...
  Mod4Is3,             // {u(4n+3) : n >= 0}          = 3, 17, 99, ...
};

bool u_index_set_member(Integer value, UFamily family);

/// floor(b * sqrt 2), floor(b * sqrt 3), floor(c * sqrt 2 / 2), all exact.
Integer floor_sqrt2(Integer b);
Integer floor_sqrt3(Integer b);
Integer floor_half_sqrt2(Integer c);

enum class Branch {
  D3Lower,          // (a - (3b-1))^2
  D3Upper,          // (a - (3b+1))^2
  D4Lower,          // (a - (4b-1))^2
  D4Upper,          // (a - (4b+1))^2
  D5Exception,      // a in {2, 4, 13, 27, 32}
  D5Minus2,         // (a - (5b-2))^2
  D5Minus1,         // (a - (5b-1))^2
  D5Plus1,          // (a - (5b+1))^2
  D5Plus2,          // (a - (5b+2))^2
  D1NonSquare,      // (a - b)^2, b^2 < a < a+1 < (b+1)^2
  D1SquareSqrt2,    // a = b^2
  D1SquareSqrt3,
  D1NextSquareSqrt2,  // a + 1 = b^2
  D1NextSquareSqrt3,
  D1NextSquareThree,  // b = 3, value 4
  D2NonSquare,
  D2SquareHalfSqrt2,  // a = c^2, c odd
  D2SquareSqrt3,
  D2SquareSeven,      // c = 7, value 38^2
  D2NextSquareHalfSqrt2,  // a + 2 = c^2
  D2NextSquareSqrt3,
  OracleFallback,
  Oracle,           // conjectural case replaced by the oracle on request
};

std::string_view to_string(Branch branch) noexcept;

/// True for branches that rest on an unproven formula.
bool is_conjectural(Branch branch) noexcept;

struct ClosedFormAnswer {
  Integer a = 0;
  Integer d = 0;
  Integer value = 0;
  Integer root = 0;
  Branch branch = Branch::OracleFallback;
  Integer b = 0;  // bracketing integer of the case that fired
};

enum class ConjecturePolicy { Formula, Oracle };

/// a >= 2, 3 does not divide a (BadResidue).
ClosedFormAnswer sq_frob_d3(Integer a);
/// a >= 3 odd (BadResidue).
ClosedFormAnswer sq_frob_d4(Integer a);
/// a >= 2, 5 does not divide a (BadResidue).
ClosedFormAnswer sq_frob_d5(Integer a);
/// a >= 2.
ClosedFormAnswer sq_frob_d1(Integer a, ConjecturePolicy policy = ConjecturePolicy::Formula);
/// a >= 3 odd (EvenInput).
ClosedFormAnswer sq_frob_d2(Integer a, ConjecturePolicy policy = ConjecturePolicy::Formula);

/// Dispatch on d in 1..5; InvalidArgument otherwise.
ClosedFormAnswer closed_square_frobenius(Integer a, Integer d,
                                         ConjecturePolicy policy = ConjecturePolicy::Formula);

}  // namespace sqfrob
