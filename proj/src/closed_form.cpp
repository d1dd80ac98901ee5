#include "sqfrob/closed_form.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

#include "sqfrob/error.hpp"
#include "sqfrob/power.hpp"
#include "sqfrob/progression.hpp"

namespace sqfrob {

namespace {

// Terms u(1)..u(n), stopping early once a term exceeds `ceiling`.
std::vector<Integer> u_terms(int n, Integer ceiling) {
  std::vector<Integer> t{0, 1, 2, 3};  // t[0] unused
  while (static_cast<int>(t.size()) <= n && t.back() <= ceiling) {
    const auto i = t.size();
    t.push_back(i % 2 == 0 ? checked_add(t[i - 1], t[i - 2]) : checked_add(t[i - 1], t[i - 3]));
  }
  return t;
}

struct FamilyShape {
  std::array<bool, 4> residues;  // allowed index mod 4
  int min_index;
};

FamilyShape shape(UFamily family) {
  switch (family) {
    case UFamily::Mod4Is1Or2: return {{false, true, true, false}, 1};
    case UFamily::Mod4Is3Or0: return {{true, false, false, true}, 3};
    case UFamily::Mod4Is0Or3From4: return {{true, false, false, true}, 4};
    case UFamily::Mod4Is1From5: return {{false, true, false, false}, 5};
    case UFamily::Mod4Is1From9: return {{false, true, false, false}, 9};
    case UFamily::Mod4Is3: return {{false, false, false, true}, 3};
  }
  return {{false, false, false, false}, 0};
}

ClosedFormAnswer make_answer(Integer a, Integer d, Integer root, Branch branch, Integer b) {
  const Integer r = root < 0 ? -root : root;
  return {a, d, checked_mul(r, r), r, branch, b};
}

ClosedFormAnswer oracle_answer(Integer a, Integer d, Branch branch) {
  const PowerResult r = power_frobenius_oracle(ApSemigroup(a, d, 1), 2);
  return {a, d, r.value, r.root, branch, 0};
}

// One case of a bracketed formula: value (a - (period*b + shift))^2 when
// (period*b + lo)^2 <= target < (period*b + hi)^2 for some b >= 0.
struct BracketCase {
  Integer lo;
  Integer hi;
  Integer shift;
  Branch branch;
};

ClosedFormAnswer bracketed(Integer a, Integer d, Integer target, Integer period,
                           std::span<const BracketCase> cases) {
  const Integer root = isqrt(target);
  for (const BracketCase& c : cases) {
    if (root < c.lo) continue;
    const Integer b = (root - c.lo) / period;
    const Integer low = period * b + c.lo;
    const Integer high = period * b + c.hi;
    if (low * low <= target && target < high * high) {
      return make_answer(a, d, a - (period * b + c.shift), c.branch, b);
    }
  }
  return oracle_answer(a, d, Branch::OracleFallback);
}

ClosedFormAnswer apply_policy(ClosedFormAnswer answer, ConjecturePolicy policy) {
  if (policy == ConjecturePolicy::Oracle && is_conjectural(answer.branch)) {
    ClosedFormAnswer truth = oracle_answer(answer.a, answer.d, Branch::Oracle);
    truth.b = answer.b;
    return truth;
  }
  return answer;
}

}  // namespace

Integer u(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "u is indexed from 1");
  const auto t = u_terms(n, INT64_MAX);
  return t[static_cast<std::size_t>(n)];
}

std::optional<int> u_index(Integer value) {
  if (value < 1) return std::nullopt;
  const auto t = u_terms(INT32_MAX, value);
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] == value) return static_cast<int>(i);
    if (t[i] > value) break;
  }
  return std::nullopt;
}

bool u_index_set_member(Integer value, UFamily family) {
  const auto index = u_index(value);
  if (!index) return false;
  const FamilyShape s = shape(family);
  return *index >= s.min_index && s.residues[static_cast<std::size_t>(*index % 4)];
}

Integer floor_sqrt2(Integer b) { return isqrt(checked_mul(2, checked_mul(b, b))); }
Integer floor_sqrt3(Integer b) { return isqrt(checked_mul(3, checked_mul(b, b))); }
// floor(x / 2) = floor(floor(x) / 2) for real x.
Integer floor_half_sqrt2(Integer c) { return floor_sqrt2(c) / 2; }

ClosedFormAnswer sq_frob_d3(Integer a) {
  if (a < 2 || a % 3 == 0) {
    throw Error(ErrorKind::BadResidue, "d = 3 needs a >= 2 not divisible by 3");
  }
  static constexpr std::array<BracketCase, 2> cases{{
      {1, 2, -1, Branch::D3Lower},
      {2, 4, 1, Branch::D3Upper},
  }};
  const Integer target = a % 3 == 1 ? a + 3 : checked_mul(2, a + 3);
  return bracketed(a, 3, target, 3, cases);
}

ClosedFormAnswer sq_frob_d4(Integer a) {
  if (a < 3 || a % 2 == 0) throw Error(ErrorKind::BadResidue, "d = 4 needs odd a >= 3");
  static constexpr std::array<BracketCase, 2> cases{{
      {1, 3, -1, Branch::D4Lower},
      {3, 5, 1, Branch::D4Upper},
  }};
  const Integer target = a % 4 == 1 ? a + 4 : checked_mul(3, a + 4);
  return bracketed(a, 4, target, 4, cases);
}

ClosedFormAnswer sq_frob_d5(Integer a) {
  if (a < 2 || a % 5 == 0) {
    throw Error(ErrorKind::BadResidue, "d = 5 needs a >= 2 not divisible by 5");
  }
  switch (a) {
    case 2:
    case 4: return make_answer(a, 5, 1, Branch::D5Exception, 0);
    case 13: return make_answer(a, 5, 10, Branch::D5Exception, 0);
    case 27:
    case 32: return make_answer(a, 5, a - 6, Branch::D5Exception, 0);
    default: break;
  }
  static constexpr std::array<BracketCase, 2> even_cases{{
      {2, 3, -2, Branch::D5Minus2},
      {3, 7, 2, Branch::D5Plus2},
  }};
  static constexpr std::array<BracketCase, 2> odd_cases{{
      {1, 4, -1, Branch::D5Minus1},
      {4, 6, 1, Branch::D5Plus1},
  }};
  const Integer residue = a % 5;
  const Integer target = (residue == 1 || residue == 4) ? a + 5 : checked_mul(2, a + 5);
  if (residue == 2 || residue == 4) return bracketed(a, 5, target, 5, even_cases);
  return bracketed(a, 5, target, 5, odd_cases);
}

ClosedFormAnswer sq_frob_d1(Integer a, ConjecturePolicy policy) {
  if (a < 2) throw Error(ErrorKind::InvalidArgument, "d = 1 needs a >= 2");
  ClosedFormAnswer out;
  if (const Integer b = isqrt(a); b * b == a) {
    out = u_index_set_member(b, UFamily::Mod4Is1Or2)
              ? make_answer(a, 1, a - floor_sqrt3(b), Branch::D1SquareSqrt3, b)
              : make_answer(a, 1, a - floor_sqrt2(b), Branch::D1SquareSqrt2, b);
  } else if (const Integer c = isqrt(a + 1); c * c == a + 1) {
    if (!u_index_set_member(c, UFamily::Mod4Is3Or0)) {
      out = make_answer(a, 1, a - floor_sqrt2(c), Branch::D1NextSquareSqrt2, c);
    } else if (c == 3) {
      out = make_answer(a, 1, 2, Branch::D1NextSquareThree, c);
    } else {
      out = make_answer(a, 1, a - floor_sqrt3(c), Branch::D1NextSquareSqrt3, c);
    }
  } else {
    out = make_answer(a, 1, a - b, Branch::D1NonSquare, b);
  }
  return apply_policy(out, policy);
}

ClosedFormAnswer sq_frob_d2(Integer a, ConjecturePolicy policy) {
  if (a < 3) throw Error(ErrorKind::InvalidArgument, "d = 2 needs a >= 3");
  if (a % 2 == 0) throw Error(ErrorKind::EvenInput, "d = 2 needs odd a");
  ClosedFormAnswer out;
  if (const Integer c = isqrt(a); c * c == a) {
    const Integer b = (c - 1) / 2;
    if (!u_index_set_member(c, UFamily::Mod4Is1From5)) {
      out = make_answer(a, 2, a - 2 * floor_half_sqrt2(c), Branch::D2SquareHalfSqrt2, b);
    } else if (c == 7) {
      out = make_answer(a, 2, 38, Branch::D2SquareSeven, b);
    } else {
      out = make_answer(a, 2, a - floor_sqrt3(c), Branch::D2SquareSqrt3, b);
    }
  } else if (const Integer e = isqrt(a + 2); e * e == a + 2) {
    const Integer b = (e - 1) / 2;
    out = u_index_set_member(e, UFamily::Mod4Is3)
              ? make_answer(a, 2, a - floor_sqrt3(e), Branch::D2NextSquareSqrt3, b)
              : make_answer(a, 2, a - 2 * floor_half_sqrt2(e), Branch::D2NextSquareHalfSqrt2, b);
  } else {
    // Largest odd root strictly below sqrt(a).
    const Integer odd = c % 2 == 1 ? c : c - 1;
    out = make_answer(a, 2, a - odd, Branch::D2NonSquare, (odd - 1) / 2);
  }
  return apply_policy(out, policy);
}

ClosedFormAnswer closed_square_frobenius(Integer a, Integer d, ConjecturePolicy policy) {
  switch (d) {
    case 1: return sq_frob_d1(a, policy);
    case 2: return sq_frob_d2(a, policy);
    case 3: return sq_frob_d3(a);
    case 4: return sq_frob_d4(a);
    case 5: return sq_frob_d5(a);
    default:
      throw Error(ErrorKind::InvalidArgument,
                  "no closed form for d = " + std::to_string(d));
  }
}

std::string_view to_string(Branch branch) noexcept {
  switch (branch) {
    case Branch::D3Lower: return "d3_lower";
    case Branch::D3Upper: return "d3_upper";
    case Branch::D4Lower: return "d4_lower";
    case Branch::D4Upper: return "d4_upper";
    case Branch::D5Exception: return "d5_exception";
    case Branch::D5Minus2: return "d5_minus2";
    case Branch::D5Minus1: return "d5_minus1";
    case Branch::D5Plus1: return "d5_plus1";
    case Branch::D5Plus2: return "d5_plus2";
    case Branch::D1NonSquare: return "d1_non_square";
    case Branch::D1SquareSqrt2: return "d1_square_sqrt2";
    case Branch::D1SquareSqrt3: return "d1_square_sqrt3";
    case Branch::D1NextSquareSqrt2: return "d1_next_square_sqrt2";
    case Branch::D1NextSquareSqrt3: return "d1_next_square_sqrt3";
    case Branch::D1NextSquareThree: return "d1_next_square_three";
    case Branch::D2NonSquare: return "d2_non_square";
    case Branch::D2SquareHalfSqrt2: return "d2_square_half_sqrt2";
    case Branch::D2SquareSqrt3: return "d2_square_sqrt3";
    case Branch::D2SquareSeven: return "d2_square_seven";
    case Branch::D2NextSquareHalfSqrt2: return "d2_next_square_half_sqrt2";
    case Branch::D2NextSquareSqrt3: return "d2_next_square_sqrt3";
    case Branch::OracleFallback: return "oracle_fallback";
    case Branch::Oracle: return "oracle";
  }
  return "unknown";
}

bool is_conjectural(Branch branch) noexcept {
  switch (branch) {
    case Branch::D1SquareSqrt2:
    case Branch::D1SquareSqrt3:
    case Branch::D1NextSquareSqrt2:
    case Branch::D1NextSquareSqrt3:
    case Branch::D1NextSquareThree:
    case Branch::D2SquareHalfSqrt2:
    case Branch::D2SquareSqrt3:
    case Branch::D2SquareSeven:
    case Branch::D2NextSquareHalfSqrt2:
    case Branch::D2NextSquareSqrt3:
      return true;
    default:
      return false;
  }
}

}  // namespace sqfrob
