#pragma once

// Exact integer helpers shared by every module. Values are 64-bit; any
// intermediate that could leave that range is either widened to 128 bits or
// checked, and overflow raises ErrorKind::Overflow.

#include <cstdint>

namespace sqfrob {

using Integer = std::int64_t;
__extension__ using Wide = __int128;

Integer checked_add(Integer lhs, Integer rhs);
Integer checked_sub(Integer lhs, Integer rhs);
Integer checked_mul(Integer lhs, Integer rhs);

/// Narrows a 128-bit intermediate, throwing on overflow.
Integer narrow(Wide value);

/// base^exponent, checked.
Integer ipow(Integer base, int exponent);

/// Largest m with m*m <= n. Throws NegativeInput for n < 0.
Integer isqrt(Integer n);

/// Largest m with m^k <= n. Throws NegativeInput for n < 0, k < 1.
Integer kth_root_floor(Integer n, int k);

bool is_square(Integer n);

/// Euclidean remainder in [0, m).
constexpr Integer mod_floor(Integer value, Integer m) {
  Integer r = value % m;
  return r < 0 ? r + m : r;
}

/// Inverse of value modulo m in [0, m). For m == 1 the inverse is 0.
/// Throws NonCoprime if gcd(value, m) != 1.
Integer mod_inverse(Integer value, Integer m);

}  // namespace sqfrob
