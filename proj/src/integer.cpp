#include "sqfrob/integer.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "sqfrob/error.hpp"

namespace sqfrob {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyGenerators: return "EmptyGenerators";
    case ErrorKind::NonCoprime: return "NonCoprime";
    case ErrorKind::ZeroGenerator: return "ZeroGenerator";
    case ErrorKind::NegativeInput: return "NegativeInput";
    case ErrorKind::NotAGenerator: return "NotAGenerator";
    case ErrorKind::FullSemigroup: return "FullSemigroup";
    case ErrorKind::DTooSmall: return "DTooSmall";
    case ErrorKind::BadResidue: return "BadResidue";
    case ErrorKind::EvenInput: return "EvenInput";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::BadGoldenData: return "BadGoldenData";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void overflow(const char* op) {
  throw Error(ErrorKind::Overflow, std::string("integer overflow in ") + op);
}

}  // namespace

Integer checked_add(Integer lhs, Integer rhs) {
  Integer out;
  if (__builtin_add_overflow(lhs, rhs, &out)) overflow("add");
  return out;
}

Integer checked_sub(Integer lhs, Integer rhs) {
  Integer out;
  if (__builtin_sub_overflow(lhs, rhs, &out)) overflow("sub");
  return out;
}

Integer checked_mul(Integer lhs, Integer rhs) {
  Integer out;
  if (__builtin_mul_overflow(lhs, rhs, &out)) overflow("mul");
  return out;
}

Integer narrow(Wide value) {
  if (value > static_cast<Wide>(INT64_MAX) || value < static_cast<Wide>(INT64_MIN)) {
    overflow("narrow");
  }
  return static_cast<Integer>(value);
}

Integer ipow(Integer base, int exponent) {
  if (exponent < 0) throw Error(ErrorKind::NegativeInput, "negative exponent");
  Integer out = 1;
  for (int e = 0; e < exponent; ++e) out = checked_mul(out, base);
  return out;
}

Integer isqrt(Integer n) {
  if (n < 0) throw Error(ErrorKind::NegativeInput, "isqrt of negative value");
  if (n < 2) return n;
  auto un = static_cast<std::uint64_t>(n);
  // Newton iteration from a power of two above the root; decreases monotonically.
  std::uint64_t x = std::uint64_t{1} << ((std::bit_width(un) + 1) / 2);
  while (true) {
    std::uint64_t y = (x + un / x) / 2;
    if (y >= x) break;
    x = y;
  }
  return static_cast<Integer>(x);
}

Integer kth_root_floor(Integer n, int k) {
  if (n < 0) throw Error(ErrorKind::NegativeInput, "root of negative value");
  if (k < 1) throw Error(ErrorKind::NegativeInput, "root index must be >= 1");
  if (k == 1 || n < 2) return n;
  if (k == 2) return isqrt(n);
  // m^k <= n, evaluated without overflow by bailing out once the product exceeds n.
  auto fits = [n, k](Integer m) {
    Wide acc = 1;
    for (int e = 0; e < k; ++e) {
      acc *= m;
      if (acc > n) return false;
    }
    return true;
  };
  Integer lo = 1;
  Integer hi = Integer{1} << ((std::bit_width(static_cast<std::uint64_t>(n)) + k - 1) / k);
  while (lo < hi) {
    Integer mid = lo + (hi - lo + 1) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

bool is_square(Integer n) {
  if (n < 0) return false;
  Integer r = isqrt(n);
  return r * r == n;
}

Integer mod_inverse(Integer value, Integer m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 1");
  if (m == 1) return 0;
  Integer old_r = mod_floor(value, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw Error(ErrorKind::NonCoprime,
                std::to_string(value) + " is not invertible modulo " + std::to_string(m));
  }
  return mod_floor(old_s, m);
}

}  // namespace sqfrob
