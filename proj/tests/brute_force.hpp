#pragma once

// Test-only oracles. Everything here works from an explicit reachability
// sieve over [0, limit] and never touches the Apery tables, the progression
// decomposition or the closed forms under test.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace brute {

using Int = std::int64_t;

inline std::vector<bool> sieve(const std::vector<Int>& gens, Int limit) {
  std::vector<bool> reach(static_cast<std::size_t>(limit + 1), false);
  reach[0] = true;
  for (Int x = 1; x <= limit; ++x) {
    for (Int g : gens) {
      if (g <= x && reach[x - g]) {
        reach[x] = true;
        break;
      }
    }
  }
  return reach;
}

// F(S) < min * max for coprime generators, so the sieve to min*max covers all gaps.
inline Int safe_limit(const std::vector<Int>& gens) {
  return *std::min_element(gens.begin(), gens.end()) * *std::max_element(gens.begin(), gens.end());
}

inline Int frobenius(const std::vector<Int>& gens) {
  const Int limit = safe_limit(gens);
  const auto reach = sieve(gens, limit);
  Int f = -1;
  for (Int x = 0; x <= limit; ++x) {
    if (!reach[x]) f = x;
  }
  return f;
}

inline std::vector<Int> gaps(const std::vector<Int>& gens) {
  const Int limit = safe_limit(gens);
  const auto reach = sieve(gens, limit);
  std::vector<Int> out;
  for (Int x = 0; x <= limit; ++x) {
    if (!reach[x]) out.push_back(x);
  }
  return out;
}

// Least element per residue mod m, by scanning the sieve.
inline std::vector<Int> apery(const std::vector<Int>& gens, Int m) {
  const Int limit = safe_limit(gens) + m;
  const auto reach = sieve(gens, limit);
  std::vector<Int> out(static_cast<std::size_t>(m), -1);
  for (Int x = 0; x <= limit; ++x) {
    if (reach[x] && out[x % m] < 0) out[x % m] = x;
  }
  return out;
}

inline Int power(Int base, int k) {
  Int v = 1;
  for (int i = 0; i < k; ++i) v *= base;
  return v;
}

// Largest m^k (m >= 1) outside S; 0 if none.
inline Int largest_power_gap(const std::vector<Int>& gens, int k) {
  const Int limit = safe_limit(gens);
  const auto reach = sieve(gens, limit);
  Int best = 0;
  for (Int m = 1; power(m, k) <= limit; ++m) {
    if (!reach[power(m, k)]) best = power(m, k);
  }
  return best;
}

inline Int smallest_power_member(const std::vector<Int>& gens, int k) {
  const Int s = *std::min_element(gens.begin(), gens.end());
  const auto reach = sieve(gens, power(s, k));
  for (Int m = 1;; ++m) {
    if (reach[power(m, k)]) return power(m, k);
  }
}

inline std::vector<Int> progression(Int a, Int d, Int k) {
  std::vector<Int> out;
  for (Int t = 0; t <= k; ++t) out.push_back(a + t * d);
  return out;
}

}  // namespace brute
