#include "sqfrob/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "sqfrob/error.hpp"

namespace sqfrob {

namespace {

constexpr Integer kUnreached = std::numeric_limits<Integer>::max();

std::vector<Integer> fresh_table(Integer modulus) {
  if (modulus > kMaxAperyModulus) {
    throw Error(ErrorKind::InvalidArgument,
                "Apery modulus " + std::to_string(modulus) + " exceeds supported size");
  }
  std::vector<Integer> table(static_cast<std::size_t>(modulus), kUnreached);
  table[0] = 0;
  return table;
}

// One round-robin pass adding `generator` to the shortest-path table over the
// residues mod m. Each residue cycle under +generator is walked once from its
// current minimum, which is enough for the relaxation to reach a fixed point.
void relax_with(std::vector<Integer>& table, Integer generator) {
  const auto m = static_cast<Integer>(table.size());
  const Integer step = generator % m;
  if (step == 0) return;
  const Integer cycles = std::gcd(step, m);
  const Integer cycle_length = m / cycles;
  for (Integer start = 0; start < cycles; ++start) {
    Integer best = kUnreached;
    Integer best_residue = start;
    for (Integer t = 0, r = start; t < cycle_length; ++t, r = (r + step) % m) {
      if (table[r] < best) {
        best = table[r];
        best_residue = r;
      }
    }
    if (best == kUnreached) continue;
    Integer current = best;
    Integer r = best_residue;
    for (Integer t = 1; t < cycle_length; ++t) {
      r = (r + step) % m;
      current = std::min(checked_add(current, generator), table[r]);
      table[r] = current;
    }
  }
}

}  // namespace

Integer AperyTable::frobenius() const {
  return *std::max_element(entries.begin(), entries.end()) - modulus;
}

NumericalSemigroup::NumericalSemigroup(std::span<const Integer> generators) {
  if (generators.empty()) throw Error(ErrorKind::EmptyGenerators, "no generators given");
  Integer g = 0;
  for (Integer x : generators) {
    if (x == 0) throw Error(ErrorKind::ZeroGenerator, "generator 0 is not allowed");
    if (x < 0) throw Error(ErrorKind::NegativeInput, "generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) {
    throw Error(ErrorKind::NonCoprime, "generators have gcd " + std::to_string(g));
  }

  std::vector<Integer> sorted(generators.begin(), generators.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  const Integer m = sorted.front();
  std::vector<Integer> table = fresh_table(m);
  generators_.push_back(m);
  for (auto it = sorted.begin() + 1; it != sorted.end(); ++it) {
    // Redundant iff already reachable from the smaller generators.
    if (table[*it % m] <= *it) continue;
    relax_with(table, *it);
    generators_.push_back(*it);
  }
  apery_ = AperyTable{m, std::move(table)};
}

bool NumericalSemigroup::contains(Integer value) const {
  if (value < 0) throw Error(ErrorKind::NegativeInput, "membership of a negative value");
  return value >= apery_.entries[value % apery_.modulus];
}

Integer NumericalSemigroup::frobenius() const {
  if (is_full()) throw Error(ErrorKind::FullSemigroup, "S = N has no Frobenius number");
  return apery_.frobenius();
}

NumericalSemigroup make_semigroup(std::span<const Integer> generators) {
  return NumericalSemigroup(generators);
}

AperyTable apery_set(const NumericalSemigroup& s, Integer modulus) {
  const auto& gens = s.generators();
  if (std::find(gens.begin(), gens.end(), modulus) == gens.end()) {
    throw Error(ErrorKind::NotAGenerator,
                std::to_string(modulus) + " is not a minimal generator");
  }
  if (modulus == s.multiplicity()) return s.apery();
  std::vector<Integer> table = fresh_table(modulus);
  for (Integer g : gens) {
    if (g != modulus) relax_with(table, g);
  }
  return AperyTable{modulus, std::move(table)};
}

Integer two_generator_frobenius(Integer s1, Integer s2) {
  if (s1 < 2 || s2 < 2 || std::gcd(s1, s2) != 1) {
    throw Error(ErrorKind::InvalidArgument, "need coprime generators >= 2");
  }
  return checked_sub(checked_sub(checked_mul(s1, s2), s1), s2);
}

std::vector<Integer> gaps(const NumericalSemigroup& s) {
  std::vector<Integer> out;
  if (s.is_full()) return out;
  const Integer f = s.frobenius();
  for (Integer x = 1; x <= f; ++x) {
    if (!s.contains(x)) out.push_back(x);
  }
  return out;
}

Integer genus(const NumericalSemigroup& s) {
  const AperyTable& t = s.apery();
  Integer total = 0;
  for (Integer r = 0; r < t.modulus; ++r) {
    total = checked_add(total, (t.entries[r] - r) / t.modulus);
  }
  return total;
}

}  // namespace sqfrob
