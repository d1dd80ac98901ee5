#pragma once

// Reproduction and verification sweeps. Every sweep partitions its inputs into
// contiguous chunks, runs them on a worker pool and merges the partial reports
// in chunk order, so the result does not depend on the worker count.

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sqfrob/integer.hpp"

namespace sqfrob {

struct Mismatch {
  Integer a = 0;
  Integer d = 0;
  Integer k = 0;
  Integer expected = 0;
  Integer actual = 0;
  std::string detail;
};

struct SweepReport {
  std::string scope;
  Integer range_lo = 0;
  Integer range_hi = 0;
  std::int64_t checked = 0;
  std::vector<Mismatch> mismatches;
  std::map<std::string, std::int64_t> counters;  // informational tallies
  std::chrono::milliseconds wall{0};

  bool passed() const noexcept { return mismatches.empty(); }
  void merge(const SweepReport& other);
};

struct ExceptionEntry {
  Integer a = 0;
  Integer oracle_value = 0;  // square Frobenius number of <a, a+d>
  Integer bound_value = 0;   // B(a, d, 1)
};

/// E(d): coprime a in [2, 4d^3 - 1] whose square Frobenius number differs
/// from B(a, d, 1).
struct ExceptionReport {
  Integer d = 0;
  Integer scan_lo = 2;
  Integer scan_hi = 0;
  std::vector<ExceptionEntry> members;
  std::int64_t checked = 0;
};

struct SweepOptions {
  unsigned jobs = 0;            // 0: SQFROB_JOBS, else hardware concurrency
  std::size_t chunk_size = 4096;
};

/// Resolves 0 to the SQFROB_JOBS environment variable or the hardware
/// thread count.
unsigned resolve_jobs(unsigned requested);

/// Throws DTooSmall for d < 3.
ExceptionReport exception_set(Integer d, const SweepOptions& options = {});

/// Golden data.
struct Table1Row {
  Integer d = 0;
  Integer count = 0;
  std::vector<Integer> members;
};
struct Table2Row {
  Integer d = 0;
  Integer a = 0;
  Integer sqfrob_root = 0;
  Integer bound_root = 0;
};

/// Parse the TSV formats in data/. Lines starting with '#' are comments; the
/// first remaining line is the header. Throws BadGoldenData.
std::vector<Table1Row> parse_table1(std::string_view tsv);
std::vector<Table2Row> parse_table2(std::string_view tsv);
std::vector<Table1Row> golden_table1();
std::vector<Table2Row> golden_table2();

/// Recomputes E(d) for every golden row; both membership and count must match.
SweepReport reproduce_table1(const SweepOptions& options = {});

/// Recomputes both value columns for every golden row.
SweepReport reproduce_table2(const SweepOptions& options = {});

/// For coprime a in the list satisfying a + kd >= 4kd^3, asserts the oracle
/// square Frobenius number is at most B(a, d, k), with equality when k = 1.
/// Inputs meeting only the weaker a + kd > 4(kd - lambda*)d^2 + d^2 are
/// tallied under the "weak_*" counters and never asserted.
SweepReport verify_theorem_bound(Integer d, Integer k, const std::vector<Integer>& candidates,
                                 const SweepOptions& options = {});
SweepReport verify_theorem_bound(Integer d, Integer k, Integer a_lo, Integer a_hi,
                                 const SweepOptions& options = {});

/// which = 1: a = b^2 or a + 1 = b^2 for <a, a+1>; which = 2: a = c^2 or
/// a + 2 = c^2 (c odd) for <a, a+2>. Compares the conjectured value with the
/// oracle for every such a in [2, max_a].
SweepReport verify_conjectures(int which, Integer max_a, const SweepOptions& options = {});

/// Closed form against the oracle for every admissible a in [2, max_a],
/// d in 1..5. For d = 1, 2 only the proven (non-square) cases are included.
SweepReport verify_closed_forms(Integer d, Integer max_a, const SweepOptions& options = {});

/// For a in [a_lo, a_hi], k in [k_lo, k_hi] and every coprime d with
/// d(1 + 2k) <= ak: the smallest square of <a, ..., a+kd> is at most (a-d)^2.
SweepReport verify_min_power_theorem(Integer a_lo, Integer a_hi, Integer k_lo, Integer k_hi,
                                     const SweepOptions& options = {});

/// s <= smallest p-th power in S <= s^p for AP semigroups with a in
/// [a_lo, a_hi], coprime d <= d_max, k in [k_lo, k_hi], p in [2, max_exponent].
SweepReport verify_min_power_bounds(Integer a_lo, Integer a_hi, Integer d_max, Integer k_lo,
                                    Integer k_hi, int max_exponent,
                                    const SweepOptions& options = {});

}  // namespace sqfrob
