#include "sqfrob/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <span>
#include <sstream>
#include <thread>

#include "sqfrob/closed_form.hpp"
#include "sqfrob/error.hpp"
#include "sqfrob/golden_data.hpp"
#include "sqfrob/power.hpp"
#include "sqfrob/progression.hpp"

namespace sqfrob {

void SweepReport::merge(const SweepReport& other) {
  checked += other.checked;
  mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
  for (const auto& [name, value] : other.counters) counters[name] += value;
}

unsigned resolve_jobs(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SQFROB_JOBS")) {
    unsigned parsed = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
    if (ec == std::errc() && ptr == text.data() + text.size() && parsed > 0) return parsed;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Runs fn(item, partial) over contiguous chunks of items and merges the
// partial reports in chunk order.
template <class Fn>
SweepReport sweep(std::string scope, std::span<const Integer> items, Integer lo, Integer hi,
                  const SweepOptions& options, Fn fn) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t chunk = std::max<std::size_t>(1, options.chunk_size);
  const std::size_t chunks = (items.size() + chunk - 1) / chunk;
  std::vector<SweepReport> partials(chunks);
  std::vector<std::exception_ptr> failures(chunks);

  auto run_chunk = [&](std::size_t c) {
    try {
      const std::size_t end = std::min(items.size(), (c + 1) * chunk);
      for (std::size_t i = c * chunk; i < end; ++i) fn(items[i], partials[c]);
    } catch (...) {
      failures[c] = std::current_exception();
    }
  };

  const auto jobs = static_cast<std::size_t>(std::min<std::size_t>(resolve_jobs(options.jobs), chunks));
  if (jobs <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t c = next++; c < chunks; c = next++) run_chunk(c);
      });
    }
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  SweepReport report;
  report.scope = std::move(scope);
  report.range_lo = lo;
  report.range_hi = hi;
  for (const SweepReport& p : partials) report.merge(p);
  report.wall = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::vector<Integer> integer_range(Integer lo, Integer hi) {
  std::vector<Integer> out;
  for (Integer a = lo; a <= hi; ++a) out.push_back(a);
  return out;
}

std::string witness_text(const ApSemigroup& s, Integer value) {
  const Decomposition dec = s.decompose(value);
  std::ostringstream out;
  out << value << " = " << s.a() << "*" << dec.x << " + " << s.d() << "*" << dec.y;
  return out.str();
}

// Splits on any character in `separators`, dropping empty fields.
std::vector<std::string_view> split(std::string_view text, std::string_view separators) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find_first_of(separators, pos), text.size());
    if (end > pos) out.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

Integer parse_integer(std::string_view field) {
  Integer value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(ErrorKind::BadGoldenData, "not an integer: '" + std::string(field) + "'");
  }
  return value;
}

// Data rows of a TSV document with the expected header, split into fields.
std::vector<std::vector<std::string_view>> tsv_rows(std::string_view tsv,
                                                    std::string_view header) {
  std::vector<std::vector<std::string_view>> rows;
  bool seen_header = false;
  for (std::string_view line : split(tsv, "\n")) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!seen_header) {
      if (line != header) {
        throw Error(ErrorKind::BadGoldenData, "unexpected header '" + std::string(line) + "'");
      }
      seen_header = true;
      continue;
    }
    rows.push_back(split(line, "\t"));
  }
  if (!seen_header) throw Error(ErrorKind::BadGoldenData, "missing header row");
  return rows;
}

}  // namespace

ExceptionReport exception_set(Integer d, const SweepOptions& options) {
  if (d < 3) throw Error(ErrorKind::DTooSmall, "E(d) is defined for d >= 3");
  const Integer hi = checked_sub(checked_mul(4, ipow(d, 3)), 1);
  std::vector<Integer> candidates;
  for (Integer a = 2; a <= hi; ++a) {
    if (std::gcd(a, d) == 1) candidates.push_back(a);
  }
  const SweepReport scan = sweep("exceptions", candidates, 2, hi, options,
                                 [d](Integer a, SweepReport& partial) {
    const ApSemigroup s(a, d, 1);
    const Integer oracle = square_frobenius(s);
    const Integer bound = bound_b(s).value;
    ++partial.checked;
    if (oracle != bound) partial.mismatches.push_back({a, d, 1, bound, oracle, {}});
  });

  ExceptionReport report;
  report.d = d;
  report.scan_hi = hi;
  report.checked = scan.checked;
  for (const Mismatch& m : scan.mismatches) report.members.push_back({m.a, m.actual, m.expected});
  return report;
}

std::vector<Table1Row> parse_table1(std::string_view tsv) {
  std::vector<Table1Row> out;
  for (const auto& fields : tsv_rows(tsv, "d\tcount\tmembers")) {
    if (fields.size() != 3) throw Error(ErrorKind::BadGoldenData, "table 1 rows have 3 fields");
    Table1Row row{parse_integer(fields[0]), parse_integer(fields[1]), {}};
    if (fields[2] != "-") {
      for (std::string_view m : split(fields[2], ",")) row.members.push_back(parse_integer(m));
    }
    if (static_cast<Integer>(row.members.size()) != row.count) {
      throw Error(ErrorKind::BadGoldenData,
                  "count column disagrees with members for d = " + std::to_string(row.d));
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Table2Row> parse_table2(std::string_view tsv) {
  std::vector<Table2Row> out;
  for (const auto& fields : tsv_rows(tsv, "d\ta\tsqfrob_root\tbound_root")) {
    if (fields.size() != 4) throw Error(ErrorKind::BadGoldenData, "table 2 rows have 4 fields");
    out.push_back({parse_integer(fields[0]), parse_integer(fields[1]), parse_integer(fields[2]),
                   parse_integer(fields[3])});
  }
  return out;
}

std::vector<Table1Row> golden_table1() { return parse_table1(golden::kTable1); }
std::vector<Table2Row> golden_table2() { return parse_table2(golden::kTable2); }

SweepReport reproduce_table1(const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.scope = "table1";
  const auto rows = golden_table1();
  report.range_lo = rows.empty() ? 0 : rows.front().d;
  report.range_hi = rows.empty() ? 0 : rows.back().d;
  for (const Table1Row& row : rows) {
    const ExceptionReport e = exception_set(row.d, options);
    std::vector<Integer> found;
    for (const auto& m : e.members) found.push_back(m.a);
    ++report.checked;
    if (found != row.members) {
      std::ostringstream detail;
      detail << "E(" << row.d << ") = {";
      for (std::size_t i = 0; i < found.size(); ++i) detail << (i ? "," : "") << found[i];
      detail << "}";
      report.mismatches.push_back({0, row.d, 1, row.count, static_cast<Integer>(found.size()),
                                   detail.str()});
    }
  }
  report.wall = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

SweepReport reproduce_table2(const SweepOptions& options) {
  const auto rows = golden_table2();
  std::vector<Integer> indices(rows.size());
  std::iota(indices.begin(), indices.end(), Integer{0});
  return sweep("table2", indices, 0, static_cast<Integer>(rows.size()) - 1, options,
               [&rows](Integer index, SweepReport& partial) {
    const Table2Row& row = rows[static_cast<std::size_t>(index)];
    const ApSemigroup s(row.a, row.d, 1);
    const Integer oracle_root = power_frobenius_oracle(s, 2).root;
    const Integer bound_root = bound_b(s).root;
    ++partial.checked;
    if (oracle_root != row.sqfrob_root) {
      partial.mismatches.push_back({row.a, row.d, 1, row.sqfrob_root, oracle_root, "sqfrob_root"});
    }
    if (bound_root != row.bound_root) {
      partial.mismatches.push_back({row.a, row.d, 1, row.bound_root, bound_root, "bound_root"});
    }
  });
}

SweepReport verify_theorem_bound(Integer d, Integer k, const std::vector<Integer>& candidates,
                                 const SweepOptions& options) {
  if (d < 3) throw Error(ErrorKind::DTooSmall, "the progression bound needs d >= 3");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be >= 1");
  const Integer lo = candidates.empty() ? 0 : *std::min_element(candidates.begin(), candidates.end());
  const Integer hi = candidates.empty() ? 0 : *std::max_element(candidates.begin(), candidates.end());
  std::ostringstream scope;
  scope << "theorem-ap d=" << d << " k=" << k;
  return sweep(scope.str(), candidates, lo, hi, options, [d, k](Integer a, SweepReport& partial) {
    if (a < 2 || std::gcd(a, d) != 1) return;
    const ApSemigroup s(a, d, k);
    const LambdaProfile profile = lambda_profile(a, d);
    const bool strong = bound_hypothesis(s);
    const bool weak = weak_bound_hypothesis(s, profile);
    if (!strong && !weak) {
      ++partial.counters["outside_hypotheses"];
      return;
    }
    const PowerResult oracle = power_frobenius_oracle(s, 2);
    const Integer bound = bound_b(s, profile).value;
    const bool violated = k == 1 ? oracle.value != bound : oracle.value > bound;
    if (strong) {
      ++partial.checked;
      if (oracle.value == bound) ++partial.counters["equalities"];
      if (violated) {
        partial.mismatches.push_back(
            {a, d, k, bound, oracle.value, "witness " + witness_text(s, oracle.value)});
      }
    } else {
      ++partial.counters["weak_checked"];
      if (violated) ++partial.counters["weak_violations"];
    }
  });
}

SweepReport verify_theorem_bound(Integer d, Integer k, Integer a_lo, Integer a_hi,
                                 const SweepOptions& options) {
  return verify_theorem_bound(d, k, integer_range(std::max<Integer>(a_lo, 2), a_hi), options);
}

SweepReport verify_conjectures(int which, Integer max_a, const SweepOptions& options) {
  if (which != 1 && which != 2) throw Error(ErrorKind::InvalidArgument, "conjecture is 1 or 2");
  const Integer d = which;
  std::vector<Integer> candidates;
  // a + d = c^2 and a = c^2, for c of the right parity.
  for (Integer c = which == 1 ? 2 : 3;; c += which) {
    const Integer sq = checked_mul(c, c);
    if (sq - d > max_a) break;
    candidates.push_back(sq - d);
    if (sq <= max_a) candidates.push_back(sq);
  }
  std::erase_if(candidates, [d](Integer a) { return a < d + 1; });
  std::ostringstream scope;
  scope << "conj" << which;
  return sweep(scope.str(), candidates, which == 1 ? 2 : 3, max_a, options,
               [d](Integer a, SweepReport& partial) {
    const ClosedFormAnswer formula = closed_square_frobenius(a, d);
    const ApSemigroup s(a, d, 1);
    const PowerResult oracle = power_frobenius_oracle(s, 2);
    ++partial.checked;
    ++partial.counters[std::string("branch:") + std::string(to_string(formula.branch))];
    if (formula.value != oracle.value) {
      partial.mismatches.push_back({a, d, 1, formula.value, oracle.value,
                                    std::string(to_string(formula.branch)) + "; oracle witness " +
                                        witness_text(s, oracle.value)});
    }
  });
}

SweepReport verify_closed_forms(Integer d, Integer max_a, const SweepOptions& options) {
  if (d < 1 || d > 5) throw Error(ErrorKind::InvalidArgument, "closed forms cover d = 1..5");
  std::vector<Integer> candidates;
  for (Integer a = 2; a <= max_a; ++a) {
    if (std::gcd(a, d) != 1) continue;
    if (d == 2 && a < 3) continue;
    if (d <= 2 && (is_square(a) || is_square(a + d))) continue;
    candidates.push_back(a);
  }
  std::ostringstream scope;
  scope << "closed d=" << d;
  return sweep(scope.str(), candidates, 2, max_a, options, [d](Integer a, SweepReport& partial) {
    const ClosedFormAnswer formula = closed_square_frobenius(a, d);
    const Integer oracle = square_frobenius(ApSemigroup(a, d, 1));
    ++partial.checked;
    ++partial.counters[std::string("branch:") + std::string(to_string(formula.branch))];
    if (formula.value != oracle) {
      partial.mismatches.push_back(
          {a, d, 1, formula.value, oracle, std::string(to_string(formula.branch))});
    }
  });
}

SweepReport verify_min_power_theorem(Integer a_lo, Integer a_hi, Integer k_lo, Integer k_hi,
                                     const SweepOptions& options) {
  if (a_lo > a_hi || k_lo > k_hi || k_lo < 1) {
    throw Error(ErrorKind::InvalidArgument, "empty or invalid range");
  }
  return sweep("min-power", integer_range(std::max<Integer>(a_lo, 2), a_hi), a_lo, a_hi, options,
               [k_lo, k_hi](Integer a, SweepReport& partial) {
    for (Integer k = k_lo; k <= k_hi; ++k) {
      for (Integer d = 1; d * (1 + 2 * k) <= a * k; ++d) {
        if (std::gcd(a, d) != 1) continue;
        const ApSemigroup s(a, d, k);
        const Integer smallest = power_min_oracle(s, 2).value;
        const Integer bound = (a - d) * (a - d);
        ++partial.checked;
        if (smallest > bound) partial.mismatches.push_back({a, d, k, bound, smallest, {}});
      }
    }
  });
}

SweepReport verify_min_power_bounds(Integer a_lo, Integer a_hi, Integer d_max, Integer k_lo,
                                    Integer k_hi, int max_exponent, const SweepOptions& options) {
  if (a_lo > a_hi || k_lo > k_hi || k_lo < 1 || d_max < 1 || max_exponent < 2) {
    throw Error(ErrorKind::InvalidArgument, "empty or invalid range");
  }
  return sweep("min-power-bounds", integer_range(std::max<Integer>(a_lo, 2), a_hi), a_lo, a_hi,
               options, [=](Integer a, SweepReport& partial) {
    for (Integer d = 1; d <= d_max; ++d) {
      if (std::gcd(a, d) != 1) continue;
      for (Integer k = k_lo; k <= k_hi; ++k) {
        const ApSemigroup s(a, d, k);
        for (int p = 2; p <= max_exponent; ++p) {
          const Integer smallest = power_min_oracle(s, p).value;
          ++partial.checked;
          if (smallest < a) {
            partial.mismatches.push_back({a, d, k, a, smallest, "below multiplicity"});
          } else if (smallest > ipow(a, p)) {
            partial.mismatches.push_back({a, d, k, ipow(a, p), smallest, "above s^p"});
          }
        }
      }
    }
  });
}

}  // namespace sqfrob
