#include "sqfrob/cli.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "sqfrob/closed_form.hpp"
#include "sqfrob/error.hpp"
#include "sqfrob/power.hpp"
#include "sqfrob/progression.hpp"
#include "sqfrob/semigroup.hpp"
#include "sqfrob/serialize.hpp"
#include "sqfrob/verify.hpp"

namespace sqfrob::cli {

namespace {

enum class Format { Json, Csv, Text };

struct Context {
  Format format = Format::Json;
  std::ostream& out;
  std::ostream& err;
};

// Emits a single-row or multi-row table in the chosen format. JSON output is
// the document itself; `text` is used for the human-readable form.
void emit(const Context& ctx, const Json& json, const std::string& csv, const std::string& text) {
  switch (ctx.format) {
    case Format::Json: ctx.out << json.dump() << '\n'; break;
    case Format::Csv: ctx.out << csv; break;
    case Format::Text: ctx.out << text; break;
  }
}

std::string csv_report(const SweepReport& r) {
  std::string s = "scope,a,d,k,expected,actual,detail\n";
  for (const Mismatch& m : r.mismatches) {
    s += r.scope + ',' + std::to_string(m.a) + ',' + std::to_string(m.d) + ',' +
         std::to_string(m.k) + ',' + std::to_string(m.expected) + ',' +
         std::to_string(m.actual) + ",\"" + m.detail + "\"\n";
  }
  return s;
}

int emit_report(const Context& ctx, const SweepReport& r) {
  emit(ctx, to_json(r), csv_report(r), to_text(r));
  return r.passed() ? kExitOk : kExitMismatch;
}

std::string power_csv(const PowerResult& r) {
  return "k,root,value,method\n" + std::to_string(r.exponent) + ',' + std::to_string(r.root) +
         ',' + std::to_string(r.value) + ',' + std::string(to_string(r.method)) + '\n';
}

std::string power_text(const PowerResult& r) {
  std::string s = std::to_string(r.value) + " = " + std::to_string(r.root) + "^" +
                  std::to_string(r.exponent) + " (" + std::string(to_string(r.method));
  if (!r.branch.empty()) s += ", " + r.branch;
  return s + ")\n";
}

// The listed generators as a progression a, a+d, ..., a+kd, if they form one.
std::optional<ApSemigroup> as_progression(std::vector<Integer> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.size() < 2 || gens.front() < 2) return std::nullopt;
  const Integer d = gens[1] - gens[0];
  for (std::size_t i = 2; i < gens.size(); ++i) {
    if (gens[i] - gens[i - 1] != d) return std::nullopt;
  }
  if (std::gcd(gens.front(), d) != 1) return std::nullopt;
  return ApSemigroup(gens.front(), d, static_cast<Integer>(gens.size() - 1));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Square and k-power Frobenius numbers of numerical semigroups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "json";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  unsigned jobs = 0;
  app.add_option("--jobs", jobs, "Worker threads for sweeps (default: SQFROB_JOBS or all cores)");

  std::vector<Integer> gens;
  Integer value = 0, k = 2, a = 0, d = 0, modulus = 0, max_n = 100000;
  std::string method = "oracle", target;
  int which = 1;
  bool dump_profile = false;
  Integer sweep_d = 0, sweep_k = 0;  // 0: per-target default

  auto* frob = app.add_subcommand("frobenius", "Frobenius number of <gens>");
  frob->add_option("--gens", gens, "Generators")->delimiter(',')->required();

  auto* gaps_cmd = app.add_subcommand("gaps", "Gaps, genus and Frobenius number of <gens>");
  gaps_cmd->add_option("--gens", gens, "Generators")->delimiter(',')->required();

  auto* apery_cmd = app.add_subcommand("apery", "Apery table with respect to a generator");
  apery_cmd->add_option("--gens", gens, "Generators")->delimiter(',')->required();
  apery_cmd->add_option("--modulus", modulus, "Generator to use (default: multiplicity)");

  auto* member = app.add_subcommand("member", "Is --value in <gens>?");
  member->add_option("--gens", gens, "Generators")->delimiter(',')->required();
  auto* value_opt = member->add_option("--value", value, "Candidate element");

  auto* pfrob = app.add_subcommand("power-frob", "Largest k-th power not in <gens>");
  pfrob->add_option("--gens", gens, "Generators")->delimiter(',')->required();
  pfrob->add_option("--k", k, "Power exponent")->required();
  pfrob->add_option("--method", method, "oracle, closed (d = 1..5 two-generator only) or auto")
      ->check(CLI::IsMember({"oracle", "closed", "auto"}));

  auto* pmin = app.add_subcommand("power-min", "Smallest k-th power in <gens>");
  pmin->add_option("--gens", gens, "Generators")->delimiter(',')->required();
  pmin->add_option("--k", k, "Power exponent")->required();

  auto* bound = app.add_subcommand("bound", "Progression bound B(a, d, k)");
  bound->add_option("--a", a, "First term")->required();
  bound->add_option("--d", d, "Common difference (>= 3)")->required();
  bound->add_option("--k", k, "Progression length minus one")->required();
  bound->add_flag("--dump-profile", dump_profile, "Include the residue profile");

  auto* exceptions = app.add_subcommand("exceptions", "E(d): a where the bound is not exact");
  exceptions->add_option("--d", d, "Common difference (>= 3)")->required();

  auto* tables = app.add_subcommand("tables", "Recompute a golden table");
  tables->add_option("--which", which, "1 or 2")->required()->check(CLI::IsMember({1, 2}));

  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->add_option("--target", target, "Sweep to run")
      ->required()
      ->check(CLI::IsMember({"conj1", "conj2", "theorem-ap", "min-power", "closed"}));
  verify->add_option("--max", max_n, "Upper end of the a-range");
  verify->add_option("--d", sweep_d, "Difference for theorem-ap / closed");
  verify->add_option("--k", sweep_k, "Length for theorem-ap, largest length for min-power");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  Context ctx{format_name == "csv" ? Format::Csv
              : format_name == "text" ? Format::Text
                                      : Format::Json,
              out, err};
  const SweepOptions options{jobs, 4096};

  try {
    if (frob->parsed()) {
      const NumericalSemigroup s(gens);
      const Integer f = s.frobenius();
      emit(ctx, Json(f), "frobenius\n" + std::to_string(f) + '\n', std::to_string(f) + '\n');
      return kExitOk;
    }
    if (gaps_cmd->parsed()) {
      const NumericalSemigroup s(gens);
      const auto g = gaps(s);
      Json j;
      j["generators"] = to_json(s);
      j["frobenius"] = s.is_full() ? Json(nullptr) : Json(s.frobenius());
      j["genus"] = genus(s);
      j["gaps"] = g;
      std::string csv = "gap\n", text;
      for (Integer x : g) {
        csv += std::to_string(x) + '\n';
        text += (text.empty() ? "" : " ") + std::to_string(x);
      }
      emit(ctx, j, csv, "genus " + std::to_string(g.size()) + ": " + text + '\n');
      return kExitOk;
    }
    if (apery_cmd->parsed()) {
      const NumericalSemigroup s(gens);
      const AperyTable t = apery_set(s, modulus == 0 ? s.multiplicity() : modulus);
      Json j;
      j["modulus"] = t.modulus;
      j["entries"] = t.entries;
      std::string csv = "residue,entry\n", text;
      for (std::size_t r = 0; r < t.entries.size(); ++r) {
        csv += std::to_string(r) + ',' + std::to_string(t.entries[r]) + '\n';
        text += std::to_string(r) + '\t' + std::to_string(t.entries[r]) + '\n';
      }
      emit(ctx, j, csv, text);
      return kExitOk;
    }
    if (member->parsed()) {
      const NumericalSemigroup s(gens);
      if (value_opt->count() == 0) throw Error(ErrorKind::InvalidArgument, "--value is required");
      const bool in = s.contains(value);
      Json j;
      j["generators"] = to_json(s);
      j["value"] = value;
      j["member"] = in;
      const std::string flag = in ? "true" : "false";
      emit(ctx, j, "value,member\n" + std::to_string(value) + ',' + flag + '\n', flag + '\n');
      return kExitOk;
    }
    if (pfrob->parsed()) {
      const NumericalSemigroup s(gens);
      const int exponent = static_cast<int>(k);
      if (s.is_full()) {
        if (k < 2) throw Error(ErrorKind::InvalidArgument, "power exponent must be >= 2");
        Json j;
        j["k"] = exponent;
        j["root"] = nullptr;
        j["value"] = nullptr;
        j["method"] = method == "closed" ? "closed_form" : "oracle";
        emit(ctx, j, "k,root,value,method\n" + std::to_string(exponent) + ",,,undefined\n",
             "undefined: every power lies in S = N\n");
        return kExitOk;
      }
      const auto& g = s.generators();
      const bool closed_shape =
          exponent == 2 && g.size() == 2 && g[1] - g[0] >= 1 && g[1] - g[0] <= 5;
      if (method == "closed" && !closed_shape) {
        throw Error(ErrorKind::InvalidArgument,
                    "closed forms need k = 2 and two generators <a, a+d> with d in 1..5; "
                    "use --method auto to fall back to the oracle");
      }
      PowerResult r;
      if (method != "oracle" && closed_shape) {
        const ClosedFormAnswer c = closed_square_frobenius(g[0], g[1] - g[0]);
        r = {2, c.root, c.value, Method::ClosedForm, std::nullopt, std::string(to_string(c.branch))};
      } else if (auto ap = as_progression(gens)) {
        r = power_frobenius_oracle(*ap, exponent);
      } else {
        r = power_frobenius_oracle(s, exponent);
      }
      emit(ctx, to_json(r), power_csv(r), power_text(r));
      return kExitOk;
    }
    if (pmin->parsed()) {
      const NumericalSemigroup s(gens);
      const int exponent = static_cast<int>(k);
      const PowerResult r = [&] {
        if (auto ap = as_progression(gens)) return power_min_oracle(*ap, exponent);
        return power_min_oracle(s, exponent);
      }();
      emit(ctx, to_json(r), power_csv(r), power_text(r));
      return kExitOk;
    }
    if (bound->parsed()) {
      const ApSemigroup s(a, d, k);
      const LambdaProfile profile = lambda_profile(a, d);
      const SquareBound b = bound_b(s, profile);
      Json j = to_json(s);
      j["mu"] = b.bracket.mu;
      j["j"] = b.bracket.j;
      j["target"] = b.bracket.target;
      j["offset"] = b.offset;
      j["root"] = b.root;
      j["value"] = b.value;
      j["hypothesis"] = bound_hypothesis(s);
      j["weak_hypothesis"] = weak_bound_hypothesis(s, profile);
      if (dump_profile) j["profile"] = to_json(profile);
      const std::string csv = "a,d,k,mu,j,target,offset,root,value\n" + std::to_string(a) + ',' +
                              std::to_string(d) + ',' + std::to_string(k) + ',' +
                              std::to_string(b.bracket.mu) + ',' + std::to_string(b.bracket.j) +
                              ',' + std::to_string(b.bracket.target) + ',' +
                              std::to_string(b.offset) + ',' + std::to_string(b.root) + ',' +
                              std::to_string(b.value) + '\n';
      emit(ctx, j, csv,
           "B(" + std::to_string(a) + ", " + std::to_string(d) + ", " + std::to_string(k) +
               ") = " + std::to_string(b.root) + "^2 = " + std::to_string(b.value) + '\n');
      return kExitOk;
    }
    if (exceptions->parsed()) {
      const ExceptionReport e = exception_set(d, options);
      Json j = to_json(e);
      int code = kExitOk;
      for (const Table1Row& row : golden_table1()) {
        if (row.d != d) continue;
        std::vector<Integer> found;
        for (const auto& m : e.members) found.push_back(m.a);
        j["matches_golden"] = found == row.members;
        if (found != row.members) code = kExitMismatch;
      }
      std::string csv = "d,a,oracle_value,bound_B_value\n";
      for (const auto& m : e.members) {
        csv += std::to_string(d) + ',' + std::to_string(m.a) + ',' +
               std::to_string(m.oracle_value) + ',' + std::to_string(m.bound_value) + '\n';
      }
      emit(ctx, j, csv, to_text(e));
      return code;
    }
    if (tables->parsed()) {
      return emit_report(ctx, which == 1 ? reproduce_table1(options) : reproduce_table2(options));
    }
    if (verify->parsed()) {
      if (target == "conj1" || target == "conj2") {
        return emit_report(ctx, verify_conjectures(target == "conj1" ? 1 : 2, max_n, options));
      }
      if (target == "theorem-ap") {
        return emit_report(
            ctx, verify_theorem_bound((sweep_d ? sweep_d : 3), (sweep_k ? sweep_k : 1), 2, max_n, options));
      }
      if (target == "min-power") {
        return emit_report(ctx, verify_min_power_theorem(2, max_n, 1, (sweep_k ? sweep_k : 4), options));
      }
      return emit_report(ctx, verify_closed_forms((sweep_d ? sweep_d : 3), max_n, options));
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"sqfrob"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sqfrob::cli
