#include "sqfrob/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <vector>

#include "sqfrob/error.hpp"

namespace sqfrob {

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::Oracle: return "oracle";
    case Method::ClosedForm: return "closed_form";
    case Method::Bound: return "bound";
  }
  return "unknown";
}

Json to_json(const NumericalSemigroup& s) { return Json(s.generators()); }

Json to_json(const ApSemigroup& s) {
  Json j;
  j["a"] = s.a();
  j["d"] = s.d();
  j["k"] = s.k();
  return j;
}

Json to_json(const LambdaProfile& p) {
  Json j;
  j["d"] = p.d;
  j["lambdas"] = p.lambdas;
  j["lambda_star"] = p.lambda_star;
  j["alphas"] = p.alphas;
  j["alpha_next"] = p.alpha_next;
  return j;
}

Json to_json(const MuJ& m) {
  Json j;
  j["mu"] = m.mu;
  j["j"] = m.j;
  j["target"] = m.target;
  return j;
}

Json to_json(const PowerResult& r) {
  Json j;
  j["k"] = r.exponent;
  j["root"] = r.root;
  j["value"] = r.value;
  j["method"] = std::string(to_string(r.method));
  if (!r.branch.empty()) j["branch"] = r.branch;
  return j;
}

Json to_json(const ClosedFormAnswer& c) {
  Json j;
  j["a"] = c.a;
  j["d"] = c.d;
  j["value"] = c.value;
  j["root"] = c.root;
  j["branch"] = std::string(to_string(c.branch));
  return j;
}

Json to_json(const ExceptionReport& e) {
  Json j;
  j["d"] = e.d;
  j["scan_range"] = Json::array({e.scan_lo, e.scan_hi});
  j["checked"] = e.checked;
  j["count"] = e.members.size();
  Json members = Json::array();
  for (const auto& m : e.members) {
    Json row;
    row["a"] = m.a;
    row["oracle_value"] = m.oracle_value;
    row["bound_B_value"] = m.bound_value;
    members.push_back(std::move(row));
  }
  j["members"] = std::move(members);
  return j;
}

Json to_json(const SweepReport& r) {
  Json j;
  j["scope"] = r.scope;
  j["range"] = Json::array({r.range_lo, r.range_hi});
  j["checked"] = r.checked;
  j["passed"] = r.passed();
  Json mismatches = Json::array();
  for (const Mismatch& m : r.mismatches) {
    Json row;
    row["a"] = m.a;
    row["d"] = m.d;
    row["k"] = m.k;
    row["expected"] = m.expected;
    row["actual"] = m.actual;
    if (!m.detail.empty()) row["detail"] = m.detail;
    mismatches.push_back(std::move(row));
  }
  j["mismatches"] = std::move(mismatches);
  Json counters = Json::object();
  for (const auto& [name, value] : r.counters) counters[name] = value;
  j["counters"] = std::move(counters);
  return j;
}

NumericalSemigroup semigroup_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidArgument, "semigroup JSON must be an array");
  std::vector<Integer> gens;
  for (const auto& g : j) {
    if (!g.is_number_integer()) throw Error(ErrorKind::InvalidArgument, "generators are integers");
    gens.push_back(g.get<Integer>());
  }
  return NumericalSemigroup(gens);
}

ApSemigroup ap_semigroup_from_json(const Json& j) {
  for (const char* key : {"a", "d", "k"}) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
      throw Error(ErrorKind::InvalidArgument, std::string("missing integer field ") + key);
    }
  }
  return ApSemigroup(j["a"].get<Integer>(), j["d"].get<Integer>(), j["k"].get<Integer>());
}

std::string to_text(const SweepReport& r) {
  std::ostringstream out;
  out << std::left << std::setw(10) << "scope" << r.scope << '\n'
      << std::setw(10) << "range" << '[' << r.range_lo << ", " << r.range_hi << "]\n"
      << std::setw(10) << "checked" << r.checked << '\n'
      << std::setw(10) << "result" << (r.passed() ? "PASS" : "FAIL") << '\n'
      << std::setw(10) << "wall" << r.wall.count() << " ms\n";
  std::size_t width = 0;
  for (const auto& entry : r.counters) width = std::max(width, entry.first.size());
  for (const auto& [name, value] : r.counters) {
    out << "  " << std::left << std::setw(static_cast<int>(width + 2)) << name << std::right
        << value << '\n';
  }
  if (!r.mismatches.empty()) {
    out << std::right << std::setw(10) << "a" << std::setw(6) << "d" << std::setw(4) << "k"
        << std::setw(16) << "expected" << std::setw(16) << "actual" << "  detail\n";
    for (const Mismatch& m : r.mismatches) {
      out << std::setw(10) << m.a << std::setw(6) << m.d << std::setw(4) << m.k << std::setw(16)
          << m.expected << std::setw(16) << m.actual << "  " << m.detail << '\n';
    }
  }
  return out.str();
}

std::string to_text(const ExceptionReport& e) {
  std::ostringstream out;
  out << "E(" << e.d << ") over [" << e.scan_lo << ", " << e.scan_hi << "]: " << e.members.size()
      << " member(s)\n";
  if (!e.members.empty()) {
    out << std::setw(8) << "a" << std::setw(14) << "sqfrob" << std::setw(14) << "bound" << '\n';
    for (const auto& m : e.members) {
      out << std::setw(8) << m.a << std::setw(14) << m.oracle_value << std::setw(14)
          << m.bound_value << '\n';
    }
  }
  return out.str();
}

}  // namespace sqfrob
