#pragma once

// Machine-readable verification results and the JSON encoding of geometric
// values. nlohmann::json keeps object keys sorted, which gives the canonical
// byte-stable output the CLI relies on.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "haggelab/geom.hpp"

namespace haggelab {

using json = nlohmann::json;

template <Field T>
std::string scalar_text(const T& v) {
  if constexpr (std::is_same_v<T, Rational>) return v.str();
  else return format_double(v);
}

template <Field T> json to_json(const Point<T>& p) { return {{"x", scalar_text(p.x)}, {"y", scalar_text(p.y)}}; }
template <Field T> json to_json(const Line<T>& l) {
  json j = json::array();
  for (const auto& c : l.coefficients()) j.push_back(scalar_text(c));
  return j;
}
template <Field T> json to_json(const Circle<T>& c) {
  return {{"g", scalar_text(c.g)}, {"f", scalar_text(c.f)}, {"h", scalar_text(c.h)}};
}
template <Field T> json to_json(const Conic<T>& k) {
  json j = json::array();
  for (const auto& c : k.coefficients()) j.push_back(scalar_text(c));
  return j;
}
template <Field T> json to_json(const Triangle<T>& t) { return json::array({to_json(t.A), to_json(t.B), to_json(t.C)}); }

enum class check_status { pass, fail, skipped, info };

inline std::string_view status_name(check_status s) {
  switch (s) {
    case check_status::pass: return "pass";
    case check_status::fail: return "fail";
    case check_status::skipped: return "skipped";
    case check_status::info: return "info";
  }
  return "fail";
}

struct CheckResult {
  std::string name;
  std::string anchor;
  check_status status = check_status::pass;
  std::string detail;
  json data;  // optional payload (counterexample values, recorded memberships)

  bool ok() const { return status != check_status::fail; }
};

/// One printed closed form compared against the constructive pipeline.
struct AuditEntry {
  std::string eq;
  bool match = true;
  json printed;
  json constructed;
  std::string note;
};

struct CheckReport {
  std::string suite;
  std::string backend = "rational";
  json instance = json::object();
  std::vector<CheckResult> checks;
  std::vector<AuditEntry> audit;
  std::optional<std::string> error;  // construction failure for the whole instance
  std::string note;

  void add(std::string name, std::string anchor, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), std::move(anchor), pass ? check_status::pass : check_status::fail,
                      std::move(detail), nullptr});
  }
  void skip(std::string name, std::string anchor, std::string why) {
    checks.push_back({std::move(name), std::move(anchor), check_status::skipped, std::move(why), nullptr});
  }
  void record(std::string name, std::string anchor, json data) {
    checks.push_back({std::move(name), std::move(anchor), check_status::info, {}, std::move(data)});
  }

  /// Runs `body` as one named check; a library error inside it fails the
  /// check with the error text instead of aborting the whole report.
  void run(const std::string& name, const std::string& anchor, const std::function<bool()>& body) {
    try {
      add(name, anchor, body());
    } catch (const haggelab::error& e) {
      add(name, anchor, false, e.what());
    }
  }

  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  bool passed() const {
    if (error) return false;
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = error ? 1 : 0;
    for (const auto& c : checks) n += c.ok() ? 0 : 1;
    return n;
  }
};

inline json to_json(const CheckResult& c) {
  json j{{"name", c.name}, {"anchor", c.anchor}, {"pass", c.ok()}, {"status", status_name(c.status)}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (!c.data.is_null()) j["data"] = c.data;
  return j;
}

inline json to_json(const AuditEntry& a) {
  json j{{"eq", a.eq}, {"status", a.match ? "match" : "mismatch"}};
  if (!a.match) {
    j["printed"] = a.printed;
    j["constructed"] = a.constructed;
  }
  if (!a.note.empty()) j["note"] = a.note;
  return j;
}

inline json to_json(const CheckReport& r) {
  json j{{"backend", r.backend}, {"instance", r.instance}, {"pass", r.passed()}};
  if (!r.suite.empty()) j["suite"] = r.suite;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  if (!r.audit.empty()) {
    json audit = json::array();
    for (const auto& a : r.audit) audit.push_back(to_json(a));
    j["audit"] = std::move(audit);
  }
  if (r.error) j["error"] = *r.error;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace haggelab
