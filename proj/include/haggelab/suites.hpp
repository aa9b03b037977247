#pragma once

// Randomised verification suites. Each instance is generated from
// mix_seed(seed, index), verified independently (optionally on several
// threads) and reported in index order, so output depends only on
// (suite, seed, count, backend).

#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "haggelab/random.hpp"

namespace haggelab {

enum class suite_kind { hagge, speckman, section8 };

inline std::optional<suite_kind> parse_suite(std::string_view s) {
  if (s == "hagge") return suite_kind::hagge;
  if (s == "speckman") return suite_kind::speckman;
  if (s == "section8") return suite_kind::section8;
  return std::nullopt;
}

inline std::string_view suite_name(suite_kind s) {
  switch (s) {
    case suite_kind::hagge: return "hagge";
    case suite_kind::speckman: return "speckman";
    case suite_kind::section8: return "section8";
  }
  return "?";
}

/// Copies checks (and audit entries) of `from` into `into`, prefixing names.
inline void merge_checks(CheckReport& into, const CheckReport& from, const std::string& prefix) {
  for (auto c : from.checks) {
    c.name = prefix + c.name;
    into.checks.push_back(std::move(c));
  }
  for (const auto& a : from.audit) into.audit.push_back(a);
  if (from.error) into.add(prefix + "construction", "", false, *from.error);
  if (!from.note.empty()) into.note += prefix + from.note;
}

/// Runs `body`; a library error escaping it becomes a failed check rather
/// than aborting the instance.
template <class F>
void guarded(CheckReport& r, const std::string& name, F&& body) {
  try {
    body();
  } catch (const error& e) {
    r.add(name, "", false, e.what());
  }
}

namespace detail {

template <Field T>
T lift(const Rational& r) {
  return from_rational<T>(r);
}

template <Field T>
void midpoint_conic_checks(CheckReport& r, const HaggeConfig<T>& cfg) {
  for (const auto& [num, den] : {std::pair{1, 3}, std::pair{1, 2}, std::pair{2, 5}}) {
    const std::string t = std::to_string(num) + "/" + std::to_string(den);
    r.run("midpoint_conic_t=" + t + "_contains_sixth", "conic passes through the sixth point",
          [&] { return midpoint_conic(cfg, lift<T>(Rational(num, den))).sixth_on_conic; });
  }
  r.run("midpoint_conic_t=0_is_circumcircle", "ratio 0", [&] {
    return midpoint_conic(cfg, T(0)).conic == Conic<T>::from_circle(circumcircle(cfg.tri));
  });
  r.run("midpoint_conic_t=1_is_hagge_circle", "ratio 1",
        [&] { return midpoint_conic(cfg, T(1)).conic == Conic<T>::from_circle(cfg.sigma); });
}

/// Applies `f` to the instance data in the requested field: exact data for
/// Rational, prescaled to unit circumradius for double.
template <Field T>
Triangle<T> field_triangle(const Triangle<Rational>& t, const Prescale& ps) {
  if constexpr (std::is_same_v<T, Rational>) return t;
  else return ps(t);
}
template <Field T>
Point<T> field_point(const Point<Rational>& p, const Prescale& ps) {
  if constexpr (std::is_same_v<T, Rational>) return p;
  else return ps(p);
}
template <Field T>
Circle<T> field_circle(const Circle<Rational>& c, const Prescale& ps) {
  if constexpr (std::is_same_v<T, Rational>) return c;
  else return ps(c);
}

template <Field T>
CheckReport hagge_instance(std::uint64_t seed) {
  CheckReport r;
  r.suite = "hagge";
  r.backend = std::string(field_traits<T>::name);
  const auto inst = random_hagge(seed);
  const auto circ = random_circumcircle_point(mix_seed(seed, 1));
  r.instance = {{"hagge", to_json(Instance{inst})}, {"circumcircle_point", to_json(Instance{circ})}};

  const Prescale ps(inst.tri);
  guarded(r, "build", [&] {
    const auto cfg = build_hagge(field_triangle<T>(inst.tri, ps), field_point<T>(inst.P, ps));
    merge_checks(r, verify_hagge_suite(cfg), "");
    midpoint_conic_checks(r, cfg);
  });
  const Prescale ps2(circ.tri);
  guarded(r, "double_simson/build", [&] {
    merge_checks(r, verify_double_simson(field_triangle<T>(circ.tri, ps2), field_point<T>(circ.P, ps2)),
                 "double_simson/");
  });
  guarded(r, "special/build", [&] { merge_checks(r, special_cases(field_triangle<T>(inst.tri, ps)), "special/"); });
  return r;
}

template <Field T>
CheckReport speckman_instance(std::uint64_t seed) {
  CheckReport r;
  r.suite = "speckman";
  r.backend = std::string(field_traits<T>::name);
  const auto sh = random_speckman_h(mix_seed(seed, 0));
  const auto gp = random_general_pair(mix_seed(seed, 1));
  const auto hg = random_hagge(mix_seed(seed, 2));
  const auto ol = random_orthologic(mix_seed(seed, 3));
  r.instance = {{"speckman_h", to_json(Instance{sh})},
                {"general_pair", to_json(Instance{gp})},
                {"hagge_pair", to_json(Instance{hg})},
                {"orthologic", to_json(Instance{ol})}};

  const Prescale p1(sh.tri), p2(gp.tri), p3(hg.tri), p4(ol.tri);
  guarded(r, "speckman_h/build", [&] {
    const auto cfg = build_speckman_through_H(field_triangle<T>(sh.tri, p1), lift<T>(sh.m_slope), lift<T>(sh.k));
    merge_checks(r, verify_speckman_suite(cfg), "speckman_h/");
  });
  guarded(r, "general_pair/build", [&] {
    const auto t = field_triangle<T>(gp.tri, p2);
    const auto img = perspective_indirect_copy(t, field_point<T>(gp.Q, p2), lift<T>(gp.scale));
    merge_checks(r, verify_speckman_suite(make_speckman_config(t, img, "general_pair")), "general_pair/");
  });
  guarded(r, "hagge_pair/build", [&] {
    const auto cfg = build_hagge(field_triangle<T>(hg.tri, p3), field_point<T>(hg.P, p3));
    merge_checks(r, verify_speckman_suite(speckman_from_hagge(cfg)), "hagge_pair/");
  });
  guarded(r, "orthologic/build", [&] {
    merge_checks(r,
                 verify_theorem_7_1(field_triangle<T>(ol.tri, p4), field_circle<T>(ol.circle, p4),
                                    field_point<T>(ol.T, p4)),
                 "orthologic/");
  });
  return r;
}

template <Field T>
CheckReport section8_instance(std::uint64_t seed) {
  const auto s = random_section8(seed);
  try {
    return section8_oracle(lift<T>(s.v), lift<T>(s.w), lift<T>(s.m), lift<T>(s.k));
  } catch (const error& e) {
    CheckReport r;
    r.suite = "section8";
    r.backend = std::string(field_traits<T>::name);
    r.instance = to_json(Instance{s});
    r.error = e.what();
    return r;
  }
}

template <Field T>
CheckReport run_instance(suite_kind s, std::uint64_t seed) {
  switch (s) {
    case suite_kind::hagge: return hagge_instance<T>(seed);
    case suite_kind::speckman: return speckman_instance<T>(seed);
    case suite_kind::section8: return section8_instance<T>(seed);
  }
  return {};
}
}  // namespace detail

struct SuiteRun {
  suite_kind suite;
  std::uint64_t seed = 0;
  backend field = backend::rational;
  std::vector<CheckReport> reports;

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : reports) n += r.failures();
    return n;
  }
  bool passed() const { return failures() == 0; }
};

/// Verifies `count` instances; `threads` = 0 picks the hardware concurrency.
inline SuiteRun run_suite(suite_kind s, std::size_t count, std::uint64_t seed, backend field, unsigned threads = 0) {
  SuiteRun run{s, seed, field, std::vector<CheckReport>(count)};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const auto inst_seed = mix_seed(seed, i);
      run.reports[i] = field == backend::rational ? detail::run_instance<Rational>(s, inst_seed)
                                                  : detail::run_instance<double>(s, inst_seed);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return run;
}

inline json to_json(const SuiteRun& run) {
  std::size_t checks = 0, skipped = 0, info = 0, mismatches = 0;
  json results = json::array();
  for (std::size_t i = 0; i < run.reports.size(); ++i) {
    const auto& r = run.reports[i];
    for (const auto& c : r.checks) {
      ++checks;
      skipped += c.status == check_status::skipped;
      info += c.status == check_status::info;
    }
    for (const auto& a : r.audit) mismatches += !a.match;
    json j = to_json(r);
    j["index"] = i;
    results.push_back(std::move(j));
  }
  return {{"suite", suite_name(run.suite)},
          {"seed", run.seed},
          {"backend", backend_name(run.field)},
          {"instances", run.reports.size()},
          {"results", std::move(results)},
          {"summary",
           {{"checks", checks},
            {"failures", run.failures()},
            {"skipped", skipped},
            {"recorded", info},
            {"audit_mismatches", mismatches}}},
          {"pass", run.passed()}};
}

}  // namespace haggelab
