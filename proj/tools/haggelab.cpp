// Command-line front end: randomised verification, scripts, figures and the
// closed-form oracle for the (v, w, m, k) family.
//
// Exit status: 0 when every check passes, 1 when a check fails (reports are
// still written), 2 on usage or parse errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "haggelab/haggelab.hpp"

namespace {

using namespace haggelab;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw usage_error("cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

backend parse_backend(const std::string& s) { return s == "float" ? backend::floating : backend::rational; }

int verify(const std::string& suite, std::size_t instances, std::uint64_t seed, const std::string& field,
           const std::string& report, unsigned threads) {
  std::vector<suite_kind> kinds;
  if (suite == "all") kinds = {suite_kind::hagge, suite_kind::speckman, suite_kind::section8};
  else if (const auto k = parse_suite(suite)) kinds = {*k};
  else throw usage_error("unknown suite '" + suite + "'");

  json runs = json::array();
  bool pass = true;
  for (const auto k : kinds) {
    const auto run = run_suite(k, instances, seed, parse_backend(field), threads);
    auto j = to_json(run);
    const auto& sum = j["summary"];
    std::printf("%-9s %zu instances, %zu checks, %zu failures, %zu skipped, %zu audit mismatches\n",
                std::string(suite_name(k)).c_str(), instances, sum["checks"].get<std::size_t>(),
                sum["failures"].get<std::size_t>(), sum["skipped"].get<std::size_t>(),
                sum["audit_mismatches"].get<std::size_t>());
    pass = pass && run.passed();
    runs.push_back(std::move(j));
  }
  if (!report.empty()) write_file(report, dump(kinds.size() == 1 ? runs[0] : json{{"suites", runs}, {"pass", pass}}));
  return pass ? exit_ok : exit_check_failed;
}

Program load_program(const std::string& path) {
  try {
    return parse_script(read_file(path));
  } catch (const script_error& e) {
    throw usage_error(path + ": " + e.what());
  }
}

template <Field T>
int construct_with(const Program& prog, const std::string& out) {
  const auto run = run_program<T>(prog);
  json program = json::array();
  for (const auto& st : prog.statements) program.push_back(serialize(st));
  write_file(out, dump({{"program", program},
                        {"report", to_json(run.report)},
                        {"environment", run.environment_json()},
                        {"pass", run.report.passed()}}));
  for (const auto& c : run.report.checks)
    if (!c.ok()) std::fprintf(stderr, "%s: %s %s\n", c.anchor.c_str(), c.detail.c_str(), c.data.dump().c_str());
  return run.report.passed() ? exit_ok : exit_check_failed;
}

template <Field T>
int figure_with(const Program& prog, const std::string& out, double width) {
  const auto run = run_program<T>(prog);
  write_file(out, emit_svg(run.env, run.draws, SvgOptions{width}));
  for (const auto& c : run.report.checks)
    if (!c.ok()) std::fprintf(stderr, "%s: %s\n", c.anchor.c_str(), c.detail.c_str());
  return run.report.passed() ? exit_ok : exit_check_failed;
}

int oracle8(const std::string& v, const std::string& w, const std::string& m, const std::string& k,
            const std::string& field, const std::string& report) {
  const auto b = parse_backend(field);
  CheckReport r;
  try {
    r = section8_oracle(Scalar::parse(v, b), Scalar::parse(w, b), Scalar::parse(m, b), Scalar::parse(k, b));
  } catch (const error& e) {
    throw usage_error(e.what());
  }
  std::size_t mismatches = 0;
  for (const auto& a : r.audit) {
    mismatches += !a.match;
    if (!a.match) std::printf("audit mismatch: %s\n", a.eq.c_str());
  }
  std::printf("%zu checks, %zu failures, %zu audit mismatches\n", r.checks.size(), r.failures(), mismatches);
  const auto text = dump(to_json(r));
  if (!report.empty()) write_file(report, text);
  return r.passed() ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic checks of Hagge circles and indirectly similar triangles in perspective"};
  app.require_subcommand(1);

  std::string suite, field = "rational", report;
  std::size_t instances = 100;
  std::uint64_t seed = 7;
  unsigned threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run a randomised verification suite");
  verify_cmd->add_option("--suite", suite, "hagge, speckman, section8 or all")
      ->required()
      ->check(CLI::IsMember({"hagge", "speckman", "section8", "all"}));
  verify_cmd->add_option("--instances", instances, "number of random instances")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "run seed")->capture_default_str();
  verify_cmd->add_option("--backend", field, "rational or float")
      ->check(CLI::IsMember({"rational", "float"}))
      ->capture_default_str();
  verify_cmd->add_option("--report", report, "JSON report path ('-' for stdout)");
  verify_cmd->add_option("--threads", threads, "worker threads (0 = all cores)")->capture_default_str();

  std::string script, json_out, svg_out;
  double width = 640;
  auto* construct_cmd = app.add_subcommand("construct", "run a .geo script and dump its values");
  construct_cmd->add_option("script", script, ".geo file")->required();
  construct_cmd->add_option("--json", json_out, "output path ('-' for stdout)")->required();
  construct_cmd->add_option("--backend", field, "rational or float")->check(CLI::IsMember({"rational", "float"}));

  auto* figure_cmd = app.add_subcommand("figure", "render the draw statements of a .geo script");
  figure_cmd->add_option("script", script, ".geo file")->required();
  figure_cmd->add_option("--svg", svg_out, "output path ('-' for stdout)")->required();
  figure_cmd->add_option("--width", width, "viewport width")->check(CLI::PositiveNumber)->capture_default_str();
  figure_cmd->add_option("--backend", field, "rational or float")->check(CLI::IsMember({"rational", "float"}));

  std::string v, w, m, k;
  auto* oracle_cmd = app.add_subcommand("oracle8", "closed forms of the (v, w, m, k) family against construction");
  oracle_cmd->add_option("--v", v, "scalar, e.g. 1 or 3/2")->required();
  oracle_cmd->add_option("--w", w)->required();
  oracle_cmd->add_option("--m", m)->required();
  oracle_cmd->add_option("--k", k)->required();
  oracle_cmd->add_option("--backend", field, "rational or float")->check(CLI::IsMember({"rational", "float"}));
  oracle_cmd->add_option("--report", report, "JSON report path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*verify_cmd) return verify(suite, instances, seed, field, report, threads);
    if (*construct_cmd) {
      const auto prog = load_program(script);
      return field == "float" ? construct_with<double>(prog, json_out) : construct_with<Rational>(prog, json_out);
    }
    if (*figure_cmd) {
      const auto prog = load_program(script);
      return field == "float" ? figure_with<double>(prog, svg_out, width) : figure_with<Rational>(prog, svg_out, width);
    }
    if (*oracle_cmd) return oracle8(v, w, m, k, field, report);
  } catch (const usage_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_usage;
  } catch (const error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.code() == errc::empty_draw_list ? exit_usage : exit_check_failed;
  }
  return exit_usage;
}
