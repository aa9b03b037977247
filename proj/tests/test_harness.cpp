#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "support.hpp"

using namespace haggelab;
using namespace testing_support;

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const fs::path source_dir{HAGGELAB_SOURCE_DIR};
const fs::path demo = source_dir / "examples" / "geo" / "t1_hagge.geo";
const fs::path golden = source_dir / "tests" / "golden" / "t1_hagge.svg";

fs::path scratch(const std::string& name) {
  const auto dir = fs::path(HAGGELAB_BINARY_DIR) / "test_scratch";
  fs::create_directories(dir);
  return dir / name;
}

int cli(const std::string& args) {
  const std::string cmd = std::string("\"") + HAGGELAB_CLI + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

script_error parse_error_of(std::string_view text) {
  try {
    (void)parse_script(text);
  } catch (const script_error& e) {
    return e;
  }
  ADD_FAILURE() << "parsed: " << text;
  return script_error(errc::syntax_error, {}, "");
}

constexpr std::string_view t1_header = "point A = (0,0)\npoint B = (4,0)\npoint C = (0,3)\ntriangle T = A B C\n";

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

// --- parsing ----------------------------------------------------------------

TEST(Script, ParsesSevenStatementExample) {
  const auto prog = parse_script(std::string(t1_header) +
                                 "point P = centroid(T)\nlet Hc = hagge_circle(T, P)\nassert on_circle(Hc, orthocenter(T))");
  ASSERT_EQ(prog.statements.size(), 7u);
  EXPECT_EQ(prog.statements[3].k, Statement::kind::triangle);
  EXPECT_EQ(prog.statements[6].k, Statement::kind::assertion);
  const auto run = run_program<Rational>(prog);
  ASSERT_EQ(run.report.checks.size(), 1u);
  EXPECT_EQ(run.report.checks[0].status, check_status::pass);
  EXPECT_EQ(std::get<Circle<Rational>>(run.env.at("Hc")), Circle<Rational>(q(-32, 25), q(-27, 50), q(0)));
}

TEST(Script, SyntaxErrorAtMissingComma) {
  const auto e = parse_error_of("point A = (0 0)");
  EXPECT_EQ(e.code(), errc::syntax_error);
  EXPECT_EQ(e.pos().line, 1);
  EXPECT_EQ(e.pos().column, 14);
}

TEST(Script, DiagnosticsCarryPositions) {
  auto e = parse_error_of(std::string(t1_header) + "assert collinear(A, B)");
  EXPECT_EQ(e.code(), errc::arity_error);
  EXPECT_EQ(e.pos().line, 5);

  e = parse_error_of(std::string(t1_header) + "let X = frobnicate(T)");
  EXPECT_EQ(e.code(), errc::unknown_name);
  EXPECT_EQ(e.pos().line, 5);
  EXPECT_EQ(e.pos().column, 9);

  e = parse_error_of("point A = (0,0)\npoint G = centroid(T)");
  EXPECT_EQ(e.code(), errc::use_before_def);
  EXPECT_EQ(e.pos().line, 2);
  EXPECT_EQ(e.pos().column, 20);

  e = parse_error_of("point A = (0,0)\npoint A = (1,1)");
  EXPECT_EQ(e.code(), errc::redefinition);

  e = parse_error_of("point A = (1/0, 2)");
  EXPECT_EQ(e.code(), errc::syntax_error);

  e = parse_error_of("draw");
  EXPECT_EQ(e.code(), errc::syntax_error);
  EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
}

TEST(Script, CommentsAndNumberForms) {
  const auto prog = parse_script("# header\npoint A = (-3/6, 0.25)  # trailing\npoint B = (2, -1.5)\n");
  ASSERT_EQ(prog.statements.size(), 2u);
  EXPECT_EQ(prog.statements[0].parts[0].number, q(-1, 2));
  EXPECT_EQ(prog.statements[0].parts[1].number, q(1, 4));
  EXPECT_EQ(serialize(prog), "point A = (-1/2, 1/4)\npoint B = (2, -3/2)\n");
}

TEST(Script, DemoRoundTrips) {
  const auto prog = parse_script(slurp(demo));
  EXPECT_EQ(parse_script(serialize(prog)), prog);
  EXPECT_EQ(serialize(parse_script(serialize(prog))), serialize(prog));
}

TEST(ScriptProperty, RandomProgramsRoundTrip) {
  Gen g(50);
  const std::vector<std::string> colours{"red", "blue", "black"};
  for (int n = 0; n < 100; ++n) {
    std::string text;
    std::vector<std::string> points, tris;
    const int len = static_cast<int>(g.range(4, 14));
    for (int i = 0; i < len; ++i) {
      const auto choice = points.size() < 3 ? 0 : g.range(0, 4);
      const std::string id = "N" + std::to_string(i);
      auto any_point = [&] { return points[static_cast<std::size_t>(g.range(0, static_cast<long>(points.size()) - 1))]; };
      switch (choice) {
        case 0:
          text += "point " + id + " = (" + g.rational().str() + ", " + g.rational().str() + ")\n";
          points.push_back(id);
          break;
        case 1:
          text += "triangle " + id + " = " + any_point() + " " + any_point() + " " + any_point() + "\n";
          tris.push_back(id);
          break;
        case 2:
          text += "point " + id + " = divide(" + any_point() + ", midpoint(" + any_point() + ", " + any_point() +
                  "), " + g.rational().str() + ")\n";
          points.push_back(id);
          break;
        case 3:
          text += "assert collinear(" + any_point() + ", " + any_point() + ", " + any_point() + ")\n";
          break;
        default:
          text += "draw " + any_point() + (g.range(0, 1) ? " " + colours[static_cast<std::size_t>(g.range(0, 2))] : "") +
                  "\n";
      }
    }
    const auto prog = parse_script(text);
    ASSERT_EQ(parse_script(serialize(prog)), prog) << text;
  }
}

// --- running ----------------------------------------------------------------

TEST(Script, DemoAssertionsPass) {
  const auto run = run_program<Rational>(parse_script(slurp(demo)));
  EXPECT_TRUE(run.report.passed());
  EXPECT_EQ(run.report.checks.size(), 3u);
  EXPECT_EQ(run.draws.size(), 3u);
  EXPECT_TRUE(std::holds_alternative<HaggeConfig<Rational>>(run.env.at("S")));
  EXPECT_EQ(std::get<Point<Rational>>(run.env.at("Pg")), pt("18/25", "24/25"));
}

TEST(Script, FailedAssertionReportsBothSides) {
  const auto run = run_program<Rational>(
      parse_script(std::string(t1_header) + "point Q = (1,1)\nassert on_circle(circumcircle(T), Q)\n"));
  ASSERT_EQ(run.report.checks.size(), 1u);
  const auto& c = run.report.checks[0];
  EXPECT_EQ(c.status, check_status::fail);
  EXPECT_EQ(c.anchor, "line 6");
  EXPECT_TRUE(c.data.contains("lhs"));
  EXPECT_TRUE(c.data.contains("rhs"));
  EXPECT_NE(c.data["lhs"], c.data["rhs"]);
}

TEST(Script, ConstructionErrorIsPerStatement) {
  const auto run = run_program<Rational>(parse_script(
      std::string(t1_header) + "point D = (4,3)\nlet S = hagge(T, D)\nassert collinear(A, B, midpoint(A, B))\n"));
  ASSERT_EQ(run.report.checks.size(), 2u);
  const auto* bad = run.report.find("statement_6");
  ASSERT_NE(bad, nullptr);
  EXPECT_EQ(bad->status, check_status::fail);
  EXPECT_NE(bad->detail.find("POnCircumcircle"), std::string::npos);
  EXPECT_EQ(run.env.count("S"), 0u);
  EXPECT_EQ(run.report.find("assert_1")->status, check_status::pass);  // later statements still run
}

TEST(Script, TypeErrorsSurfaceAtRunTime) {
  const auto run = run_program<Rational>(
      parse_script(std::string(t1_header) + "let c = circumcircle(T)\nassert collinear(c, A, B)\n"));
  const auto& c = run.report.checks.at(0);
  EXPECT_EQ(c.status, check_status::fail);
  EXPECT_NE(c.data.value("error", "").find("TypeError"), std::string::npos);
}

TEST(Script, FloatBackendAgrees) {
  const auto prog = parse_script(slurp(demo));
  const auto run = run_program<double>(prog);
  EXPECT_TRUE(run.report.passed());
  const auto pg = std::get<Point<double>>(run.env.at("Pg"));
  EXPECT_NEAR(pg.x, 0.72, 1e-12);
  EXPECT_NEAR(pg.y, 0.96, 1e-12);
}

// --- random instances -------------------------------------------------------

TEST(RandomInstance, Seed42IsDeterministic) {
  for (auto f : {family::hagge, family::speckman_h, family::general_pair}) {
    const auto a = to_json(random_instance(42, f)).dump();
    const auto b = to_json(random_instance(42, f)).dump();
    EXPECT_EQ(a, b) << family_name(f);
  }
  const auto h = std::get<HaggeInstance>(random_instance(42, family::hagge));
  EXPECT_NO_THROW((void)build_hagge(h.tri, h.P));
}

TEST(RandomInstance, ThousandDrawsAreValid) {
  auto bounded = [](const Rational& r) { return abs(r.num()) <= 50 && r.den() <= 50; };
  auto bounded_tri = [&](const Triangle<Rational>& t) {
    for (const auto& p : {t.A, t.B, t.C})
      if (!bounded(p.x) || !bounded(p.y)) return false;
    return true;
  };
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto h = random_hagge(mix_seed(1000, i));
    ASSERT_TRUE(bounded_tri(h.tri));
    const auto A = raw(h.tri.A), B = raw(h.tri.B), C = raw(h.tri.C), Pr = raw(h.P);
    ASSERT_FALSE(raw_collinear(A, B, C));
    ASSERT_FALSE(raw_collinear(Pr, B, C) || raw_collinear(A, Pr, C) || raw_collinear(A, B, Pr));
    ASSERT_NE(power(oracle_circle(A, B, C), Pr), 0);
    ASSERT_NE(cooked(oracle_symmedian(A, B, C)), h.P);  // Pg = G exactly when P is the symmedian point
  }
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto s = random_speckman_h(mix_seed(2000, i));
    ASSERT_TRUE(bounded_tri(s.tri));
    ASSERT_FALSE(raw_collinear(raw(s.tri.A), raw(s.tri.B), raw(s.tri.C)));
    ASSERT_TRUE(s.k != q(0) && s.k != q(1) && s.k != q(-1));
    if (i < 50) ASSERT_NO_THROW((void)perspector(s.tri, build_speckman_through_H(s.tri, s.m_slope, s.k).image));
  }
}

// --- SVG --------------------------------------------------------------------

TEST(Svg, EmptyDrawList) {
  const std::map<std::string, Value<Rational>> env;
  try {
    (void)emit_svg<Rational>(env, {});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::empty_draw_list);
  }
}

TEST(Svg, ConicBranchesHave256Segments) {
  const svg::Box box{-5, -5, 5, 5, false};
  std::vector<std::array<double, 3>> lines;
  // x² - y² - 1 = 0: two branches
  auto branches = svg::sample_conic({1, 0, -1, 0, 0, -1}, box, lines);
  ASSERT_EQ(branches.size(), 2u);
  for (const auto& b : branches) {
    ASSERT_EQ(b.size(), 257u);
    for (const auto& p : b) EXPECT_NEAR(p[0] * p[0] - p[1] * p[1], 1.0, 1e-6 * (1 + p[0] * p[0]));
  }
  // x²/4 + y² = 1, rotated: one closed loop
  branches = svg::sample_conic({1, 0, 4, 0, 0, -4}, box, lines);
  ASSERT_EQ(branches.size(), 1u);
  EXPECT_EQ(branches[0].size(), 257u);
  // y = x²: one parabolic branch
  branches = svg::sample_conic({1, 0, 0, 0, -1, 0}, box, lines);
  ASSERT_EQ(branches.size(), 1u);
  EXPECT_EQ(branches[0].size(), 257u);
  // xy = 0: line pair, drawn as lines
  lines.clear();
  branches = svg::sample_conic({0, 1, 0, 0, 0, 0}, box, lines);
  EXPECT_TRUE(branches.empty());
  EXPECT_EQ(lines.size(), 2u);
}

TEST(Svg, DemoMatchesGoldenFile) {
  const auto run = run_program<Rational>(parse_script(slurp(demo)));
  const auto doc = emit_svg<Rational>(run.env, run.draws);
  EXPECT_EQ(doc, emit_svg<Rational>(run.env, run.draws));
  ASSERT_TRUE(fs::exists(golden)) << golden;
  EXPECT_EQ(doc, slurp(golden));

  EXPECT_EQ(doc.rfind("<?xml", 0), 0u);
  EXPECT_EQ(doc.substr(doc.size() - 7), "</svg>\n");
  EXPECT_EQ(count(doc, "class=\"circle\""), 2u);  // circumcircle and Hagge circle
  for (const auto* label : {"U", "V", "W", "X", "Y", "Z", "H", "P"})
    EXPECT_NE(doc.find(std::string(">") + label + "</text>"), std::string::npos) << label;
  EXPECT_EQ(count(doc, "<g"), count(doc, "</g>"));
  EXPECT_EQ(doc.find("-0.000"), std::string::npos);
}

// --- command line -----------------------------------------------------------

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("verify --suite bogus"), 2);
  EXPECT_EQ(cli("no-such-verb"), 2);
  EXPECT_EQ(cli("verify --suite hagge --instances 3 --seed 7 --report " + scratch("h.json").string()), 0);
  EXPECT_EQ(cli("oracle8 --v 1 --w 2 --m 1 --k 2 --report " + scratch("o8.json").string()), 0);
  EXPECT_EQ(cli("oracle8 --v 1 --w 1 --m 1 --k 2"), 2);
  EXPECT_EQ(cli("oracle8 --v 1 --w 2 --m 1 --k x"), 2);
  EXPECT_EQ(cli("construct " + demo.string() + " --json " + scratch("t1.json").string()), 0);

  const auto bad = scratch("bad.geo");
  std::ofstream(bad) << t1_header << "point Q = (1,1)\nassert on_circle(circumcircle(T), Q)\n";
  EXPECT_EQ(cli("construct " + bad.string() + " --json " + scratch("bad.json").string()), 1);
  EXPECT_TRUE(fs::exists(scratch("bad.json")));  // report still written

  const auto broken = scratch("broken.geo");
  std::ofstream(broken) << "point A = (0 0)\n";
  EXPECT_EQ(cli("construct " + broken.string() + " --json -"), 2);

  const auto nodraw = scratch("nodraw.geo");
  std::ofstream(nodraw) << t1_header;
  EXPECT_EQ(cli("figure " + nodraw.string() + " --svg " + scratch("x.svg").string()), 2);
}

TEST(Cli, Oracle8ReportRecordsMismatches) {
  ASSERT_EQ(cli("oracle8 --v 1 --w 2 --m 1 --k 2 --report " + scratch("o8b.json").string()), 0);
  const auto j = json::parse(slurp(scratch("o8b.json")));
  std::set<std::string> mismatched;
  for (const auto& a : j["audit"])
    if (a["status"] == "mismatch") mismatched.insert(a["eq"].get<std::string>());
  EXPECT_EQ(mismatched, (std::set<std::string>{"8.2", "F", "U"}));
}

TEST(Cli, VerifyIsByteDeterministic) {
  ASSERT_EQ(cli("verify --suite all --instances 4 --seed 11 --threads 1 --report " + scratch("a.json").string()), 0);
  ASSERT_EQ(cli("verify --suite all --instances 4 --seed 11 --threads 4 --report " + scratch("b.json").string()), 0);
  const auto a = slurp(scratch("a.json"));
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(scratch("b.json")));
}

TEST(Cli, FigureMatchesGoldenFile) {
  ASSERT_EQ(cli("figure " + demo.string() + " --svg " + scratch("t1.svg").string()), 0);
  EXPECT_EQ(slurp(scratch("t1.svg")), slurp(golden));
}
