#include <gtest/gtest.h>

#include "support.hpp"

using namespace haggelab;
using namespace testing_support;

namespace {

const CheckResult& check(const CheckReport& r, std::string_view name) {
  const auto* c = r.find(name);
  if (!c) throw std::runtime_error("missing check " + std::string(name));
  return *c;
}

/// Hagge construction redone on raw mpq: D, E, F, then reflections, then the circle.
struct RawHagge {
  RawPoint D, E, F, U, V, W;
  RawCircle sigma;
};
RawHagge oracle_hagge(const Triangle<Rational>& t, const P& p) {
  const auto A = raw(t.A), B = raw(t.B), C = raw(t.C), Pr = raw(p);
  const auto gamma = oracle_circle(A, B, C);
  auto dir = [](const RawPoint& from, const RawPoint& to) { return RawPoint{to.x - from.x, to.y - from.y}; };
  RawHagge h;
  h.D = oracle_second(gamma, A, dir(A, Pr));
  h.E = oracle_second(gamma, B, dir(B, Pr));
  h.F = oracle_second(gamma, C, dir(C, Pr));
  h.U = oracle_reflect(h.D, B, C);
  h.V = oracle_reflect(h.E, C, A);
  h.W = oracle_reflect(h.F, A, B);
  h.sigma = oracle_circle(h.U, h.V, h.W);
  return h;
}

}  // namespace

TEST(Hagge, T1CentroidFixture) {
  const auto& t = t1();
  const auto cfg = build_hagge(t, centroid(t));
  EXPECT_EQ(cfg.D, pt(4, 3));
  EXPECT_EQ(cfg.E, pt("-36/73", "123/73"));
  EXPECT_EQ(cfg.F, pt("34/13", "-12/13"));
  EXPECT_EQ(cfg.U, pt("28/25", "-21/25"));
  EXPECT_EQ(cfg.V, pt("36/73", "123/73"));
  EXPECT_EQ(cfg.W, pt("34/13", "12/13"));
  EXPECT_EQ(cfg.sigma, Circle<Rational>(q(-32, 25), q(-27, 50), q(0)));
  EXPECT_EQ(cfg.X, pt("36/25", "48/25"));
  EXPECT_EQ(cfg.Qc, pt("32/25", "27/50"));
  EXPECT_EQ(cfg.Pg, pt("18/25", "24/25"));
  EXPECT_EQ(peiser_center(t, cfg.P), cfg.Qc);
  EXPECT_TRUE(cfg.sigma.contains(pt(0, 0)));

  const auto o = oracle_hagge(t, cfg.P);
  EXPECT_EQ(cfg.D, cooked(o.D));
  EXPECT_EQ(cfg.V, cooked(o.V));
  EXPECT_EQ(cfg.sigma, Circle<Rational>(Q(o.sigma.g), Q(o.sigma.f), Q(o.sigma.h)));
}

TEST(Hagge, T1SuiteAllNinePass) {
  const auto r = verify_hagge_suite(build_hagge(t1(), centroid(t1())));
  EXPECT_EQ(r.checks.size(), 9u);
  for (const auto& c : r.checks) EXPECT_EQ(c.status, check_status::pass) << c.name;
}

TEST(Hagge, PointCircleAtOrthocentre) {
  const Triangle<Rational> t{pt(0, 0), pt(6, 0), pt(1, 4)};
  const auto cfg = build_hagge(t, orthocenter(t));
  EXPECT_TRUE(cfg.point_circle);
  EXPECT_EQ(cfg.U, orthocenter(t));
  EXPECT_TRUE(cfg.sigma.is_point_circle());
  const auto r = verify_hagge_suite(cfg);
  for (const auto& c : r.checks) EXPECT_EQ(c.status, check_status::skipped);
}

TEST(Hagge, Errors) {
  try {
    (void)build_hagge(t1(), pt(4, 3));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::p_on_circumcircle);
  }
  try {
    (void)build_hagge(t1(), pt(2, 0));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::p_on_sideline);
  }
}

TEST(Hagge, PeiserAtCircumcentreIsConcentric) {
  const Triangle<Rational> t{pt(0, 0), pt(6, 0), pt(1, 4)};
  const auto O = circumcenter(t);
  EXPECT_EQ(isogonal_conjugate(t, O), orthocenter(t));
  EXPECT_EQ(build_hagge(t, O).Qc, O);
}

TEST(MidpointConic, T1) {
  const auto cfg = build_hagge(t1(), centroid(t1()));
  EXPECT_TRUE(midpoint_conic(cfg, q(1, 2)).sixth_on_conic);
  EXPECT_EQ(midpoint_conic(cfg, q(0)).conic, Conic<Rational>::from_circle(circumcircle(t1())));
  EXPECT_EQ(midpoint_conic(cfg, q(1)).conic, Conic<Rational>::from_circle(cfg.sigma));
}

TEST(DoubleSimson, T1) {
  const auto& t = t1();
  const auto l = double_simson(t, pt(4, 3));
  EXPECT_TRUE(l.contains(pt(0, 0)));
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(l.contains(reflect_in_line(pt(4, 3), sideline(t, i))));
  EXPECT_TRUE(parallel(l, simson_line(t, pt(4, 3))));
  EXPECT_NO_THROW(double_simson(t, t.C));
  try {
    (void)double_simson(t, pt(1, 1));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::point_not_on_circumcircle);
  }
}

TEST(SpecialCases, T1ExactFuhrmann) {
  const auto r = special_cases(t1());
  EXPECT_EQ(check(r, "fuhrmann").status, check_status::pass);
  EXPECT_TRUE(check(r, "fuhrmann").detail.empty());  // exact path
  EXPECT_EQ(check(r, "orthocentroidal").status, check_status::pass);
  EXPECT_EQ(check(r, "brocard").status, check_status::pass);
  const auto cfg = build_hagge(t1(), pt(1, 1));
  EXPECT_TRUE(cfg.sigma.contains(pt(2, 1)));
  EXPECT_EQ(midpoint(cfg.H, pt(2, 1)), cfg.Qc);
}

TEST(SpecialCases, FloatFallbackWhenSidesIrrational) {
  const auto r = special_cases(Triangle<Rational>{pt(0, 0), pt(7, 0), pt(2, 5)});
  EXPECT_EQ(check(r, "fuhrmann").status, check_status::pass);
  EXPECT_FALSE(check(r, "fuhrmann").detail.empty());
}

// --- properties ------------------------------------------------------------

TEST(HaggeProperty, ConstructionMatchesRawOracleAndSuitePasses) {
  Gen g(20);
  int done = 0;
  while (done < 60) {
    const auto t = g.triangle();
    const auto p = g.point();
    std::optional<HaggeConfig<Rational>> built;
    try {
      built.emplace(build_hagge(t, p));
    } catch (const error&) {
      continue;  // on a sideline or the circumcircle
    }
    const auto& cfg = *built;
    if (cfg.point_circle || cfg.Pg == centroid(t)) continue;
    ++done;
    const auto o = oracle_hagge(t, p);
    ASSERT_EQ(cfg.U, cooked(o.U));
    ASSERT_EQ(cfg.W, cooked(o.W));
    ASSERT_EQ(cfg.sigma, Circle<Rational>(Q(o.sigma.g), Q(o.sigma.f), Q(o.sigma.h)));
    const auto H = cooked(oracle_orthocenter(raw(t.A), raw(t.B), raw(t.C)));
    ASSERT_TRUE(power(o.sigma, raw(H)) == 0);
    const auto r = verify_hagge_suite(cfg);
    for (const auto& c : r.checks) ASSERT_EQ(c.status, check_status::pass) << c.name;
    for (const auto& t_ratio : {q(1, 3), q(1, 2), q(2, 5)}) ASSERT_TRUE(midpoint_conic(cfg, t_ratio).sixth_on_conic);
  }
}

TEST(HaggeProperty, CircumcirclePointsGiveDoubleSimsonLines) {
  Gen g(21);
  for (int i = 0; i < 50; ++i) {
    const auto t = g.triangle();
    const auto gamma = oracle_circle(raw(t.A), raw(t.B), raw(t.C));
    const auto p = cooked(oracle_second(gamma, raw(t.A), RawPoint{1, g.rational(10).get()}));
    if (p == t.A || p == t.B || p == t.C) continue;
    const auto r = verify_double_simson(t, p);
    for (const auto& c : r.checks) ASSERT_EQ(c.status, check_status::pass) << c.name;
  }
}
