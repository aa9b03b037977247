#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace haggelab;
using namespace testing_support;

namespace {

template <class F>
errc code_of(F&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return errc::unknown_name;
}

}  // namespace

TEST(Line, Through) {
  EXPECT_EQ(line_through(pt(0, 0), pt(1, 1)), Line<Rational>(q(1), q(-1), q(0)));
  const auto l = line_through(pt(-4, 2), pt(-4, 4));  // x + 2vw = 0 at v=1, w=2
  EXPECT_EQ(l.a(), q(1));
  EXPECT_EQ(l.b(), q(0));
  EXPECT_EQ(l.c(), q(4));
  EXPECT_EQ(code_of([] { line_through(pt(2, 3), pt(2, 3)); }), errc::coincident_points);
}

TEST(Line, CanonicalCoprimeIntegers) {
  const Line<Rational> l(q(-2, 3), q(4, 9), q(-6));
  // ×9 then divide by gcd 2, leading coefficient positive
  EXPECT_EQ(l.a(), q(3));
  EXPECT_EQ(l.b(), q(-2));
  EXPECT_EQ(l.c(), q(27));
  EXPECT_EQ(l, Line<Rational>(q(3), q(-2), q(27)));
}

TEST(Line, Intersect) {
  EXPECT_EQ(intersect_lines(Line<Rational>(q(1), q(0), q(0)), Line<Rational>(q(0), q(1), q(0))), pt(0, 0));
  // y = -2x - 12 and y = -x
  EXPECT_EQ(intersect_lines(Line<Rational>(q(2), q(1), q(12)), Line<Rational>(q(1), q(1), q(0))), pt(-12, 12));
  EXPECT_EQ(code_of([] {
              intersect_lines(Line<Rational>(q(1), q(0), q(-1)), Line<Rational>(q(1), q(0), q(-2)));
            }),
            errc::parallel_lines);
  EXPECT_EQ(code_of([] {
              intersect_lines(Line<Rational>(q(1), q(1), q(-1)), Line<Rational>(q(2), q(2), q(-2)));
            }),
            errc::coincident_lines);
}

TEST(Reflect, Fixtures) {
  const Line<Rational> bc(q(3), q(4), q(-12));
  EXPECT_EQ(reflect_in_line(pt(4, 3), bc), pt("28/25", "-21/25"));
  EXPECT_EQ(cooked(oracle_reflect(raw(pt(4, 3)), raw(pt(4, 0)), raw(pt(0, 3)))), pt("28/25", "-21/25"));
  EXPECT_EQ(reflect_in_line(pt(-16, 0), Line<Rational>(q(1), q(-1), q(0))), pt(0, -16));
  EXPECT_EQ(reflect_in_line(pt(4, 0), bc), pt(4, 0));
}

TEST(SecondIntersection, Fixtures) {
  const Circle<Rational> c(q(-2), q(-3, 2), q(0));  // x² + y² − 4x − 3y = 0
  EXPECT_EQ(second_intersection(c, line_through(pt(0, 0), pt(4, 3)), pt(0, 0)), pt(4, 3));
  const auto gamma = circle_through(pt(-6, 0), pt(-4, 2), pt(-4, 4));
  EXPECT_EQ(second_intersection(gamma, Line<Rational>(q(0), q(1), q(0)), pt(-6, 0)), pt(-8, 0));
  // tangent at the origin: perpendicular to the radius towards (2, 3/2)
  const auto tangent = perpendicular_through(pt(0, 0), line_through(pt(0, 0), pt("2", "3/2")));
  EXPECT_EQ(second_intersection(c, tangent, pt(0, 0)), pt(0, 0));
  EXPECT_EQ(code_of([&] { second_intersection(c, line_through(pt(1, 1), pt(2, 2)), pt(1, 1)); }),
            errc::point_not_on_circle);
  EXPECT_EQ(code_of([&] { second_intersection(c, line_through(pt(4, 0), pt(4, 1)), pt(0, 0)); }),
            errc::point_not_on_line);
}

TEST(CircleThrough, Fixtures) {
  const auto sigma = circle_through(pt("28/25", "-21/25"), pt("36/73", "123/73"), pt("34/13", "12/13"));
  EXPECT_EQ(sigma, Circle<Rational>(q(-32, 25), q(-27, 50), q(0)));
  EXPECT_TRUE(sigma.contains(pt(0, 0)));
  const auto xyz = circle_through(pt(0, -12), pt(4, -8), pt(8, -8));
  EXPECT_EQ(xyz, Circle<Rational>(q(-6), q(14), q(192)));
  EXPECT_EQ(code_of([] { circle_through(pt(0, 0), pt(1, 1), pt(2, 2)); }), errc::collinear_points);
  EXPECT_EQ(code_of([] { circle_through(pt(0, 0), pt(0, 0), pt(2, 2)); }), errc::duplicate_points);
}

TEST(Conic, ThroughFive) {
  const auto k = conic_through_five(pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1), pt("3/5", "4/5"));
  EXPECT_EQ(k, Conic<Rational>({q(1), q(0), q(1), q(0), q(0), q(-1)}));
  EXPECT_EQ(code_of([] { conic_through_five(pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0), pt(0, 1)); }),
            errc::degenerate_configuration);
}

TEST(Conic, ContainsCenterRectangular) {
  const Conic<Rational> unit({q(1), q(0), q(1), q(0), q(0), q(-1)});
  EXPECT_TRUE(conic_contains(unit, pt(1, 0)));
  EXPECT_FALSE(conic_contains(unit, pt(2, 0)));
  EXPECT_EQ(conic_center(Conic<Rational>::from_circle(Circle<Rational>(q(-6), q(14), q(192)))), pt(6, -14));
  const Conic<Rational> hyp({q(1), q(0), q(-1), q(0), q(0), q(-1)});
  EXPECT_EQ(conic_center(hyp), pt(0, 0));
  EXPECT_EQ(code_of([] { conic_center(Conic<Rational>({q(1), q(0), q(0), q(0), q(-1), q(0)})); }),
            errc::parabolic_conic);
  EXPECT_TRUE(is_rectangular(hyp));
  EXPECT_FALSE(is_rectangular(unit));
  EXPECT_TRUE(quadratic_parts_proportional(hyp, Conic<Rational>({q(2), q(0), q(-2), q(1), q(0), q(-5)})));
  EXPECT_FALSE(quadratic_parts_proportional(hyp, Conic<Rational>({q(0), q(1), q(0), q(0), q(0), q(-1)})));
}

TEST(Predicates, Fixtures) {
  EXPECT_TRUE(collinear(pt("28/25", "-21/25"), pt("4/3", "1"), pt("36/25", "48/25")));
  EXPECT_TRUE(concyclic(pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)));
  EXPECT_FALSE(concyclic(pt(0, 0), pt(1, 0), pt(0, 1), pt(2, 1)));
  EXPECT_FALSE(concurrent(Line<Rational>(q(1), q(0), q(0)), Line<Rational>(q(0), q(1), q(0)),
                          Line<Rational>(q(1), q(1), q(-1))));
  EXPECT_TRUE(concurrent(Line<Rational>(q(1), q(0), q(0)), Line<Rational>(q(0), q(1), q(0)),
                         Line<Rational>(q(1), q(1), q(0))));
  EXPECT_TRUE(parallel(Line<Rational>(q(1), q(2), q(0)), Line<Rational>(q(2), q(4), q(7))));
  EXPECT_TRUE(perpendicular(Line<Rational>(q(1), q(2), q(0)), Line<Rational>(q(2), q(-1), q(7))));
}

TEST(Affine, Fixtures) {
  EXPECT_EQ(midpoint(pt(0, 0), pt("28/25", "-21/25")), pt("14/25", "-21/50"));
  EXPECT_EQ(dilate(pt(-8, 0), pt(0, 0), q(2)), pt(-16, 0));
  EXPECT_EQ(half_turn(pt("18/25", "24/25"), pt("1", "3/4")), pt("32/25", "27/50"));
  EXPECT_EQ(divide(pt(0, 0), pt(4, 2), q(1, 2)), midpoint(pt(0, 0), pt(4, 2)));
  EXPECT_EQ(dilate(pt(3, 5), pt(1, 1), q(1)), pt(3, 5));
  EXPECT_EQ(half_turn(half_turn(pt(3, 5), pt(1, 7)), pt(1, 7)), pt(3, 5));
}

TEST(Radical, AxisAndCentre) {
  const Circle<Rational> unit(q(0), q(0), q(-1)), c2(q(-1), q(0), q(0));
  EXPECT_EQ(radical_axis(unit, c2), Line<Rational>(q(2), q(0), q(-1)));
  EXPECT_EQ(code_of([&] { radical_axis(unit, Circle<Rational>(q(0), q(0), q(-4))); }), errc::concentric_circles);
  const auto gamma = circumcircle(t1());
  const auto sigma = Circle<Rational>(q(-32, 25), q(-27, 50), q(0));
  EXPECT_TRUE(perpendicular(radical_axis(gamma, sigma), line_through(gamma.center(), sigma.center())));
  const Circle<Rational> c3(q(0), q(-1), q(0));
  const auto e = radical_center(unit, c2, c3);
  EXPECT_EQ(unit.power(e), c2.power(e));
  EXPECT_EQ(unit.power(e), c3.power(e));
  EXPECT_EQ(code_of([&] { radical_center(unit, c2, Circle<Rational>(q(-3), q(0), q(0))); }),
            errc::collinear_centers);
}

TEST(Simson, Fixtures) {
  const auto& t = t1();
  const auto s = simson_line(t, pt(4, 3));
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(s.contains(foot_of_perpendicular(pt(4, 3), sideline(t, i))));
  EXPECT_NO_THROW(simson_line(t, t.B));
  EXPECT_EQ(code_of([&] { simson_line(t, pt(1, 1)); }), errc::point_not_on_circumcircle);
}

TEST(Triangle, RejectsCollinear) {
  EXPECT_EQ(code_of([] { Triangle<Rational>(pt(0, 0), pt(1, 1), pt(2, 2)); }), errc::degenerate_triangle);
}

// --- properties ------------------------------------------------------------

TEST(GeomProperty, ReflectionIsExactInvolution) {
  Gen g(1);
  for (int i = 0; i < 200; ++i) {
    const auto p = g.point(), u = g.point(), v = g.point();
    if (u == v) continue;
    const auto l = line_through(u, v);
    const auto r = reflect_in_line(p, l);
    ASSERT_EQ(reflect_in_line(r, l), p);
    ASSERT_EQ(r, cooked(oracle_reflect(raw(p), raw(u), raw(v))));
  }
}

TEST(GeomProperty, CircleThroughMatchesCramerOracle) {
  Gen g(2);
  for (int i = 0; i < 200; ++i) {
    const auto t = g.triangle();
    const auto c = circle_through(t.A, t.B, t.C);
    const auto o = oracle_circle(raw(t.A), raw(t.B), raw(t.C));
    ASSERT_EQ(c, Circle<Rational>(Q(o.g), Q(o.f), Q(o.h)));
    for (const auto& p : {t.A, t.B, t.C}) ASSERT_TRUE(c.power(p).is_zero());
  }
}

TEST(GeomProperty, SecondIntersectionInvolution) {
  Gen g(3);
  for (int i = 0; i < 200; ++i) {
    const auto t = g.triangle();
    const auto c = circle_through(t.A, t.B, t.C);
    const P dir{q(1), g.rational(10)};
    const auto l = line_with_direction(t.A, dir);
    const auto x = second_intersection(c, l, t.A);
    ASSERT_TRUE(c.contains(x));
    ASSERT_TRUE(l.contains(x));
    ASSERT_EQ(x, cooked(oracle_second(oracle_circle(raw(t.A), raw(t.B), raw(t.C)), raw(t.A), raw(dir))));
    if (x != t.A) ASSERT_EQ(second_intersection(c, l, x), t.A);
  }
}

TEST(GeomProperty, HyperbolaThroughVerticesOrthocentreAndP) {
  Gen g(4);
  int done = 0;
  while (done < 100) {
    const auto t = g.triangle();
    const auto p = g.point();
    const auto gamma = circumcircle(t);
    if (gamma.contains(p) || orient(p, t.B, t.C).is_zero() || orient(t.A, p, t.C).is_zero() ||
        orient(t.A, t.B, p).is_zero() || p == orthocenter(t))
      continue;
    ++done;
    const auto h = cooked(oracle_orthocenter(raw(t.A), raw(t.B), raw(t.C)));
    const auto k = conic_through_five(t.A, t.B, t.C, h, p);
    ASSERT_TRUE(is_rectangular(k));
    for (const auto& x : {t.A, t.B, t.C, h, p}) ASSERT_TRUE(conic_contains(k, x));
  }
}

TEST(GeomProperty, RadicalAxisPerpendicularToCentreLine) {
  Gen g(5);
  for (int i = 0; i < 200; ++i) {
    const auto c1 = Circle<Rational>::from_center_radius_sq(g.point(), g.nonzero() * g.nonzero());
    const auto c2 = Circle<Rational>::from_center_radius_sq(g.point(), g.nonzero() * g.nonzero());
    if (c1.center() == c2.center()) continue;
    const auto ax = radical_axis(c1, c2);
    const auto d = c2.center() - c1.center();
    ASSERT_TRUE((ax.a() * d.y - ax.b() * d.x).is_zero());
  }
}

TEST(GeomProperty, FloatPredicatesAgreeOnPrescaledInstances) {
  Gen g(6);
  for (int i = 0; i < 200; ++i) {
    const auto t = g.triangle();
    // slivers thinner than double precision can resolve are out of scope
    const mpq_class area = abs(Gen::raw_orient(t.A, t.B, t.C));
    const mpq_class ab = Gen::raw_dot(t.B - t.A, t.B - t.A), bc = Gen::raw_dot(t.C - t.B, t.C - t.B),
                    ca = Gen::raw_dot(t.A - t.C, t.A - t.C);
    if (area < mpq_class(1, 1000000) * std::max({ab, bc, ca})) continue;
    const Prescale ps(t);
    const auto td = ps(t);
    const auto c = circle_through(td.A, td.B, td.C);
    ASSERT_TRUE(c.contains(td.A) && c.contains(td.B) && c.contains(td.C));
    ASSERT_TRUE(collinear(td.A, midpoint(td.A, td.B), td.B));
    ASSERT_FALSE(collinear(td.A, td.B, td.C));
  }
}
