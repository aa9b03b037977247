#pragma once

// Hagge circles: for a point P, reflect the second intersections D, E, F of
// AP, BP, CP with the circumcircle in BC, CA, AB to get U, V, W; the circle
// UVW is the Hagge circle Σ(P); it contains the orthocentre H for every P.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "haggelab/centers.hpp"
#include "haggelab/report.hpp"
#include "haggelab/similarity.hpp"

namespace haggelab {

template <Field T>
struct HaggeConfig {
  Triangle<T> tri;
  Point<T> P;
  Point<T> D, E, F;  // second intersections of AP, BP, CP with the circumcircle
  Point<T> U, V, W;  // reflections of D, E, F in BC, CA, AB
  Circle<T> sigma;
  Point<T> X, Y, Z;  // second intersections of the altitudes with sigma
  Point<T> H;
  Point<T> Pg;  // isogonal conjugate of P
  Point<T> Qc;  // centre of sigma
  /// P = H: U = V = W = H and sigma is the point-circle at H.
  bool point_circle = false;

  Triangle<T> hagge_triangle() const { return {X, Y, Z}; }
};

template <Field T>
void require_off_sidelines(const Triangle<T>& t, const Point<T>& p, errc code) {
  if (collinear(t.B, t.C, p) || collinear(t.C, t.A, p) || collinear(t.A, t.B, p))
    throw error(code, "point lies on a sideline of the triangle");
}

template <Field T>
HaggeConfig<T> build_hagge(const Triangle<T>& tri, const Point<T>& P) {
  require_off_sidelines(tri, P, errc::p_on_sideline);
  const Circle<T> gamma = circumcircle(tri);
  if (gamma.contains(P)) throw error(errc::p_on_circumcircle, "P on the circumcircle: use double_simson");

  const Point<T> H = orthocenter(tri);
  const Point<T> D = second_intersection(gamma, line_through(tri.A, P), tri.A);
  const Point<T> E = second_intersection(gamma, line_through(tri.B, P), tri.B);
  const Point<T> F = second_intersection(gamma, line_through(tri.C, P), tri.C);
  const Point<T> Pg = isogonal_conjugate(tri, P);

  if (P == H) {
    const auto sigma = Circle<T>::from_center_radius_sq(H, T(0));
    return {tri, P, D, E, F, H, H, H, sigma, H, H, H, H, Pg, H, true};
  }

  const Point<T> U = reflect_in_line(D, sideline(tri, 0));
  const Point<T> V = reflect_in_line(E, sideline(tri, 1));
  const Point<T> W = reflect_in_line(F, sideline(tri, 2));
  const Circle<T> sigma = circle_through(U, V, W);
  // H ∈ sigma is a precondition of second_intersection, so a failure of the
  // orthocentre property surfaces here as PointNotOnCircle.
  const Point<T> X = second_intersection(sigma, altitude(tri, 0), H);
  const Point<T> Y = second_intersection(sigma, altitude(tri, 1), H);
  const Point<T> Z = second_intersection(sigma, altitude(tri, 2), H);
  return {tri, P, D, E, F, U, V, W, sigma, X, Y, Z, H, Pg, sigma.center(), false};
}

template <Field T>
Circle<T> hagge_circle(const Triangle<T>& tri, const Point<T>& P) {
  return build_hagge(tri, P).sigma;
}

/// Image of the isogonal conjugate under the half-turn about the nine-point
/// centre.
template <Field T>
Point<T> peiser_center(const Triangle<T>& tri, const Point<T>& P) {
  return half_turn(isogonal_conjugate(tri, P), nine_point_center(tri));
}

template <Field T>
json to_json(const HaggeConfig<T>& c) {
  return {{"triangle", to_json(c.tri)}, {"P", to_json(c.P)},   {"D", to_json(c.D)},   {"E", to_json(c.E)},
          {"F", to_json(c.F)},          {"U", to_json(c.U)},   {"V", to_json(c.V)},   {"W", to_json(c.W)},
          {"X", to_json(c.X)},          {"Y", to_json(c.Y)},   {"Z", to_json(c.Z)},   {"H", to_json(c.H)},
          {"Pg", to_json(c.Pg)},        {"Qc", to_json(c.Qc)}, {"sigma", to_json(c.sigma)},
          {"point_circle", c.point_circle}};
}

template <Field T>
CheckReport verify_hagge_suite(const HaggeConfig<T>& cfg) {
  CheckReport r;
  r.suite = "hagge";
  r.backend = std::string(field_traits<T>::name);
  r.instance = {{"triangle", to_json(cfg.tri)}, {"P", to_json(cfg.P)}};

  static constexpr std::array<std::pair<const char*, const char*>, 9> names{{
      {"H_on_sigma", "sigma contains the orthocentre H"},
      {"UPX_VPY_WPZ_collinear", "U, P, X (and V, P, Y; W, P, Z) are collinear"},
      {"center_is_peiser_point", "centre of sigma is Pg turned through 180 about the nine-point centre"},
      {"PgHQO_parallelogram", "Pg, H, centre of sigma, O form a parallelogram"},
      {"AU_BV_CW_midpoints_on_nine_point_circle", "midpoints of AU, BV, CW are on the nine-point circle"},
      {"PgG_meets_sigma_at_H_antipode", "line Pg G meets sigma again at the antipode of H"},
      {"U'V'W'P_collinear", "U', V', W' and P are collinear"},
      {"ABC_XYZ_and_DEF_UVW_indirectly_similar", "ABC ~ XYZ and DEF ~ UVW with opposite orientation"},
      {"similarity_ABCDEFP_to_XYZUVWP_fixes_P", "the map ABCDEF -> XYZUVW fixes P and no other point"},
  }};

  if (cfg.point_circle) {
    r.note = "PointCircle: P = H, the Hagge circle is the point-circle at H";
    for (const auto& [n, a] : names) r.skip(n, a, "P = H (point-circle)");
    return r;
  }

  const auto& t = cfg.tri;
  const Point<T> O = circumcenter(t);
  const Point<T> G = centroid(t);

  r.run(names[0].first, names[0].second, [&] { return cfg.sigma.contains(cfg.H); });
  r.run(names[1].first, names[1].second, [&] {
    return collinear(cfg.U, cfg.P, cfg.X) && collinear(cfg.V, cfg.P, cfg.Y) && collinear(cfg.W, cfg.P, cfg.Z);
  });
  r.run(names[2].first, names[2].second, [&] { return cfg.Qc == peiser_center(t, cfg.P); });
  r.run(names[3].first, names[3].second, [&] { return midpoint(cfg.Pg, cfg.Qc) == midpoint(cfg.H, O); });
  r.run(names[4].first, names[4].second, [&] {
    const auto npc = nine_point_circle(t);
    return npc.contains(midpoint(t.A, cfg.U)) && npc.contains(midpoint(t.B, cfg.V)) &&
           npc.contains(midpoint(t.C, cfg.W));
  });
  if (cfg.Pg == G) {
    r.skip(names[5].first, names[5].second, "Pg = G: line PgG undefined");
  } else {
    r.run(names[5].first, names[5].second, [&] {
      return line_through(cfg.Pg, G).contains(half_turn(cfg.H, cfg.Qc));
    });
  }
  r.run(names[6].first, names[6].second, [&] {
    const auto Up = intersect_lines(line_through(cfg.V, cfg.W), altitude(t, 0));
    const auto Vp = intersect_lines(line_through(cfg.W, cfg.U), altitude(t, 1));
    const auto Wp = intersect_lines(line_through(cfg.U, cfg.V), altitude(t, 2));
    return collinear(Up, Vp, cfg.P) && collinear(Up, Wp, cfg.P) && collinear(Vp, Wp, cfg.P);
  });
  r.run(names[7].first, names[7].second, [&] {
    return indirectly_similar(t, cfg.hagge_triangle()) &&
           indirectly_similar(Triangle<T>{cfg.D, cfg.E, cfg.F}, Triangle<T>{cfg.U, cfg.V, cfg.W});
  });
  r.run(names[8].first, names[8].second, [&] {
    const auto s = similarity_from_pairs(t.A, cfg.X, t.B, cfg.Y);
    return s.center == cfg.P && s(cfg.P) == cfg.P && s(t.C) == cfg.Z && s(cfg.D) == cfg.U && s(cfg.E) == cfg.V &&
           s(cfg.F) == cfg.W;
  });
  return r;
}

template <Field T>
struct MidpointConic {
  Conic<T> conic;
  std::array<Point<T>, 6> points;  // ratio-t points on DU, EV, FW, AX, BY, CZ
  int omitted = 5;                 // index of the point not used for fitting
  bool sixth_on_conic = false;
};

/// Conic through the points dividing DU, EV, FW, AX, BY, CZ in ratio t,
/// fitted on five of them and checked exactly on the sixth.
template <Field T>
MidpointConic<T> midpoint_conic(const HaggeConfig<T>& cfg, const T& t) {
  const std::array<Point<T>, 6> pts{divide(cfg.D, cfg.U, t),     divide(cfg.E, cfg.V, t),
                                    divide(cfg.F, cfg.W, t),     divide(cfg.tri.A, cfg.X, t),
                                    divide(cfg.tri.B, cfg.Y, t), divide(cfg.tri.C, cfg.Z, t)};
  for (int omit = 5; omit >= 0; --omit) {
    std::array<Point<T>, 5> five;
    for (int i = 0, j = 0; i < 6; ++i)
      if (i != omit) five[j++] = pts[i];
    try {
      auto k = conic_through_five(std::span<const Point<T>, 5>(five));
      const bool on = conic_contains(k, pts[omit]);
      return {std::move(k), pts, omit, on};
    } catch (const error& e) {
      if (e.code() != errc::degenerate_configuration) throw;
    }
  }
  throw error(errc::degenerate_configuration, "no five of the six ratio points determine a conic");
}

/// For P on the circumcircle the Hagge circle degenerates to the line of the
/// reflections of P in the three sides.
template <Field T>
Line<T> double_simson(const Triangle<T>& tri, const Point<T>& P) {
  if (!circumcircle(tri).contains(P))
    throw error(errc::point_not_on_circumcircle, "double Simson line needs P on the circumcircle");
  const std::array<Point<T>, 3> refl{reflect_in_line(P, sideline(tri, 0)), reflect_in_line(P, sideline(tri, 1)),
                                     reflect_in_line(P, sideline(tri, 2))};
  if (!(refl[0] == refl[1])) return line_through(refl[0], refl[1]);
  if (!(refl[1] == refl[2])) return line_through(refl[1], refl[2]);
  return line_through(refl[0], refl[2]);
}

template <Field T>
CheckReport verify_double_simson(const Triangle<T>& tri, const Point<T>& P) {
  CheckReport r;
  r.suite = "double_simson";
  r.backend = std::string(field_traits<T>::name);
  r.instance = {{"triangle", to_json(tri)}, {"P", to_json(P)}};
  const auto line = double_simson(tri, P);
  r.instance["line"] = to_json(line);
  r.run("reflections_collinear", "reflections of P in the three sides are collinear", [&] {
    return collinear(reflect_in_line(P, sideline(tri, 0)), reflect_in_line(P, sideline(tri, 1)),
                     reflect_in_line(P, sideline(tri, 2)));
  });
  r.run("passes_through_H", "the reflection line contains H", [&] { return line.contains(orthocenter(tri)); });
  r.run("parallel_to_simson_line", "the reflection line is parallel to the Simson line",
        [&] { return parallel(line, simson_line(tri, P)); });
  return r;
}

namespace detail {
/// Copy of a triangle in double precision, translated to its circumcentre and
/// scaled to unit circumradius.
template <Field T>
Triangle<double> prescaled(const Triangle<T>& t) {
  const auto o = circumcenter(t);
  const double ox = to_double(o.x), oy = to_double(o.y);
  const double r = std::sqrt(to_double(circumcircle(t).radius_sq()));
  auto f = [&](const Point<T>& p) { return Point<double>{(to_double(p.x) - ox) / r, (to_double(p.y) - oy) / r}; };
  return {f(t.A), f(t.B), f(t.C)};
}
}  // namespace detail

/// Tolerance for checks that must fall back to floating point.
inline constexpr double float_check_tolerance = 1e-9;

/// Named special points: incentre (Fuhrmann circle), symmedian point
/// (orthocentroidal circle), centroid of the medial triangle (Brocard circle).
template <Field T>
CheckReport special_cases(const Triangle<T>& tri) {
  CheckReport r;
  r.suite = "special_cases";
  r.backend = std::string(field_traits<T>::name);
  r.instance = {{"triangle", to_json(tri)}};

  auto fuhrmann = [](const auto& t) {
    const auto I = incenter(t);
    const auto Na = nagel_point(t);
    const auto cfg = build_hagge(t, I);
    return std::pair{cfg.sigma.contains(Na), midpoint(cfg.H, Na) == cfg.Qc};
  };

  bool exact_sides = true;
  if constexpr (field_traits<T>::exact) {
    try {
      (void)incenter(tri);
    } catch (const error& e) {
      if (e.code() != errc::rational_backend_unsupported) throw;
      exact_sides = false;
    }
  }
  if (exact_sides && field_traits<T>::exact) {
    r.run("fuhrmann", "incentre case: H and the Nagel point are antipodal on sigma", [&] {
      const auto [on, diam] = fuhrmann(tri);
      return on && diam;
    });
  } else {
    const auto t = detail::prescaled(tri);
    r.run("fuhrmann", "incentre case: H and the Nagel point are antipodal on sigma", [&] {
      const auto I = incenter(t);
      const auto Na = nagel_point(t);
      const auto cfg = build_hagge(t, I);
      const auto mid = midpoint(cfg.H, Na);
      const double res = std::max({std::fabs(cfg.sigma.power(Na)), std::fabs(mid.x - cfg.Qc.x), std::fabs(mid.y - cfg.Qc.y)});
      return res <= float_check_tolerance;
    });
    r.checks.back().detail = "float backend (irrational side lengths), tolerance 1e-9";
  }

  const auto c = triangle_centers(tri);
  r.run("orthocentroidal", "sigma of the centroid is the circle on diameter GH",
        [&] { return hagge_circle(tri, c.K) == Circle<T>::on_diameter(c.G, c.H); });
  r.run("brocard", "sigma of the symmedian point is the circle on diameter OK",
        [&] { return hagge_circle(medial_triangle(tri), c.G) == Circle<T>::on_diameter(c.O, c.K); });
  return r;
}

}  // namespace haggelab
