#pragma once

// Seeded random rational instances for each family of configurations.
// Coordinates are p/q with |p|, q ≤ 50. Draws that would make a construction
// degenerate are rejected and redrawn, so every returned instance builds.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include "haggelab/section8.hpp"
#include "haggelab/speckman.hpp"

namespace haggelab {

enum class family { hagge, speckman_h, general_pair, circumcircle_point, orthologic, triangle, section8 };

inline std::string_view family_name(family f) {
  switch (f) {
    case family::hagge: return "hagge";
    case family::speckman_h: return "speckman_h";
    case family::general_pair: return "general_pair";
    case family::circumcircle_point: return "circumcircle_point";
    case family::orthologic: return "orthologic";
    case family::triangle: return "triangle";
    case family::section8: return "section8";
  }
  return "?";
}

struct HaggeInstance {
  Triangle<Rational> tri;
  Point<Rational> P;
};
struct SpeckmanHInstance {
  Triangle<Rational> tri;
  Rational m_slope, k;
};
struct GeneralPairInstance {
  Triangle<Rational> tri;
  Point<Rational> Q;
  Rational scale;
};
struct CircumPointInstance {
  Triangle<Rational> tri;
  Point<Rational> P;  // exactly on the circumcircle
};
struct OrthologicInstance {
  Triangle<Rational> tri;
  Circle<Rational> circle;
  Point<Rational> T;  // exactly on circle
};
struct TriangleInstance {
  Triangle<Rational> tri;
};
struct Section8Instance {
  Rational v, w, m, k;
};

using Instance = std::variant<HaggeInstance, SpeckmanHInstance, GeneralPairInstance, CircumPointInstance,
                              OrthologicInstance, TriangleInstance, Section8Instance>;

/// splitmix64 step; decorrelates per-instance seeds derived from one run seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  Rational rational(long bound = 50) {
    const long d = integer(1, bound);
    return Rational(integer(-bound, bound), d);
  }
  Rational nonzero_rational(long bound = 50) {
    for (;;) {
      auto r = rational(bound);
      if (r.sign() != 0) return r;
    }
  }
  Point<Rational> point() { return {rational(), rational()}; }

  /// Non-degenerate triangle without a right angle (so H is never a vertex).
  Triangle<Rational> triangle() {
    for (;;) {
      const auto a = point(), b = point(), c = point();
      if (orient(a, b, c).sign() == 0) continue;
      const Triangle<Rational> t{a, b, c};
      if (dot(b - a, c - a).sign() == 0 || dot(a - b, c - b).sign() == 0 || dot(a - c, b - c).sign() == 0) continue;
      return t;
    }
  }

  /// Second intersection of the circle with a rational-slope chord through `through`.
  Point<Rational> point_on_circle(const Circle<Rational>& c, const Point<Rational>& through) {
    for (;;) {
      const Point<Rational> dir{Rational(1), rational(12)};
      try {
        return second_intersection(c, line_with_direction(through, dir), through);
      } catch (const error&) {
        continue;  // tangent chord
      }
    }
  }

 private:
  std::mt19937_64 gen_;
};

namespace detail {
inline bool on_any_sideline(const Triangle<Rational>& t, const Point<Rational>& p) {
  return orient(p, t.B, t.C).sign() == 0 || orient(t.A, p, t.C).sign() == 0 || orient(t.A, t.B, p).sign() == 0;
}

/// Prerequisites of the numbered checks that are not themselves claims:
/// finite Desargues axis, distinct orthologic centres, distinct circle
/// centres, a proper reflected triangle and sample points on the hyperbola.
inline bool speckman_prerequisites(const SpeckmanConfig<Rational>& cfg) {
  try {
    if (cfg.P() == cfg.Q || cfg.D == cfg.D_image || cfg.S == cfg.s) return false;
    const auto gamma = circumcircle(cfg.tri), gamma_x = circumcircle(cfg.image);
    if (gamma.center() == gamma_x.center()) return false;
    const auto axis = desargues_axis(cfg.tri, cfg.image);
    const Triangle<Rational> xr{reflect_in_line(cfg.image.A, axis), reflect_in_line(cfg.image.B, axis),
                                reflect_in_line(cfg.image.C, axis)};
    const auto gamma_r = circumcircle(xr);
    if (gamma.center() == gamma_r.center()) return false;
    if (parallel(axis, radical_axis(gamma, gamma_r))) return false;
    (void)vertex_joins(cfg.tri, xr);
    if (points_on_conic(cfg.hyp, cfg.tri.A, 2).size() < 2) return false;
    return true;
  } catch (const error&) {
    return false;
  }
}
}  // namespace detail

inline HaggeInstance random_hagge(std::uint64_t seed) {
  InstanceRng rng(seed);
  for (;;) {
    const auto t = rng.triangle();
    const auto P = rng.point();
    if (detail::on_any_sideline(t, P) || circumcircle(t).contains(P)) continue;
    if (P == orthocenter(t) || P == symmedian_point(t)) continue;  // point circle; Pg = G
    try {
      (void)build_hagge(t, P);
    } catch (const error&) {
      continue;
    }
    return {t, P};
  }
}

inline SpeckmanHInstance random_speckman_h(std::uint64_t seed) {
  InstanceRng rng(seed);
  for (;;) {
    const auto t = rng.triangle();
    const auto m = rng.rational(12);
    const auto k = rng.nonzero_rational(12);
    if (k == Rational(1) || k == Rational(-1)) continue;
    try {
      if (!detail::speckman_prerequisites(build_speckman_through_H(t, m, k))) continue;
    } catch (const error&) {
      continue;
    }
    return {t, m, k};
  }
}

inline GeneralPairInstance random_general_pair(std::uint64_t seed) {
  InstanceRng rng(seed);
  for (;;) {
    const auto t = rng.triangle();
    const auto Q = rng.point();
    const auto s = rng.nonzero_rational(6);
    if (detail::on_any_sideline(t, Q) || Q == orthocenter(t)) continue;
    try {
      const auto img = perspective_indirect_copy(t, Q, s);
      if (orient(img.A, img.B, img.C).sign() == 0) continue;
      const auto cfg = make_speckman_config(t, img, "general_pair");
      if (!detail::speckman_prerequisites(cfg)) continue;
      if (detail::on_any_sideline(t, cfg.P()) || circumcircle(t).contains(cfg.P())) continue;
    } catch (const error&) {
      continue;
    }
    return {t, Q, s};
  }
}

inline CircumPointInstance random_circumcircle_point(std::uint64_t seed) {
  InstanceRng rng(seed);
  const auto t = rng.triangle();
  const auto gamma = circumcircle(t);
  for (;;) {
    const auto P = rng.point_on_circle(gamma, t.A);
    if (P == t.B || P == t.C) continue;
    return {t, P};
  }
}

inline OrthologicInstance random_orthologic(std::uint64_t seed) {
  InstanceRng rng(seed);
  for (;;) {
    const auto t = rng.triangle();
    const auto centre = rng.point();
    const auto T = rng.point();
    if (centre == T) continue;
    const auto c = Circle<Rational>::from_center_through(centre, T);
    try {
      const auto img = similar_from_circle(t, c, T);
      // Also reject images below 1e-3 of the original's size: the float
      // backend cannot resolve their circumcircle.
      const auto ratio = orient(img.A, img.B, img.C) / orient(t.A, t.B, t.C);
      if (ratio.sign() == 0 || abs_value(ratio) < Rational(1, 1000000)) continue;
    } catch (const error&) {
      continue;  // a chord direction tangent at T
    }
    return {t, c, T};
  }
}

inline TriangleInstance random_triangle(std::uint64_t seed) {
  InstanceRng rng(seed);
  return {rng.triangle()};
}

inline Section8Instance random_section8(std::uint64_t seed) {
  InstanceRng rng(seed);
  for (;;) {
    Section8Instance s{rng.nonzero_rational(9), rng.nonzero_rational(9), rng.rational(9), rng.nonzero_rational(9)};
    if (s.v == s.w || (Rational(1) + s.v * s.w).sign() == 0 || s.k == Rational(1) || s.k == Rational(-1)) continue;
    try {
      (void)build_speckman_through_H(
          Triangle<Rational>{{Rational(-2) - Rational(2) * s.v * s.w, Rational(0)},
                             {Rational(-2) * s.v * s.w, Rational(2) * s.v},
                             {Rational(-2) * s.v * s.w, Rational(2) * s.w}},
          s.m, s.k);
    } catch (const error&) {
      continue;
    }
    return s;
  }
}

inline Instance random_instance(std::uint64_t seed, family f) {
  switch (f) {
    case family::hagge: return random_hagge(seed);
    case family::speckman_h: return random_speckman_h(seed);
    case family::general_pair: return random_general_pair(seed);
    case family::circumcircle_point: return random_circumcircle_point(seed);
    case family::orthologic: return random_orthologic(seed);
    case family::triangle: return random_triangle(seed);
    case family::section8: return random_section8(seed);
  }
  throw error(errc::unknown_name, "unknown family");
}

// ---------------------------------------------------------------------------
// Conversion to the float backend. Coordinates are translated to the
// circumcentre and scaled by the circumradius so the fixed 1e-12 threshold of
// the double field applies to O(1) values.

struct Prescale {
  Point<Rational> origin;
  double radius = 1;

  explicit Prescale(const Triangle<Rational>& t)
      : origin(circumcenter(t)), radius(std::sqrt(circumcircle(t).radius_sq().to_double())) {}

  Point<double> operator()(const Point<Rational>& p) const {
    return {(p.x - origin.x).to_double() / radius, (p.y - origin.y).to_double() / radius};
  }
  Triangle<double> operator()(const Triangle<Rational>& t) const { return {(*this)(t.A), (*this)(t.B), (*this)(t.C)}; }
  Circle<double> operator()(const Circle<Rational>& c) const {
    return Circle<double>::from_center_radius_sq((*this)(c.center()), c.radius_sq().to_double() / (radius * radius));
  }
};

inline json to_json(const Instance& inst) {
  return std::visit(
      [](const auto& x) -> json {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, HaggeInstance>) return {{"triangle", to_json(x.tri)}, {"P", to_json(x.P)}};
        else if constexpr (std::is_same_v<X, SpeckmanHInstance>)
          return {{"triangle", to_json(x.tri)}, {"m_slope", x.m_slope.str()}, {"k", x.k.str()}};
        else if constexpr (std::is_same_v<X, GeneralPairInstance>)
          return {{"triangle", to_json(x.tri)}, {"Q", to_json(x.Q)}, {"scale", x.scale.str()}};
        else if constexpr (std::is_same_v<X, CircumPointInstance>)
          return {{"triangle", to_json(x.tri)}, {"P", to_json(x.P)}};
        else if constexpr (std::is_same_v<X, OrthologicInstance>)
          return {{"triangle", to_json(x.tri)}, {"circle", to_json(x.circle)}, {"T", to_json(x.T)}};
        else if constexpr (std::is_same_v<X, TriangleInstance>) return {{"triangle", to_json(x.tri)}};
        else return {{"v", x.v.str()}, {"w", x.w.str()}, {"m", x.m.str()}, {"k", x.k.str()}};
      },
      inst);
}

}  // namespace haggelab
