#pragma once

// Shared test helpers: a hand-rolled generator of small rationals (independent
// of the library's instance generators) and oracle formulas written directly
// on mpq_class, so expected values never come from the code under test.

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "haggelab/haggelab.hpp"

namespace testing_support {

using haggelab::Point;
using haggelab::Rational;
using haggelab::Triangle;
using Q = Rational;
using P = Point<Rational>;

inline Q q(long n, long d = 1) { return Q(n, d); }
inline P pt(long x, long y) { return {Q(x), Q(y)}; }
inline P pt(std::string_view x, std::string_view y) { return {Q::parse(x), Q::parse(y)}; }

/// xorshift64*; deliberately not the library's generator.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : s_(seed * 2685821657736338717ULL + 1) {}
  std::uint64_t next() {
    s_ ^= s_ >> 12;
    s_ ^= s_ << 25;
    s_ ^= s_ >> 27;
    return s_ * 2685821657736338717ULL;
  }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Q rational(long bound = 30) { return Q(range(-bound, bound), range(1, bound)); }
  Q nonzero(long bound = 30) {
    for (;;)
      if (auto r = rational(bound); r.sign() != 0) return r;
  }
  P point(long bound = 30) { return {rational(bound), rational(bound)}; }

  /// Non-degenerate, non-right triangle.
  Triangle<Rational> triangle(long bound = 30) {
    for (;;) {
      const auto a = point(bound), b = point(bound), c = point(bound);
      if (raw_orient(a, b, c) == 0) continue;
      if (raw_dot(b - a, c - a) == 0 || raw_dot(a - b, c - b) == 0 || raw_dot(a - c, b - c) == 0) continue;
      return {a, b, c};
    }
  }

  static mpq_class raw_orient(const P& a, const P& b, const P& c) {
    return (b.x.get() - a.x.get()) * (c.y.get() - a.y.get()) - (b.y.get() - a.y.get()) * (c.x.get() - a.x.get());
  }
  static mpq_class raw_dot(const P& u, const P& v) { return u.x.get() * v.x.get() + u.y.get() * v.y.get(); }

 private:
  std::uint64_t s_;
};

// ---------------------------------------------------------------------------
// Oracles on raw mpq_class.

struct RawPoint {
  mpq_class x, y;
};
inline RawPoint raw(const P& p) { return {p.x.get(), p.y.get()}; }
inline P cooked(const RawPoint& p) { return {Q(p.x), Q(p.y)}; }

/// Circumcentre by intersecting two perpendicular bisectors (Cramer's rule).
inline RawPoint oracle_circumcenter(const RawPoint& a, const RawPoint& b, const RawPoint& c) {
  // 2(b-a)·o = |b|²-|a|², 2(c-a)·o = |c|²-|a|²
  const mpq_class a11 = 2 * (b.x - a.x), a12 = 2 * (b.y - a.y), a21 = 2 * (c.x - a.x), a22 = 2 * (c.y - a.y);
  const mpq_class r1 = b.x * b.x + b.y * b.y - a.x * a.x - a.y * a.y;
  const mpq_class r2 = c.x * c.x + c.y * c.y - a.x * a.x - a.y * a.y;
  const mpq_class det = a11 * a22 - a12 * a21;
  return {(r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det};
}

/// Orthocentre by intersecting the altitudes from A and B.
inline RawPoint oracle_orthocenter(const RawPoint& a, const RawPoint& b, const RawPoint& c) {
  // (p - a)·(c - b) = 0, (p - b)·(c - a) = 0
  const mpq_class a11 = c.x - b.x, a12 = c.y - b.y, a21 = c.x - a.x, a22 = c.y - a.y;
  const mpq_class r1 = a.x * a11 + a.y * a12, r2 = b.x * a21 + b.y * a22;
  const mpq_class det = a11 * a22 - a12 * a21;
  return {(r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det};
}

/// Reflection of p in the line through u and v via the foot of the perpendicular.
inline RawPoint oracle_reflect(const RawPoint& p, const RawPoint& u, const RawPoint& v) {
  const mpq_class dx = v.x - u.x, dy = v.y - u.y;
  const mpq_class t = ((p.x - u.x) * dx + (p.y - u.y) * dy) / (dx * dx + dy * dy);
  const RawPoint foot{u.x + t * dx, u.y + t * dy};
  return {2 * foot.x - p.x, 2 * foot.y - p.y};
}

/// Circle x²+y²+2gx+2fy+h through three points: (g, f, h).
struct RawCircle {
  mpq_class g, f, h;
};
inline RawCircle oracle_circle(const RawPoint& a, const RawPoint& b, const RawPoint& c) {
  const auto o = oracle_circumcenter(a, b, c);
  return {-o.x, -o.y, 2 * o.x * a.x + 2 * o.y * a.y - a.x * a.x - a.y * a.y};
}
inline mpq_class power(const RawCircle& c, const RawPoint& p) {
  return p.x * p.x + p.y * p.y + 2 * c.g * p.x + 2 * c.f * p.y + c.h;
}

/// Symmedian point from barycentrics (a² : b² : c²).
inline RawPoint oracle_symmedian(const RawPoint& A, const RawPoint& B, const RawPoint& C) {
  auto d2 = [](const RawPoint& p, const RawPoint& q) -> mpq_class { return (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y); };
  const mpq_class a2 = d2(B, C), b2 = d2(C, A), c2 = d2(A, B), s = a2 + b2 + c2;
  return {(a2 * A.x + b2 * B.x + c2 * C.x) / s, (a2 * A.y + b2 * B.y + c2 * C.y) / s};
}

/// Second intersection of line through k with direction d and circle c, where k is on c.
inline RawPoint oracle_second(const RawCircle& c, const RawPoint& k, const RawPoint& d) {
  // |k + t d|² + 2g(kx + t dx) + 2f(ky + t dy) + h = 0 has roots 0 and t*.
  const mpq_class t = -(2 * (k.x * d.x + k.y * d.y) + 2 * c.g * d.x + 2 * c.f * d.y) / (d.x * d.x + d.y * d.y);
  return {k.x + t * d.x, k.y + t * d.y};
}

inline bool raw_collinear(const RawPoint& a, const RawPoint& b, const RawPoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) == 0;
}

inline const Triangle<Rational>& t1() {
  static const Triangle<Rational> t{pt(0, 0), pt(4, 0), pt(0, 3)};
  return t;
}

inline Triangle<Rational> section8_triangle(const Q& v, const Q& w) {
  return {{Q(-2) - Q(2) * v * w, Q(0)}, {Q(-2) * v * w, Q(2) * v}, {Q(-2) * v * w, Q(2) * w}};
}

}  // namespace testing_support
