#pragma once

// Points, lines, circles and conics with coefficient-based (radical-free)
// representations, plus the constructions and predicates built on them.
// Every function is exact when T = Rational.

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <span>
#include <string>
#include <utility>

#include "haggelab/error.hpp"
#include "haggelab/linalg.hpp"
#include "haggelab/numeric.hpp"

namespace haggelab {

template <Field T>
struct Point {
  T x{};
  T y{};

  Point() = default;
  Point(T x_, T y_) : x(std::move(x_)), y(std::move(y_)) {}

  friend Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
  friend Point operator*(const T& k, const Point& p) { return {k * p.x, k * p.y}; }
  friend Point operator*(const Point& p, const T& k) { return {k * p.x, k * p.y}; }
  friend Point operator/(const Point& p, const T& k) { return {p.x / k, p.y / k}; }
  Point operator-() const { return {-x, -y}; }

  /// Float: Euclidean distance within epsilon of max(1, |p|, |q|).
  friend bool operator==(const Point& p, const Point& q) {
    if constexpr (field_traits<T>::exact) {
      return p.x == q.x && p.y == q.y;
    } else {
      const double scale = std::max({1.0, std::hypot(p.x, p.y), std::hypot(q.x, q.y)});
      return std::hypot(p.x - q.x, p.y - q.y) <= field_traits<T>::epsilon * scale;
    }
  }
};

template <Field T> T dot(const Point<T>& u, const Point<T>& v) { return u.x * v.x + u.y * v.y; }
template <Field T> T cross(const Point<T>& u, const Point<T>& v) { return u.x * v.y - u.y * v.x; }
template <Field T> T norm_sq(const Point<T>& u) { return dot(u, u); }
template <Field T> T distance_sq(const Point<T>& p, const Point<T>& q) { return norm_sq(p - q); }

/// Twice the signed area of pqr; positive when counter-clockwise.
template <Field T>
T orient(const Point<T>& p, const Point<T>& q, const Point<T>& r) {
  return cross(q - p, r - p);
}

/// {(x, y) : a x + b y + c = 0}, stored normalized (coprime integers with a
/// positive leading coefficient for Rational).
template <Field T>
class Line {
 public:
  Line(T a, T b, T c) : k_{std::move(a), std::move(b), std::move(c)} {
    if (is_zero(k_[0]) && is_zero(k_[1])) throw error(errc::degenerate_configuration, "line with a = b = 0");
    field_traits<T>::normalize(std::span<T>(k_));
  }

  const T& a() const { return k_[0]; }
  const T& b() const { return k_[1]; }
  const T& c() const { return k_[2]; }
  const std::array<T, 3>& coefficients() const { return k_; }

  T eval(const Point<T>& p) const { return k_[0] * p.x + k_[1] * p.y + k_[2]; }
  bool contains(const Point<T>& p) const {
    if constexpr (field_traits<T>::exact) return is_zero(eval(p));
    else return negligible(eval(p), (std::fabs(k_[0]) + std::fabs(k_[1])) * (1 + std::fabs(p.x) + std::fabs(p.y)) + std::fabs(k_[2]));
  }
  Point<T> normal() const { return {k_[0], k_[1]}; }
  Point<T> direction() const { return {-k_[1], k_[0]}; }

  /// Same point set (coefficient vectors proportional).
  friend bool operator==(const Line& l, const Line& m) {
    return is_zero(l.a() * m.b() - l.b() * m.a()) && is_zero(l.a() * m.c() - l.c() * m.a()) &&
           is_zero(l.b() * m.c() - l.c() * m.b());
  }

 private:
  std::array<T, 3> k_;
};

/// {(x, y) : x² + y² + 2g x + 2f y + h = 0}. The representation is unique,
/// so no normalization is needed. Squared radius 0 is a point-circle.
template <Field T>
struct Circle {
  T g{}, f{}, h{};

  Point<T> center() const { return {-g, -f}; }
  T radius_sq() const { return g * g + f * f - h; }
  T power(const Point<T>& p) const { return p.x * p.x + p.y * p.y + T(2) * g * p.x + T(2) * f * p.y + h; }
  bool contains(const Point<T>& p) const {
    if constexpr (field_traits<T>::exact) return is_zero(power(p));
    else
      return negligible(power(p), (1 + std::fabs(p.x) + std::fabs(p.y)) * (1 + std::fabs(p.x) + std::fabs(p.y)) +
                                      2 * (g * g + f * f) + std::fabs(h));
  }
  bool is_point_circle() const { return is_zero(radius_sq()); }

  static Circle from_center_radius_sq(const Point<T>& o, const T& r2) {
    return {-o.x, -o.y, o.x * o.x + o.y * o.y - r2};
  }
  static Circle from_center_through(const Point<T>& o, const Point<T>& p) {
    return from_center_radius_sq(o, distance_sq(o, p));
  }
  /// Circle on segment pq as diameter.
  static Circle on_diameter(const Point<T>& p, const Point<T>& q) {
    const T half(T(1) / T(2));
    return from_center_through({(p.x + q.x) * half, (p.y + q.y) * half}, p);
  }

  friend bool operator==(const Circle& a, const Circle& b) {
    return field_equal(a.g, b.g) && field_equal(a.f, b.f) && field_equal(a.h, b.h);
  }
};

/// A x² + B xy + C y² + D x + E y + F = 0, normalized like Line.
template <Field T>
class Conic {
 public:
  explicit Conic(std::array<T, 6> k) : k_(std::move(k)) {
    bool all_zero = true;
    for (int i = 0; i < 5; ++i) all_zero = all_zero && is_zero(k_[i]);
    if (all_zero) throw error(errc::degenerate_configuration, "conic with no variable terms");
    field_traits<T>::normalize(std::span<T>(k_));
  }

  static Conic from_circle(const Circle<T>& c) {
    return Conic({T(1), T(0), T(1), T(2) * c.g, T(2) * c.f, c.h});
  }

  const std::array<T, 6>& coefficients() const { return k_; }
  const T& operator[](std::size_t i) const { return k_[i]; }

  T eval(const Point<T>& p) const {
    return k_[0] * p.x * p.x + k_[1] * p.x * p.y + k_[2] * p.y * p.y + k_[3] * p.x + k_[4] * p.y + k_[5];
  }

  /// Same zero set up to scale (projective equality of coefficient vectors).
  friend bool operator==(const Conic& a, const Conic& b) {
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (!is_zero(a.k_[i] * b.k_[j] - a.k_[j] * b.k_[i])) return false;
    return true;
  }

 private:
  std::array<T, 6> k_;
};

template <Field T>
struct Triangle {
  Point<T> A, B, C;

  Triangle(Point<T> a, Point<T> b, Point<T> c) : A(std::move(a)), B(std::move(b)), C(std::move(c)) {
    bool flat;
    if constexpr (field_traits<T>::exact) flat = is_zero(orient(A, B, C));
    else flat = negligible(orient(A, B, C), std::sqrt(norm_sq(B - A) * norm_sq(C - A)));
    if (flat) throw error(errc::degenerate_triangle, "collinear vertices");
  }

  T signed_area2() const { return orient(A, B, C); }
  const Point<T>& vertex(int i) const { return i == 0 ? A : (i == 1 ? B : C); }
  /// Side opposite vertex i: BC, CA, AB.
  std::pair<const Point<T>&, const Point<T>&> side(int i) const {
    if (i == 0) return {B, C};
    if (i == 1) return {C, A};
    return {A, B};
  }
};

// ---------------------------------------------------------------------------
// Affine maps

template <Field T>
Point<T> midpoint(const Point<T>& p, const Point<T>& q) {
  return {(p.x + q.x) / T(2), (p.y + q.y) / T(2)};
}

/// p + t (q − p): t = 0 gives p, t = 1 gives q.
template <Field T>
Point<T> divide(const Point<T>& p, const Point<T>& q, const T& t) {
  return p + t * (q - p);
}

template <Field T>
Point<T> half_turn(const Point<T>& p, const Point<T>& center) {
  return T(2) * center - p;
}

template <Field T>
Point<T> dilate(const Point<T>& p, const Point<T>& center, const T& k) {
  return center + k * (p - center);
}

// ---------------------------------------------------------------------------
// Lines

template <Field T>
Line<T> line_through(const Point<T>& p, const Point<T>& q) {
  if (p == q) throw error(errc::coincident_points, "line through a single point");
  return Line<T>(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y);
}

/// Line through p with direction vector d.
template <Field T>
Line<T> line_with_direction(const Point<T>& p, const Point<T>& d) {
  if (is_zero(d.x) && is_zero(d.y)) throw error(errc::degenerate_configuration, "zero direction");
  return Line<T>(d.y, -d.x, d.x * p.y - d.y * p.x);
}

template <Field T>
Line<T> parallel_through(const Point<T>& p, const Line<T>& l) {
  return line_with_direction(p, l.direction());
}

template <Field T>
Line<T> perpendicular_through(const Point<T>& p, const Line<T>& l) {
  return line_with_direction(p, l.normal());
}

template <Field T>
Point<T> intersect_lines(const Line<T>& l1, const Line<T>& l2) {
  const T det = l1.a() * l2.b() - l2.a() * l1.b();
  if (is_zero(det)) {
    if (l1 == l2) throw error(errc::coincident_lines, "lines coincide");
    throw error(errc::parallel_lines, "distinct parallel lines");
  }
  return {(l1.b() * l2.c() - l2.b() * l1.c()) / det, (l1.c() * l2.a() - l2.c() * l1.a()) / det};
}

template <Field T>
Point<T> foot_of_perpendicular(const Point<T>& p, const Line<T>& l) {
  const T t = l.eval(p) / norm_sq(l.normal());
  return p - t * l.normal();
}

template <Field T>
Point<T> reflect_in_line(const Point<T>& p, const Line<T>& l) {
  const T t = T(2) * l.eval(p) / norm_sq(l.normal());
  return p - t * l.normal();
}

// ---------------------------------------------------------------------------
// Predicates

namespace detail {
template <Field T>
double row_norm_product(const std::array<std::array<T, 3>, 3>& m) {
  double prod = 1;
  for (const auto& row : m) {
    double n = 0;
    for (const auto& v : row) n = std::max(n, std::fabs(to_double(v)));
    prod *= std::max(n, 1.0);
  }
  return prod;
}
}  // namespace detail

template <Field T>
bool collinear(const Point<T>& p, const Point<T>& q, const Point<T>& r) {
  if constexpr (field_traits<T>::exact) return is_zero(orient(p, q, r));
  else {
    const double s = 1 + std::max({std::fabs(p.x), std::fabs(p.y), std::fabs(q.x), std::fabs(q.y), std::fabs(r.x), std::fabs(r.y)});
    return negligible(orient(p, q, r), s * (std::sqrt(norm_sq(q - p)) + std::sqrt(norm_sq(r - p))));
  }
}

/// Vanishing 3x3 coefficient determinant. Three mutually parallel lines
/// count as concurrent (at infinity).
template <Field T>
bool concurrent(const Line<T>& l1, const Line<T>& l2, const Line<T>& l3) {
  const std::array<std::array<T, 3>, 3> m{{{l1.a(), l1.b(), l1.c()}, {l2.a(), l2.b(), l2.c()}, {l3.a(), l3.b(), l3.c()}}};
  if constexpr (field_traits<T>::exact) return is_zero(linalg::det3<T>(m));
  else return negligible(linalg::det3<T>(m), detail::row_norm_product(m));
}

template <Field T>
bool parallel(const Line<T>& l1, const Line<T>& l2) {
  return is_zero(l1.a() * l2.b() - l2.a() * l1.b());
}

template <Field T>
bool perpendicular(const Line<T>& l1, const Line<T>& l2) {
  return is_zero(l1.a() * l2.a() + l1.b() * l2.b());
}

/// Vanishing lifted 4x4 determinant: on one circle, or all on one line.
template <Field T>
bool concyclic(const Point<T>& p, const Point<T>& q, const Point<T>& r, const Point<T>& s) {
  auto row = [&](const Point<T>& u) {
    const Point<T> d = u - s;
    return std::array<T, 3>{norm_sq(u) - norm_sq(s), d.x, d.y};
  };
  const std::array<std::array<T, 3>, 3> m{{row(p), row(q), row(r)}};
  if constexpr (field_traits<T>::exact) return is_zero(linalg::det3<T>(m));
  else return negligible(linalg::det3<T>(m), detail::row_norm_product(m));
}

// ---------------------------------------------------------------------------
// Circles

template <Field T>
Circle<T> circle_through(const Point<T>& p, const Point<T>& q, const Point<T>& r) {
  if (p == q || q == r || p == r) throw error(errc::duplicate_points, "circle through repeated points");
  const Point<T> b = q - p, c = r - p;
  const T d = T(2) * cross(b, c);
  if (collinear(p, q, r)) throw error(errc::collinear_points, "circle through collinear points");
  const T bb = norm_sq(b), cc = norm_sq(c);
  const Point<T> o = p + Point<T>{(c.y * bb - b.y * cc) / d, (b.x * cc - c.x * bb) / d};
  return Circle<T>::from_center_through(o, p);
}

/// Other intersection of l with c, given one intersection `known`. Equals
/// `known` when l is tangent there.
template <Field T>
Point<T> second_intersection(const Circle<T>& c, const Line<T>& l, const Point<T>& known) {
  if (!c.contains(known)) throw error(errc::point_not_on_circle, "known point is not on the circle");
  if (!l.contains(known)) throw error(errc::point_not_on_line, "known point is not on the line");
  const Point<T> d = l.direction();
  const T t = -(T(2) * (dot(known, d) + c.g * d.x + c.f * d.y)) / norm_sq(d);
  return known + t * d;
}

template <Field T>
Line<T> radical_axis(const Circle<T>& c1, const Circle<T>& c2) {
  if (field_equal(c1.g, c2.g) && field_equal(c1.f, c2.f))
    throw error(errc::concentric_circles, "radical axis of concentric circles");
  return Line<T>(T(2) * (c1.g - c2.g), T(2) * (c1.f - c2.f), c1.h - c2.h);
}

template <Field T>
Point<T> radical_center(const Circle<T>& c1, const Circle<T>& c2, const Circle<T>& c3) {
  if (collinear(c1.center(), c2.center(), c3.center()))
    throw error(errc::collinear_centers, "radical center of circles with collinear centers");
  return intersect_lines(radical_axis(c1, c2), radical_axis(c1, c3));
}

// ---------------------------------------------------------------------------
// Conics

template <Field T>
std::array<T, 6> conic_row(const Point<T>& p) {
  return {p.x * p.x, p.x * p.y, p.y * p.y, p.x, p.y, T(1)};
}

namespace detail {
template <Field T>
Conic<T> conic_from_rows(linalg::Matrix<T> rows, const char* what) {
  auto k = linalg::kernel_vector(std::move(rows));
  if (!k) throw error(errc::degenerate_configuration, what);
  std::array<T, 6> c;
  for (int i = 0; i < 6; ++i) c[i] = (*k)[i];
  return Conic<T>(std::move(c));
}
}  // namespace detail

/// The unique conic through five points.
template <Field T>
Conic<T> conic_through_five(std::span<const Point<T>, 5> pts) {
  linalg::Matrix<T> rows;
  for (const auto& p : pts) {
    const auto r = conic_row(p);
    rows.emplace_back(r.begin(), r.end());
  }
  return detail::conic_from_rows(std::move(rows), "five points do not determine a unique conic");
}

template <Field T>
Conic<T> conic_through_five(const Point<T>& p1, const Point<T>& p2, const Point<T>& p3, const Point<T>& p4,
                            const Point<T>& p5) {
  const std::array<Point<T>, 5> pts{p1, p2, p3, p4, p5};
  return conic_through_five(std::span<const Point<T>, 5>(pts));
}

/// The unique rectangular hyperbola (A + C = 0) through four points. Any
/// such conic through a triangle's vertices also passes through its
/// orthocentre, which makes this the robust form of "through A, B, C, H, P"
/// when H coincides with a vertex.
template <Field T>
Conic<T> rectangular_hyperbola_through(const Point<T>& p1, const Point<T>& p2, const Point<T>& p3,
                                       const Point<T>& p4) {
  linalg::Matrix<T> rows;
  for (const auto* p : {&p1, &p2, &p3, &p4}) {
    const auto r = conic_row(*p);
    rows.emplace_back(r.begin(), r.end());
  }
  rows.push_back({T(1), T(0), T(1), T(0), T(0), T(0)});
  return detail::conic_from_rows(std::move(rows), "four points do not determine a unique rectangular hyperbola");
}

/// The rectangular hyperbola through three points whose asymptotes are
/// parallel to those of the rectangular hyperbola `like`.
template <Field T>
Conic<T> rectangular_hyperbola_parallel_to(const Point<T>& p1, const Point<T>& p2, const Point<T>& p3,
                                           const Conic<T>& like) {
  linalg::Matrix<T> rows;
  for (const auto* p : {&p1, &p2, &p3}) {
    const auto r = conic_row(*p);
    rows.emplace_back(r.begin(), r.end());
  }
  rows.push_back({T(1), T(0), T(1), T(0), T(0), T(0)});
  rows.push_back({like[1], -like[0], T(0), T(0), T(0), T(0)});
  return detail::conic_from_rows(std::move(rows), "no unique rectangular hyperbola with these asymptote directions");
}

/// Vanishing determinant of the symmetric 3x3 matrix: a line pair (real or
/// complex), a double line or a single point.
template <Field T>
bool is_degenerate(const Conic<T>& k) {
  const T half = T(1) / T(2);
  const std::array<std::array<T, 3>, 3> m{{{k[0], k[1] * half, k[3] * half},
                                           {k[1] * half, k[2], k[4] * half},
                                           {k[3] * half, k[4] * half, k[5]}}};
  if constexpr (field_traits<T>::exact) return is_zero(linalg::det3<T>(m));
  else return negligible(linalg::det3<T>(m), detail::row_norm_product(m));
}

template <Field T>
bool conic_contains(const Conic<T>& k, const Point<T>& p) {
  if constexpr (field_traits<T>::exact) return is_zero(k.eval(p));
  else {
    const double x = p.x, y = p.y;
    const double s = 1 + std::fabs(x) + std::fabs(y);
    double mag = 0;
    for (const double c : k.coefficients()) mag += std::fabs(c);
    mag *= s * s;
    return negligible(k.eval(p), mag);
  }
}

template <Field T>
Point<T> conic_center(const Conic<T>& k) {
  const T det = T(4) * k[0] * k[2] - k[1] * k[1];
  if (is_zero(det)) throw error(errc::parabolic_conic, "conic has no unique center");
  // 2A x + B y + D = 0, B x + 2C y + E = 0
  return {(k[1] * k[4] - T(2) * k[2] * k[3]) / det, (k[1] * k[3] - T(2) * k[0] * k[4]) / det};
}

/// Trace of the quadratic part vanishes (perpendicular asymptotes).
template <Field T>
bool is_rectangular(const Conic<T>& k) {
  return is_zero(k[0] + k[2]);
}

/// (A1, B1, C1) ∥ (A2, B2, C2): same asymptote directions, radical-free.
template <Field T>
bool quadratic_parts_proportional(const Conic<T>& k1, const Conic<T>& k2) {
  return is_zero(k1[0] * k2[1] - k1[1] * k2[0]) && is_zero(k1[0] * k2[2] - k1[2] * k2[0]) &&
         is_zero(k1[1] * k2[2] - k1[2] * k2[1]);
}

// ---------------------------------------------------------------------------

template <Field T>
Line<T> sideline(const Triangle<T>& t, int i) {
  const auto [p, q] = t.side(i);
  return line_through(p, q);
}

/// Line of the feet of the perpendiculars from p (on the circumcircle) to
/// the three sidelines. When p is a vertex two feet coincide there and the
/// line through the two distinct feet is returned.
template <Field T>
Line<T> simson_line(const Triangle<T>& t, const Point<T>& p) {
  if (!circle_through(t.A, t.B, t.C).contains(p))
    throw error(errc::point_not_on_circumcircle, "Simson line needs a point on the circumcircle");
  const std::array<Point<T>, 3> feet{foot_of_perpendicular(p, sideline(t, 0)), foot_of_perpendicular(p, sideline(t, 1)),
                                     foot_of_perpendicular(p, sideline(t, 2))};
  if (!collinear(feet[0], feet[1], feet[2]))
    throw error(errc::degenerate_configuration, "pedal feet are not collinear");
  if (!(feet[0] == feet[1])) return line_through(feet[0], feet[1]);
  return line_through(feet[1], feet[2]);
}

template <Field T>
std::ostream& operator<<(std::ostream& os, const Point<T>& p) {
  if constexpr (std::is_same_v<T, Rational>) return os << "(" << p.x.str() << ", " << p.y.str() << ")";
  else return os << "(" << p.x << ", " << p.y << ")";
}

}  // namespace haggelab
