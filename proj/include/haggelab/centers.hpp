#pragma once

// Classical triangle centres, circles and isogonal conjugation.

#include <cmath>
#include <string>

#include "haggelab/geom.hpp"

namespace haggelab {

/// Raised by isogonal_conjugate for a point on the circumcircle. The
/// conjugate is then a point at infinity: the cevians through it are all
/// parallel to direction().
template <Field T>
class on_circumcircle_error : public error {
 public:
  explicit on_circumcircle_error(Point<T> direction)
      : error(errc::on_circumcircle, "isogonal conjugate lies on the line at infinity"), direction_(std::move(direction)) {}
  const Point<T>& direction() const { return direction_; }

 private:
  Point<T> direction_;
};

template <Field T>
Point<T> centroid(const Triangle<T>& t) {
  return (t.A + t.B + t.C) / T(3);
}

template <Field T>
Circle<T> circumcircle(const Triangle<T>& t) {
  return circle_through(t.A, t.B, t.C);
}

template <Field T>
Point<T> circumcenter(const Triangle<T>& t) {
  return circumcircle(t).center();
}

/// Altitude through vertex i, perpendicular to the opposite side.
template <Field T>
Line<T> altitude(const Triangle<T>& t, int i) {
  return perpendicular_through(t.vertex(i), sideline(t, i));
}

/// Intersection of two altitudes; independent of the circumcentre.
template <Field T>
Point<T> orthocenter(const Triangle<T>& t) {
  return intersect_lines(altitude(t, 0), altitude(t, 1));
}

template <Field T>
Point<T> nine_point_center(const Triangle<T>& t) {
  return midpoint(circumcenter(t), orthocenter(t));
}

/// Vertices are the midpoints of BC, CA, AB, in that order.
template <Field T>
Triangle<T> medial_triangle(const Triangle<T>& t) {
  return {midpoint(t.B, t.C), midpoint(t.C, t.A), midpoint(t.A, t.B)};
}

/// Circle through the side midpoints.
template <Field T>
Circle<T> nine_point_circle(const Triangle<T>& t) {
  return circumcircle(medial_triangle(t));
}

template <Field T>
Line<T> euler_line(const Triangle<T>& t) {
  const auto o = circumcenter(t);
  const auto h = orthocenter(t);
  if (o == h) throw error(errc::equilateral_euler_line, "G = O = H");
  return line_through(o, h);
}

/// Squared side lengths a², b², c² opposite A, B, C.
template <Field T>
std::array<T, 3> side_lengths_sq(const Triangle<T>& t) {
  return {distance_sq(t.B, t.C), distance_sq(t.C, t.A), distance_sq(t.A, t.B)};
}

template <Field T>
Point<T> from_barycentric(const Triangle<T>& t, const T& u, const T& v, const T& w) {
  return (u * t.A + v * t.B + w * t.C) / (u + v + w);
}

/// Barycentric (a²/u : b²/v : c²/w) for P = (u : v : w).
template <Field T>
Point<T> isogonal_conjugate(const Triangle<T>& t, const Point<T>& p) {
  const T u = orient(p, t.B, t.C), v = orient(t.A, p, t.C), w = orient(t.A, t.B, p);
  const double area = field_traits<T>::exact ? 0.0 : std::fabs(to_double(orient(t.A, t.B, t.C)));
  if (negligible(u, area) || negligible(v, area) || negligible(w, area))
    throw error(errc::on_sideline, "point lies on a sideline");
  const auto [a2, b2, c2] = side_lengths_sq(t);
  const T wa = a2 * v * w, wb = b2 * u * w, wc = c2 * u * v;
  const T sum = wa + wb + wc;
  const double mag =
      field_traits<T>::exact ? 0.0 : std::fabs(to_double(wa)) + std::fabs(to_double(wb)) + std::fabs(to_double(wc));
  if (negligible(sum, mag))
    throw on_circumcircle_error<T>(wa * t.A + wb * t.B + wc * t.C);
  return (wa * t.A + wb * t.B + wc * t.C) / sum;
}

/// Barycentric (a² : b² : c²).
template <Field T>
Point<T> symmedian_point(const Triangle<T>& t) {
  const auto [a2, b2, c2] = side_lengths_sq(t);
  return from_barycentric(t, a2, b2, c2);
}

namespace detail {
template <Field T>
std::array<T, 3> side_lengths(const Triangle<T>& t) {
  const auto sq = side_lengths_sq(t);
  try {
    return {field_sqrt(sq[0]), field_sqrt(sq[1]), field_sqrt(sq[2])};
  } catch (const error& e) {
    if (e.code() == errc::irrational_in_rational_backend)
      throw error(errc::rational_backend_unsupported, "side lengths are irrational; use the float backend");
    throw;
  }
}
}  // namespace detail

/// Exact for Rational only when all side lengths are rational.
template <Field T>
Point<T> incenter(const Triangle<T>& t) {
  const auto [a, b, c] = detail::side_lengths(t);
  return from_barycentric(t, a, b, c);
}

template <Field T>
Point<T> nagel_point(const Triangle<T>& t) {
  const auto [a, b, c] = detail::side_lengths(t);
  const T s = (a + b + c) / T(2);
  return from_barycentric(t, s - a, s - b, s - c);
}

template <Field T>
struct CenterSet {
  Point<T> G, O, H, T9, K;
};

template <Field T>
CenterSet<T> triangle_centers(const Triangle<T>& t) {
  CenterSet<T> c{centroid(t), circumcenter(t), orthocenter(t), {}, symmedian_point(t)};
  c.T9 = midpoint(c.O, c.H);
  return c;
}

}  // namespace haggelab
