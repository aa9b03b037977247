#pragma once

// Triangles that are at once indirectly similar and in perspective: the
// perspector Q, the double point P of the similarity, the two rectangular
// hyperbolas through A, B, C, H, P, Q and X, Y, Z, h, P, Q, orthologic and
// paralogic centres, and one check per numbered claim.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "haggelab/centers.hpp"
#include "haggelab/hagge.hpp"
#include "haggelab/report.hpp"
#include "haggelab/similarity.hpp"

namespace haggelab {

template <Field T>
class parallel_perspective_error : public error {
 public:
  explicit parallel_perspective_error(Point<T> direction)
      : error(errc::parallel_perspective, "joins of corresponding vertices are parallel"),
        direction_(std::move(direction)) {}
  const Point<T>& direction() const { return direction_; }

 private:
  Point<T> direction_;
};

template <Field T>
std::array<Line<T>, 3> vertex_joins(const Triangle<T>& t1, const Triangle<T>& t2) {
  for (int i = 0; i < 3; ++i)
    if (t1.vertex(i) == t2.vertex(i))
      throw error(errc::degenerate_configuration, "corresponding vertices coincide");
  return {line_through(t1.A, t2.A), line_through(t1.B, t2.B), line_through(t1.C, t2.C)};
}

/// Common point of AA', BB', CC'.
template <Field T>
Point<T> perspector(const Triangle<T>& t1, const Triangle<T>& t2) {
  const auto l = vertex_joins(t1, t2);
  if (parallel(l[0], l[1])) {
    if (parallel(l[1], l[2])) throw parallel_perspective_error<T>(l[0].direction());
    throw error(errc::not_perspective, "AA' and BB' are parallel but CC' is not");
  }
  const auto q = intersect_lines(l[0], l[1]);
  if (!l[2].contains(q)) throw error(errc::not_perspective, "AA', BB', CC' are not concurrent");
  return q;
}

/// Line LMN through BC∩YZ, CA∩ZX, AB∩XY.
template <Field T>
Line<T> desargues_axis(const Triangle<T>& t1, const Triangle<T>& t2) {
  const auto l = vertex_joins(t1, t2);
  if (!concurrent(l[0], l[1], l[2])) throw error(errc::not_perspective, "triangles are not in perspective");
  std::array<Point<T>, 3> pts;
  for (int i = 0; i < 3; ++i) {
    try {
      pts[i] = intersect_lines(sideline(t1, i), sideline(t2, i));
    } catch (const error& e) {
      if (e.code() == errc::parallel_lines || e.code() == errc::coincident_lines)
        throw error(errc::parallel_sides, "corresponding sides do not meet in a single finite point");
      throw;
    }
  }
  if (!collinear(pts[0], pts[1], pts[2])) throw error(errc::degenerate_configuration, "L, M, N not collinear");
  if (!(pts[0] == pts[1])) return line_through(pts[0], pts[1]);
  return line_through(pts[1], pts[2]);
}

/// Concurrence point of the perpendiculars from the vertices of t1 onto the
/// corresponding sides of t2 (A onto YZ, B onto ZX, C onto XY).
template <Field T>
Point<T> orthology_center(const Triangle<T>& t1, const Triangle<T>& t2) {
  const std::array<Line<T>, 3> l{perpendicular_through(t1.A, sideline(t2, 0)),
                                 perpendicular_through(t1.B, sideline(t2, 1)),
                                 perpendicular_through(t1.C, sideline(t2, 2))};
  if (parallel(l[0], l[1])) throw error(errc::not_orthologic, "perpendiculars are parallel");
  const auto p = intersect_lines(l[0], l[1]);
  if (!l[2].contains(p)) throw error(errc::not_orthologic, "perpendiculars are not concurrent");
  return p;
}

/// (first, second): first is where the perpendiculars from A, B, C onto
/// YZ, ZX, XY meet (on the circumcircle of t1), second is where those from
/// X, Y, Z onto BC, CA, AB meet (on the circumcircle of t2).
template <Field T>
std::pair<Point<T>, Point<T>> orthologic_centers(const Triangle<T>& t1, const Triangle<T>& t2) {
  if (!indirectly_similar(t1, t2)) throw error(errc::not_indirectly_similar, "triangles are not indirectly similar");
  return {orthology_center(t1, t2), orthology_center(t2, t1)};
}

/// Common point of the lines through A, B, C parallel to YZ, ZX, XY.
template <Field T>
Point<T> paralogic_center(const Triangle<T>& t1, const Triangle<T>& t2) {
  const std::array<Line<T>, 3> l{parallel_through(t1.A, sideline(t2, 0)), parallel_through(t1.B, sideline(t2, 1)),
                                 parallel_through(t1.C, sideline(t2, 2))};
  if (parallel(l[0], l[1])) throw error(errc::not_paralogic, "parallels through A and B do not meet");
  const auto p = intersect_lines(l[0], l[1]);
  if (!l[2].contains(p)) throw error(errc::not_paralogic, "parallels are not concurrent");
  return p;
}

template <Field T>
struct SpeckmanConfig {
  Triangle<T> tri;    // ABC
  Triangle<T> image;  // XYZ = sim(ABC)
  IndirectSimilarity<T> sim;
  Point<T> Q;  // perspector
  Point<T> H, h;
  Conic<T> hyp, hyp_image;  // through A, B, C, H, P, Q and X, Y, Z, h, P, Q
  Point<T> M, m;            // their centres
  Point<T> S, s;            // paralogic centres of ABC w.r.t. XYZ and of XYZ w.r.t. ABC
  Point<T> D;               // orthologic centre on the circumcircle of ABC
  Point<T> D_image;         // orthologic centre on the circumcircle of XYZ
  std::string family;

  const Point<T>& P() const { return sim.center; }
};

namespace detail {
/// Rectangular hyperbola through the vertices, the orthocentre and `extra`.
/// When the orthocentre is a vertex the five points are not distinct and the
/// rectangularity condition replaces it.
template <Field T>
Conic<T> hyperbola_through(const Triangle<T>& t, const Point<T>& orth, const Point<T>& extra) {
  if (orth == t.A || orth == t.B || orth == t.C) return rectangular_hyperbola_through(t.A, t.B, t.C, extra);
  return conic_through_five(t.A, t.B, t.C, orth, extra);
}

template <Field T>
bool is_one_of(const Point<T>& p, std::initializer_list<const Point<T>*> pts) {
  for (const auto* q : pts)
    if (p == *q) return true;
  return false;
}
}  // namespace detail

template <Field T>
SpeckmanConfig<T> make_speckman_config(const Triangle<T>& tri, const Triangle<T>& image, std::string family = "pair") {
  if (!indirectly_similar(tri, image)) throw error(errc::not_indirectly_similar, "image is not an indirect copy");
  auto sim = similarity_from_pairs(tri.A, image.A, tri.B, image.B);
  const auto Q = perspector(tri, image);
  const auto H = orthocenter(tri);
  const auto h = orthocenter(image);
  const auto& P = sim.center;

  const Point<T>& extra = detail::is_one_of(Q, {&tri.A, &tri.B, &tri.C, &H}) ? P : Q;
  const Point<T>& extra_image = detail::is_one_of(Q, {&image.A, &image.B, &image.C, &h}) ? P : Q;
  auto hyp = detail::hyperbola_through(tri, H, extra);
  auto hyp_image = detail::hyperbola_through(image, h, extra_image);
  const auto M = conic_center(hyp);
  const auto m = conic_center(hyp_image);
  const auto S = paralogic_center(tri, image);
  const auto s = paralogic_center(image, tri);
  const auto [D, D_image] = orthologic_centers(tri, image);
  return {tri, image, std::move(sim), Q, H, h, std::move(hyp), std::move(hyp_image), M, m, S, s, D, D_image,
          std::move(family)};
}

/// Dilate ABC about H by k, then reflect in the line through H with slope
/// m_slope. The result is always in perspective with ABC.
template <Field T>
Triangle<T> reflect_dilate_about_orthocenter(const Triangle<T>& tri, const T& m_slope, const T& k) {
  if (is_zero(k) || is_zero(k - T(1)) || is_zero(k + T(1)))
    throw error(errc::invalid_ratio, "enlargement factor must avoid 0, 1 and -1");
  const auto H = orthocenter(tri);
  const auto axis = line_with_direction(H, Point<T>{T(1), m_slope});
  auto f = [&](const Point<T>& p) { return reflect_in_line(dilate(p, H, k), axis); };
  return {f(tri.A), f(tri.B), f(tri.C)};
}

template <Field T>
SpeckmanConfig<T> build_speckman_through_H(const Triangle<T>& tri, const T& m_slope, const T& k) {
  return make_speckman_config(tri, reflect_dilate_about_orthocenter(tri, m_slope, k), "speckman_h");
}

/// ABC with its Hagge triangle XYZ; the perspector is H.
template <Field T>
SpeckmanConfig<T> speckman_from_hagge(const HaggeConfig<T>& cfg) {
  if (cfg.point_circle) throw error(errc::degenerate_configuration, "P = H has no Hagge triangle");
  return make_speckman_config(cfg.tri, cfg.hagge_triangle(), "hagge");
}

/// An indirectly similar copy A'B'C' of ABC in perspective from Q: A' lies on
/// QA, B' on QB, C' on QC. Indirect similarity is two real linear conditions
/// on the three positions, leaving a one-parameter family; `scale` picks the
/// member: A' = Q + scale·(A − Q).
template <Field T>
Triangle<T> perspective_indirect_copy(const Triangle<T>& tri, const Point<T>& Q, const T& scale) {
  const Point<T> dA = tri.A - Q, dB = tri.B - Q, dC = tri.C - Q;
  const Point<T> u = cx::conj(tri.C - tri.A), w = cx::conj(tri.B - tri.A);
  // (B'−A')·u − (C'−A')·w = 0 with A' = Q + α dA, ...
  const Point<T> ca = cx::mul(dA, w - u), cb = cx::mul(dB, u), cc = -cx::mul(dC, w);
  const std::array<T, 3> n{cb.x * cc.y - cc.x * cb.y, cc.x * ca.y - ca.x * cc.y, ca.x * cb.y - cb.x * ca.y};
  double mag = 0;
  if constexpr (!field_traits<T>::exact)
    for (const auto& x : n) mag = std::max(mag, std::fabs(to_double(x)));
  if (negligible(n[0], mag) || negligible(n[1], mag) || negligible(n[2], mag) || is_zero(scale))
    throw error(errc::degenerate_configuration, "no proper indirect copy in perspective from Q");
  // Normalised so that A' = Q + scale (A − Q); this keeps `scale` meaningful
  // under translation and uniform scaling of the data.
  return {Q + scale * dA, Q + (scale * n[1] / n[0]) * dB, Q + (scale * n[2] / n[0]) * dC};
}

// ---------------------------------------------------------------------------
// Float recovery of the double point from the two hyperbolas.

namespace detail {
using Mat3 = std::array<std::array<double, 3>, 3>;

inline Mat3 conic_matrix(const std::array<double, 6>& k) {
  return {{{k[0], k[1] / 2, k[3] / 2}, {k[1] / 2, k[2], k[4] / 2}, {k[3] / 2, k[4] / 2, k[5]}}};
}

inline double det(const Mat3& m) { return linalg::det3<double>(m); }

/// Real roots of c3 λ³ + c2 λ² + c1 λ + c0, polished by Newton steps.
inline std::vector<double> real_cubic_roots(double c3, double c2, double c1, double c0) {
  std::vector<double> roots;
  const double scale = std::max({std::fabs(c3), std::fabs(c2), std::fabs(c1), std::fabs(c0)});
  if (scale == 0) return roots;
  if (std::fabs(c3) < 1e-12 * scale) {
    if (std::fabs(c2) < 1e-12 * scale) {
      if (std::fabs(c1) > 0) roots.push_back(-c0 / c1);
      return roots;
    }
    const double disc = c1 * c1 - 4 * c2 * c0;
    if (disc < 0) return roots;
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (c1 + std::copysign(sq, c1));
    roots.push_back(q / c2);
    if (q != 0) roots.push_back(c0 / q);
  } else {
    const double a = c2 / c3, b = c1 / c3, c = c0 / c3;
    const double q = (a * a - 3 * b) / 9, r = (2 * a * a * a - 9 * a * b + 27 * c) / 54;
    if (r * r < q * q * q) {
      const double th = std::acos(std::clamp(r / std::sqrt(q * q * q), -1.0, 1.0));
      const double sq = -2 * std::sqrt(q);
      for (int i = 0; i < 3; ++i) roots.push_back(sq * std::cos((th + 2 * std::numbers::pi * i) / 3) - a / 3);
    } else {
      const double A = -std::copysign(std::cbrt(std::fabs(r) + std::sqrt(r * r - q * q * q)), r);
      const double B = A == 0 ? 0 : q / A;
      roots.push_back(A + B - a / 3);
    }
  }
  for (double& x : roots) {
    for (int it = 0; it < 8; ++it) {
      const double f = ((c3 * x + c2) * x + c1) * x + c0;
      const double df = (3 * c3 * x + 2 * c2) * x + c1;
      if (df == 0) break;
      x -= f / df;
    }
  }
  return roots;
}

/// Split a degenerate conic matrix into its (real) lines.
inline std::vector<std::array<double, 3>> split_degenerate(const Mat3& c) {
  Mat3 adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      adj[j][i] = c[i1][j1] * c[i2][j2] - c[i1][j2] * c[i2][j1];
    }
  double cmax = 0;
  for (const auto& row : c)
    for (double v : row) cmax = std::max(cmax, std::fabs(v));
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (std::fabs(adj[i][i]) > std::fabs(adj[k][k])) k = i;
  Mat3 a = c;
  if (std::fabs(adj[k][k]) > 1e-12 * cmax * cmax) {
    if (adj[k][k] > 0) return {};  // complex conjugate pair of lines
    const double beta = std::sqrt(-adj[k][k]);
    const std::array<double, 3> p{adj[0][k] / beta, adj[1][k] / beta, adj[2][k] / beta};
    // a = c + [p]x is rank one; its rows and columns are the two lines.
    a[0][1] += p[2]; a[0][2] -= p[1];
    a[1][0] -= p[2]; a[1][2] += p[0];
    a[2][0] += p[1]; a[2][1] -= p[0];
  }
  int bi = 0, bj = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (std::fabs(a[i][j]) > std::fabs(a[bi][bj])) { bi = i; bj = j; }
  return {{a[bi][0], a[bi][1], a[bi][2]}, {a[0][bj], a[1][bj], a[2][bj]}};
}

inline double conic_eval(const std::array<double, 6>& k, double x, double y) {
  return k[0] * x * x + k[1] * x * y + k[2] * y * y + k[3] * x + k[4] * y + k[5];
}

inline std::array<double, 6> to_unit_doubles(const std::array<double, 6>& k) {
  double m = 0;
  for (double v : k) m = std::max(m, std::fabs(v));
  std::array<double, 6> out{};
  for (int i = 0; i < 6; ++i) out[i] = k[i] / m;
  return out;
}
}  // namespace detail

/// Common points of two conics other than `skip`, by reduction to a
/// degenerate member of the pencil. Float only.
inline std::vector<Point<double>> conic_intersections(const std::array<double, 6>& k1_in,
                                                      const std::array<double, 6>& k2_in) {
  const auto k1 = detail::to_unit_doubles(k1_in), k2 = detail::to_unit_doubles(k2_in);
  const auto m1 = detail::conic_matrix(k1), m2 = detail::conic_matrix(k2);
  auto pencil = [&](double lam) {
    detail::Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = m1[i][j] - lam * m2[i][j];
    return m;
  };
  // det(m1 − λ m2) is cubic in λ; interpolate it from four samples.
  const double f0 = detail::det(pencil(0)), f1 = detail::det(pencil(1)), fm1 = detail::det(pencil(-1)),
               f2 = detail::det(pencil(2));
  const double c0 = f0;
  const double c2 = (f1 + fm1) / 2 - f0;
  const double c3 = (f2 - 2 * f1 + f0 - 2 * c2) / 6 - 0.0;
  const double c1 = (f1 - fm1) / 2 - c3;

  std::vector<Point<double>> out;
  auto add = [&](double x, double y) {
    // Newton polish on the two conic equations.
    for (int it = 0; it < 20; ++it) {
      const double g1 = detail::conic_eval(k1, x, y), g2 = detail::conic_eval(k2, x, y);
      const double a11 = 2 * k1[0] * x + k1[1] * y + k1[3], a12 = k1[1] * x + 2 * k1[2] * y + k1[4];
      const double a21 = 2 * k2[0] * x + k2[1] * y + k2[3], a22 = k2[1] * x + 2 * k2[2] * y + k2[4];
      const double d = a11 * a22 - a12 * a21;
      if (std::fabs(d) < 1e-300) break;
      const double dx = (g1 * a22 - g2 * a12) / d, dy = (a11 * g2 - a21 * g1) / d;
      x -= dx;
      y -= dy;
      if (std::fabs(dx) + std::fabs(dy) < 1e-17 * (1 + std::fabs(x) + std::fabs(y))) break;
    }
    const double tol = 1e-8 * (1 + std::fabs(x) + std::fabs(y)) * (1 + std::fabs(x) + std::fabs(y));
    if (!std::isfinite(x) || !std::isfinite(y)) return;
    if (std::fabs(detail::conic_eval(k1, x, y)) > tol || std::fabs(detail::conic_eval(k2, x, y)) > tol) return;
    for (const auto& p : out)
      if (std::fabs(p.x - x) + std::fabs(p.y - y) < 1e-7 * (1 + std::fabs(x) + std::fabs(y))) return;
    out.push_back({x, y});
  };

  for (double lam : detail::real_cubic_roots(c3, c2, c1, c0)) {
    for (const auto& l : detail::split_degenerate(pencil(lam))) {
      const double a = l[0], b = l[1], c = l[2];
      const double nn = a * a + b * b;
      if (nn < 1e-20 * (nn + c * c)) continue;  // line at infinity
      const double x0 = -c * a / nn, y0 = -c * b / nn, dx = -b, dy = a;
      const double qa = k1[0] * dx * dx + k1[1] * dx * dy + k1[2] * dy * dy;
      const double qb = 2 * k1[0] * x0 * dx + k1[1] * (x0 * dy + y0 * dx) + 2 * k1[2] * y0 * dy + k1[3] * dx + k1[4] * dy;
      const double qc = detail::conic_eval(k1, x0, y0);
      if (std::fabs(qa) < 1e-14 * nn) {
        if (qb != 0) add(x0 - qc / qb * dx, y0 - qc / qb * dy);
        continue;
      }
      const double disc = qb * qb - 4 * qa * qc;
      if (disc < -1e-12 * (qb * qb + std::fabs(4 * qa * qc))) continue;
      const double sq = std::sqrt(std::max(0.0, disc));
      for (double t : {(-qb + sq) / (2 * qa), (-qb - sq) / (2 * qa)}) add(x0 + t * dx, y0 + t * dy);
    }
  }
  return out;
}

/// The common point, other than Q, of the rectangular hyperbolas through
/// A, B, C, H, Q and A', B', C', H', Q. Computed in floating point.
template <Field T>
Point<double> double_point_from_hyperbolas(const Triangle<T>& t1, const Triangle<T>& t2, const Point<T>& Q) {
  if (!indirectly_similar(t1, t2)) throw error(errc::not_indirectly_similar, "triangles are not indirectly similar");
  const auto H1 = orthocenter(t1), H2 = orthocenter(t2);
  if (Q == H1 && Q == H2)
    throw error(errc::degenerate_configuration, "Q is both orthocentres: the hyperbolas are not determined");
  // Work in coordinates centred on the circumcentre of t1 and scaled by a
  // rational factor close to its circumradius, so the float stage sees O(1)
  // values.
  const auto o = circumcenter(t1);
  const double rr = std::sqrt(to_double(circumcircle(t1).radius_sq()));
  const T scale = from_rational<T>(Rational(static_cast<long>(std::max(1.0, std::floor(rr)))));
  auto fwd = [&](const Point<T>& p) { return (p - o) / scale; };
  const Triangle<T> s1{fwd(t1.A), fwd(t1.B), fwd(t1.C)}, s2{fwd(t2.A), fwd(t2.B), fwd(t2.C)};
  // When Q is one orthocentre the five points on that side collapse to four;
  // the parallel asymptotes supply the missing condition.
  std::optional<Conic<T>> k1, k2;
  if (Q == H1) {
    k2 = detail::hyperbola_through(s2, fwd(H2), fwd(Q));
    k1 = rectangular_hyperbola_parallel_to(s1.A, s1.B, s1.C, *k2);
  } else if (Q == H2) {
    k1 = detail::hyperbola_through(s1, fwd(H1), fwd(Q));
    k2 = rectangular_hyperbola_parallel_to(s2.A, s2.B, s2.C, *k1);
  } else {
    k1 = detail::hyperbola_through(s1, fwd(H1), fwd(Q));
    k2 = detail::hyperbola_through(s2, fwd(H2), fwd(Q));
  }
  if (is_degenerate(*k1) || is_degenerate(*k2))
    throw error(errc::degenerate_configuration, "a hyperbola degenerates into a line pair");
  std::array<double, 6> d1, d2;
  for (int i = 0; i < 6; ++i) {
    d1[i] = to_double((*k1)[i]);
    d2[i] = to_double((*k2)[i]);
  }
  const double qx = to_double(fwd(Q).x), qy = to_double(fwd(Q).y);
  const double sc = to_double(scale), ox = to_double(o.x), oy = to_double(o.y);
  // The asymptotes are parallel, so the remaining two common points are at
  // infinity; rounding can bring them back as huge finite solutions.
  std::optional<Point<double>> best;
  for (const auto& p : conic_intersections(d1, d2)) {
    if (std::fabs(p.x - qx) + std::fabs(p.y - qy) <= 1e-7 || std::hypot(p.x, p.y) > 1e6) continue;
    if (!best || std::hypot(p.x, p.y) < std::hypot(best->x, best->y)) best = p;
  }
  if (!best) throw error(errc::no_real_second_intersection, "hyperbolas meet only at Q");
  return {best->x * sc + ox, best->y * sc + oy};
}

// ---------------------------------------------------------------------------

namespace detail {
/// Rational points on a conic through a known point, via chords of rational
/// slope; skips tangent and asymptotic directions.
template <Field T>
std::vector<Point<T>> points_on_conic(const Conic<T>& k, const Point<T>& base, std::size_t count) {
  static const std::array<std::pair<long, long>, 8> slopes{{{1, 3}, {-2, 7}, {3, 5}, {2, 1}, {-5, 4}, {7, 2}, {-1, 9}, {4, 11}}};
  std::vector<Point<T>> out;
  for (const auto& [n, d] : slopes) {
    if (out.size() == count) break;
    const Point<T> dir{T(1), from_rational<T>(Rational(n, d))};
    const T qa = k[0] * dir.x * dir.x + k[1] * dir.x * dir.y + k[2] * dir.y * dir.y;
    const T lin = (T(2) * k[0] * base.x + k[1] * base.y + k[3]) * dir.x + (k[1] * base.x + T(2) * k[2] * base.y + k[4]) * dir.y;
    if (is_zero(qa) || is_zero(lin)) continue;
    out.push_back(base - (lin / qa) * dir);
  }
  return out;
}

inline double angle_gap_mod_half_pi(double a, double b) {
  const double q = std::numbers::pi / 2;
  double d = std::fmod(std::fabs(a - b), q);
  return std::min(d, q - d);
}

template <Field T>
double direction_angle(const Point<T>& d) {
  return std::atan2(to_double(d.y), to_double(d.x));
}
}  // namespace detail

template <Field T>
json to_json(const SpeckmanConfig<T>& c) {
  return {{"family", c.family}, {"triangle", to_json(c.tri)}, {"image", to_json(c.image)},
          {"P", to_json(c.P())}, {"Q", to_json(c.Q)},          {"H", to_json(c.H)},
          {"h", to_json(c.h)},   {"M", to_json(c.M)},          {"m", to_json(c.m)},
          {"S", to_json(c.S)},   {"s", to_json(c.s)},          {"D", to_json(c.D)},
          {"D_image", to_json(c.D_image)}, {"hyp", to_json(c.hyp)}, {"hyp_image", to_json(c.hyp_image)}};
}

template <Field T>
CheckReport verify_speckman_suite(const SpeckmanConfig<T>& cfg) {
  CheckReport r;
  r.suite = "speckman";
  r.backend = std::string(field_traits<T>::name);
  r.instance = {{"family", cfg.family}, {"triangle", to_json(cfg.tri)}, {"image", to_json(cfg.image)}};

  const auto& t = cfg.tri;
  const auto& x = cfg.image;
  const auto& P = cfg.P();
  const auto gamma = circumcircle(t);
  const auto gamma_image = circumcircle(x);

  r.run("p1_rectangular_hyperbolas_parallel_asymptotes", "both hyperbolas are rectangular with parallel asymptotes", [&] {
    return is_rectangular(cfg.hyp) && is_rectangular(cfg.hyp_image) && conic_contains(cfg.hyp, cfg.H) &&
           conic_contains(cfg.hyp, P) && conic_contains(cfg.hyp, cfg.Q) && conic_contains(cfg.hyp_image, cfg.h) &&
           conic_contains(cfg.hyp_image, P) && conic_contains(cfg.hyp_image, cfg.Q) &&
           quadratic_parts_proportional(cfg.hyp, cfg.hyp_image);
  });

  r.run("p2_double_lines_parallel_to_bisectors", "axis of the similarity bisects corresponding side directions", [&] {
    const double axis = cfg.sim.axis_angle();
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
      const auto [p, q] = t.side(i);
      const auto [u, v] = x.side(i);
      const double bis = 0.5 * (detail::direction_angle(q - p) + detail::direction_angle(v - u));
      worst = std::max(worst, detail::angle_gap_mod_half_pi(axis, bis));
    }
    // asymptotes of a rectangular hyperbola: tan 2φ = −2A / B
    const double asym = 0.5 * std::atan2(-2 * to_double(cfg.hyp[0]), to_double(cfg.hyp[1]));
    worst = std::max(worst, detail::angle_gap_mod_half_pi(axis, asym));
    return worst <= float_check_tolerance;
  });
  r.checks.back().detail = "float, tolerance 1e-9 rad";

  const auto Js = detail::points_on_conic(cfg.hyp, t.A, 2);
  r.run("p3_corresponding_points_collinear_with_double_point", "a point, the half-turned image of its partner, and P are collinear", [&] {
    if (Js.empty()) throw error(errc::degenerate_configuration, "no sample points on the hyperbola");
    for (const auto& J : Js) {
      const auto j = cfg.sim(J);
      const auto Jh = half_turn(J, cfg.M), jh = half_turn(j, cfg.m);
      if (!conic_contains(cfg.hyp_image, j) || !collinear(j, Jh, P) || !collinear(J, jh, P)) return false;
    }
    return true;
  });

  r.run("p4_half_turned_triangle_swaps_double_point_and_perspector", "ABC turned about M is perspective with XYZ from P, with double point Q", [&] {
    const Triangle<T> t0{half_turn(t.A, cfg.M), half_turn(t.B, cfg.M), half_turn(t.C, cfg.M)};
    const auto s0 = similarity_from_pairs(t0.A, x.A, t0.B, x.B);
    return perspector(x, t0) == P && s0(t0.C) == x.C && s0.center == cfg.Q && orthocenter(t0) == cfg.D;
  });

  r.run("p5_corresponding_points_concyclic", "J, j and their half-turns about M, m are concyclic", [&] {
    if (Js.empty()) throw error(errc::degenerate_configuration, "no sample points on the hyperbola");
    for (const auto& J : Js) {
      const auto j = cfg.sim(J);
      if (!concyclic(J, j, half_turn(J, cfg.M), half_turn(j, cfg.m))) return false;
    }
    return true;
  });

  r.run("p7_orthocentres_collinear_with_perspector", "H, h and Q are collinear",
        [&] { return collinear(cfg.H, cfg.h, cfg.Q); });

  r.run("p9_orthologic_centre_to_orthocentre_through_double_point",
        "h, D, P collinear and H, D', P collinear",
        [&] { return collinear(cfg.h, cfg.D, P) && collinear(cfg.H, cfg.D_image, P); });

  const auto axis = desargues_axis(t, x);
  r.run("p10_axis_perpendicular_to_orthologic_line", "Desargues axis is perpendicular to the line of orthologic centres",
        [&] { return perpendicular(axis, line_through(cfg.D, cfg.D_image)); });

  r.run("p11_paralogic_centres_on_circumcircles", "paralogic centres lie on the circumcircles",
        [&] { return gamma.contains(cfg.S) && gamma_image.contains(cfg.s); });

  r.run("p12_orthological_diameters", "orthologic and paralogic centres are antipodal on each circumcircle", [&] {
    return collinear(cfg.D, cfg.S, gamma.center()) && collinear(cfg.D_image, cfg.s, gamma_image.center());
  });

  try {
    const auto R = intersect_lines(line_through(cfg.D, cfg.S), line_through(cfg.D_image, cfg.s));
    r.record("p13_recorded_memberships", "memberships of s and R in both hyperbolas (recorded)",
             {{"R", to_json(R)},
              {"R_on_hyp", conic_contains(cfg.hyp, R)},
              {"R_on_hyp_image", conic_contains(cfg.hyp_image, R)},
              {"s_on_hyp", conic_contains(cfg.hyp, cfg.s)},
              {"S_on_hyp_image", conic_contains(cfg.hyp_image, cfg.S)}});
  } catch (const error& e) {
    r.record("p13_recorded_memberships", "memberships of s and R in both hyperbolas (recorded)",
             {{"error", e.what()}});
  }

  const auto medial = medial_triangle(t);
  r.run("p14_medial_perpendiculars_meet_at_midpoint_HS", "perpendiculars from the side midpoints meet at the midpoint of HS",
        [&] { return orthology_center(medial, x) == midpoint(cfg.H, cfg.S); });

  r.run("p15_medial_paralogic_centre_is_midpoint_DH", "paralogic centre of the medial triangle is the midpoint of DH",
        [&] { return paralogic_center(medial, x) == midpoint(cfg.D, cfg.H) && midpoint(cfg.D, cfg.H) == cfg.M; });

  const Triangle<T> xr{reflect_in_line(x.A, axis), reflect_in_line(x.B, axis), reflect_in_line(x.C, axis)};
  r.run("p16_reflected_image_perspector_on_circumcircle", "XYZ reflected in the axis is perspective with ABC from a point of the circumcircle", [&] {
    const auto v = perspector(t, xr);
    const auto other = second_intersection(gamma, line_through(cfg.D, cfg.D_image), cfg.D);
    if (v == other) return true;
    if (v == cfg.D) {
      r.note += "p16: vertex of perspective is D itself; ";
      return true;
    }
    return false;
  });

  r.run("p17_axis_bisects_paralogic_centres", "Desargues axis bisects the segment joining the paralogic centres",
        [&] { return axis.contains(midpoint(cfg.S, cfg.s)); });

  r.run("p18_radical_centre_on_axis", "the axis point on the radical axis has equal power to all three circles", [&] {
    const auto gamma_r = circumcircle(xr);
    const auto E = intersect_lines(axis, radical_axis(gamma, gamma_r));
    // E has equal power with respect to all three circles; when their centres
    // are collinear there is no radical centre but the three axes coincide.
    const T pw = gamma.power(E);
    const auto through_e = perpendicular_through(E, line_through(gamma.center(), gamma_image.center()));
    return field_equal(pw, gamma_image.power(E)) && field_equal(pw, gamma_r.power(E)) &&
           through_e == radical_axis(gamma, gamma_image);
  });

  r.run("orthologic_centres_on_circumcircles", "orthologic centres lie on the circumcircles",
        [&] { return gamma.contains(cfg.D) && gamma_image.contains(cfg.D_image); });

  if (cfg.Q == cfg.H && cfg.Q == cfg.h) {
    r.skip("s3_double_point_from_hyperbolas", "second common point of the hyperbolas is the double point",
           "Q is both orthocentres: the hyperbolas are not determined");
  } else if (is_degenerate(cfg.hyp) || is_degenerate(cfg.hyp_image)) {
    r.skip("s3_double_point_from_hyperbolas", "second common point of the hyperbolas is the double point",
           "a hyperbola degenerates into a line pair");
  } else {
  r.run("s3_double_point_from_hyperbolas", "second common point of the hyperbolas is the double point", [&] {
    const auto p = double_point_from_hyperbolas(t, x, cfg.Q);
    const double px = to_double(P.x), py = to_double(P.y);
    const double scale = std::max({1.0, std::sqrt(to_double(gamma.radius_sq())), std::hypot(px, py)});
    return std::hypot(p.x - px, p.y - py) <= float_check_tolerance * scale;
  });
  r.checks.back().detail = "float, tolerance 1e-9 relative to max(1, R, |P|)";
  }

  if (P == cfg.H) {
    r.skip("s3_rotation_about_double_point", "XYZ and the Hagge triangle of P differ by a rotation about P",
           "P = H: no Hagge triangle");
  } else {
    r.run("s3_rotation_about_double_point", "XYZ and the Hagge triangle of P differ by a rotation about P", [&] {
      const auto hg = build_hagge(t, P);
      const auto r0 = cx::div(x.A - P, hg.X - P);
      return cx::div(x.B - P, hg.Y - P) == r0 && cx::div(x.C - P, hg.Z - P) == r0;
    });
  }
  return r;
}

/// Lines through T parallel to the altitudes of tri meet c again at X, Y, Z.
template <Field T>
Triangle<T> similar_from_circle(const Triangle<T>& tri, const Circle<T>& c, const Point<T>& Tp) {
  if (!c.contains(Tp)) throw error(errc::point_not_on_circle, "T must lie on the circle");
  auto hit = [&](int i) { return second_intersection(c, perpendicular_through(Tp, sideline(tri, i)), Tp); };
  return {hit(0), hit(1), hit(2)};
}

template <Field T>
CheckReport verify_theorem_7_1(const Triangle<T>& tri, const Circle<T>& c, const Point<T>& Tp) {
  CheckReport r;
  r.suite = "orthologic";
  r.backend = std::string(field_traits<T>::name);
  r.instance = {{"triangle", to_json(tri)}, {"circle", to_json(c)}, {"T", to_json(Tp)}};
  const auto img = similar_from_circle(tri, c, Tp);
  r.instance["image"] = to_json(img);
  r.run("indirectly_similar", "XYZ is an indirect copy of ABC",
        [&] { return indirectly_similar(tri, img); });
  r.run("perpendiculars_from_ABC_concurrent", "perpendiculars from A, B, C to YZ, ZX, XY are concurrent", [&] {
    return concurrent(perpendicular_through(tri.A, sideline(img, 0)), perpendicular_through(tri.B, sideline(img, 1)),
                      perpendicular_through(tri.C, sideline(img, 2)));
  });
  r.run("perpendiculars_from_XYZ_concurrent_at_T", "perpendiculars from X, Y, Z to BC, CA, AB meet at T", [&] {
    return orthology_center(img, tri) == Tp;
  });
  r.run("orthologic_centres_on_circumcircles", "orthologic centres lie on the circumcircles", [&] {
    const auto [first, second] = orthologic_centers(tri, img);
    return circumcircle(tri).contains(first) && circumcircle(img).contains(second);
  });
  return r;
}

}  // namespace haggelab
