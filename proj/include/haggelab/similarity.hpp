#pragma once

// Orientation-reversing similarities z ↦ a·conj(z) + b, with points read as
// complex numbers x + iy.

#include <cmath>
#include <numbers>
#include <optional>

#include "haggelab/geom.hpp"

namespace haggelab {

namespace cx {
template <Field T> Point<T> mul(const Point<T>& p, const Point<T>& q) { return {p.x * q.x - p.y * q.y, p.x * q.y + p.y * q.x}; }
template <Field T> Point<T> conj(const Point<T>& p) { return {p.x, -p.y}; }
template <Field T> Point<T> div(const Point<T>& p, const Point<T>& q) { return mul(p, conj(q)) / norm_sq(q); }
}  // namespace cx

template <Field T>
struct IndirectSimilarity {
  Point<T> multiplier;  // a
  Point<T> offset;      // b
  Point<T> center;      // unique fixed point
  T ratio_sq;           // |a|²

  /// Requires |a|² ≠ 1; throws RatioOne otherwise.
  static IndirectSimilarity make(Point<T> a, Point<T> b) {
    T r2 = norm_sq(a);
    if (is_zero(r2)) throw error(errc::degenerate_pair, "zero multiplier");
    // z = a conj(z) + b  <=>  (1 - ar) x - ai y = br,  -ai x + (1 + ar) y = bi
    const T det = T(1) - r2;
    if (is_zero(det)) throw error(errc::ratio_one, "|a| = 1: no unique double point");
    Point<T> c{((T(1) + a.x) * b.x + a.y * b.y) / det, (a.y * b.x + (T(1) - a.x) * b.y) / det};
    return {std::move(a), std::move(b), std::move(c), std::move(r2)};
  }

  Point<T> operator()(const Point<T>& p) const { return cx::mul(multiplier, cx::conj(p)) + offset; }

  /// The direct similarity z ↦ α z + β obtained by applying this map twice.
  std::pair<Point<T>, Point<T>> squared() const {
    return {cx::mul(multiplier, cx::conj(multiplier)), cx::mul(multiplier, cx::conj(offset)) + offset};
  }

  /// Direction angle (radians, in [0, π)) of the reflection axis through the
  /// centre. Irrational in general, so float only.
  double axis_angle() const {
    double t = 0.5 * std::atan2(to_double(multiplier.y), to_double(multiplier.x));
    if (t < 0) t += std::numbers::pi;
    return t;
  }
};

/// Coefficients (a, b) of the conjugate-linear map with A ↦ A1, B ↦ B1.
template <Field T>
std::pair<Point<T>, Point<T>> conjugate_map_from_pairs(const Point<T>& A, const Point<T>& A1, const Point<T>& B,
                                                       const Point<T>& B1) {
  if (A == B || A1 == B1) throw error(errc::degenerate_pair, "pairs must have distinct points");
  Point<T> a = cx::div(A1 - B1, cx::conj(A - B));
  Point<T> b = A1 - cx::mul(a, cx::conj(A));
  return {std::move(a), std::move(b)};
}

template <Field T>
IndirectSimilarity<T> similarity_from_pairs(const Point<T>& A, const Point<T>& A1, const Point<T>& B,
                                            const Point<T>& B1) {
  auto [a, b] = conjugate_map_from_pairs(A, A1, B, B1);
  return IndirectSimilarity<T>::make(std::move(a), std::move(b));
}

template <Field T>
Point<T> apply(const IndirectSimilarity<T>& s, const Point<T>& p) {
  return s(p);
}

/// X, Y, Z is the image of A, B, C (in that correspondence) under some
/// orientation-reversing similarity: (Y−X)·conj(C−A) = (Z−X)·conj(B−A).
template <Field T>
bool indirectly_similar(const Triangle<T>& t1, const Triangle<T>& t2) {
  return cx::mul(t2.B - t2.A, cx::conj(t1.C - t1.A)) == cx::mul(t2.C - t2.A, cx::conj(t1.B - t1.A));
}

/// Same test for orientation-preserving similarity.
template <Field T>
bool directly_similar(const Triangle<T>& t1, const Triangle<T>& t2) {
  return cx::mul(t2.B - t2.A, t1.C - t1.A) == cx::mul(t2.C - t2.A, t1.B - t1.A);
}

}  // namespace haggelab
