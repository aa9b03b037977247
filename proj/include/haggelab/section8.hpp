#pragma once

// Closed-form model of the case where the double point of the indirect
// similarity is the orthocentre. The triangle is A(−2−2vw, 0), B(−2vw, 2v),
// C(−2vw, 2w), so H is the origin; XYZ is ABC dilated by k about H and then
// reflected in y = mx. Each printed closed form is compared against the
// constructive pipeline; mismatches are recorded, never patched.

#include <functional>
#include <string>

#include "haggelab/speckman.hpp"

namespace haggelab {

namespace detail {
template <Field T>
void audit_value(CheckReport& r, std::string eq, const std::function<json()>& printed,
                 const std::function<json()>& constructed, const std::function<bool()>& same, std::string note = {}) {
  AuditEntry a{std::move(eq), false, nullptr, nullptr, std::move(note)};
  try {
    a.match = same();
  } catch (const error& e) {
    a.match = false;
    a.note += (a.note.empty() ? "" : "; ") + std::string(e.what());
  }
  if (!a.match) {
    try { a.printed = printed(); } catch (const error& e) { a.printed = std::string("undefined: ") + e.what(); }
    try { a.constructed = constructed(); } catch (const error& e) { a.constructed = e.what(); }
  }
  r.audit.push_back(std::move(a));
}

template <Field T>
void audit_line(CheckReport& r, std::string eq, const std::function<Line<T>()>& printed, const Line<T>& built,
                std::string note = {}) {
  audit_value<T>(
      r, std::move(eq), [&] { return to_json(printed()); }, [&] { return to_json(built); },
      [&] { return printed() == built; }, std::move(note));
}

template <Field T>
void audit_point(CheckReport& r, std::string eq, const std::function<Point<T>()>& printed, const Point<T>& built) {
  audit_value<T>(
      r, std::move(eq), [&] { return to_json(printed()); }, [&] { return to_json(built); },
      [&] { return printed() == built; });
}

template <Field T>
void audit_conic(CheckReport& r, std::string eq, const std::function<Conic<T>()>& printed, const Conic<T>& built) {
  audit_value<T>(
      r, std::move(eq), [&] { return to_json(printed()); }, [&] { return to_json(built); },
      [&] { return printed() == built; });
}
}  // namespace detail

template <Field T>
CheckReport section8_oracle(const T& v, const T& w, const T& m, const T& k) {
  const T one(1), two(2), four(4);
  if (field_equal(v, w)) throw error(errc::degenerate_parameters, "v = w makes A, B, C collinear");
  if (is_zero(v) || is_zero(w) || is_zero(one + v * w))
    throw error(errc::degenerate_parameters, "v = 0, w = 0 or vw = -1 puts H at a vertex");
  if (is_zero(k) || field_equal(k, one) || field_equal(k, -one))
    throw error(errc::degenerate_parameters, "k must avoid 0, 1 and -1");

  CheckReport r;
  r.suite = "section8";
  r.backend = std::string(field_traits<T>::name);
  r.instance = {{"v", scalar_text(v)}, {"w", scalar_text(w)}, {"m", scalar_text(m)}, {"k", scalar_text(k)}};

  const T vw = v * w, q = one + m * m, n = one - m * m;
  const Triangle<T> tri{{-two - two * vw, T(0)}, {-two * vw, two * v}, {-two * vw, two * w}};
  const Point<T> origin{T(0), T(0)};

  std::optional<SpeckmanConfig<T>> cfg;
  try {
    cfg = build_speckman_through_H(tri, m, k);
  } catch (const error& e) {
    throw error(errc::degenerate_parameters, std::string("construction failed: ") + e.what());
  }
  const auto& img = cfg->image;
  const auto gamma = circumcircle(tri);
  const auto gamma_x = circumcircle(img);
  const auto H = cfg->H;

  auto second_on = [](const Circle<T>& c, const Point<T>& from, const Point<T>& through) {
    return second_intersection(c, line_through(from, through), from);
  };
  const auto D = second_on(gamma, tri.A, H), E = second_on(gamma, tri.B, H), F = second_on(gamma, tri.C, H);
  const auto U = second_on(gamma_x, img.A, H), V = second_on(gamma_x, img.B, H), W = second_on(gamma_x, img.C, H);

  r.instance["triangle"] = to_json(tri);
  r.instance["image"] = to_json(img);
  r.instance["Q"] = to_json(cfg->Q);
  r.instance["D"] = to_json(D);
  r.instance["E"] = to_json(E);
  r.instance["F"] = to_json(F);
  r.instance["U"] = to_json(U);
  r.instance["V"] = to_json(V);
  r.instance["W"] = to_json(W);
  r.instance["circle_XYZ"] = to_json(Conic<T>::from_circle(gamma_x));

  // Constructive facts about the model.
  r.run("orthocentre_is_origin", "H is the origin", [&] { return H == origin; });
  r.run("circumcentre_closed_form", "O = (-1-3vw, v+w)",
        [&] { return gamma.center() == Point<T>{-one - T(3) * vw, v + w}; });
  r.run("circumradius_closed_form", "R^2 = (1+v^2)(1+w^2)",
        [&] { return field_equal(gamma.radius_sq(), (one + v * v) * (one + w * w)); });
  r.run("double_point_is_orthocentre", "double point of the similarity is H", [&] { return cfg->P() == H; });
  r.run("triangles_in_perspective", "XYZ is an indirect copy of ABC and in perspective with it", [&] {
    return indirectly_similar(tri, img) && concurrent(line_through(tri.A, img.A), line_through(tri.B, img.B),
                                                      line_through(tri.C, img.C));
  });
  r.run("UVW_image_of_DEF", "the similarity sends D, E, F to U, V, W", [&] {
    return cfg->sim(D) == U && cfg->sim(E) == V && cfg->sim(F) == W;
  });
  r.run("parallels_through_DEF_meet_cevians_at_UVW", "parallels to AX, BY, CZ through D, E, F pass through U, V, W", [&] {
    return parallel_through(D, line_through(tri.A, img.A)).contains(U) &&
           parallel_through(E, line_through(tri.B, img.B)).contains(V) &&
           parallel_through(F, line_through(tri.C, img.C)).contains(W);
  });
  r.run("orthologic_centres_on_circles_and_hyperbolas", "orthologic centres lie on the circumcircles and the hyperbolas", [&] {
    return gamma.contains(cfg->D) && gamma_x.contains(cfg->D_image) && conic_contains(cfg->hyp, cfg->D) &&
           conic_contains(cfg->hyp_image, cfg->D_image) && conic_contains(cfg->hyp, cfg->Q);
  });

  // Printed closed forms.
  using detail::audit_conic, detail::audit_line, detail::audit_point;
  audit_line<T>(r, "8.1", [&] { return Line<T>(one, T(0), two * vw); }, sideline(tri, 0));
  audit_line<T>(r, "8.2", [&] { return Line<T>(-w, one, T(0)); }, sideline(tri, 1));
  audit_line<T>(r, "8.3", [&] { return Line<T>(-v, one, -two * v * (one + vw)); }, sideline(tri, 2));
  audit_line<T>(r, "8.4", [&] { return Line<T>(T(0), one, T(0)); }, line_through(tri.A, H),
                "given as v = 0; read as y = 0");
  audit_line<T>(r, "8.5", [&] { return Line<T>(one, w, T(0)); }, line_through(tri.B, H));
  audit_line<T>(r, "8.6", [&] { return Line<T>(one, v, T(0)); }, line_through(tri.C, H));
  audit_conic<T>(
      r, "8.7",
      [&] { return Conic<T>({one, T(0), one, two * (one + T(3) * vw), -two * (v + w), T(8) * vw * (one + vw)}); },
      Conic<T>::from_circle(gamma));

  audit_point<T>(r, "X", [&] { return Point<T>{-two * k * n * (one + vw), -four * k * m * (one + vw)} / q; }, img.A);
  audit_point<T>(
      r, "Y", [&] { return (two * k * v / q) * Point<T>{two * m - w * n, -two * m * w - n}; }, img.B);
  audit_point<T>(
      r, "Z", [&] { return (two * k * w / q) * Point<T>{two * m - v * n, -two * m * v - n}; }, img.C);

  audit_line<T>(
      r, "8.8", [&] { return Line<T>(two * k * m, q - k * n, four * k * m * (one + vw)); },
      line_through(tri.A, img.A));
  audit_line<T>(
      r, "8.9",
      [&] {
        return Line<T>(q + k * (one + two * w * m - m * m), w * q - k * (w - two * m - w * m * m),
                       -four * k * v * (m * (one - w * w) - w * n));
      },
      line_through(tri.B, img.B));
  audit_line<T>(
      r, "8.10",
      [&] {
        return Line<T>(q + k * (one + two * v * m - m * m), v * q - k * (v - two * m - v * m * m),
                       -four * k * w * (m * (one - v * v) - v * n));
      },
      line_through(tri.C, img.C));

  audit_point<T>(
      r, "8.11",
      [&] {
        const T m2 = m * m, m3 = m2 * m, m4 = m2 * m2;
        const T pf = four * k / ((one - k * k) * q * q);
        const T x = k * (m4 * vw + m3 * (v + w) + two * m2 - m * (v + w) + vw) + m4 * vw + m3 * (v + w) + m * (v + w) - vw;
        const T y = -m * (k * (m2 * (vw - one) + two * m * (v + w) - vw + one) + q * (one + vw));
        return Point<T>{pf * x, pf * y};
      },
      cfg->Q);
  audit_conic<T>(
      r, "8.12",
      [&] {
        const T m2 = m * m;
        return Conic<T>({q, T(0), q, -two * k * (m2 * (T(3) * vw + one) + two * m * (v + w) - (one + T(3) * vw)),
                         -two * k * (m2 * (v + w) - two * m * (T(3) * vw + one) - (v + w)),
                         T(8) * k * k * vw * (one + vw) * q});
      },
      Conic<T>::from_circle(gamma_x));

  audit_line<T>(r, "8.13", [&] { return Line<T>(-two * m, n, T(0)); }, line_through(img.A, H));
  audit_line<T>(
      r, "8.14", [&] { return Line<T>(-(m * m - two * m * w - one), m * m * w + two * m - w, T(0)); },
      line_through(img.B, H));
  audit_line<T>(
      r, "8.15", [&] { return Line<T>(-(m * m - two * m * v - one), m * m * v + two * m - v, T(0)); },
      line_through(img.C, H));
  audit_line<T>(r, "8.16", [&] { return Line<T>(T(0), one, T(0)); }, line_through(tri.A, H));
  audit_line<T>(r, "8.17", [&] { return Line<T>(one, w, T(0)); }, line_through(tri.B, H));
  audit_line<T>(r, "8.18", [&] { return Line<T>(one, v, T(0)); }, line_through(tri.C, H));

  audit_point<T>(r, "U", [&] { return (four * k / q) * Point<T>{-n, -two * m}; }, U);
  audit_point<T>(
      r, "V", [&] { return (four * k * w * (one + vw) / (q * (one + w * w))) * Point<T>{m * m * w + two * m - w, m * m - two * m * w - one}; },
      V);
  audit_point<T>(
      r, "W", [&] { return (four * k * v * (one + vw) / (q * (one + v * v))) * Point<T>{m * m * v + two * m - v, m * m - two * m * v - one}; },
      W);
  audit_point<T>(r, "D", [&] { return Point<T>{-four * vw, T(0)}; }, D);
  audit_point<T>(r, "E", [&] { return (four * w * (one + vw) / (one + w * w)) * Point<T>{-w, one}; }, E);
  audit_point<T>(r, "F", [&] { return (four * v * (one + vw) / (one + w * w)) * Point<T>{-v, one}; }, F);
  audit_line<T>(
      r, "8.19", [&] { return Line<T>(two * k * m, q - k * n, T(8) * k * m * vw); },
      parallel_through(D, line_through(tri.A, img.A)));
  return r;
}

inline CheckReport section8_oracle(const Scalar& v, const Scalar& w, const Scalar& m, const Scalar& k) {
  const auto kind = v.kind();
  if (w.kind() != kind || m.kind() != kind || k.kind() != kind)
    throw error(errc::mixed_backend, "section8 parameters use different backends");
  if (kind == backend::rational) return section8_oracle(v.as<Rational>(), w.as<Rational>(), m.as<Rational>(), k.as<Rational>());
  return section8_oracle(v.as<double>(), w.as<double>(), m.as<double>(), k.as<double>());
}

}  // namespace haggelab
