#pragma once

// SVG 1.1 rendering of a script's draw list. World coordinates are mapped to
// a viewport of the requested width whose box is the bounding box of the
// bounded drawables plus a 5% margin on every side (y up). Lines are clipped
// to the box, conics are sampled with 256 segments per branch and clipped by
// a clip path. Numbers are printed with %.3f so output is byte-stable.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "haggelab/script.hpp"

namespace haggelab {

struct SvgOptions {
  double width = 640;
};

namespace svg {

inline constexpr int segments_per_branch = 256;

inline std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

using P2 = std::array<double, 2>;

struct Box {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool empty = true;
  void add(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) return;
    if (empty) {
      x0 = x1 = x;
      y0 = y1 = y;
      empty = false;
      return;
    }
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
};

/// Segment of the line a x + b y + c = 0 inside the box, if any.
inline std::optional<std::array<P2, 2>> clip_line(double a, double b, double c, const Box& box) {
  std::vector<P2> hits;
  auto keep = [&](double x, double y) {
    const double tol = 1e-9 * std::max(box.x1 - box.x0, box.y1 - box.y0);
    if (x >= box.x0 - tol && x <= box.x1 + tol && y >= box.y0 - tol && y <= box.y1 + tol) hits.push_back({x, y});
  };
  if (b != 0) {
    keep(box.x0, -(a * box.x0 + c) / b);
    keep(box.x1, -(a * box.x1 + c) / b);
  }
  if (a != 0) {
    keep(-(b * box.y0 + c) / a, box.y0);
    keep(-(b * box.y1 + c) / a, box.y1);
  }
  if (hits.size() < 2) return std::nullopt;
  // The two hits farthest apart along the line direction (-b, a).
  auto along = [&](const P2& p) { return -b * p[0] + a * p[1]; };
  const auto [lo, hi] = std::minmax_element(hits.begin(), hits.end(),
                                            [&](const P2& p, const P2& q) { return along(p) < along(q); });
  return std::array<P2, 2>{*lo, *hi};
}

/// Branches of the conic as world-space polylines covering `box`.
inline std::vector<std::vector<P2>> sample_conic(const std::array<double, 6>& k, const Box& box,
                                                 std::vector<std::array<double, 3>>& lines) {
  const double a = k[0], b = k[1], c = k[2], d = k[3], e = k[4], f = k[5];
  const double theta = 0.5 * std::atan2(b, a - c);
  const double cs = std::cos(theta), sn = std::sin(theta);
  const P2 u1{cs, sn}, u2{-sn, cs};
  const double l1 = a * cs * cs + b * cs * sn + c * sn * sn;
  const double l2 = a * sn * sn - b * cs * sn + c * cs * cs;
  const double span = std::hypot(box.x1 - box.x0, box.y1 - box.y0);
  const double scale = std::max(std::fabs(l1), std::fabs(l2));
  std::vector<std::vector<P2>> out;
  const int n = segments_per_branch;

  auto at = [](const P2& o, const P2& p, const P2& q, double s, double t) -> P2 {
    return {o[0] + s * p[0] + t * q[0], o[1] + s * p[1] + t * q[1]};
  };
  // A line through o with direction dir, as coefficients.
  auto line_dir = [&](const P2& o, const P2& dir) {
    lines.push_back({dir[1], -dir[0], dir[0] * o[1] - dir[1] * o[0]});
  };

  if (std::fabs(l1 * l2) > 1e-12 * scale * scale) {
    const double det = 4 * a * c - b * b;
    const P2 o{(b * e - 2 * c * d) / det, (b * d - 2 * a * e) / det};
    const double fc = (d * o[0] + e * o[1]) / 2 + f;
    const double reach = span + std::hypot(o[0] - (box.x0 + box.x1) / 2, o[1] - (box.y0 + box.y1) / 2);
    if (std::fabs(fc) <= 1e-12 * std::max(1.0, scale * reach * reach)) {
      if (l1 * l2 < 0) {  // line pair through the centre
        const double m = std::sqrt(-l1 / l2);
        line_dir(o, {u1[0] + m * u2[0], u1[1] + m * u2[1]});
        line_dir(o, {u1[0] - m * u2[0], u1[1] - m * u2[1]});
      }
      return out;
    }
    if (l1 * l2 > 0) {
      if (-fc / l1 <= 0) return out;  // no real points
      const double ra = std::sqrt(-fc / l1), rb = std::sqrt(-fc / l2);
      std::vector<P2> loop;
      for (int i = 0; i <= n; ++i) {
        const double t = 2 * M_PI * i / n;
        loop.push_back(at(o, u1, u2, ra * std::cos(t), rb * std::sin(t)));
      }
      out.push_back(std::move(loop));
      return out;
    }
    // Hyperbola: transverse axis along the eigenvector whose term has the sign of -fc.
    const bool along_u1 = -fc / l1 > 0;
    const P2 p = along_u1 ? u1 : u2, q = along_u1 ? u2 : u1;
    const double ra = std::sqrt(std::fabs(fc / (along_u1 ? l1 : l2)));
    const double rb = std::sqrt(std::fabs(fc / (along_u1 ? l2 : l1)));
    const double tmax = std::asinh(2 * reach / std::min(ra, rb));
    for (double sgn : {1.0, -1.0}) {
      std::vector<P2> branch;
      for (int i = 0; i <= n; ++i) {
        const double t = -tmax + 2 * tmax * i / n;
        branch.push_back(at(o, p, q, sgn * ra * std::cosh(t), rb * std::sinh(t)));
      }
      out.push_back(std::move(branch));
    }
    return out;
  }

  // Parabolic: one eigenvalue vanishes. Let u be the non-null direction.
  const bool first = std::fabs(l1) >= std::fabs(l2);
  const double l = first ? l1 : l2;
  const P2 u = first ? u1 : u2, v = first ? u2 : u1;
  const double du = d * u[0] + e * u[1], dv = d * v[0] + e * v[1];
  // l X² + du X + dv Y + f = 0 with world = X u + Y v.
  double lo = INFINITY, hi = -INFINITY;
  for (const P2& corner : {P2{box.x0, box.y0}, P2{box.x0, box.y1}, P2{box.x1, box.y0}, P2{box.x1, box.y1}}) {
    const double X = corner[0] * u[0] + corner[1] * u[1];
    lo = std::min(lo, X);
    hi = std::max(hi, X);
  }
  if (std::fabs(dv) > 1e-12 * std::max({std::fabs(l), std::fabs(du), 1.0})) {
    std::vector<P2> branch;
    for (int i = 0; i <= n; ++i) {
      const double X = lo + (hi - lo) * i / n;
      branch.push_back(at({0, 0}, u, v, X, -(l * X * X + du * X + f) / dv));
    }
    out.push_back(std::move(branch));
    return out;
  }
  const double disc = du * du - 4 * l * f;
  if (disc < 0) return out;
  for (double sgn : {1.0, -1.0}) {
    const double X = (-du + sgn * std::sqrt(disc)) / (2 * l);
    line_dir({X * u[0], X * u[1]}, v);
    if (disc == 0) break;
  }
  return out;
}

inline constexpr std::array<const char*, 6> palette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace svg

/// Renders the draw list against the environment of a script run. Names
/// whose construction failed are skipped.
template <Field T>
std::string emit_svg(const std::map<std::string, Value<T>>& env, const std::vector<DrawItem>& draws,
                     const SvgOptions& opt = {}) {
  using svg::num;
  using svg::P2;
  if (draws.empty()) throw error(errc::empty_draw_list, "nothing to draw");
  auto d = [](const T& v) { return to_double(v); };
  auto p2 = [&](const Point<T>& p) { return P2{d(p.x), d(p.y)}; };

  svg::Box box;
  auto add_circle = [&](const Circle<T>& c) {
    const auto o = p2(c.center());
    const double r = std::sqrt(std::max(0.0, d(c.radius_sq())));
    box.add(o[0] - r, o[1] - r);
    box.add(o[0] + r, o[1] + r);
  };
  for (const auto& item : draws) {
    const auto it = env.find(item.name);
    if (it == env.end()) continue;
    std::visit(
        [&](const auto& x) {
          using X = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<X, Point<T>>) {
            box.add(d(x.x), d(x.y));
          } else if constexpr (std::is_same_v<X, Circle<T>>) {
            add_circle(x);
          } else if constexpr (std::is_same_v<X, Triangle<T>>) {
            for (const auto& p : {x.A, x.B, x.C}) box.add(d(p.x), d(p.y));
          } else if constexpr (std::is_same_v<X, HaggeConfig<T>>) {
            add_circle(x.sigma);
            for (const auto& p : {x.U, x.V, x.W, x.X, x.Y, x.Z, x.H, x.P}) box.add(d(p.x), d(p.y));
          }
        },
        it->second);
  }
  if (box.empty) box = {-1, -1, 1, 1, false};
  double dx = box.x1 - box.x0, dy = box.y1 - box.y0;
  if (dx == 0 && dy == 0) dx = dy = 2;
  if (dx == 0) dx = dy;
  if (dy == 0) dy = dx;
  const double cx = (box.x0 + box.x1) / 2, cy = (box.y0 + box.y1) / 2;
  box = {cx - dx * 0.55, cy - dy * 0.55, cx + dx * 0.55, cy + dy * 0.55, false};

  const double W = opt.width, s = W / (box.x1 - box.x0), H = (box.y1 - box.y0) * s;
  auto sx = [&](double x) { return num((x - box.x0) * s); };
  auto sy = [&](double y) { return num((box.y1 - y) * s); };

  std::string shapes, marks;
  auto polyline = [&](const std::vector<P2>& pts, const std::string& color, const std::string& name) {
    shapes += "<polyline class=\"conic\" data-name=\"" + name + "\" stroke=\"" + color + "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) shapes += ' ';
      shapes += sx(pts[i][0]) + "," + sy(pts[i][1]);
    }
    shapes += "\"/>\n";
  };
  auto line = [&](double a, double b, double c, const std::string& color, const std::string& name) {
    if (const auto seg = svg::clip_line(a, b, c, box))
      shapes += "<line class=\"line\" data-name=\"" + name + "\" stroke=\"" + color + "\" x1=\"" + sx((*seg)[0][0]) +
                "\" y1=\"" + sy((*seg)[0][1]) + "\" x2=\"" + sx((*seg)[1][0]) + "\" y2=\"" + sy((*seg)[1][1]) +
                "\"/>\n";
  };
  auto circle = [&](const Circle<T>& c, const std::string& color, const std::string& name) {
    const auto o = p2(c.center());
    shapes += "<circle class=\"circle\" data-name=\"" + name + "\" stroke=\"" + color + "\" cx=\"" + sx(o[0]) +
              "\" cy=\"" + sy(o[1]) + "\" r=\"" + num(std::sqrt(std::max(0.0, d(c.radius_sq()))) * s) + "\"/>\n";
  };
  auto point = [&](const Point<T>& p, const std::string& label, const std::string& color) {
    const auto q = p2(p);
    marks += "<circle class=\"point\" cx=\"" + sx(q[0]) + "\" cy=\"" + sy(q[1]) + "\" r=\"3\" fill=\"" + color +
             "\"/>\n<text x=\"" + num((q[0] - box.x0) * s + 5) + "\" y=\"" + num((box.y1 - q[1]) * s - 5) + "\">" +
             label + "</text>\n";
  };

  std::size_t index = 0;
  for (const auto& item : draws) {
    const auto it = env.find(item.name);
    if (it == env.end()) continue;
    const std::string color = item.style.empty() ? svg::palette[index % svg::palette.size()] : item.style;
    ++index;
    std::visit(
        [&](const auto& x) {
          using X = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<X, Point<T>>) {
            point(x, item.name, color);
          } else if constexpr (std::is_same_v<X, Line<T>>) {
            line(d(x.a()), d(x.b()), d(x.c()), color, item.name);
          } else if constexpr (std::is_same_v<X, Circle<T>>) {
            circle(x, color, item.name);
          } else if constexpr (std::is_same_v<X, Conic<T>>) {
            std::array<double, 6> k;
            for (int i = 0; i < 6; ++i) k[i] = d(x[i]);
            std::vector<std::array<double, 3>> pieces;
            for (const auto& branch : svg::sample_conic(k, box, pieces)) polyline(branch, color, item.name);
            for (const auto& l : pieces) line(l[0], l[1], l[2], color, item.name);
          } else if constexpr (std::is_same_v<X, Triangle<T>>) {
            shapes += "<polygon class=\"triangle\" data-name=\"" + item.name + "\" stroke=\"" + color +
                      "\" points=\"";
            const std::array<Point<T>, 3> v{x.A, x.B, x.C};
            for (int i = 0; i < 3; ++i) shapes += (i ? " " : "") + sx(d(v[i].x)) + "," + sy(d(v[i].y));
            shapes += "\"/>\n";
          } else if constexpr (std::is_same_v<X, HaggeConfig<T>>) {
            circle(x.sigma, color, item.name);
            const std::array<std::pair<const char*, Point<T>>, 8> labelled{
                {{"U", x.U}, {"V", x.V}, {"W", x.W}, {"X", x.X}, {"Y", x.Y}, {"Z", x.Z}, {"H", x.H}, {"P", x.P}}};
            for (const auto& [label, p] : labelled) point(p, label, color);
          }
          // numbers have no picture
        },
        it->second);
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(W) + "\" height=\"" + num(H) +
         "\" viewBox=\"0 0 " + num(W) + " " + num(H) + "\">\n";
  out += "<defs><clipPath id=\"view\"><rect x=\"0\" y=\"0\" width=\"" + num(W) + "\" height=\"" + num(H) +
         "\"/></clipPath></defs>\n";
  out += "<rect width=\"" + num(W) + "\" height=\"" + num(H) + "\" fill=\"white\"/>\n";
  out += "<g clip-path=\"url(#view)\" fill=\"none\" stroke-width=\"1.5\">\n" + shapes + "</g>\n";
  out += "<g font-family=\"sans-serif\" font-size=\"12\">\n" + marks + "</g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace haggelab
