#pragma once

// Construction scripts (.geo). One statement per line:
//
//   point A = (0, 0)             point P = centroid(T)
//   triangle T = A B C           let S = hagge_circle(T, P)
//   assert on_circle(S, orthocenter(T))
//   draw S red
//
// '#' starts a comment. Scalars are integers, fractions p/q or decimals and
// are read exactly. Names are single-assignment and must be defined before
// use; arities and names are checked when parsing, argument types when
// running.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "haggelab/hagge.hpp"
#include "haggelab/speckman.hpp"

namespace haggelab {

struct SourcePos {
  int line = 1;
  int column = 1;
};

/// Parse-time diagnostic; what() reads "Kind: line L, column C: message".
class script_error : public error {
 public:
  script_error(errc code, SourcePos pos, const std::string& msg)
      : error(code, "line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + msg),
        pos_(pos) {}
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

struct Expr {
  enum class kind { ref, number, call };
  kind k = kind::ref;
  std::string name;  // identifier or callee
  Rational number;
  std::vector<Expr> args;
  SourcePos pos;

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.k == b.k && a.name == b.name && a.number == b.number && a.args == b.args;
  }
};

struct Statement {
  enum class kind { point_literal, point_call, triangle, let, assertion, draw };
  kind k = kind::let;
  std::string name;              // defined name, or drawn name
  std::vector<Expr> parts;       // (x, y) for a literal, else the single call
  std::vector<std::string> ids;  // triangle vertices
  std::string style;             // draw colour
  SourcePos pos;

  friend bool operator==(const Statement& a, const Statement& b) {
    return a.k == b.k && a.name == b.name && a.parts == b.parts && a.ids == b.ids && a.style == b.style;
  }
};

/// Statement order is significant; source positions are not part of equality.
struct Program {
  std::vector<Statement> statements;
  friend bool operator==(const Program&, const Program&) = default;
};

namespace script {

struct Signature {
  std::string_view name;
  std::vector<std::size_t> arities;
};

inline const std::vector<Signature>& constructions() {
  static const std::vector<Signature> table{
      {"centroid", {1}},          {"orthocenter", {1}},        {"circumcenter", {1}},
      {"circumcircle", {1, 3}},   {"nine_point_circle", {1}},  {"medial", {1}},
      {"isogonal", {2}},          {"reflect", {2}},            {"line", {2}},
      {"intersect", {2}},         {"midpoint", {2}},           {"divide", {3}},
      {"second_intersection", {3}}, {"hagge", {2}},            {"hagge_circle", {2}},
      {"double_simson", {2}},     {"perspector", {2}},         {"desargues_axis", {2}},
      {"orthologic", {2}},        {"paralogic", {2}},          {"conic5", {5}},
      {"speckman_h", {3}},
  };
  return table;
}

inline const std::vector<Signature>& predicates() {
  static const std::vector<Signature> table{
      {"collinear", {3}}, {"concurrent", {3}}, {"concyclic", {4}}, {"on_circle", {2}},
      {"on_conic", {2}},  {"equal", {2}},      {"parallel", {2}},  {"perpendicular", {2}},
  };
  return table;
}

inline const Signature* lookup(const std::vector<Signature>& table, std::string_view name) {
  for (const auto& s : table)
    if (s.name == name) return &s;
  return nullptr;
}

struct Token {
  enum class kind { ident, number, punct, newline, end };
  kind k = kind::end;
  std::string text;
  SourcePos pos;
};

inline bool ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
inline bool digit(char c) { return c >= '0' && c <= '9'; }

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      out.push_back({Token::kind::newline, "\n", pos});
      advance(1);
    } else if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && (ident_start(text[j]) || digit(text[j]))) ++j;
      out.push_back({Token::kind::ident, std::string(text.substr(i, j - i)), pos});
      advance(j - i);
    } else if (digit(c) || ((c == '-' || c == '+' || c == '.') && i + 1 < text.size() &&
                            (digit(text[i + 1]) || text[i + 1] == '.'))) {
      std::size_t j = i + 1;
      while (j < text.size() && (digit(text[j]) || text[j] == '.' || text[j] == '/')) ++j;
      out.push_back({Token::kind::number, std::string(text.substr(i, j - i)), pos});
      advance(j - i);
    } else if (c == '(' || c == ')' || c == ',' || c == '=') {
      out.push_back({Token::kind::punct, std::string(1, c), pos});
      advance(1);
    } else {
      throw script_error(errc::syntax_error, pos, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::kind::end, "", pos});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Program parse() {
    Program prog;
    for (;;) {
      while (peek().k == Token::kind::newline) ++at_;
      if (peek().k == Token::kind::end) break;
      prog.statements.push_back(statement());
      if (peek().k != Token::kind::newline && peek().k != Token::kind::end)
        throw script_error(errc::syntax_error, peek().pos, "expected end of line before '" + peek().text + "'");
    }
    return prog;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& take() { return toks_[at_++]; }

  [[noreturn]] void expected(const std::string& what) const {
    const auto& t = peek();
    const std::string found = t.k == Token::kind::end ? "end of input" : t.k == Token::kind::newline ? "end of line"
                                                                                                     : "'" + t.text + "'";
    throw script_error(errc::syntax_error, t.pos, "expected " + what + ", found " + found);
  }
  void punct(char c) {
    if (peek().k != Token::kind::punct || peek().text[0] != c) expected(std::string("'") + c + "'");
    ++at_;
  }
  const Token& ident(const char* what) {
    if (peek().k != Token::kind::ident) expected(what);
    return take();
  }

  void define(const Token& t) {
    if (keyword(t.text)) throw script_error(errc::syntax_error, t.pos, "'" + t.text + "' is a keyword");
    if (!defined_.insert(t.text).second)
      throw script_error(errc::redefinition, t.pos, "'" + t.text + "' is already defined");
  }
  void use(const Token& t) const {
    if (!defined_.count(t.text)) throw script_error(errc::use_before_def, t.pos, "'" + t.text + "' is not defined");
  }
  static bool keyword(std::string_view s) {
    return s == "point" || s == "triangle" || s == "let" || s == "assert" || s == "draw";
  }

  Statement statement() {
    const auto& kw = ident("a statement keyword");
    Statement st;
    st.pos = kw.pos;
    if (kw.text == "point") {
      const auto& name = ident("a point name");
      punct('=');
      if (peek().k == Token::kind::punct && peek().text == "(") {
        ++at_;
        st.k = Statement::kind::point_literal;
        st.parts.push_back(scalar());
        punct(',');
        st.parts.push_back(scalar());
        punct(')');
      } else {
        st.k = Statement::kind::point_call;
        st.parts.push_back(call(constructions(), "construction"));
      }
      define(name);
      st.name = name.text;
    } else if (kw.text == "triangle") {
      const auto& name = ident("a triangle name");
      punct('=');
      st.k = Statement::kind::triangle;
      for (int i = 0; i < 3; ++i) {
        const auto& v = ident("a vertex name");
        use(v);
        st.ids.push_back(v.text);
      }
      define(name);
      st.name = name.text;
    } else if (kw.text == "let") {
      const auto& name = ident("a name");
      punct('=');
      st.k = Statement::kind::let;
      st.parts.push_back(call(constructions(), "construction"));
      define(name);
      st.name = name.text;
    } else if (kw.text == "assert") {
      st.k = Statement::kind::assertion;
      st.parts.push_back(call(predicates(), "predicate"));
    } else if (kw.text == "draw") {
      const auto& name = ident("a name to draw");
      use(name);
      st.k = Statement::kind::draw;
      st.name = name.text;
      if (peek().k == Token::kind::ident) st.style = take().text;
    } else {
      throw script_error(errc::syntax_error, kw.pos, "unknown statement '" + kw.text + "'");
    }
    return st;
  }

  Expr scalar() {
    if (peek().k != Token::kind::number) expected("a number");
    const auto& t = take();
    Expr e;
    e.k = Expr::kind::number;
    e.pos = t.pos;
    try {
      e.number = Rational::parse(t.text);
    } catch (const error& err) {
      throw script_error(errc::syntax_error, t.pos, err.what());
    }
    e.name = e.number.str();
    return e;
  }

  Expr call(const std::vector<Signature>& table, const char* what) {
    const auto& name = ident(what);
    const auto* sig = lookup(table, name.text);
    if (!sig) throw script_error(errc::unknown_name, name.pos, "unknown " + std::string(what) + " '" + name.text + "'");
    Expr e;
    e.k = Expr::kind::call;
    e.name = name.text;
    e.pos = name.pos;
    punct('(');
    if (!(peek().k == Token::kind::punct && peek().text == ")")) {
      for (;;) {
        e.args.push_back(argument());
        if (peek().k == Token::kind::punct && peek().text == ",") {
          ++at_;
          continue;
        }
        break;
      }
    }
    punct(')');
    if (std::find(sig->arities.begin(), sig->arities.end(), e.args.size()) == sig->arities.end()) {
      std::string want;
      for (auto n : sig->arities) want += (want.empty() ? "" : " or ") + std::to_string(n);
      throw script_error(errc::arity_error, name.pos,
                         "'" + name.text + "' takes " + want + " arguments, got " + std::to_string(e.args.size()));
    }
    return e;
  }

  Expr argument() {
    if (peek().k == Token::kind::number) return scalar();
    if (peek().k != Token::kind::ident) expected("an argument");
    if (toks_[at_ + 1].k == Token::kind::punct && toks_[at_ + 1].text == "(")
      return call(constructions(), "construction");
    const auto& t = take();
    use(t);
    Expr e;
    e.k = Expr::kind::ref;
    e.name = t.text;
    e.pos = t.pos;
    return e;
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  std::set<std::string> defined_;
};

inline void serialize(std::string& out, const Expr& e) {
  if (e.k != Expr::kind::call) {
    out += e.name;
    return;
  }
  out += e.name;
  out += '(';
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i) out += ", ";
    serialize(out, e.args[i]);
  }
  out += ')';
}

}  // namespace script

inline Program parse_script(std::string_view text) { return script::Parser(text).parse(); }

inline std::string serialize(const Statement& st) {
  std::string out;
  switch (st.k) {
    case Statement::kind::point_literal:
      out = "point " + st.name + " = (";
      script::serialize(out, st.parts[0]);
      out += ", ";
      script::serialize(out, st.parts[1]);
      out += ")";
      break;
    case Statement::kind::point_call:
      out = "point " + st.name + " = ";
      script::serialize(out, st.parts[0]);
      break;
    case Statement::kind::triangle:
      out = "triangle " + st.name + " = " + st.ids[0] + " " + st.ids[1] + " " + st.ids[2];
      break;
    case Statement::kind::let:
      out = "let " + st.name + " = ";
      script::serialize(out, st.parts[0]);
      break;
    case Statement::kind::assertion:
      out = "assert ";
      script::serialize(out, st.parts[0]);
      break;
    case Statement::kind::draw:
      out = "draw " + st.name;
      if (!st.style.empty()) out += " " + st.style;
      break;
  }
  return out;
}

/// Canonical text: one statement per line, exact scalars in lowest terms.
inline std::string serialize(const Program& prog) {
  std::string out;
  for (const auto& st : prog.statements) out += serialize(st) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

template <Field T>
using Value = std::variant<T, Point<T>, Line<T>, Circle<T>, Conic<T>, Triangle<T>, HaggeConfig<T>>;

template <Field T>
std::string_view type_name(const Value<T>& v) {
  static constexpr std::string_view names[] = {"number", "point", "line", "circle", "conic", "triangle", "hagge"};
  return names[v.index()];
}

template <Field T>
json to_json(const Value<T>& v) {
  return std::visit(
      [](const auto& x) -> json {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, T>) return scalar_text(x);
        else return to_json(x);
      },
      v);
}

struct DrawItem {
  std::string name;
  std::string style;
};

template <Field T>
struct ScriptRun {
  CheckReport report;
  std::map<std::string, Value<T>> env;
  std::vector<std::string> defined;  // definition order
  std::vector<DrawItem> draws;

  json environment_json() const {
    json j = json::object();
    for (const auto& [name, v] : env) j[name] = {{"type", type_name<T>(v)}, {"value", to_json<T>(v)}};
    return j;
  }
};

namespace script {

template <Field T>
class Evaluator {
 public:
  explicit Evaluator(const std::map<std::string, Value<T>>& env) : env_(env) {}

  Value<T> eval(const Expr& e) const {
    switch (e.k) {
      case Expr::kind::number: return from_rational<T>(e.number);
      case Expr::kind::ref: {
        const auto it = env_.find(e.name);
        if (it == env_.end())
          throw error(errc::degenerate_configuration, "'" + e.name + "' has no value (its construction failed)");
        return it->second;
      }
      case Expr::kind::call: break;
    }
    std::vector<Value<T>> a;
    for (const auto& x : e.args) a.push_back(eval(x));
    return construct(e.name, a);
  }

  /// Evaluates a predicate; `data` receives both sides of the substituted check.
  bool holds(const Expr& e, json& data) const {
    std::vector<Value<T>> a;
    for (const auto& x : e.args) a.push_back(eval(x));
    json args = json::array();
    for (const auto& v : a) args.push_back(to_json<T>(v));
    data["args"] = args;
    const auto& n = e.name;
    auto sides = [&](const T& lhs) {
      data["lhs"] = scalar_text(lhs);
      data["rhs"] = "0";
    };
    if (n == "collinear") {
      const auto p = pt(a, 0), q = pt(a, 1), r = pt(a, 2);
      sides(orient(p, q, r));
      return collinear(p, q, r);
    }
    if (n == "concurrent") {
      const auto l = ln(a, 0), m = ln(a, 1), k = ln(a, 2);
      sides(linalg::det3<T>({{l.coefficients(), m.coefficients(), k.coefficients()}}));
      return concurrent(l, m, k);
    }
    if (n == "concyclic") {
      const auto p = pt(a, 0), q = pt(a, 1), r = pt(a, 2), s = pt(a, 3);
      if (!collinear(p, q, r)) sides(circle_through(p, q, r).power(s));
      return concyclic(p, q, r, s);
    }
    if (n == "on_circle") {
      const bool swapped = std::holds_alternative<Point<T>>(a[0]);
      const auto c = as<Circle<T>>(a, swapped ? 1 : 0, "circle");
      const auto p = pt(a, swapped ? 0 : 1);
      sides(c.power(p));
      return c.contains(p);
    }
    if (n == "on_conic") {
      const bool swapped = std::holds_alternative<Point<T>>(a[0]);
      const auto k = conic(a, swapped ? 1 : 0);
      const auto p = pt(a, swapped ? 0 : 1);
      sides(k.eval(p));
      return conic_contains(k, p);
    }
    if (n == "equal") {
      data["lhs"] = args[0];
      data["rhs"] = args[1];
      if (a[0].index() != a[1].index())
        throw error(errc::type_error, "equal: cannot compare a " + std::string(type_name<T>(a[0])) + " with a " +
                                          std::string(type_name<T>(a[1])));
      return std::visit(
          [&](const auto& x) {
            using X = std::decay_t<decltype(x)>;
            const auto& y = std::get<X>(a[1]);
            if constexpr (std::is_same_v<X, T>) return field_equal(x, y);
            else if constexpr (std::is_same_v<X, HaggeConfig<T>>) return x.sigma == y.sigma && x.P == y.P;
            else if constexpr (std::is_same_v<X, Triangle<T>>) return x.A == y.A && x.B == y.B && x.C == y.C;
            else return x == y;
          },
          a[0]);
    }
    if (n == "parallel" || n == "perpendicular") {
      const auto l = ln(a, 0), m = ln(a, 1);
      if (n == "parallel") {
        sides(l.a() * m.b() - l.b() * m.a());
        return parallel(l, m);
      }
      sides(l.a() * m.a() + l.b() * m.b());
      return perpendicular(l, m);
    }
    throw error(errc::unknown_name, "unknown predicate '" + n + "'");
  }

 private:
  template <class X>
  static X as(const std::vector<Value<T>>& a, std::size_t i, std::string_view what) {
    if (const auto* x = std::get_if<X>(&a[i])) return *x;
    throw error(errc::type_error, "argument " + std::to_string(i + 1) + " must be a " + std::string(what) +
                                      ", got a " + std::string(type_name<T>(a[i])));
  }
  static Point<T> pt(const std::vector<Value<T>>& a, std::size_t i) { return as<Point<T>>(a, i, "point"); }
  static Line<T> ln(const std::vector<Value<T>>& a, std::size_t i) { return as<Line<T>>(a, i, "line"); }
  static T num(const std::vector<Value<T>>& a, std::size_t i) { return as<T>(a, i, "number"); }
  /// A Hagge configuration stands for its Hagge triangle XYZ.
  static Triangle<T> tri(const std::vector<Value<T>>& a, std::size_t i) {
    if (const auto* h = std::get_if<HaggeConfig<T>>(&a[i])) return h->hagge_triangle();
    return as<Triangle<T>>(a, i, "triangle");
  }
  static Circle<T> circ(const std::vector<Value<T>>& a, std::size_t i) {
    if (const auto* h = std::get_if<HaggeConfig<T>>(&a[i])) return h->sigma;
    return as<Circle<T>>(a, i, "circle");
  }
  static Conic<T> conic(const std::vector<Value<T>>& a, std::size_t i) {
    if (std::holds_alternative<Circle<T>>(a[i])) return Conic<T>::from_circle(std::get<Circle<T>>(a[i]));
    return as<Conic<T>>(a, i, "conic");
  }

  static Value<T> construct(const std::string& n, const std::vector<Value<T>>& a) {
    if (n == "centroid") return centroid(tri(a, 0));
    if (n == "orthocenter") return orthocenter(tri(a, 0));
    if (n == "circumcenter") return circumcenter(tri(a, 0));
    if (n == "circumcircle") return a.size() == 1 ? circumcircle(tri(a, 0)) : circle_through(pt(a, 0), pt(a, 1), pt(a, 2));
    if (n == "nine_point_circle") return nine_point_circle(tri(a, 0));
    if (n == "medial") return medial_triangle(tri(a, 0));
    if (n == "isogonal") return isogonal_conjugate(tri(a, 0), pt(a, 1));
    if (n == "reflect") {
      if (std::holds_alternative<Point<T>>(a[1])) return half_turn(pt(a, 0), pt(a, 1));
      return reflect_in_line(pt(a, 0), ln(a, 1));
    }
    if (n == "line") return line_through(pt(a, 0), pt(a, 1));
    if (n == "intersect") return intersect_lines(ln(a, 0), ln(a, 1));
    if (n == "midpoint") return midpoint(pt(a, 0), pt(a, 1));
    if (n == "divide") return divide(pt(a, 0), pt(a, 1), num(a, 2));
    if (n == "second_intersection") return second_intersection(circ(a, 0), ln(a, 1), pt(a, 2));
    if (n == "hagge") return build_hagge(tri(a, 0), pt(a, 1));
    if (n == "hagge_circle") return hagge_circle(tri(a, 0), pt(a, 1));
    if (n == "double_simson") return double_simson(tri(a, 0), pt(a, 1));
    if (n == "perspector") return perspector(tri(a, 0), tri(a, 1));
    if (n == "desargues_axis") return desargues_axis(tri(a, 0), tri(a, 1));
    if (n == "orthologic") return orthology_center(tri(a, 0), tri(a, 1));
    if (n == "paralogic") return paralogic_center(tri(a, 0), tri(a, 1));
    if (n == "conic5") return conic_through_five(pt(a, 0), pt(a, 1), pt(a, 2), pt(a, 3), pt(a, 4));
    if (n == "speckman_h") return reflect_dilate_about_orthocenter(tri(a, 0), num(a, 1), num(a, 2));
    throw error(errc::unknown_name, "unknown construction '" + n + "'");
  }

  const std::map<std::string, Value<T>>& env_;
};

inline std::string where(const Statement& st) { return "line " + std::to_string(st.pos.line); }

}  // namespace script

/// Executes the statements in order. A failing construction or assertion is
/// recorded in the report and execution continues; names whose construction
/// failed stay unbound.
template <Field T>
ScriptRun<T> run_program(const Program& prog) {
  ScriptRun<T> run;
  run.report.suite = "script";
  run.report.backend = std::string(field_traits<T>::name);
  const script::Evaluator<T> ev(run.env);
  auto bind = [&](const Statement& st, Value<T> v) {
    run.env.insert_or_assign(st.name, std::move(v));
    run.defined.push_back(st.name);
  };
  std::size_t asserts = 0;
  for (const auto& st : prog.statements) {
    const std::string text = serialize(st);
    try {
      switch (st.k) {
        case Statement::kind::point_literal:
          bind(st, Point<T>{from_rational<T>(st.parts[0].number), from_rational<T>(st.parts[1].number)});
          break;
        case Statement::kind::point_call: {
          auto v = ev.eval(st.parts[0]);
          if (!std::holds_alternative<Point<T>>(v))
            throw error(errc::type_error, "'" + st.name + "' is declared a point but " + st.parts[0].name +
                                              " gives a " + std::string(type_name<T>(v)));
          bind(st, std::move(v));
          break;
        }
        case Statement::kind::triangle: {
          std::array<Point<T>, 3> v;
          for (int i = 0; i < 3; ++i) {
            const auto it = run.env.find(st.ids[i]);
            if (it == run.env.end() || !std::holds_alternative<Point<T>>(it->second))
              throw error(errc::type_error, "vertex '" + st.ids[i] + "' is not a point");
            v[i] = std::get<Point<T>>(it->second);
          }
          bind(st, Triangle<T>{v[0], v[1], v[2]});
          break;
        }
        case Statement::kind::let: bind(st, ev.eval(st.parts[0])); break;
        case Statement::kind::assertion: {
          ++asserts;
          json data = json::object();
          bool ok = false;
          try {
            ok = ev.holds(st.parts[0], data);
          } catch (const error& e) {
            data["error"] = e.what();
          }
          run.report.checks.push_back({"assert_" + std::to_string(asserts), script::where(st),
                                       ok ? check_status::pass : check_status::fail, text, std::move(data)});
          break;
        }
        case Statement::kind::draw: run.draws.push_back({st.name, st.style}); break;
      }
    } catch (const error& e) {
      run.report.add("statement_" + std::to_string(st.pos.line), script::where(st), false, e.what());
    }
  }
  return run;
}

}  // namespace haggelab
