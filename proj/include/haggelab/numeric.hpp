#pragma once

// Field types for the geometry templates.
//
// Rational: exact fraction of arbitrary-precision integers, always in lowest
// terms with a positive denominator (GMP keeps mpq_t canonical under +,-,*,/).
// double:   IEEE binary64; zero tests use an absolute epsilon.
// Scalar:   runtime choice of either backend, used where values cross a text
//           boundary (scripts, CLI flags, reports).

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <compare>
#include <ostream>
#include <cstdlib>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <type_traits>
#include <variant>

#include "haggelab/error.hpp"

namespace haggelab {

class Rational {
 public:
  Rational() = default;
  Rational(int n) : v_(n) {}            // NOLINT(google-explicit-constructor)
  Rational(long n) : v_(n) {}           // NOLINT(google-explicit-constructor)
  Rational(long long n) : v_(mpz_class(std::to_string(n))) {}  // NOLINT
  Rational(const mpz_class& n) : v_(n) {}  // NOLINT
  Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw error(errc::division_by_zero, "zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  /// Parses "p/q" (optional sign on p) or a base-10 decimal literal such as
  /// "-12.375" or "1.5e-3"; decimals are converted exactly.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& get() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  double to_double() const { return v_.get_d(); }
  bool is_integer() const { return v_.get_den() == 1; }

  /// "p/q" in lowest terms, or "p" for integers.
  std::string str() const {
    return is_integer() ? v_.get_num().get_str() : v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw error(errc::division_by_zero, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&](const char* why) {
    return error(errc::parse_error, std::string(why) + " in scalar '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail("empty literal");
  auto digits_only = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };

  std::string_view body = text;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto p = body.substr(0, slash);
    const auto q = body.substr(slash + 1);
    if (!digits_only(p) || !digits_only(q)) throw fail("malformed fraction");
    mpz_class n(std::string(p), 10), d(std::string(q), 10);
    if (d == 0) throw error(errc::division_by_zero, "zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return Rational(n, d);
  }

  long exponent = 0;
  if (const auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_text = body.substr(e + 1);
    bool exp_neg = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_neg = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!digits_only(exp_text) || exp_text.size() > 6) throw fail("malformed exponent");
    exponent = std::stol(std::string(exp_text));
    if (exp_neg) exponent = -exponent;
    body = body.substr(0, e);
  }

  std::string mantissa;
  if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto ip = body.substr(0, dot);
    const auto fp = body.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !digits_only(ip)) || (!fp.empty() && !digits_only(fp)))
      throw fail("malformed decimal");
    mantissa = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!digits_only(body)) throw fail("malformed integer");
    mantissa = std::string(body);
  }

  mpz_class n(mantissa, 10);
  if (negative) n = -n;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(n, scale) : Rational(mpz_class(n * scale));
}

/// Shortest round-trip decimal text for a double.
inline std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) return std::to_string(x);
  return std::string(buf, end);
}

template <class T>
struct field_traits;

template <>
struct field_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "rational";

  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static int sign(const Rational& x) { return x.sign(); }
  static Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
  static double to_double(const Rational& x) { return x.to_double(); }
  static Rational from_rational(const Rational& x) { return x; }

  /// Exact root when x is the square of a rational.
  static Rational sqrt(const Rational& x) {
    if (x.sign() < 0) throw error(errc::negative_argument, "sqrt of " + x.str());
    if (mpz_perfect_square_p(x.num().get_mpz_t()) == 0 || mpz_perfect_square_p(x.den().get_mpz_t()) == 0)
      throw error(errc::irrational_in_rational_backend, "sqrt of " + x.str());
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), x.num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.den().get_mpz_t());
    return Rational(n, d);
  }

  /// Rescales a coefficient vector to coprime integers whose first non-zero
  /// entry is positive. All-zero input is left unchanged.
  static void normalize(std::span<Rational> v) {
    mpz_class l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    mpz_class g = 0;
    for (const auto& x : v) {
      mpz_class n = x.num() * (l / x.den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) return;
    int lead = 0;
    for (const auto& x : v)
      if (x.sign() != 0) { lead = x.sign(); break; }
    if (lead < 0) g = -g;
    for (auto& x : v) x = Rational(mpz_class(x.num() * (l / x.den()) / g));
  }
};

template <>
struct field_traits<double> {
  static constexpr bool exact = false;
  static constexpr std::string_view name = "float";
  /// Zero threshold. Absolute for bare values (configurations are expected
  /// to be pre-scaled so that the circumradius is O(1)); equality and
  /// membership tests scale it by the size of the operands.
  static constexpr double epsilon = 1e-9;

  static bool is_zero(double x) { return std::fabs(x) < epsilon; }
  static int sign(double x) { return is_zero(x) ? 0 : (x < 0 ? -1 : 1); }
  static double abs(double x) { return std::fabs(x); }
  static double to_double(double x) { return x; }
  static double from_rational(const Rational& x) { return x.to_double(); }
  static double sqrt(double x) {
    if (x < 0 && !is_zero(x)) throw error(errc::negative_argument, "sqrt of " + format_double(x));
    return x < 0 ? 0.0 : std::sqrt(x);
  }
  /// Scales so the largest magnitude is 1 and the first significant entry is positive.
  static void normalize(std::span<double> v) {
    double m = 0;
    for (double x : v) m = std::fmax(m, std::fabs(x));
    if (m == 0) return;
    double s = 1.0 / m;
    for (double x : v)
      if (std::fabs(x) * s > epsilon) { if (x < 0) s = -s; break; }
    for (double& x : v) x *= s;
  }
};

template <class T>
concept Field = requires { field_traits<T>::exact; };

template <Field T> bool is_zero(const T& x) { return field_traits<T>::is_zero(x); }
template <Field T> int sign(const T& x) { return field_traits<T>::sign(x); }
template <Field T> T abs_value(const T& x) { return field_traits<T>::abs(x); }
template <Field T> double to_double(const T& x) { return field_traits<T>::to_double(x); }
template <Field T> T field_sqrt(const T& x) { return field_traits<T>::sqrt(x); }
template <Field T> bool field_equal(const T& a, const T& b) {
  if constexpr (field_traits<T>::exact) return is_zero<T>(a - b);
  else return std::fabs(a - b) <= field_traits<T>::epsilon * std::max({1.0, std::fabs(a), std::fabs(b)});
}
template <Field T> T from_rational(const Rational& r) { return field_traits<T>::from_rational(r); }

/// Zero test for a value computed as a sum of terms whose absolute values
/// add up to `magnitude`: exact comparison for Rational, relative for double.
template <Field T>
bool negligible(const T& v, double magnitude) {
  if constexpr (field_traits<T>::exact) return is_zero(v);
  else return std::fabs(to_double(v)) <= field_traits<T>::epsilon * magnitude;
}

enum class backend { rational, floating };

inline std::string_view backend_name(backend b) { return b == backend::rational ? "rational" : "float"; }

/// A number tagged with its backend. Arithmetic never mixes backends and
/// never promotes silently; the caller picks the backend up front.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(double d) : v_(d) {}

  static Scalar parse(std::string_view text, backend b) {
    if (b == backend::rational) return Scalar(Rational::parse(text));
    // Float backend reads the exact value then rounds once.
    return Scalar(Rational::parse(text).to_double());
  }

  backend kind() const { return std::holds_alternative<Rational>(v_) ? backend::rational : backend::floating; }
  bool is_rational() const { return kind() == backend::rational; }
  const Rational& rational() const {
    if (!is_rational()) throw error(errc::mixed_backend, "expected a rational scalar");
    return std::get<Rational>(v_);
  }
  double to_double() const { return is_rational() ? std::get<Rational>(v_).to_double() : std::get<double>(v_); }

  /// Value in field T; asking a float scalar for a Rational is a backend error.
  template <Field T>
  T as() const {
    if constexpr (std::is_same_v<T, Rational>) return rational();
    else return to_double();
  }

  int sign() const {
    return is_rational() ? std::get<Rational>(v_).sign() : field_traits<double>::sign(std::get<double>(v_));
  }

  /// Lowest-terms "p/q" for rationals, shortest round-trip decimal for floats.
  std::string str() const {
    return is_rational() ? std::get<Rational>(v_).str() : format_double(std::get<double>(v_));
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return combine(a, b, [](auto x, auto y) { return x + y; }); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return combine(a, b, [](auto x, auto y) { return x - y; }); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return combine(a, b, [](auto x, auto y) { return x * y; }); }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.kind() == a.kind() && b.sign() == 0 && (b.is_rational() || std::get<double>(b.v_) == 0.0))
      throw error(errc::division_by_zero, a.str() + " / " + b.str());
    return combine(a, b, [](auto x, auto y) { return x / y; });
  }
  Scalar operator-() const {
    return is_rational() ? Scalar(-std::get<Rational>(v_)) : Scalar(-std::get<double>(v_));
  }

  /// Bitwise-identical for rationals (canonical form); exact == for floats.
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

 private:
  template <class Op>
  static Scalar combine(const Scalar& a, const Scalar& b, Op op) {
    if (a.kind() != b.kind())
      throw error(errc::mixed_backend, a.str() + " (" + std::string(backend_name(a.kind())) + ") with " + b.str() +
                                           " (" + std::string(backend_name(b.kind())) + ")");
    if (a.is_rational()) return Scalar(Rational(op(std::get<Rational>(a.v_), std::get<Rational>(b.v_))));
    return Scalar(static_cast<double>(op(std::get<double>(a.v_), std::get<double>(b.v_))));
  }

  std::variant<Rational, double> v_;
};

inline Scalar sqrt(const Scalar& a) {
  if (a.is_rational()) return Scalar(field_traits<Rational>::sqrt(a.rational()));
  return Scalar(field_traits<double>::sqrt(a.to_double()));
}

}  // namespace haggelab
