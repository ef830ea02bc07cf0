#pragma once

// Exact arithmetic in the Gaussian rationals Q(i).
//
// Text format: "a/b" for reals, "a/b+c/d*i" (or "c/d*i") otherwise.  Each
// rational is printed in lowest terms with the denominator omitted when it
// is 1, so the printer and parser are mutually inverse on canonical strings.

#include <gmpxx.h>

#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "leibniz/error.hpp"

namespace leibniz {

using Rational = mpq_class;

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Accepts [+-]digits[/digits]; rejects everything else.
inline Rational parse_rational(std::string_view text, std::string_view whole) {
  auto fail = [&] { throw ParseError("malformed scalar '" + std::string(whole) + "'"); };
  if (text.empty()) fail();
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  std::size_t digits = 0, slash = std::string_view::npos;
  for (std::size_t k = pos; k < text.size(); ++k) {
    if (is_digit(text[k])) {
      ++digits;
    } else if (text[k] == '/' && slash == std::string_view::npos && digits > 0) {
      slash = k;
      digits = 0;
    } else {
      fail();
    }
  }
  if (digits == 0) fail();
  mpz_class num(std::string(text.substr(pos, slash == std::string_view::npos ? text.npos : slash - pos)));
  mpz_class den = 1;
  if (slash != std::string_view::npos) den = mpz_class(std::string(text.substr(slash + 1)));
  if (den == 0) throw ParseError("zero denominator in scalar '" + std::string(whole) + "'");
  Rational q(negative ? mpz_class(-num) : num, den);
  q.canonicalize();
  return q;
}

}  // namespace detail

/// Element of Q(i) stored as a pair of canonical GMP rationals.
class Gaussian {
 public:
  Gaussian() = default;
  template <std::integral T>
  Gaussian(T value) : re_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re) : re_(std::move(re)) {}         // NOLINT(google-explicit-constructor)
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return {Rational(0), Rational(1)}; }
  static Gaussian ratio(long num, long den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return {q};
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Gaussian conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Gaussian inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (is_real()) return {Rational(1 / re_)};
    Rational n = norm();
    return {Rational(re_ / n), Rational(-im_ / n)};
  }

  Gaussian operator-() const { return {-re_, -im_}; }

  Gaussian& operator+=(const Gaussian& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    if (o.is_real()) {
      re_ /= o.re_;
      if (sgn(im_) != 0) im_ /= o.re_;
      return *this;
    }
    return *this *= o.inverse();
  }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  /// Adds `a * b` in place; skips the work when either factor is zero.
  void add_product(const Gaussian& a, const Gaussian& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (a.is_real() && b.is_real()) {
      re_ += a.re_ * b.re_;
      return;
    }
    *this += a * b;
  }

  std::string to_string() const {
    if (is_real()) return re_.get_str();
    std::string imag = im_.get_str() + "*i";
    if (sgn(re_) == 0) return imag;
    if (sgn(im_) > 0) return re_.get_str() + "+" + imag;
    return re_.get_str() + imag;
  }

  static Gaussian parse(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty scalar");
    if (text.back() != 'i') return {detail::parse_rational(text, whole)};

    text.remove_suffix(1);
    bool has_star = !text.empty() && text.back() == '*';
    if (has_star) text.remove_suffix(1);

    // Split at the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = text.size(); k-- > 1;) {
      if (text[k] == '+' || text[k] == '-') {
        split = k;
        break;
      }
    }
    std::string_view real_part = split == std::string_view::npos ? std::string_view{} : text.substr(0, split);
    std::string_view imag_part = split == std::string_view::npos ? text : text.substr(split);

    Rational im;
    if (imag_part.empty() || imag_part == "+" || imag_part == "-") {
      if (has_star) throw ParseError("malformed scalar '" + std::string(whole) + "'");
      im = imag_part == "-" ? -1 : 1;
    } else {
      if (!has_star) throw ParseError("malformed scalar '" + std::string(whole) + "'");
      im = detail::parse_rational(imag_part, whole);
    }
    Rational re = real_part.empty() ? Rational(0) : detail::parse_rational(real_part, whole);
    return {std::move(re), std::move(im)};
  }

  friend std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.to_string(); }

 private:
  Rational re_{0};
  Rational im_{0};
};

enum class ScalarOp { add, sub, mul, div, neg, inv };

/// Field operation dispatch; `b` is ignored for the unary operations.
inline Gaussian scalar_arith(ScalarOp op, const Gaussian& a, const Gaussian& b = {}) {
  switch (op) {
    case ScalarOp::add: return a + b;
    case ScalarOp::sub: return a - b;
    case ScalarOp::mul: return a * b;
    case ScalarOp::div: return a / b;
    case ScalarOp::neg: return -a;
    case ScalarOp::inv: return a.inverse();
  }
  return {};
}

}  // namespace leibniz
